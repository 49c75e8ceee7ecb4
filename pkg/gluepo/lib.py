# Copyright (c) 2026 The gluepo authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
Lib module

Enumerations and small helpers shared by the model modules.
"""
from enum import Enum
from typing import Iterable, List, Tuple
import logging

logger = logging.getLogger('gluepo.lib')


class Order(Enum):
    """Outcome of comparing two elements of a partial order."""
    BEFORE = 'before'
    AFTER = 'after'
    EQUAL = 'equal'
    INCOMPARABLE = 'incomparable'

    def __str__(self):
        return self.value


class Side(Enum):
    """Which of two compared computations a certificate refers to."""
    LEFT = 'left'
    RIGHT = 'right'

    def __str__(self):
        return self.value


class ModelKind(Enum):
    PTI = 'pti'
    CTS = 'cts'
    ASYNC = 'async'

    def __str__(self):
        return self.value


class MulticastBlockMode(Enum):
    """
    Which histories a multicast has to be ordered against.

    LISTENING: every history listening to the channel.
    CANNOT_RECEIVE: only histories listening to the channel without a matching receive.
    """
    LISTENING = 'listening'
    CANNOT_RECEIVE = 'cannot-receive'

    def __str__(self):
        return self.value


def sorted_pairs(pairs: Iterable[Tuple]) -> List[Tuple]:
    """Pairs of elements in key order."""
    return sorted(pairs, key=lambda pair: (pair[0].key, pair[1].key))


def key_pairs(pairs: Iterable[Tuple]) -> List[List[str]]:
    """Pairs of elements as sorted [key, key] lists, ready for JSON."""
    return [[a.key, b.key] for a, b in sorted_pairs(pairs)]
