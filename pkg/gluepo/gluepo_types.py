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

from typing import NewType, Hashable

PlaceId = NewType('PlaceId', str)
TransitionId = NewType('TransitionId', str)
ChannelId = NewType('ChannelId', str)
Payload = NewType('Payload', str)
Letter = NewType('Letter', str)
AgentIndex = NewType('AgentIndex', int)
# Parsed models use string states; composition products use nested tuples of them.
State = Hashable
