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
Settings module

Provides the constants shared by the enumeration engines, the serializers and the command line.
"""
from os import getenv


class Settings:
    # Enumeration bounds
    MAX_EVENTS_CAP_ENV = 'GLUEPO_MAX_EVENTS_CAP'
    # The environment override of the cap is read and checked by the command line
    maxEventsCap: int = 12
    maxEventsDefault: int = int(getenv('GLUEPO_MAX_EVENTS', 4))

    # Reserved symbols
    EPSILON_TRANSITION = 't_eps'
    BROADCAST_CHANNEL = '*'
    SEND = '!'
    RECEIVE = '?'
    INIT_PAYLOAD = 'init'

    # Serialization
    LPO_SCHEMA = 'gluepo.lpo/1'
    GLPO_SCHEMA = 'gluepo.glpo/1'
    REPORT_SCHEMA = 'gluepo.report/1'

    # Refinement search; above this many justified pairs the exhaustive search gets slow
    justifiedPairsWarn: int = int(getenv('GLUEPO_JUSTIFIED_PAIRS_WARN', 16))

    # Random campaigns
    randomCount: int = 200
    randomSeed: int = 0
    randomMaxEvents: int = 5
    ptiMaxPlaces = 5
    ptiMaxTransitions = 4
    ptiMaxInhibitors = 2
    ptiMaxTokens = 2
    ptiMaxWeight = 2
    ctsMaxAgents = 3
    ctsMaxStates = 4
    ctsMaxChannels = 3
    asyncMaxProcesses = 3
    asyncMaxStates = 3
    asyncCount = 100

    # DOT rendering
    glue_colors = ['red', 'blue', 'darkgreen', 'darkorange', 'purple', 'brown', 'deeppink', 'teal']

    # Process exit codes
    EXIT_OK = 0
    EXIT_VIOLATION = 1
    EXIT_USAGE = 2
