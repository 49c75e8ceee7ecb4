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
Random models module

Seeded generators of small PTI-nets, CTS systems and asynchronous automata for property
campaigns. The same seed always yields the same model.
"""
import logging
from random import Random

from gluepo.async_automata import AsyncSystem, Process
from gluepo.cts import CtsAgent, CtsSystem, Message
from gluepo.pti_net import PtiNet
from gluepo.settings import Settings

logger = logging.getLogger('gluepo.random_models')

PAYLOADS = ['m', 'n']
LETTERS = ['a', 'b', 'c']


def _arc_weight(rng: Random, max_weight: int) -> int:
    return rng.randint(2, max_weight) if max_weight > 1 and rng.random() < 0.25 else 1


def random_pti_net(seed: int, max_places: int = Settings.ptiMaxPlaces,
                   max_transitions: int = Settings.ptiMaxTransitions,
                   max_inhibitors: int = Settings.ptiMaxInhibitors, max_tokens: int = Settings.ptiMaxTokens,
                   max_weight: int = Settings.ptiMaxWeight) -> PtiNet:
    """A net with a non-empty preset per transition and at least one token.

    Arcs mostly have weight one, places hold up to max_tokens tokens initially.
    """
    rng = Random(seed)
    places = [f'p{i}' for i in range(rng.randint(1, max_places))]
    transitions = [f't{i}' for i in range(rng.randint(1, max_transitions))]
    flow = {}
    for transition in transitions:
        for place in rng.sample(places, rng.randint(1, min(2, len(places)))):
            flow[(place, transition)] = _arc_weight(rng, max_weight)
        for place in rng.sample(places, rng.randint(0, min(2, len(places)))):
            flow[(transition, place)] = _arc_weight(rng, max_weight)
    arcs = [(place, transition) for place in places for transition in transitions]
    inhibitors = rng.sample(arcs, rng.randint(0, min(max_inhibitors, len(arcs))))
    initial = {place: rng.randint(0, max_tokens) for place in places}
    initial[rng.choice(places)] = max(1, rng.randint(0, max_tokens))
    return PtiNet(places, transitions, flow, inhibitors, initial, name=f'random{seed}')


def random_cts_system(seed: int, max_agents: int = Settings.ctsMaxAgents, max_states: int = Settings.ctsMaxStates,
                      max_channels: int = Settings.ctsMaxChannels) -> CtsSystem:
    """Agents sending and receiving the payloads m and n on a few channels and on broadcast."""
    rng = Random(seed)
    channels = [f'c{i}' for i in range(rng.randint(1, max_channels))]
    agents = []
    for index in range(rng.randint(1, max_agents)):
        states = [f's{i}' for i in range(rng.randint(1, max_states))]
        transitions = set()
        for _ in range(rng.randint(1, 2 * len(states))):
            label = Message(rng.choice(PAYLOADS), rng.choice([Settings.SEND, Settings.RECEIVE]),
                            rng.choice(channels + [Settings.BROADCAST_CHANNEL]))
            transitions.add((rng.choice(states), label, rng.choice(states)))
        listening = {state: rng.sample(channels, rng.randint(0, len(channels))) for state in states}
        agents.append(CtsAgent(f'A{index}', states, states[0], transitions, listening))
    return CtsSystem(agents, name=f'random{seed}')


def random_async_system(seed: int, max_processes: int = Settings.asyncMaxProcesses,
                        max_states: int = Settings.asyncMaxStates) -> AsyncSystem:
    rng = Random(seed)
    processes = []
    for index in range(rng.randint(1, max_processes)):
        alphabet = rng.sample(LETTERS, rng.randint(1, len(LETTERS)))
        states = [f's{i}' for i in range(rng.randint(1, max_states))]
        transitions = {(rng.choice(states), rng.choice(alphabet), rng.choice(states))
                       for _ in range(rng.randint(1, 2 * len(states)))}
        processes.append(Process(f'P{index}', states, states[0], transitions, alphabet))
    return AsyncSystem(processes, name=f'random{seed}')
