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
Asynchronous automata module

Fixed-interaction baseline: every process owning a letter takes part in it, so computations
need neither an interleaving relation nor glue.
"""
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Sequence, Tuple
import logging

from gluepo.core_po import (Counterexample, CounterexampleKind, Element, GluedLpo, Lpo, TheoremCheck, ValidityReport,
                            check_bound, maximal_filter, refinements, validate_lpo)
from gluepo.errors import ErrInvalidExecution, ErrInvalidModel
from gluepo.gluepo_types import Letter, State
from gluepo.settings import Settings

logger = logging.getLogger('gluepo.async_automata')


class Process(object):
    def __init__(self, name: str, states: Iterable[State], initial: State,
                 transitions: Iterable[Tuple[State, Letter, State]], alphabet: Optional[Iterable[Letter]] = None):
        """A process of an asynchronous automaton.

        Args:
            name (str): Process name
            states (Iterable): Its states
            initial (State): Initial state
            transitions (Iterable): (source, letter, target) triples
            alphabet (Iterable): Its letters, the letters of its transitions when omitted

        Raises:
            ErrInvalidModel: undeclared states or letters
        """
        self.name = name
        self.states: Tuple[State, ...] = tuple(sorted(set(states), key=str))
        self.initial = initial
        self.transitions: FrozenSet[Tuple[State, Letter, State]] = frozenset(transitions)
        used = {letter for _, letter, _ in self.transitions}
        self.alphabet: FrozenSet[Letter] = frozenset(alphabet) if alphabet is not None else frozenset(used)
        if initial not in self.states:
            raise ErrInvalidModel(f'process {name}: initial state {initial} is not declared')
        for src, letter, dst in self.transitions:
            if src not in self.states or dst not in self.states:
                raise ErrInvalidModel(f'process {name}: transition {src} -> {dst} uses an undeclared state')
        if not used <= self.alphabet:
            raise ErrInvalidModel(f'process {name}: letters {sorted(used - self.alphabet)} outside the alphabet')
        if Settings.INIT_PAYLOAD in self.alphabet:
            raise ErrInvalidModel(f'process {name}: {Settings.INIT_PAYLOAD} is reserved')

    def moves(self, state: State, letter: Letter) -> List[State]:
        return sorted((dst for src, l, dst in self.transitions if src == state and l == letter), key=str)

    def __eq__(self, other):
        return isinstance(other, Process) and \
            (self.name, self.states, self.initial, self.transitions, self.alphabet) == \
            (other.name, other.states, other.initial, other.transitions, other.alphabet)

    def __hash__(self):
        return hash((self.name, self.states, self.initial, self.transitions))

    def __repr__(self):
        return f'Process({self.name}: {len(self.states)} states, alphabet {sorted(self.alphabet)})'


class AsyncSystem(object):
    def __init__(self, processes: Sequence[Process], name: str = 'system'):
        self.name = name
        self.processes: Tuple[Process, ...] = tuple(processes)

    @property
    def initial(self) -> Tuple[State, ...]:
        return tuple(process.initial for process in self.processes)

    @property
    def alphabet(self) -> List[Letter]:
        return sorted({letter for process in self.processes for letter in process.alphabet})

    def owners(self, letter: Letter) -> Tuple[int, ...]:
        return tuple(index for index, process in enumerate(self.processes) if letter in process.alphabet)

    def __eq__(self, other):
        return isinstance(other, AsyncSystem) and (self.name, self.processes) == (other.name, other.processes)

    def __hash__(self):
        return hash((self.name, self.processes))

    def __repr__(self):
        return f'AsyncSystem({self.name}: {", ".join(process.name for process in self.processes)})'


class AsyncStep(NamedTuple):
    letter: Letter
    moves: Tuple[Tuple[int, State, State], ...]

    def apply(self, states: Sequence[State]) -> Tuple[State, ...]:
        states = list(states)
        for index, _, dst in self.moves:
            states[index] = dst
        return tuple(states)


def async_steps(sys: AsyncSystem, states: Sequence[State], letter: Letter) -> List[AsyncStep]:
    """Joint moves of every owner of letter, empty when one of them cannot move."""
    owners = sys.owners(letter)
    if not owners:
        return []
    choices = [[(index, states[index], dst) for dst in sys.processes[index].moves(states[index], letter)]
               for index in owners]
    return [AsyncStep(letter, tuple(moves)) for moves in product(*choices)]


def executions_async(sys: AsyncSystem, max_events: int) -> List[Tuple[AsyncStep, ...]]:
    check_bound(max_events)
    found = []

    def walk(states, execution):
        found.append(execution)
        if len(execution) == max_events:
            return
        for letter in sys.alphabet:
            for step in async_steps(sys, states, letter):
                walk(step.apply(states), execution + (step,))

    walk(sys.initial, ())
    return found


@dataclass(frozen=True, eq=False)
class ProcessHistory(Element):
    process_index: int
    states: Tuple[State, ...]

    @cached_property
    def key(self) -> str:
        return f'{self.process_index}:{".".join(str(state) for state in self.states)}'

    @property
    def last(self) -> State:
        return self.states[-1]


@dataclass(frozen=True, eq=False)
class AsyncEdgeId(Element):
    preset: FrozenSet[ProcessHistory]
    letter: Letter

    @cached_property
    def key(self) -> str:
        if not self.preset:
            return self.letter
        return f'{self.letter}[{",".join(sorted(history.key for history in self.preset))}]'


E_INIT = AsyncEdgeId(frozenset(), Settings.INIT_PAYLOAD)


def lpo_from_execution_async(sys: AsyncSystem, execution: Sequence[AsyncStep]) -> Lpo:
    """The Lpo of an execution: comm only.

    Raises:
        ErrInvalidExecution: a step cannot be taken where it occurs
    """
    current = [ProcessHistory(index, (process.initial,)) for index, process in enumerate(sys.processes)]
    nodes = list(current)
    edges = [E_INIT]
    comm = {(E_INIT, history) for history in current}
    for position, step in enumerate(execution, start=1):
        if step not in async_steps(sys, tuple(history.last for history in current), step.letter):
            raise ErrInvalidExecution(position, str(step))
        edge = AsyncEdgeId(frozenset(current[index] for index, _, _ in step.moves), step.letter)
        edges.append(edge)
        for index, _, dst in step.moves:
            after = ProcessHistory(index, current[index].states + (dst,))
            comm.add((current[index], edge))
            comm.add((edge, after))
            nodes.append(after)
            current[index] = after
    return Lpo(nodes, edges, comm, (),
               {history: f'{sys.processes[history.process_index].name}:{history.last}' for history in nodes},
               {edge: edge.letter for edge in edges})


def validate_lpo_async(sys: AsyncSystem, lpo: Lpo) -> ValidityReport:
    """Check that an Lpo is a computation of the asynchronous automaton.

    Any interleave pair is a violation; otherwise initial-edge, history-producer, single-successor
    and participants are checked.
    """
    report = validate_lpo(lpo)
    for first, second in sorted(lpo.interleave):
        report.add('interleave-empty', 'asynchronous automata order events by communication only', first, second)
    bad = [e for e in lpo.nodes if not isinstance(e, ProcessHistory)] + \
          [e for e in lpo.edges if not isinstance(e, AsyncEdgeId)]
    bad += [h for h in lpo.nodes if isinstance(h, ProcessHistory) and not 0 <= h.process_index < len(sys.processes)]
    if bad:
        report.add('history-producer', 'elements are not process histories', *sorted(bad, key=str))
        return report

    initial = {ProcessHistory(index, (process.initial,)) for index, process in enumerate(sys.processes)}
    if lpo.minimal_elements() != [E_INIT] or lpo.postset(E_INIT) != initial:
        report.add('initial-edge', 'the initial edge is not the unique minimum feeding every process',
                   *lpo.minimal_elements())

    for history in sorted(lpo.nodes):
        process = sys.processes[history.process_index]
        producers = sorted(lpo.preset(history))
        if len(lpo.postset(history)) > 1:
            report.add('single-successor', 'history with several successors', history)
        if len(producers) != 1 or history.states[0] != process.initial:
            report.add('history-producer', 'history without a unique producer', history, *producers)
            continue
        producer = producers[0]
        if len(history.states) == 1:
            if producer != E_INIT:
                report.add('history-producer', 'initial history not produced by the initial edge', history)
            continue
        previous = ProcessHistory(history.process_index, history.states[:-1])
        if previous not in lpo.preset(producer) or history.last not in process.moves(previous.last, producer.letter):
            report.add('history-producer', f'no {producer.letter} move leads to this history', history)

    for edge in sorted(lpo.edges):
        if edge == E_INIT:
            continue
        pre = sorted(h.process_index for h in lpo.preset(edge))
        post = sorted(h.process_index for h in lpo.postset(edge))
        if pre != list(sys.owners(edge.letter)) or post != pre or lpo.preset(edge) != edge.preset:
            report.add('participants', f'participants of {edge.letter} are not exactly its owners', edge)
    return report


def enumerate_computations_async(sys: AsyncSystem, max_events: int, maximal_only: bool = False) -> List[Lpo]:
    check_bound(max_events)
    lpos = {lpo_from_execution_async(sys, execution) for execution in executions_async(sys, max_events)}
    lpos = maximal_filter(lpos) if maximal_only else sorted(lpos, key=lambda lpo: lpo.sort_key)
    logger.debug(f'{sys.name}: {len(lpos)} computations, max {max_events} events')
    return lpos


def check_baseline_async(sys: AsyncSystem, max_events: int) -> TheoremCheck:
    """Every computation has an empty interleaving relation, validates, and is the only
    refinement of its glue-free wrapper."""
    lpos = enumerate_computations_async(sys, max_events)
    counts: Dict[str, int] = dict(lpos=len(lpos))
    for lpo in lpos:
        report = validate_lpo_async(sys, lpo)
        if lpo.interleave or not report.ok:
            return TheoremCheck(False, Counterexample(CounterexampleKind.INVALID_COMPUTATION, lpo,
                                                      detail=', '.join(report.clauses())), counts)
        wrapper = GluedLpo(lpo, {})
        refined = list(refinements(wrapper))
        if refined != [lpo]:
            return TheoremCheck(False, Counterexample(CounterexampleKind.NOT_RECOVERED, lpo, wrapper,
                                                      detail=f'{len(refined)} refinements'), counts)
    return TheoremCheck(True, None, counts)
