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
CTS module

Channeled transition systems: agents with a listening function, parallel composition with
blocking multicast and non-blocking broadcast, bounded executions, LPO and glued LPO
computations, their validators, the theorem checkers and the separation witness search.
"""
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from typing import Dict, FrozenSet, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Tuple
import logging

from gluepo.core_po import (Computations, Element, GluedLpo, GlueRelation, Lpo, SeparationWitness, TheoremCheck,
                            ValidityReport, check_bound, check_refinement_equality, check_separation,
                            element_depths, maximal_filter, order_query, reduce_interleave, validate_lpo)
from gluepo.errors import ErrInvalidComputation, ErrInvalidExecution, ErrInvalidModel, ErrModelMismatch, \
    ErrSeparationIncomplete
from gluepo.gluepo_types import AgentIndex, ChannelId, Payload, State
from gluepo.lib import MulticastBlockMode, Order, Side
from gluepo.settings import Settings

logger = logging.getLogger('gluepo.cts')


class Message(NamedTuple):
    """A transition label: payload, polarity and channel."""
    payload: Payload
    polarity: str
    channel: ChannelId

    def __str__(self):
        return f'({self.payload},{self.polarity},{self.channel})'

    @property
    def is_send(self) -> bool:
        return self.polarity == Settings.SEND

    @property
    def is_broadcast(self) -> bool:
        return self.channel == Settings.BROADCAST_CHANNEL

    def receive(self) -> 'Message':
        return Message(self.payload, Settings.RECEIVE, self.channel)

    def send(self) -> 'Message':
        return Message(self.payload, Settings.SEND, self.channel)


INIT_MESSAGE = Message(Settings.INIT_PAYLOAD, Settings.SEND, Settings.BROADCAST_CHANNEL)


def state_name(state: State) -> str:
    """Flat text name of a state, composition products joined with underscores."""
    if isinstance(state, tuple):
        return '_'.join(state_name(part) for part in state)
    return str(state)


class CtsAgent(object):
    def __init__(self, name: str, states: Iterable[State], initial: State,
                 transitions: Iterable[Tuple[State, Message, State]],
                 listening: Optional[Mapping[State, Iterable[ChannelId]]] = None):
        """An agent of a channeled transition system.

        Every state listens to the broadcast channel whatever `listening` says.

        Args:
            name (str): Agent name
            states (Iterable): Its states
            initial (State): Initial state
            transitions (Iterable): (source, Message, target) triples
            listening (Mapping): Channels each state listens to

        Raises:
            ErrInvalidModel: Transitions or listening sets mention undeclared states, or the initial
                state is undeclared
        """
        self.name = name
        self.states: Tuple[State, ...] = tuple(sorted(set(states), key=state_name))
        self.initial = initial
        self.transitions: FrozenSet[Tuple[State, Message, State]] = frozenset(
            (src, Message(*label), dst) for src, label, dst in transitions)
        listening = dict(listening or {})
        known = set(self.states)
        if initial not in known:
            raise ErrInvalidModel(f'agent {name}: initial state {initial} is not declared')
        for src, label, dst in self.transitions:
            if src not in known or dst not in known:
                raise ErrInvalidModel(f'agent {name}: transition {src} -> {dst} on {label} uses an undeclared state')
            if label.polarity not in (Settings.SEND, Settings.RECEIVE):
                raise ErrInvalidModel(f'agent {name}: bad polarity in {label}')
        if set(listening) - known:
            raise ErrInvalidModel(f'agent {name}: listening set for undeclared states')
        self.listening: Dict[State, FrozenSet[ChannelId]] = {
            state: frozenset(listening.get(state, ())) | {Settings.BROADCAST_CHANNEL} for state in self.states}
        self._moves: Dict[Tuple[State, Message], List[State]] = {}
        for src, label, dst in sorted(self.transitions, key=lambda t: (state_name(t[0]), str(t[1]), state_name(t[2]))):
            self._moves.setdefault((src, label), []).append(dst)

    @property
    def channels(self) -> FrozenSet[ChannelId]:
        channels = {Settings.BROADCAST_CHANNEL}
        for listened in self.listening.values():
            channels |= listened
        return frozenset(channels | {label.channel for _, label, _ in self.transitions})

    def moves(self, state: State, label: Message) -> List[State]:
        return self._moves.get((state, label), [])

    def listens(self, state: State, channel: ChannelId) -> bool:
        return channel in self.listening[state]

    def can_receive(self, state: State, label: Message) -> bool:
        return bool(self.moves(state, label.receive()))

    def send_labels(self) -> List[Message]:
        return sorted({label for _, label, _ in self.transitions if label.is_send}, key=str)

    def reachable(self) -> 'CtsAgent':
        """The same agent restricted to the states reachable from the initial one."""
        seen, todo = {self.initial}, [self.initial]
        while todo:
            state = todo.pop()
            for src, _, dst in self.transitions:
                if src == state and dst not in seen:
                    seen.add(dst)
                    todo.append(dst)
        return CtsAgent(self.name, seen, self.initial,
                        [t for t in self.transitions if t[0] in seen],
                        {state: self.listening[state] for state in seen})

    @cached_property
    def _identity(self) -> tuple:
        return self.name, self.states, self.initial, self.transitions, frozenset(self.listening.items())

    def __eq__(self, other):
        return isinstance(other, CtsAgent) and self._identity == other._identity

    def __hash__(self):
        return hash(self._identity)

    def __repr__(self):
        return f'CtsAgent({self.name}: {len(self.states)} states, {len(self.transitions)} transitions)'


class CtsSystem(object):
    def __init__(self, agents: Sequence[CtsAgent], name: str = 'system'):
        self.name = name
        self.agents: Tuple[CtsAgent, ...] = tuple(agents)

    @property
    def initial(self) -> Tuple[State, ...]:
        return tuple(agent.initial for agent in self.agents)

    @property
    def channels(self) -> FrozenSet[ChannelId]:
        return frozenset(channel for agent in self.agents for channel in agent.channels)

    def send_labels(self) -> List[Message]:
        return sorted({label for agent in self.agents for label in agent.send_labels()}, key=str)

    def __eq__(self, other):
        return isinstance(other, CtsSystem) and (self.name, self.agents) == (other.name, other.agents)

    def __hash__(self):
        return hash((self.name, self.agents))

    def __repr__(self):
        return f'CtsSystem({self.name}: {", ".join(agent.name for agent in self.agents)})'


class SystemStep(NamedTuple):
    """One communication of a system: the label, the sender and every participant's move."""
    label: Message
    sender: AgentIndex
    moves: Tuple[Tuple[AgentIndex, State, State], ...]

    @property
    def participants(self) -> Tuple[AgentIndex, ...]:
        return tuple(index for index, _, _ in self.moves)

    def apply(self, states: Sequence[State]) -> Tuple[State, ...]:
        states = list(states)
        for index, _, dst in self.moves:
            states[index] = dst
        return tuple(states)

    def __str__(self):
        moved = ', '.join(f'{index}:{state_name(src)}->{state_name(dst)}' for index, src, dst in self.moves)
        return f'{self.label}@{self.sender} [{moved}]'


def _receivers(agent: CtsAgent, state: State, label: Message) -> Optional[List[State]]:
    """Targets the agent must choose from to take part, [] to stay out, None when it blocks the send."""
    targets = agent.moves(state, label.receive())
    if label.is_broadcast:
        return targets
    if agent.listens(state, label.channel):
        return targets if targets else None
    return []


def system_step(sys: CtsSystem, states: Sequence[State], label: Message) -> List[SystemStep]:
    """Every way the system can communicate label from states.

    A multicast needs every other agent listening on its channel to receive it, agents not
    listening stay where they are. A broadcast always fires and is received by every agent
    able to receive it.

    Args:
        sys (CtsSystem): The system
        states (Sequence): One state per agent
        label (Message): A send label

    Returns:
        list: SystemStep values, empty when the label cannot be sent
    """
    steps = []
    for sender, agent in enumerate(sys.agents):
        for target in agent.moves(states[sender], label):
            choices = []
            for index, other in enumerate(sys.agents):
                if index == sender:
                    choices.append([(index, states[index], target)])
                    continue
                targets = _receivers(other, states[index], label)
                if targets is None:
                    break
                choices.append([(index, states[index], dst) for dst in targets] or [None])
            else:
                for moves in product(*choices):
                    steps.append(SystemStep(label, sender, tuple(move for move in moves if move is not None)))
    return steps


def executions(sys: CtsSystem, max_events: int) -> List[Tuple[SystemStep, ...]]:
    """Every execution of at most max_events steps, depth first, labels in text order."""
    check_bound(max_events)
    labels = sys.send_labels()
    found = []

    def walk(states: Tuple[State, ...], execution: Tuple[SystemStep, ...]):
        found.append(execution)
        if len(execution) == max_events:
            return
        for label in labels:
            for step in system_step(sys, states, label):
                walk(step.apply(states), execution + (step,))

    walk(sys.initial, ())
    logger.debug(f'{len(found)} executions of {sys.name} up to {max_events} events')
    return found


def compose(a: CtsAgent, b: CtsAgent) -> CtsAgent:
    """Parallel composition of two agents.

    States are pairs, a pair listens to what either component listens to. When a component
    sends, the other one takes part as any receiver of a system step would: a listening
    partner has to receive a multicast or the send is blocked, a partner not listening stays,
    and a broadcast is received by a partner able to. A receive of the pair moves every
    component that listens (every component able to, for a broadcast) and leaves the others
    where they are; it is blocked when a listening component cannot receive.
    """
    transitions = set()
    for s1, s2 in product(a.states, b.states):
        for first, second, own, other, swap in ((a, b, s1, s2, False), (b, a, s2, s1, True)):
            for src, label, dst in first.transitions:
                if src != own or not label.is_send:
                    continue
                targets = _receivers(second, other, label)
                if targets is None:
                    continue
                for target in targets or [other]:
                    pair_src = (other, own) if swap else (own, other)
                    pair_dst = (target, dst) if swap else (dst, target)
                    transitions.add((pair_src, label, pair_dst))
        received = {label for src, label, _ in a.transitions if src == s1 and not label.is_send} | \
            {label for src, label, _ in b.transitions if src == s2 and not label.is_send}
        for label in received:
            first_targets = _receivers(a, s1, label.send())
            second_targets = _receivers(b, s2, label.send())
            if first_targets is None or second_targets is None or not (first_targets or second_targets):
                continue
            for pair_dst in product(first_targets or [s1], second_targets or [s2]):
                transitions.add(((s1, s2), label, pair_dst))
    listening = {(s1, s2): a.listening[s1] | b.listening[s2] for s1, s2 in product(a.states, b.states)}
    return CtsAgent(f'{a.name}|{b.name}', list(product(a.states, b.states)), (a.initial, b.initial),
                    transitions, listening)


@dataclass(frozen=True, eq=False)
class AgentHistory(Element):
    """The sequence of states one agent went through, starting from its initial state."""
    agent_index: AgentIndex
    states: Tuple[State, ...]

    @cached_property
    def key(self) -> str:
        return f'{self.agent_index}:{".".join(state_name(state) for state in self.states)}'

    @property
    def last(self) -> State:
        return self.states[-1]

    def extend(self, state: State) -> 'AgentHistory':
        return AgentHistory(self.agent_index, self.states + (state,))

    def prefix(self) -> Optional['AgentHistory']:
        return AgentHistory(self.agent_index, self.states[:-1]) if len(self.states) > 1 else None


@dataclass(frozen=True, eq=False)
class CtsEdgeId(Element):
    """A communication: the histories of its participants before it, its label and its sender."""
    preset: FrozenSet[AgentHistory]
    label: Message
    sender: int

    @cached_property
    def key(self) -> str:
        if self.sender < 0:
            return str(self.label)
        return f'{self.label}@{self.sender}[{",".join(sorted(history.key for history in self.preset))}]'


E_EPSILON = CtsEdgeId(frozenset(), INIT_MESSAGE, -1)


class LocalMove(NamedTuple):
    """A communication as one participant sees it: its own polarity of the label and its target."""
    label: Message
    target: State

    def __str__(self):
        return f'{self.label}->{state_name(self.target)}'


def blocks(agent: CtsAgent, state: State, label: Message,
           mode: MulticastBlockMode = MulticastBlockMode.LISTENING) -> bool:
    """Whether an agent in state has to be ordered against a communication of label.

    Multicast: listening to the channel, or listening without a matching receive in
    cannot-receive mode. Broadcast: able to receive it.
    """
    if label.is_broadcast:
        return agent.can_receive(state, label)
    if not agent.listens(state, label.channel):
        return False
    return mode is MulticastBlockMode.LISTENING or not agent.can_receive(state, label)


def _node_label(sys: CtsSystem, history: AgentHistory) -> str:
    return f'{sys.agents[history.agent_index].name}:{state_name(history.last)}'


def lpo_from_execution(sys: CtsSystem, execution: Sequence[SystemStep],
                       mode: MulticastBlockMode = MulticastBlockMode.LISTENING) -> Lpo:
    """The Lpo of an execution.

    Consecutive communications on a channel are chained, and every communication is ordered
    against the histories it would have to wait for: after the communication that left such
    a history, before the one that created it.

    Raises:
        ErrInvalidExecution: a step cannot be taken where it occurs
    """
    current = [AgentHistory(index, (agent.initial,)) for index, agent in enumerate(sys.agents)]
    created: Dict[AgentHistory, int] = {history: 0 for history in current}
    creator: Dict[AgentHistory, CtsEdgeId] = {history: E_EPSILON for history in current}
    exited: Dict[AgentHistory, int] = {}
    exit_edge: Dict[AgentHistory, CtsEdgeId] = {}
    edges = [E_EPSILON]
    comm = {(E_EPSILON, history) for history in current}
    for position, step in enumerate(execution, start=1):
        states = tuple(history.last for history in current)
        if step not in system_step(sys, states, step.label):
            raise ErrInvalidExecution(position, str(step))
        edge = CtsEdgeId(frozenset(current[index] for index in step.participants), step.label, step.sender)
        edges.append(edge)
        for index, _, dst in step.moves:
            before = current[index]
            after = before.extend(dst)
            comm.add((before, edge))
            comm.add((edge, after))
            exited[before], exit_edge[before] = position, edge
            created[after], creator[after] = position, edge
            current[index] = after

    interleave = set()
    last_on_channel: Dict[ChannelId, CtsEdgeId] = {}
    for position, edge in enumerate(edges):
        if not position:
            continue
        channel = edge.label.channel
        if channel in last_on_channel:
            interleave.add((last_on_channel[channel], edge))
        last_on_channel[channel] = edge
        for history in created:
            if not blocks(sys.agents[history.agent_index], history.last, edge.label, mode):
                continue
            if exited.get(history, position) < position:
                interleave.add((exit_edge[history], edge))
            elif created[history] > position:
                interleave.add((edge, creator[history]))
    nodes = list(created)
    return Lpo(nodes, edges, comm, reduce_interleave(interleave),
               {history: _node_label(sys, history) for history in nodes},
               {edge: edge.label for edge in edges})


def _local_move(lpo: Lpo, edge: CtsEdgeId, agent_index: int) -> Optional[LocalMove]:
    for history in lpo.postset(edge):
        if history.agent_index == agent_index:
            label = edge.label if edge.sender == agent_index else edge.label.receive()
            return LocalMove(label, history.last)
    return None


def _justified_cts(sys: CtsSystem, lpo: Lpo, first: CtsEdgeId, second: CtsEdgeId, mode: MulticastBlockMode) -> bool:
    if first.label.channel == second.label.channel:
        return True
    if any(blocks(sys.agents[h.agent_index], h.last, second.label, mode) for h in lpo.preset(first)):
        return True
    return any(blocks(sys.agents[h.agent_index], h.last, first.label, mode) for h in lpo.postset(second))


def validate_lpo_cts(sys: CtsSystem, lpo: Lpo, mode: MulticastBlockMode = MulticastBlockMode.LISTENING) \
        -> ValidityReport:
    """Check that an Lpo is a computation of the system.

    Args:
        sys (CtsSystem): The system
        lpo (Lpo): The candidate computation
        mode (MulticastBlockMode): Which histories a multicast is ordered against

    Returns:
        ValidityReport: core violations plus initial-edge, history-producer, single-successor,
        participants, sender, multicast-comparability, broadcast-comparability, channel-order
        and interleave-justified entries
    """
    report = validate_lpo(lpo)
    bad = [e for e in lpo.nodes if not isinstance(e, AgentHistory)] + \
          [e for e in lpo.edges if not isinstance(e, CtsEdgeId)]
    bad += [h for h in lpo.nodes if isinstance(h, AgentHistory) and not 0 <= h.agent_index < len(sys.agents)]
    if bad:
        report.add('history-producer', 'elements are not agent histories and communications', *sorted(bad, key=str))
        return report

    initial = {AgentHistory(index, (agent.initial,)) for index, agent in enumerate(sys.agents)}
    if E_EPSILON not in lpo.edges or lpo.minimal_elements() != [E_EPSILON]:
        report.add('initial-edge', 'the initial broadcast is not the unique minimum', *lpo.minimal_elements())
    elif lpo.postset(E_EPSILON) != initial or lpo.edge_label.get(E_EPSILON) != INIT_MESSAGE:
        report.add('initial-edge', 'the initial broadcast does not start every agent', E_EPSILON)

    for history in sorted(lpo.nodes):
        agent = sys.agents[history.agent_index]
        producers = lpo.preset(history)
        if lpo.node_label.get(history) != _node_label(sys, history) or history.states[0] != agent.initial \
                or any(state not in agent.listening for state in history.states):
            report.add('history-producer', 'history does not follow the agent', history)
            continue
        if len(producers) != 1:
            report.add('history-producer', 'history without a unique producer', history, *sorted(producers))
            continue
        producer = next(iter(producers))
        previous = history.prefix()
        if previous is None:
            if producer != E_EPSILON:
                report.add('history-producer', 'initial history not produced by the initial broadcast', history)
            continue
        label = producer.label if producer.sender == history.agent_index else producer.label.receive()
        if previous not in lpo.preset(producer) or history.last not in agent.moves(previous.last, label):
            report.add('history-producer', f'no {label} move leads to this history', history, producer)

    for history in sorted(lpo.nodes):
        if len(lpo.postset(history)) > 1:
            report.add('single-successor', 'history with several successors', history, *sorted(lpo.postset(history)))

    for edge in sorted(lpo.edges):
        if edge == E_EPSILON:
            continue
        pre, post = lpo.preset(edge), lpo.postset(edge)
        pre_agents = sorted(h.agent_index for h in pre)
        post_agents = sorted(h.agent_index for h in post)
        if pre != edge.preset or lpo.edge_label.get(edge) != edge.label or pre_agents != post_agents \
                or len(set(pre_agents)) != len(pre_agents) \
                or any(h.prefix() not in pre for h in post):
            report.add('participants', 'participants do not move exactly once', edge)
        senders = [h for h in pre if h.agent_index == edge.sender]
        if not edge.label.is_send or len(senders) != 1:
            report.add('sender', 'communication without a unique sender', edge)

    for edge in sorted(lpo.edges):
        if edge == E_EPSILON:
            continue
        clause = 'broadcast-comparability' if edge.label.is_broadcast else 'multicast-comparability'
        for history in sorted(lpo.nodes):
            agent = sys.agents[history.agent_index]
            if blocks(agent, history.last, edge.label, mode) and not lpo.comparable(edge, history):
                report.add(clause, 'history unordered with a communication it has to wait for', edge, history)

    by_channel: Dict[ChannelId, List[CtsEdgeId]] = {}
    for edge in sorted(lpo.edges):
        if edge != E_EPSILON:
            by_channel.setdefault(edge.label.channel, []).append(edge)
    for channel, edges in sorted(by_channel.items()):
        for first, second in combinations(edges, 2):
            if not lpo.comparable(first, second):
                report.add('channel-order', f'communications on {channel} are unordered', first, second)

    for first, second in sorted(lpo.interleave):
        if not _justified_cts(sys, lpo, first, second, mode):
            report.add('interleave-justified', 'interleave pair justified neither by channel nor by blocking',
                       first, second)
    return report


def _glue_pairs(sys: CtsSystem, lpo: Lpo, label: Message, mode: MulticastBlockMode) -> List:
    pairs = []
    for a, b in lpo.comm:
        history = a if a in lpo.nodes else b
        if blocks(sys.agents[history.agent_index], history.last, label, mode):
            pairs.append((a, b))
    return pairs


def glpo_from_lpo_cts(sys: CtsSystem, lpo: Lpo, mode: MulticastBlockMode = MulticastBlockMode.LISTENING,
                      check: bool = True) -> GluedLpo:
    """Glue an Lpo: keep same-channel interleave, glue for every send label the comm pairs
    touching a history that has to be ordered against it.

    Raises:
        ErrInvalidComputation: check is set and lpo is not a computation of the system
    """
    if check:
        report = validate_lpo_cts(sys, lpo, mode)
        if not report.ok:
            raise ErrInvalidComputation(report)
    base = lpo.with_interleave((a, b) for a, b in lpo.interleave if a.label.channel == b.label.channel)
    assignment = {label: GlueRelation(_glue_pairs(sys, lpo, label, mode)) for label in sys.send_labels()}
    return GluedLpo(base, assignment)


def enumerate_computations_cts(sys: CtsSystem, max_events: int, maximal_only: bool = False,
                               mode: MulticastBlockMode = MulticastBlockMode.LISTENING) -> Computations:
    """All computations with at most max_events communications, and their glued images."""
    check_bound(max_events)
    lpos = {lpo_from_execution(sys, execution, mode) for execution in executions(sys, max_events)}
    lpos = maximal_filter(lpos) if maximal_only else sorted(lpos, key=lambda lpo: lpo.sort_key)
    glpos = sorted({glpo_from_lpo_cts(sys, lpo, mode, check=False) for lpo in lpos}, key=lambda glpo: glpo.sort_key)
    logger.debug(f'{sys.name} ({mode}): {len(lpos)} computations, {len(glpos)} glued, max {max_events} events')
    return Computations(lpos, glpos)


def check_refinement_theorem_cts(sys: CtsSystem, max_events: int,
                                 mode: MulticastBlockMode = MulticastBlockMode.LISTENING) -> TheoremCheck:
    lpos = enumerate_computations_cts(sys, max_events, mode=mode).lpos
    return check_refinement_equality(lpos, lambda lpo: glpo_from_lpo_cts(sys, lpo, mode, check=False),
                                     lambda lpo: validate_lpo_cts(sys, lpo, mode))


def check_separation_theorem_cts(sys: CtsSystem, max_events: int,
                                 mode: MulticastBlockMode = MulticastBlockMode.LISTENING) -> TheoremCheck:
    return check_separation(enumerate_computations_cts(sys, max_events, mode=mode).glpos, separation_witness_cts)


def _successor(lpo: Lpo, history: AgentHistory) -> Optional[CtsEdgeId]:
    return next(iter(sorted(lpo.postset(history))), None)


class MaximalityMismatch(SeparationWitness):
    kind = 'maximality-mismatch'

    def __init__(self, agent: int, history: AgentHistory, maximal_in: Side):
        """A shared history is extended on one side and last on the other."""
        self.agent = agent
        self.history = history
        self.maximal_in = maximal_in

    def validate(self, left: GluedLpo, right: GluedLpo) -> bool:
        maximal, extended = (left, right) if self.maximal_in is Side.LEFT else (right, left)
        return self.history in maximal.base.nodes and self.history in extended.base.nodes \
            and self.history.agent_index == self.agent \
            and _successor(maximal.base, self.history) is None and _successor(extended.base, self.history) is not None

    def as_dict(self) -> dict:
        return dict(kind=self.kind, agent=self.agent, history=self.history.key, maximal_in=str(self.maximal_in))


class NextLabelMismatch(SeparationWitness):
    kind = 'next-label-mismatch'

    def __init__(self, agent: int, history: AgentHistory, left_label: LocalMove, right_label: LocalMove):
        """A shared history moves differently on each side."""
        self.agent = agent
        self.history = history
        self.left_label = left_label
        self.right_label = right_label

    def validate(self, left: GluedLpo, right: GluedLpo) -> bool:
        if self.history not in left.base.nodes or self.history not in right.base.nodes:
            return False
        moves = []
        for side in (left.base, right.base):
            edge = _successor(side, self.history)
            moves.append(_local_move(side, edge, self.agent) if edge is not None else None)
        return None not in moves and moves == [self.left_label, self.right_label] and moves[0] != moves[1]

    def as_dict(self) -> dict:
        return dict(kind=self.kind, agent=self.agent, history=self.history.key,
                    left_label=str(self.left_label), right_label=str(self.right_label))


class ChannelOrderMismatch(SeparationWitness):
    kind = 'channel-order-mismatch'

    def __init__(self, agents: Tuple[int, int], histories: Tuple[AgentHistory, AgentHistory],
                 edges: Tuple[Tuple[CtsEdgeId, CtsEdgeId], Tuple[CtsEdgeId, CtsEdgeId]],
                 orders: Tuple[Order, Order]):
        """Two agents see their next communications ordered differently on each side.

        Args:
            agents: The two agents
            histories: Their shared histories
            edges: The successors of both histories, on the left and on the right
            orders: The order of the successors on the left and on the right
        """
        self.agents = tuple(agents)
        self.histories = tuple(histories)
        self.edges = tuple(tuple(pair) for pair in edges)
        self.orders = tuple(orders)

    def validate(self, left: GluedLpo, right: GluedLpo) -> bool:
        found = []
        for side in (left.base, right.base):
            if any(history not in side.nodes for history in self.histories):
                return False
            successors = tuple(_successor(side, history) for history in self.histories)
            if None in successors:
                return False
            found.append((successors, order_query(side, *successors)))
        return [history.agent_index for history in self.histories] == list(self.agents) \
            and self.agents[0] != self.agents[1] \
            and tuple(pair for pair, _ in found) == self.edges \
            and tuple(order for _, order in found) == self.orders and self.orders[0] != self.orders[1]

    def as_dict(self) -> dict:
        return dict(kind=self.kind, agents=list(self.agents), histories=[h.key for h in self.histories],
                    edges=[[edge.key for edge in pair] for pair in self.edges],
                    orders=[str(order) for order in self.orders])


def separation_witness_cts(g1: GluedLpo, g2: GluedLpo) -> Optional[SeparationWitness]:
    """Find why two glued computations of a system differ, None when they are equal.

    Shared histories are visited by depth. Inside one depth a different next move is reported
    before a history that is extended on one side only; when every shared history agrees, the
    order of the next communications of two agents is compared.

    Raises:
        ErrModelMismatch: the two computations start different agents
        ErrSeparationIncomplete: no certificate found
    """
    if g1 == g2:
        return None
    left, right = g1.base, g2.base
    if E_EPSILON not in left.edges or left.postset(E_EPSILON) != right.postset(E_EPSILON):
        raise ErrModelMismatch('the glued computations start different agents')
    depths = element_depths(left)
    shared = sorted(left.nodes & right.nodes, key=lambda h: (depths[h], h.key))
    layers: Dict[int, List[AgentHistory]] = {}
    for history in shared:
        layers.setdefault(depths[history], []).append(history)
    for depth in sorted(layers):
        for history in layers[depth]:
            on_left, on_right = _successor(left, history), _successor(right, history)
            if on_left is None or on_right is None:
                continue
            left_move = _local_move(left, on_left, history.agent_index)
            right_move = _local_move(right, on_right, history.agent_index)
            if left_move != right_move:
                return NextLabelMismatch(history.agent_index, history, left_move, right_move)
        for history in layers[depth]:
            on_left, on_right = _successor(left, history), _successor(right, history)
            if (on_left is None) != (on_right is None):
                return MaximalityMismatch(history.agent_index, history, Side.LEFT if on_left is None else Side.RIGHT)
    extended = [h for h in shared if _successor(left, h) is not None and _successor(right, h) is not None]
    for first, second in combinations(extended, 2):
        if first.agent_index == second.agent_index:
            continue
        left_pair = (_successor(left, first), _successor(left, second))
        right_pair = (_successor(right, first), _successor(right, second))
        orders = (order_query(left, *left_pair), order_query(right, *right_pair))
        if orders[0] != orders[1]:
            return ChannelOrderMismatch((first.agent_index, second.agent_index), (first, second),
                                        (left_pair, right_pair), orders)
    raise ErrSeparationIncomplete(repr(g1), repr(g2))
