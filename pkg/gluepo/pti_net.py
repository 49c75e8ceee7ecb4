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
PTI-net module

Place/transition nets with inhibitor arcs: the token game, histories of tokens and firings,
LPO and glued LPO computations built from firing sequences, their validators, the theorem
checkers and the separation witness search.
"""
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple
import logging

from gluepo.core_po import (Computations, Element, GluedLpo, GlueRelation, Lpo, SeparationWitness, TheoremCheck,
                            ValidityReport, check_bound, check_refinement_equality, check_separation,
                            element_depths, maximal_filter, reduce_interleave, validate_lpo)
from gluepo.errors import (ErrInvalidComputation, ErrInvalidModel, ErrInvalidSequence, ErrModelMismatch,
                           ErrNotEnabled, ErrSeparationIncomplete, ErrUnknownTransition, ErrUnresolvedProvenance)
from gluepo.gluepo_types import PlaceId, TransitionId
from gluepo.lib import Side
from gluepo.settings import Settings

logger = logging.getLogger('gluepo.pti_net')


class Marking(object):
    """Token counts indexed by place position, with componentwise arithmetic and comparison."""

    def __init__(self, counts: Iterable[int]):
        self.counts: Tuple[int, ...] = tuple(counts)

    def __getitem__(self, index: int) -> int:
        return self.counts[index]

    def __len__(self):
        return len(self.counts)

    def __iter__(self):
        return iter(self.counts)

    def __add__(self, other: 'Marking') -> 'Marking':
        return Marking(a + b for a, b in zip(self.counts, other.counts))

    def __sub__(self, other: 'Marking') -> 'Marking':
        return Marking(a - b for a, b in zip(self.counts, other.counts))

    def __ge__(self, other: 'Marking') -> bool:
        return all(a >= b for a, b in zip(self.counts, other.counts))

    def __le__(self, other: 'Marking') -> bool:
        return all(a <= b for a, b in zip(self.counts, other.counts))

    def __eq__(self, other):
        return isinstance(other, Marking) and self.counts == other.counts

    def __hash__(self):
        return hash(self.counts)

    def __repr__(self):
        return f'Marking{self.counts}'


class PtiNet(object):
    def __init__(self, places: Sequence[PlaceId], transitions: Iterable[TransitionId],
                 flow: Mapping[Tuple[str, str], int], inhibitors: Iterable[Tuple[PlaceId, TransitionId]] = (),
                 initial: Optional[Mapping[PlaceId, int]] = None, name: str = 'net'):
        """A place/transition net with inhibitor arcs.

        Args:
            places (Sequence[PlaceId]): Places, in marking order
            transitions (Iterable[TransitionId]): Transitions
            flow (Mapping): (place, transition) or (transition, place) to arc weight
            inhibitors (Iterable): (place, transition) inhibitor arcs
            initial (Mapping): Initial token count per place, absent places hold none
            name (str): Net name

        Raises:
            ErrInvalidModel: Overlapping ids, unknown arc endpoints, weights below one, or a
                transition with an empty preset
        """
        self.name = name
        self.places: Tuple[PlaceId, ...] = tuple(places)
        self.transitions: Tuple[TransitionId, ...] = tuple(sorted(transitions))
        self.flow: Dict[Tuple[str, str], int] = dict(flow)
        self.inhibitors: FrozenSet[Tuple[PlaceId, TransitionId]] = frozenset(inhibitors)
        self.index: Dict[PlaceId, int] = {place: i for i, place in enumerate(self.places)}
        initial = dict(initial or {})

        if len(self.index) != len(self.places) or len(set(self.transitions)) != len(self.transitions):
            raise ErrInvalidModel('duplicate place or transition')
        if set(self.places) & set(self.transitions):
            raise ErrInvalidModel(f'ids used both as place and transition: {sorted(set(self.places) & set(self.transitions))}')
        if Settings.EPSILON_TRANSITION in self.transitions:
            raise ErrInvalidModel(f'{Settings.EPSILON_TRANSITION} is reserved')
        for (src, dst), weight in self.flow.items():
            if not ((src in self.index and dst in self.transitions) or (src in self.transitions and dst in self.index)):
                raise ErrInvalidModel(f'arc {src} -> {dst} does not join a place and a transition')
            if weight < 1:
                raise ErrInvalidModel(f'arc {src} -> {dst} has weight {weight}')
        for place, transition in self.inhibitors:
            if place not in self.index or transition not in self.transitions:
                raise ErrInvalidModel(f'inhibitor {place} {transition} does not join a place and a transition')
        for place, tokens in initial.items():
            if place not in self.index or tokens < 0:
                raise ErrInvalidModel(f'bad initial marking for {place}')
        self.initial = Marking(initial.get(place, 0) for place in self.places)

        self._pre = {t: Marking(self.flow.get((p, t), 0) for p in self.places) for t in self.transitions}
        self._post = {t: Marking(self.flow.get((t, p), 0) for p in self.places) for t in self.transitions}
        for transition, pre in self._pre.items():
            if not any(pre):
                raise ErrInvalidModel(f'transition {transition} has an empty preset')

    def _check(self, transition: TransitionId) -> None:
        if transition not in self._pre:
            raise ErrUnknownTransition(transition)

    def pre(self, transition: TransitionId) -> Marking:
        self._check(transition)
        return self._pre[transition]

    def post(self, transition: TransitionId) -> Marking:
        """Post vector; for the initial transition it is the initial marking."""
        if transition == Settings.EPSILON_TRANSITION:
            return self.initial
        self._check(transition)
        return self._post[transition]

    def inhibiting_places(self, transition: TransitionId) -> Tuple[PlaceId, ...]:
        return tuple(sorted(place for place, t in self.inhibitors if t == transition))

    def marking(self, tokens: Mapping[PlaceId, int]) -> Marking:
        return Marking(tokens.get(place, 0) for place in self.places)

    def marking_dict(self, marking: Marking) -> Dict[PlaceId, int]:
        return {place: marking[i] for i, place in enumerate(self.places) if marking[i]}

    @cached_property
    def _identity(self) -> tuple:
        return self.name, self.places, self.transitions, frozenset(self.flow.items()), self.inhibitors, self.initial

    def __eq__(self, other):
        return isinstance(other, PtiNet) and self._identity == other._identity

    def __hash__(self):
        return hash(self._identity)

    def __repr__(self):
        return f'PtiNet({self.name}: {len(self.places)} places, {len(self.transitions)} transitions, ' \
               f'{len(self.inhibitors)} inhibitors)'


def enabled(net: PtiNet, m: Marking, t: TransitionId) -> bool:
    """Enough tokens in the preset and none in the inhibiting places.

    Raises:
        ErrUnknownTransition: t is not a transition of the net
    """
    pre = net.pre(t)
    return m >= pre and all(m[net.index[place]] == 0 for place in net.inhibiting_places(t))


def fire(net: PtiNet, m: Marking, t: TransitionId) -> Marking:
    """Fire t at m.

    Raises:
        ErrNotEnabled: t is not enabled at m
    """
    if not enabled(net, m, t):
        raise ErrNotEnabled(t, net.marking_dict(m))
    return m - net.pre(t) + net.post(t)


def firing_sequences(net: PtiNet, max_events: int) -> List[Tuple[TransitionId, ...]]:
    """Every firing sequence of at most max_events steps from the initial marking, depth first
    in transition order."""
    check_bound(max_events)
    found = []

    def walk(marking: Marking, sequence: Tuple[TransitionId, ...]):
        found.append(sequence)
        if len(sequence) == max_events:
            return
        for transition in net.transitions:
            if enabled(net, marking, transition):
                walk(fire(net, marking, transition), sequence + (transition,))

    walk(net.initial, ())
    logger.debug(f'{len(found)} firing sequences of {net.name} up to {max_events} events')
    return found


@dataclass(frozen=True, eq=False)
class PHistory(Element):
    """A token history: the firing that produced it, the place, and how many tokens it put there."""
    producer: 'THistory'
    place: PlaceId
    count: int

    @cached_property
    def key(self) -> str:
        return f'{self.place}:{self.count}<{self.producer.key}>'

    @cached_property
    def shape(self) -> str:
        """The key with sibling occurrence indices left out."""
        return f'{self.place}:{self.count}<{self.producer.shape}>'


@dataclass(frozen=True, eq=False)
class THistory(Element):
    """A firing history: the transition and the token histories it drew from, with multiplicities.

    Firings of the same transition drawing the same tokens from the same histories are siblings;
    `occurrence` numbers them, 0 for the first.
    """
    transition: TransitionId
    takes: FrozenSet[Tuple[PHistory, int]] = frozenset()
    occurrence: int = 0

    def _taken(self, part: str) -> str:
        return ','.join(sorted(f'{count}*{getattr(history, part)}' for history, count in self.takes))

    @cached_property
    def key(self) -> str:
        if self.transition == Settings.EPSILON_TRANSITION:
            return Settings.EPSILON_TRANSITION
        suffix = f'#{self.occurrence}' if self.occurrence else ''
        return f'{self.transition}({self._taken("key")}){suffix}'

    @cached_property
    def shape(self) -> str:
        """The key with sibling occurrence indices left out."""
        if self.transition == Settings.EPSILON_TRANSITION:
            return Settings.EPSILON_TRANSITION
        return f'{self.transition}({self._taken("shape")})'

    def taken_from(self, history: PHistory) -> int:
        return dict(self.takes).get(history, 0)


T_EPSILON = THistory(Settings.EPSILON_TRANSITION)


def produced(net: PtiNet, edge: THistory) -> List[PHistory]:
    post = net.post(edge.transition)
    return [PHistory(edge, place, post[i]) for i, place in enumerate(net.places) if post[i]]


class _Run(object):
    """A firing sequence being unfolded, with the history of every token."""

    def __init__(self, edges: Tuple[THistory, ...], remaining: Dict[PHistory, int],
                 created: Dict[PHistory, int], consumers: Dict[PHistory, Tuple[int, ...]]):
        self.edges = edges
        self.remaining = remaining
        self.created = created
        self.consumers = consumers

    @classmethod
    def start(cls, net: PtiNet) -> '_Run':
        histories = produced(net, T_EPSILON)
        return cls((T_EPSILON,), {h: h.count for h in histories}, {h: 0 for h in histories}, {h: () for h in histories})

    def marking(self, net: PtiNet) -> Marking:
        counts = [0] * len(net.places)
        for history, left in self.remaining.items():
            counts[net.index[history.place]] += left
        return Marking(counts)

    def splits(self, net: PtiNet, transition: TransitionId) -> Iterator[FrozenSet[Tuple[PHistory, int]]]:
        """Ways to draw the preset of transition from the histories present, places in id order,
        drawing as much as possible from the key-smallest history first."""
        pre = net.pre(transition)
        per_place = []
        for place in sorted(net.places):
            need = pre[net.index[place]]
            if not need:
                continue
            sources = sorted(h for h, left in self.remaining.items() if h.place == place and left)
            per_place.append(list(_distributions(sources, [self.remaining[h] for h in sources], need)))
        for choice in product(*per_place):
            yield frozenset(pair for part in choice for pair in part)

    def extend(self, net: PtiNet, transition: TransitionId, takes: FrozenSet[Tuple[PHistory, int]]) -> '_Run':
        step = len(self.edges)
        occurrence = sum(1 for edge in self.edges if edge.transition == transition and edge.takes == takes)
        edge = THistory(transition, takes, occurrence)
        remaining = dict(self.remaining)
        consumers = dict(self.consumers)
        created = dict(self.created)
        for history, count in edge.takes:
            remaining[history] -= count
            consumers[history] = consumers[history] + (step,)
        for history in produced(net, edge):
            remaining[history] = history.count
            created[history] = step
            consumers[history] = ()
        return _Run(self.edges + (edge,), remaining, created, consumers)

    def _future(self, net: PtiNet, step: int, memo: Dict[int, tuple]) -> tuple:
        """What becomes of the tokens a firing produced, by place, consumer shape and count."""
        if step not in memo:
            edge = self.edges[step]
            memo[step] = tuple(
                (history.place, tuple(sorted((self.edges[consumer].shape, self.edges[consumer].taken_from(history),
                                              self._future(net, consumer, memo))
                                             for consumer in self.consumers[history])))
                for history in produced(net, edge))
        return memo[step]

    def canonical(self, net: PtiNet) -> Dict[Element, Element]:
        """Renumber siblings by what becomes of their tokens, so that the ids of a computation do
        not depend on which sibling fired first."""
        groups: Dict[Tuple[TransitionId, FrozenSet], List[int]] = {}
        for step, edge in enumerate(self.edges):
            groups.setdefault((edge.transition, edge.takes), []).append(step)
        if all(len(steps) == 1 for steps in groups.values()):
            return {element: element for element in list(self.edges) + list(self.created)}
        memo: Dict[int, tuple] = {}
        rank: Dict[int, int] = {}
        for steps in groups.values():
            ordered = sorted(steps, key=lambda step: (self._future(net, step, memo), self.edges[step].occurrence))
            rank.update({step: index for index, step in enumerate(ordered)})
        mapping: Dict[Element, Element] = {}
        for step, edge in enumerate(self.edges):
            takes = frozenset((mapping[history], count) for history, count in edge.takes)
            renamed = THistory(edge.transition, takes, rank[step]) if step else edge
            mapping[edge] = renamed
            for old, new in zip(produced(net, edge), produced(net, renamed)):
                mapping[old] = new
        return mapping

    def lpo(self, net: PtiNet) -> Lpo:
        nodes = list(self.created)
        comm = set()
        for edge in self.edges:
            for history, _ in edge.takes:
                comm.add((history, edge))
        for history in nodes:
            comm.add((history.producer, history))
        interleave = set()
        for step, edge in enumerate(self.edges):
            places = net.inhibiting_places(edge.transition) if step else ()
            for history in nodes:
                if history.place not in places or history.producer == edge:
                    continue
                if self.created[history] < step:
                    for consumer in self.consumers[history]:
                        interleave.add((self.edges[consumer], edge))
                else:
                    interleave.add((edge, history.producer))
        ids = self.canonical(net)
        nodes = [ids[history] for history in nodes]
        return Lpo(nodes, [ids[edge] for edge in self.edges], {(ids[a], ids[b]) for a, b in comm},
                   reduce_interleave((ids[a], ids[b]) for a, b in interleave),
                   {history: history.place for history in nodes},
                   {ids[edge]: edge.transition for edge in self.edges})


def _distributions(sources: List[PHistory], caps: List[int], need: int) -> Iterator[Tuple[Tuple[PHistory, int], ...]]:
    if not sources:
        if need == 0:
            yield ()
        return
    head, rest = sources[0], sources[1:]
    for take in range(min(caps[0], need), -1, -1):
        for tail in _distributions(rest, caps[1:], need - take):
            yield (((head, take),) if take else ()) + tail


def _unfold(net: PtiNet, max_events: int, sequence: Optional[Sequence[TransitionId]] = None) -> Iterator[_Run]:
    """Runs of the net, every prefix included; restricted to one sequence when given."""

    def walk(run: _Run) -> Iterator[_Run]:
        depth = len(run.edges) - 1
        if sequence is None or depth == len(sequence):
            yield run
        if depth == max_events:
            return
        marking = run.marking(net)
        transitions = net.transitions if sequence is None else (sequence[depth],)
        for transition in transitions:
            if not enabled(net, marking, transition):
                if sequence is not None:
                    raise ErrInvalidSequence(depth, transition)
                continue
            for takes in run.splits(net, transition):
                yield from walk(run.extend(net, transition, takes))

    yield from walk(_Run.start(net))


def lpos_from_firing_sequence(net: PtiNet, seq: Sequence[TransitionId]) -> List[Lpo]:
    """One Lpo per way of resolving which token histories each step draws from.

    Raises:
        ErrUnknownTransition: seq names a transition the net does not have
        ErrInvalidSequence: some step of seq is not enabled
    """
    seq = tuple(seq)
    lpos = []
    for run in _unfold(net, len(seq), seq):
        lpo = run.lpo(net)
        if lpo not in lpos:
            lpos.append(lpo)
    return lpos


def lpo_from_firing_sequence(net: PtiNet, seq: Sequence[TransitionId], resolution: Optional[int] = None) -> Lpo:
    """The Lpo of a firing sequence.

    Args:
        net (PtiNet): The net
        seq (Sequence): A firing sequence from the initial marking
        resolution (int): Index of the token resolution, in `lpos_from_firing_sequence` order;
            the first one (key-smallest histories drawn first) when omitted

    Returns:
        Lpo: the computation

    Raises:
        ErrInvalidSequence: some step of seq is not enabled
        ErrUnresolvedProvenance: the requested resolution does not exist
    """
    lpos = lpos_from_firing_sequence(net, seq)
    index = resolution or 0
    if not 0 <= index < len(lpos):
        raise ErrUnresolvedProvenance(len(seq), f'resolution {index} of {len(lpos)} available')
    return lpos[index]


def _justified_pn(net: PtiNet, lpo: Lpo, first: THistory, second: THistory) -> bool:
    second_places = net.inhibiting_places(second.transition) if second != T_EPSILON else ()
    first_places = net.inhibiting_places(first.transition) if first != T_EPSILON else ()
    if any(node.place in second_places for node in lpo.preset(first)):
        return True
    return any(node.place in first_places for node in lpo.postset(second))


def validate_lpo_pn(net: PtiNet, lpo: Lpo) -> ValidityReport:
    """Check that an Lpo is a computation of the net.

    Args:
        net (PtiNet): The net
        lpo (Lpo): The candidate computation

    Returns:
        ValidityReport: core violations plus history, labels, unique-minimum, unique-producer,
        multiplicity, pre-post, inhibitor-comparability and interleave-justified entries
    """
    report = validate_lpo(lpo)
    bad = [e for e in lpo.nodes if not isinstance(e, PHistory)] + [e for e in lpo.edges if not isinstance(e, THistory)]
    if bad:
        report.add('history', 'elements are not net histories', *sorted(bad, key=str))
        return report
    for edge in sorted(lpo.edges):
        if edge != T_EPSILON and edge.transition not in net.transitions:
            report.add('history', 'unknown transition', edge)
            return report
    for node in sorted(lpo.nodes):
        producer = node.producer.transition
        if node.place not in net.index or (producer != Settings.EPSILON_TRANSITION and producer not in net.transitions):
            report.add('history', 'unknown place or producing transition', node)
            return report
        if node.count != net.post(node.producer.transition)[net.index[node.place]]:
            report.add('history', 'token count differs from the post vector of the producer', node)

    for node in sorted(lpo.nodes):
        if lpo.node_label.get(node) != node.place:
            report.add('labels', 'node label is not its place', node)
    for edge in sorted(lpo.edges):
        if lpo.edge_label.get(edge) != edge.transition:
            report.add('labels', 'edge label is not its transition', edge)

    if lpo.minimal_elements() != [T_EPSILON]:
        report.add('unique-minimum', f'{Settings.EPSILON_TRANSITION} is not the unique minimum',
                   *lpo.minimal_elements())

    for node in sorted(lpo.nodes):
        producers = lpo.preset(node)
        if producers != {node.producer}:
            report.add('unique-producer', 'node is not produced by exactly its producing firing', node, *sorted(producers))
        consumers = lpo.postset(node)
        taken = [edge.taken_from(node) for edge in consumers]
        if any(count <= 0 for count in taken) or sum(taken) > node.count:
            report.add('multiplicity', f'consumers take {taken} of {node.count} tokens', node, *sorted(consumers))

    for edge in sorted(lpo.edges):
        expected_pre = {history for history, _ in edge.takes}
        if edge != T_EPSILON:
            drawn = [0] * len(net.places)
            for history, count in edge.takes:
                if history.place in net.index:
                    drawn[net.index[history.place]] += count
            if Marking(drawn) != net.pre(edge.transition):
                report.add('pre-post', 'tokens drawn differ from the pre vector', edge)
        if lpo.preset(edge) != expected_pre:
            report.add('pre-post', 'preset differs from the histories drawn', edge)
        if lpo.postset(edge) != set(produced(net, edge)):
            report.add('pre-post', 'postset differs from the post vector', edge)

    for edge in sorted(lpo.edges):
        if edge == T_EPSILON:
            continue
        places = net.inhibiting_places(edge.transition)
        for node in sorted(lpo.nodes):
            if node.place in places and not lpo.comparable(edge, node):
                report.add('inhibitor-comparability', 'inhibiting token history unordered with the firing', edge, node)

    for first, second in sorted(lpo.interleave):
        if not _justified_pn(net, lpo, first, second):
            report.add('interleave-justified', 'interleave pair not justified by an inhibitor arc', first, second)
    return report


def glpo_from_lpo_pn(net: PtiNet, lpo: Lpo, check: bool = True) -> GluedLpo:
    """Glue an Lpo: drop interleave, glue every comm pair touching a token history on an inhibiting place.

    Raises:
        ErrInvalidComputation: check is set and lpo is not a computation of the net
    """
    if check:
        report = validate_lpo_pn(net, lpo)
        if not report.ok:
            raise ErrInvalidComputation(report)
    assignment = {}
    for transition in net.transitions:
        places = net.inhibiting_places(transition)
        if not places:
            continue
        assignment[transition] = GlueRelation(
            (a, b) for a, b in lpo.comm
            if (a in lpo.nodes and a.place in places) or (b in lpo.nodes and b.place in places))
    return GluedLpo(lpo.with_interleave(()), assignment)


def enumerate_computations_pn(net: PtiNet, max_events: int, maximal_only: bool = False) -> Computations:
    """All computations with at most max_events firings, and their glued images.

    Args:
        net (PtiNet): The net
        max_events (int): Bound on the number of firings
        maximal_only (bool): Keep only the computations maximal under embedding

    Returns:
        Computations: lpos and glpos, deduplicated and sorted
    """
    check_bound(max_events)
    lpos = {run.lpo(net) for run in _unfold(net, max_events)}
    lpos = maximal_filter(lpos) if maximal_only else sorted(lpos, key=lambda lpo: lpo.sort_key)
    glpos = sorted({glpo_from_lpo_pn(net, lpo, check=False) for lpo in lpos}, key=lambda glpo: glpo.sort_key)
    logger.debug(f'{net.name}: {len(lpos)} computations, {len(glpos)} glued, max {max_events} events')
    return Computations(lpos, glpos)


def check_refinement_theorem_pn(net: PtiNet, max_events: int) -> TheoremCheck:
    """The bounded computations are exactly the valid refinements of their glued images."""
    lpos = enumerate_computations_pn(net, max_events).lpos
    return check_refinement_equality(lpos, lambda lpo: glpo_from_lpo_pn(net, lpo, check=False),
                                     lambda lpo: validate_lpo_pn(net, lpo))


def check_separation_theorem_pn(net: PtiNet, max_events: int) -> TheoremCheck:
    """Every pair of distinct glued computations has a re-validating witness."""
    return check_separation(enumerate_computations_pn(net, max_events).glpos, separation_witness_pn)


def _leftover(glpo: GluedLpo, node: PHistory) -> int:
    return node.count - sum(edge.taken_from(node) for edge in glpo.base.postset(node))


class LeftoverMismatch(SeparationWitness):
    kind = 'leftover-mismatch'

    def __init__(self, node: PHistory, left_count: int, right_count: int):
        """A shared token history leaves a different number of tokens untaken on each side."""
        self.node = node
        self.left_count = left_count
        self.right_count = right_count

    def validate(self, left: GluedLpo, right: GluedLpo) -> bool:
        if self.node not in left.base.nodes or self.node not in right.base.nodes:
            return False
        return self.left_count != self.right_count and \
            (_leftover(left, self.node), _leftover(right, self.node)) == (self.left_count, self.right_count)

    def as_dict(self) -> dict:
        return dict(kind=self.kind, node=self.node.key, left_count=self.left_count, right_count=self.right_count)


class ParticipationMismatch(SeparationWitness):
    kind = 'participation-mismatch'

    def __init__(self, nodes: Iterable[PHistory], transition_edge: THistory, present_in: Side):
        """Shared token histories take part in a firing present on one side only."""
        self.nodes = frozenset(nodes)
        self.transition_edge = transition_edge
        self.present_in = present_in

    def validate(self, left: GluedLpo, right: GluedLpo) -> bool:
        present, absent = (left, right) if self.present_in is Side.LEFT else (right, left)
        return self.transition_edge in present.base.edges and self.transition_edge not in absent.base.edges \
            and self.nodes == present.base.preset(self.transition_edge) and self.nodes <= absent.base.nodes

    def as_dict(self) -> dict:
        return dict(kind=self.kind, nodes=sorted(node.key for node in self.nodes),
                    transition_edge=self.transition_edge.key, present_in=str(self.present_in))


def separation_witness_pn(g1: GluedLpo, g2: GluedLpo) -> Optional[SeparationWitness]:
    """Find why two glued computations of a net differ, None when they are equal.

    Marks shared firings from the initial one onwards, always looking at the shallowest open
    token histories first. Inside one depth a firing present on one side only is reported
    before a leftover difference.

    Raises:
        ErrModelMismatch: the two initial markings differ
        ErrSeparationIncomplete: no certificate found
    """
    if g1 == g2:
        return None
    left, right = g1.base, g2.base
    if T_EPSILON not in left.edges or left.postset(T_EPSILON) != right.postset(T_EPSILON):
        raise ErrModelMismatch('the glued computations start from different markings')
    depths = element_depths(left)
    marked = {T_EPSILON}
    while True:
        shared = left.nodes & right.nodes
        open_nodes = {node for node in shared if node.producer in marked}
        layers: Dict[int, List[PHistory]] = {}
        for node in open_nodes:
            layers.setdefault(depths[node], []).append(node)
        progressed = False
        for depth in sorted(layers):
            witness, edge = _inspect_layer(sorted(layers[depth]), open_nodes, marked, g1, g2)
            if witness is not None:
                logger.debug(f'separated at depth {depth}: {witness}')
                return witness
            if edge is not None:
                marked.add(edge)
                progressed = True
                break
        if not progressed:
            raise ErrSeparationIncomplete(repr(g1), repr(g2))


def _inspect_layer(layer: List[PHistory], open_nodes, marked, g1: GluedLpo, g2: GluedLpo):
    left, right = g1.base, g2.base

    def ready(edge: THistory, side: Lpo) -> bool:
        return side.preset(edge) <= open_nodes

    def one_sided(edge: THistory) -> Optional[ParticipationMismatch]:
        if edge in left.edges and edge not in right.edges and ready(edge, left):
            return ParticipationMismatch(left.preset(edge), edge, Side.LEFT)
        if edge in right.edges and edge not in left.edges and ready(edge, right):
            return ParticipationMismatch(right.preset(edge), edge, Side.RIGHT)
        return None

    consumers = {node: (sorted(left.postset(node) - marked), sorted(right.postset(node) - marked)) for node in layer}
    for node in layer:
        on_left, on_right = consumers[node]
        if not (on_left and on_right):
            continue
        for edge in sorted(set(on_left) | set(on_right)):
            if edge in left.edges and edge in right.edges:
                if ready(edge, left):
                    return None, edge
                continue
            witness = one_sided(edge)
            if witness is not None:
                return witness, None
    for node in layer:
        left_count, right_count = _leftover(g1, node), _leftover(g2, node)
        if left_count != right_count:
            return LeftoverMismatch(node, left_count, right_count), None
    for node in layer:
        for edge in sorted(set(consumers[node][0]) | set(consumers[node][1])):
            if edge in left.edges and edge in right.edges:
                if ready(edge, left):
                    return None, edge
                continue
            witness = one_sided(edge)
            if witness is not None:
                return witness, None
    return None, None
