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
Core partial order module

Labelled partial orders whose elements are split in nodes and edges and whose order is
generated by a communication relation and an interleaving relation, glue relations on top
of them, refinement, embedding and maximality, plus the generic drivers used by the model
modules to check refinement equality and separation over bounded enumerations.
"""
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from types import MappingProxyType
from typing import Callable, Dict, FrozenSet, Hashable, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Tuple
import logging

import networkx as nx

from gluepo.errors import ErrEventBound, ErrInvalidGlue, ErrUnknownElement, ErrUniverseMismatch, ErrSeparationIncomplete
from gluepo.lib import Order, key_pairs, sorted_pairs
from gluepo.settings import Settings

logger = logging.getLogger('gluepo.core_po')


class Element(object):
    """Canonical identity of an element of a labelled partial order.

    Subclasses compute a self describing `key`. Two elements are the same element exactly when
    they are of the same type and have the same key, so computations are compared as plain sets.
    """

    @property
    def key(self) -> str:
        raise NotImplementedError

    def __eq__(self, other):
        return type(self) is type(other) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __lt__(self, other):
        return self.key < other.key

    def __repr__(self):
        return f'{type(self).__name__}({self.key})'

    def __str__(self):
        return self.key


Pair = Tuple[Element, Element]


class Violation(object):
    def __init__(self, clause: str, message: str, elements: Iterable = ()):
        """One broken condition of a validity check.

        Args:
            clause (str): Name of the broken clause, e.g. `acyclicity`
            message (str): Human readable description
            elements (Iterable): Offending elements or pairs
        """
        self.clause = clause
        self.message = message
        self.elements = tuple(str(item) for item in elements)

    def as_dict(self) -> dict:
        return dict(clause=self.clause, message=self.message, elements=list(self.elements))

    def __repr__(self):
        return f'Violation({self.clause}: {self.message})'


class ValidityReport(object):
    """Outcome of a validator: ok, or the list of violated clauses.

    Validators never raise for a broken computation, they add entries here.
    """

    def __init__(self, violations: Optional[List[Violation]] = None):
        self.violations = list(violations or [])

    def add(self, clause: str, message: str, *elements) -> None:
        self.violations.append(Violation(clause, message, elements))

    def extend(self, other: 'ValidityReport') -> 'ValidityReport':
        self.violations.extend(other.violations)
        return self

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def clauses(self) -> List[str]:
        """Violated clause names, each once, in report order."""
        seen = []
        for violation in self.violations:
            if violation.clause not in seen:
                seen.append(violation.clause)
        return seen

    def as_dict(self) -> dict:
        return dict(ok=self.ok, violations=[violation.as_dict() for violation in self.violations])

    def __repr__(self):
        return 'ValidityReport(ok)' if self.ok else f'ValidityReport({", ".join(self.clauses())})'


class Lpo(object):
    def __init__(self, nodes: Iterable[Element], edges: Iterable[Element], comm: Iterable[Pair],
                 interleave: Iterable[Pair], node_label: Mapping[Element, Hashable],
                 edge_label: Mapping[Element, Hashable]):
        """A labelled partial order.

        The order `<=` is the reflexive transitive closure of comm and interleave. It is derived on
        demand and never stored.

        Args:
            nodes (Iterable[Element]): The nodes (histories of places or agent states)
            edges (Iterable[Element]): The edges (transition firings or communications)
            comm (Iterable[Pair]): Communication pairs, node to edge or edge to node
            interleave (Iterable[Pair]): Interleaving pairs, edge to edge
            node_label (Mapping): Label of every node
            edge_label (Mapping): Label of every edge
        """
        self.nodes: FrozenSet[Element] = frozenset(nodes)
        self.edges: FrozenSet[Element] = frozenset(edges)
        self.comm: FrozenSet[Pair] = frozenset(comm)
        self.interleave: FrozenSet[Pair] = frozenset(interleave)
        self.node_label = MappingProxyType(dict(node_label))
        self.edge_label = MappingProxyType(dict(edge_label))

    @property
    def elements(self) -> FrozenSet[Element]:
        return self.nodes | self.edges

    @cached_property
    def _identity(self) -> tuple:
        return (self.nodes, self.edges, self.comm, self.interleave,
                frozenset(self.node_label.items()), frozenset(self.edge_label.items()))

    def __eq__(self, other):
        return isinstance(other, Lpo) and self._identity == other._identity

    def __hash__(self):
        return hash(self._identity)

    def __repr__(self):
        return f'Lpo({len(self.nodes)} nodes, {len(self.edges)} edges, {len(self.interleave)} interleave)'

    @cached_property
    def sort_key(self) -> tuple:
        """Total order key used to list computations deterministically."""
        return (len(self.edges), len(self.nodes), tuple(sorted(e.key for e in self.elements)),
                tuple((a.key, b.key) for a, b in sorted_pairs(self.interleave)))

    @cached_property
    def graph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(sorted(self.elements))
        graph.add_edges_from(self.comm)
        graph.add_edges_from(self.interleave)
        return graph

    @cached_property
    def _strictly_above(self) -> Dict[Element, FrozenSet[Element]]:
        return {element: frozenset(nx.descendants(self.graph, element)) for element in self.graph.nodes}

    @cached_property
    def _comm_pre(self) -> Dict[Element, FrozenSet[Element]]:
        pre = {element: set() for element in self.elements}
        for a, b in self.comm:
            pre.setdefault(b, set()).add(a)
        return {element: frozenset(items) for element, items in pre.items()}

    @cached_property
    def _comm_post(self) -> Dict[Element, FrozenSet[Element]]:
        post = {element: set() for element in self.elements}
        for a, b in self.comm:
            post.setdefault(a, set()).add(b)
        return {element: frozenset(items) for element, items in post.items()}

    def label(self, element: Element) -> Hashable:
        if element in self.node_label:
            return self.node_label[element]
        if element in self.edge_label:
            return self.edge_label[element]
        raise ErrUnknownElement(element)

    def leq(self, a: Element, b: Element) -> bool:
        return a == b or b in self._strictly_above.get(a, ())

    def comparable(self, a: Element, b: Element) -> bool:
        return self.leq(a, b) or self.leq(b, a)

    def preset(self, element: Element) -> FrozenSet[Element]:
        """Direct comm predecessors."""
        return self._comm_pre.get(element, frozenset())

    def postset(self, element: Element) -> FrozenSet[Element]:
        """Direct comm successors."""
        return self._comm_post.get(element, frozenset())

    def minimal_elements(self) -> List[Element]:
        return sorted(element for element in self.elements if self.graph.in_degree(element) == 0)

    def with_interleave(self, interleave: Iterable[Pair]) -> 'Lpo':
        return Lpo(self.nodes, self.edges, self.comm, interleave, self.node_label, self.edge_label)

    def as_dict(self) -> dict:
        return dict(schema=Settings.LPO_SCHEMA,
                    nodes=[dict(id=node.key, label=str(self.node_label.get(node))) for node in sorted(self.nodes)],
                    edges=[dict(id=edge.key, label=str(self.edge_label.get(edge))) for edge in sorted(self.edges)],
                    comm=key_pairs(self.comm),
                    interleave=key_pairs(self.interleave))


def _check_known(lpo: Lpo, *elements: Element) -> None:
    for element in elements:
        if element not in lpo.nodes and element not in lpo.edges:
            raise ErrUnknownElement(element)


def order_query(lpo: Lpo, a: Element, b: Element) -> Order:
    """Compare two elements under the closure of comm and interleave.

    Args:
        lpo (Lpo): The partial order
        a (Element): First element
        b (Element): Second element

    Returns:
        Order: before, after, equal or incomparable

    Raises:
        ErrUnknownElement: One of the ids is not an element of the order
    """
    _check_known(lpo, a, b)
    if a == b:
        return Order.EQUAL
    if lpo.leq(a, b):
        return Order.BEFORE
    if lpo.leq(b, a):
        return Order.AFTER
    return Order.INCOMPARABLE


def implied_pairs(relation: Iterable[Pair]) -> List[Pair]:
    """Pairs (a, b) of the relation for which some x has (a, x) and (x, b) in the same relation."""
    relation = frozenset(relation)
    successors: Dict[Element, set] = {}
    for a, b in relation:
        successors.setdefault(a, set()).add(b)
    found = []
    for a, b in sorted_pairs(relation):
        if any(b in successors.get(x, ()) for x in successors.get(a, ()) if x != b):
            found.append((a, b))
    return found


def reduce_interleave(pairs: Iterable[Pair]) -> FrozenSet[Pair]:
    """Drop pairs implied by two steps of the relation until none is left.

    The closure of the relation is unchanged, one pair is removed at a time in key order.
    """
    remaining = set(pairs)
    while True:
        implied = implied_pairs(remaining)
        if not implied:
            return frozenset(remaining)
        remaining.discard(implied[0])


def validate_lpo(lpo: Lpo) -> ValidityReport:
    """Structural checks shared by every kind of computation.

    Args:
        lpo (Lpo): The order to check

    Returns:
        ValidityReport: typing, disjointness, anti-reflexivity, anti-symmetry, non-transitivity
        and acyclicity violations
    """
    report = ValidityReport()
    for node in sorted(lpo.nodes - set(lpo.node_label)):
        report.add('typing', 'node without label', node)
    for edge in sorted(lpo.edges - set(lpo.edge_label)):
        report.add('typing', 'edge without label', edge)
    for a, b in sorted_pairs(lpo.comm):
        if not ((a in lpo.nodes and b in lpo.edges) or (a in lpo.edges and b in lpo.nodes)):
            report.add('typing', 'comm pair is not node-edge or edge-node', a, b)
    for a, b in sorted_pairs(lpo.interleave):
        if a not in lpo.edges or b not in lpo.edges:
            report.add('typing', 'interleave pair is not edge-edge', a, b)

    for element in sorted(lpo.nodes & lpo.edges):
        report.add('disjointness', 'element is both a node and an edge', element)
    for a, b in sorted_pairs(lpo.comm & lpo.interleave):
        report.add('disjointness', 'pair is in both comm and interleave', a, b)

    for name, relation in (('comm', lpo.comm), ('interleave', lpo.interleave)):
        for a, b in sorted_pairs(relation):
            if a == b:
                report.add('anti-reflexivity', f'{name} relates an element to itself', a)
            elif (b, a) in relation and a < b:
                report.add('anti-symmetry', f'{name} holds in both directions', a, b)
        for a, b in implied_pairs(pair for pair in relation if pair[0] != pair[1]):
            report.add('non-transitivity', f'{name} pair implied by two {name} steps', a, b)

    if not nx.is_directed_acyclic_graph(lpo.graph):
        cycle = nx.find_cycle(lpo.graph)
        report.add('acyclicity', 'comm and interleave contain a cycle', *[a for a, _ in cycle])
    return report


class GlueRelation(object):
    """A set of comm pairs glued together for one edge label."""

    def __init__(self, pairs: Iterable[Pair] = ()):
        self.pairs: FrozenSet[Pair] = frozenset(pairs)

    def __iter__(self) -> Iterator[Pair]:
        return iter(sorted_pairs(self.pairs))

    def __len__(self):
        return len(self.pairs)

    def __contains__(self, pair):
        return pair in self.pairs

    def __eq__(self, other):
        return isinstance(other, GlueRelation) and self.pairs == other.pairs

    def __hash__(self):
        return hash(self.pairs)

    def __repr__(self):
        return f'GlueRelation({len(self.pairs)} pairs)'

    def as_dict(self) -> List[List[str]]:
        return key_pairs(self.pairs)


EMPTY_GLUE = GlueRelation()


class GluedLpo(object):
    def __init__(self, base: Lpo, assignment: Mapping[Hashable, GlueRelation],
                 glues: Optional[Iterable[GlueRelation]] = None):
        """An Lpo with a family of glue relations and a partial label to glue assignment.

        Labels missing from the assignment have empty glue, entries mapping to an empty relation
        are dropped so equal glued orders compare equal.

        Args:
            base (Lpo): The underlying order, with its own interleave relation
            assignment (Mapping): Edge label to GlueRelation
            glues (Iterable[GlueRelation]): The glue family, defaults to the assigned relations

        Raises:
            ErrInvalidGlue: An assigned relation is outside the family or leaves base.comm
        """
        self.base = base
        self.assignment = MappingProxyType({label: relation for label, relation in assignment.items()
                                            if len(relation)})
        if glues is None:
            glues = self.assignment.values()
        self.glues: FrozenSet[GlueRelation] = frozenset(glues)
        for label, relation in self.assignment.items():
            if relation not in self.glues:
                raise ErrInvalidGlue(f'glue of {label} is not in the glue family')
        for relation in self.glues:
            if not relation.pairs <= base.comm:
                raise ErrInvalidGlue('glue relation contains pairs outside comm')

    def glue_of(self, label: Hashable) -> GlueRelation:
        return self.assignment.get(label, EMPTY_GLUE)

    @cached_property
    def _identity(self) -> tuple:
        return self.base, self.glues, frozenset(self.assignment.items())

    def __eq__(self, other):
        return isinstance(other, GluedLpo) and self._identity == other._identity

    def __hash__(self):
        return hash(self._identity)

    def __repr__(self):
        return f'GluedLpo({self.base!r}, {len(self.assignment)} glued labels)'

    @cached_property
    def sort_key(self) -> tuple:
        glue = sorted((str(label), tuple(map(tuple, relation.as_dict())))
                      for label, relation in self.assignment.items())
        return self.base.sort_key + (tuple(glue),)

    def as_dict(self) -> dict:
        base = self.base.as_dict()
        base.update(schema=Settings.GLPO_SCHEMA,
                    glue={str(label): relation.as_dict()
                          for label, relation in sorted(self.assignment.items(), key=lambda item: str(item[0]))})
        return base


class RefinementResult(object):
    def __init__(self, holds: bool, clause: Optional[str] = None, pair: Optional[Pair] = None,
                 edge: Optional[Element] = None):
        """Answer of `refines`, with the first violated clause when it does not hold.

        Args:
            holds (bool): Whether the Lpo refines the glued Lpo
            clause (str): same-structure, interleave-kept, glue-resolved or interleave-justified
            pair (Pair): The offending pair
            edge (Element): The edge whose glue is unresolved (glue-resolved only)
        """
        self.holds = holds
        self.clause = clause
        self.pair = pair
        self.edge = edge

    def __bool__(self):
        return self.holds

    def as_dict(self) -> dict:
        return dict(holds=self.holds, clause=self.clause,
                    pair=[str(item) for item in self.pair] if self.pair else None,
                    edge=str(self.edge) if self.edge is not None else None)

    def __repr__(self):
        if self.holds:
            return 'RefinementResult(holds)'
        return f'RefinementResult({self.clause} on {self.pair})'


def _justifies(glpo: GluedLpo, lpo: Lpo, first: Element, second: Element) -> bool:
    for a, b in glpo.glue_of(lpo.edge_label[first]):
        if a == second:
            return True
    for a, b in glpo.glue_of(lpo.edge_label[second]):
        if b == first:
            return True
    return False


def refines(lpo: Lpo, glpo: GluedLpo) -> RefinementResult:
    """Check that an Lpo refines a glued Lpo.

    The Lpo has to keep the structure of the base, keep its interleave pairs, place every edge
    strictly before or after each glue pair of its label and justify every added interleave pair
    by glue.

    Args:
        lpo (Lpo): The candidate refinement
        glpo (GluedLpo): The glued order

    Returns:
        RefinementResult: holds, or the first violated clause with the offending pair

    Raises:
        ErrUniverseMismatch: The two arguments do not have the same elements
    """
    base = glpo.base
    if lpo.elements != base.elements:
        raise ErrUniverseMismatch(sorted(e.key for e in lpo.elements - base.elements),
                                  sorted(e.key for e in base.elements - lpo.elements))
    if lpo.nodes != base.nodes or lpo.comm != base.comm or lpo.node_label != base.node_label \
            or lpo.edge_label != base.edge_label:
        pair = next(iter(sorted_pairs(lpo.comm ^ base.comm)), None)
        return RefinementResult(False, 'same-structure', pair)
    for pair in sorted_pairs(base.interleave - lpo.interleave):
        return RefinementResult(False, 'interleave-kept', pair)
    for edge in sorted(lpo.edges):
        for a, b in glpo.glue_of(lpo.edge_label[edge]):
            if not (lpo.leq(edge, a) or lpo.leq(b, edge)):
                return RefinementResult(False, 'glue-resolved', (a, b), edge)
    for first, second in sorted_pairs(lpo.interleave - base.interleave):
        if not _justifies(glpo, lpo, first, second):
            return RefinementResult(False, 'interleave-justified', (first, second))
    return RefinementResult(True)


def embeds(small: Lpo, big: Lpo) -> bool:
    """True when small is a prefix-like restriction of big.

    small's elements are among big's, comm agrees on them and small's interleave is kept in big.
    """
    if not small.elements <= big.elements:
        return False
    elements = small.elements
    restricted = frozenset((a, b) for a, b in big.comm if a in elements and b in elements)
    return small.comm == restricted and small.interleave <= big.interleave


def maximal_filter(lpos: Iterable[Lpo]) -> List[Lpo]:
    """The Lpos no other Lpo of the collection strictly embeds into, in sort order."""
    candidates = sorted(set(lpos), key=lambda lpo: lpo.sort_key)
    maximal = [lpo for lpo in candidates
               if not any(other != lpo and embeds(lpo, other) for other in candidates)]
    logger.debug(f'{len(maximal)} of {len(candidates)} computations are maximal')
    return maximal


def element_depths(lpo: Lpo) -> Dict[Element, int]:
    """Depth along comm: minimal elements 0, a node one more than its producers, an edge the max of its preset."""
    depths: Dict[Element, int] = {}
    comm_graph = nx.DiGraph()
    comm_graph.add_nodes_from(sorted(lpo.elements))
    comm_graph.add_edges_from(lpo.comm)
    for element in nx.lexicographical_topological_sort(comm_graph, key=lambda item: item.key):
        preds = [depths[pred] for pred in lpo.preset(element)]
        if not preds:
            depths[element] = 0
        elif element in lpo.nodes:
            depths[element] = max(preds) + 1
        else:
            depths[element] = max(preds)
    return depths


def justified_pairs(glpo: GluedLpo) -> List[Pair]:
    """Interleave pairs that glue can justify and the base does not already contain."""
    base = glpo.base
    found = set()
    for edge in base.edges:
        for a, b in glpo.glue_of(base.edge_label[edge]):
            if a in base.edges and a != edge:
                found.add((edge, a))
            if b in base.edges and b != edge:
                found.add((b, edge))
    return sorted_pairs(found - base.interleave)


def _closes_two_step(interleave: set, a: Element, b: Element) -> bool:
    """Whether adding (a, b) to interleave puts a pair and two steps implying it in the relation."""
    for x, y in interleave:
        if x == a and ((y, b) in interleave or (b, y) in interleave):
            return True
        if y == b and (a, x) in interleave:
            return True
        if y == a and (x, b) in interleave:
            return True
    return False


def refinements(glpo: GluedLpo) -> Iterator[Lpo]:
    """Every valid Lpo refining a glued Lpo.

    Include/exclude search over the justifiable pairs. A pair closing a cycle or a two step
    implication is never included, and a branch is cut as soon as some glue pair can no longer
    be resolved even with every undecided pair added.
    """
    base = glpo.base
    candidates = justified_pairs(glpo)
    if len(candidates) > Settings.justifiedPairsWarn:
        logger.warning(f'{len(candidates)} justifiable pairs, the refinement search is exponential in this')
    constraints = [(edge, a, b) for edge in sorted(base.edges) for a, b in glpo.glue_of(base.edge_label[edge])
                   if edge not in (a, b)]
    graph = base.graph.copy()
    chosen = set(base.interleave)

    def viable(index: int) -> bool:
        upper = graph.copy()
        upper.add_edges_from(candidates[index:])
        return all(nx.has_path(upper, edge, a) or nx.has_path(upper, b, edge) for edge, a, b in constraints)

    def search(index: int) -> Iterator[Lpo]:
        if index == len(candidates):
            lpo = base.with_interleave(chosen)
            if validate_lpo(lpo).ok and refines(lpo, glpo):
                yield lpo
            return
        a, b = candidates[index]
        if not nx.has_path(graph, b, a) and not _closes_two_step(chosen, a, b):
            had_edge = graph.has_edge(a, b)
            graph.add_edge(a, b)
            chosen.add((a, b))
            yield from search(index + 1)
            chosen.discard((a, b))
            if not had_edge:
                graph.remove_edge(a, b)
        if viable(index + 1):
            yield from search(index + 1)

    if viable(0):
        yield from search(0)


class SeparationWitness(object):
    """A certificate that two glued Lpos differ by more than rescheduling."""
    kind = 'witness'

    def validate(self, left: GluedLpo, right: GluedLpo) -> bool:
        """Re-check the certificate against both inputs."""
        raise NotImplementedError

    def as_dict(self) -> dict:
        raise NotImplementedError

    def __str__(self):
        details = ', '.join(f'{name}={value}' for name, value in self.as_dict().items() if name != 'kind')
        return f'{self.kind}({details})'


class CounterexampleKind(Enum):
    INVALID_COMPUTATION = 'invalid-computation'
    NOT_REFINED = 'not-refined'
    INVALID_REFINEMENT = 'invalid-refinement'
    NOT_RECOVERED = 'not-recovered'
    MISSING_WITNESS = 'missing-witness'
    INVALID_WITNESS = 'invalid-witness'
    SPURIOUS_WITNESS = 'spurious-witness'

    def __str__(self):
        return self.value


@dataclass
class Counterexample:
    kind: CounterexampleKind
    lpo: Optional[Lpo] = None
    glpo: Optional[GluedLpo] = None
    other: Optional[GluedLpo] = None
    detail: str = ''

    def as_dict(self) -> dict:
        return dict(kind=str(self.kind), detail=self.detail,
                    lpo=self.lpo.as_dict() if self.lpo else None,
                    glpo=self.glpo.as_dict() if self.glpo else None,
                    other=self.other.as_dict() if self.other else None)


@dataclass
class TheoremCheck:
    holds: bool
    counterexample: Optional[Counterexample] = None
    counts: Dict[str, int] = field(default_factory=dict)

    def __bool__(self):
        return self.holds

    def as_dict(self) -> dict:
        return dict(holds=self.holds, counts=dict(self.counts),
                    counterexample=self.counterexample.as_dict() if self.counterexample else None)


def check_refinement_equality(lpos: Iterable[Lpo], lift: Callable[[Lpo], GluedLpo],
                              validate: Callable[[Lpo], ValidityReport]) -> TheoremCheck:
    """Check that a bounded set of computations equals the refinements of its glued images.

    Every computation must validate, refine its own glued image and be found again among that
    image's refinements; every refinement of every image must validate.

    Args:
        lpos (Iterable[Lpo]): The enumerated computations
        lift (Callable): Builds the glued Lpo of a computation
        validate (Callable): The model validator

    Returns:
        TheoremCheck: holds, or the first counterexample met
    """
    lpos = sorted(set(lpos), key=lambda lpo: lpo.sort_key)
    images: Dict[GluedLpo, List[Lpo]] = {}
    counts = dict(lpos=len(lpos), glpos=0, refinements=0)
    for lpo in lpos:
        report = validate(lpo)
        if not report.ok:
            return TheoremCheck(False, Counterexample(CounterexampleKind.INVALID_COMPUTATION, lpo,
                                                      detail=', '.join(report.clauses())), counts)
        glpo = lift(lpo)
        result = refines(lpo, glpo)
        if not result:
            return TheoremCheck(False, Counterexample(CounterexampleKind.NOT_REFINED, lpo, glpo,
                                                      detail=repr(result)), counts)
        if glpo not in images:
            images[glpo] = list(refinements(glpo))
            counts['glpos'] += 1
            counts['refinements'] += len(images[glpo])
            for refined in images[glpo]:
                report = validate(refined)
                if not report.ok:
                    return TheoremCheck(False, Counterexample(CounterexampleKind.INVALID_REFINEMENT, refined, glpo,
                                                              detail=', '.join(report.clauses())), counts)
        if lpo not in images[glpo]:
            return TheoremCheck(False, Counterexample(CounterexampleKind.NOT_RECOVERED, lpo, glpo), counts)
    logger.debug(f'refinement equality holds over {counts}')
    return TheoremCheck(True, None, counts)


def check_separation(glpos: Iterable[GluedLpo],
                     find_witness: Callable[[GluedLpo, GluedLpo], Optional[SeparationWitness]]) -> TheoremCheck:
    """Check that every pair of distinct glued Lpos has a valid witness and no glued Lpo is separated from itself.

    Args:
        glpos (Iterable[GluedLpo]): The enumerated glued computations
        find_witness (Callable): The model witness search, None meaning equal

    Returns:
        TheoremCheck: holds, or the first counterexample met
    """
    glpos = sorted(set(glpos), key=lambda glpo: glpo.sort_key)
    counts = dict(glpos=len(glpos), pairs=0)
    for glpo in glpos:
        if find_witness(glpo, glpo) is not None:
            return TheoremCheck(False, Counterexample(CounterexampleKind.SPURIOUS_WITNESS, glpo=glpo), counts)
    for index, left in enumerate(glpos):
        for right in glpos[index + 1:]:
            counts['pairs'] += 1
            try:
                witness = find_witness(left, right)
            except ErrSeparationIncomplete as e:
                return TheoremCheck(False, Counterexample(CounterexampleKind.MISSING_WITNESS, glpo=left, other=right,
                                                          detail=str(e)), counts)
            if witness is None:
                return TheoremCheck(False, Counterexample(CounterexampleKind.MISSING_WITNESS, glpo=left, other=right,
                                                          detail='distinct inputs reported equal'), counts)
            if not witness.validate(left, right):
                return TheoremCheck(False, Counterexample(CounterexampleKind.INVALID_WITNESS, glpo=left, other=right,
                                                          detail=str(witness)), counts)
    logger.debug(f'separation holds over {counts["pairs"]} pairs')
    return TheoremCheck(True, None, counts)


class Computations(NamedTuple):
    """Bounded enumeration result: computations and their glued images, both in sort order."""
    lpos: List[Lpo]
    glpos: List[GluedLpo]


def check_bound(max_events: int) -> None:
    if max_events < 0:
        raise ErrEventBound(ErrEventBound.ERR_NEGATIVE)
