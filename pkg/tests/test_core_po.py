"""
Core partial order NoseTests

Orders, validity clauses, glue, refinement and the generic theorem drivers.
"""
from dataclasses import dataclass
import logging

from gluepo.core_po import (Element, GlueRelation, GluedLpo, Lpo, CounterexampleKind, check_bound,
                            check_refinement_equality, check_separation, element_depths, embeds, implied_pairs,
                            justified_pairs, maximal_filter, order_query, reduce_interleave, refinements, refines,
                            validate_lpo)
from gluepo.cts import enumerate_computations_cts
from gluepo.errors import ErrEventBound, ErrInvalidGlue, ErrUnknownElement, ErrUniverseMismatch
from gluepo.lib import Order
from gluepo.pti_net import enumerate_computations_pn, glpo_from_lpo_pn, lpo_from_firing_sequence, validate_lpo_pn
from tests import BaseTests

verbose_logger = logging.getLogger('verbose_logger')


@dataclass(frozen=True, eq=False)
class Named(Element):
    name: str

    @property
    def key(self) -> str:
        return self.name


def by_label(lpo: Lpo, label, nodes: bool = False) -> Element:
    labels = lpo.node_label if nodes else lpo.edge_label
    return next(element for element, value in labels.items() if value == label)


def small_lpo(interleave=(), extra_comm=()) -> Lpo:
    n1, n2 = Named('n1'), Named('n2')
    e0, e1, e2 = Named('e0'), Named('e1'), Named('e2')
    comm = [(e0, n1), (e0, n2), (n1, e1), (n2, e2)] + list(extra_comm)
    return Lpo([n1, n2], [e0, e1, e2], comm, interleave, {n1: 'a', n2: 'b'}, {e0: 'init', e1: 'x', e2: 'y'})


class CorePoTests(BaseTests):

    def setUp(self):
        super().setUp()
        self.lpo_i = lpo_from_firing_sequence(self.fig1, ['t4', 't1'])
        self.lpo_ii = lpo_from_firing_sequence(self.fig1, ['t1', 't2', 't4'])
        glpos = enumerate_computations_pn(self.fig1, 4, maximal_only=True).glpos
        self.left = next(g for g in glpos if 't2' in g.base.edge_label.values())
        self.right = next(g for g in glpos if 't3' in g.base.edge_label.values())

    def test_00_order_query(self):
        t4, t1 = by_label(self.lpo_i, 't4'), by_label(self.lpo_i, 't1')
        self.assertEqual(Order.BEFORE, order_query(self.lpo_i, t4, t1))
        self.assertEqual(Order.AFTER, order_query(self.lpo_i, t1, t4))
        self.assertEqual(Order.EQUAL, order_query(self.lpo_i, t1, t1))
        p1, p7 = by_label(self.lpo_i, 'p1', nodes=True), by_label(self.lpo_i, 'p7', nodes=True)
        self.assertEqual(Order.INCOMPARABLE, order_query(self.lpo_i, p1, p7))

    test_00_order_query.basic = True

    def test_01_order_query_unknown(self):
        with self.assertRaises(ErrUnknownElement) as context:
            order_query(self.lpo_i, Named('ghost'), by_label(self.lpo_i, 't1'))
        self.assertIn('ghost', str(context.exception))

    test_01_order_query_unknown.basic = True

    def test_02_validate_ok(self):
        report = validate_lpo(small_lpo())
        self.assertTrue(report.ok)
        self.assertEqual([], report.clauses())

    test_02_validate_ok.basic = True

    def test_03_validate_clauses(self):
        e0, e1, e2, n1 = Named('e0'), Named('e1'), Named('e2'), Named('n1')
        self.assertIn('acyclicity', validate_lpo(small_lpo(interleave=[(e1, e0)])).clauses())
        self.assertIn('typing', validate_lpo(small_lpo(interleave=[(n1, e1)])).clauses())
        self.assertIn('anti-reflexivity', validate_lpo(small_lpo(interleave=[(e1, e1)])).clauses())
        self.assertIn('anti-symmetry', validate_lpo(small_lpo(interleave=[(e1, e2), (e2, e1)])).clauses())
        e3 = Named('e3')
        lpo = Lpo(small_lpo().nodes, [e0, e1, e2, e3], small_lpo().comm, [(e1, e2), (e2, e3), (e1, e3)],
                  small_lpo().node_label, {**small_lpo().edge_label, e3: 'z'})
        self.assertIn('non-transitivity', validate_lpo(lpo).clauses())
        verbose_logger.info(f'{validate_lpo(lpo)}')

    test_03_validate_clauses.basic = True

    def test_04_reduce_interleave(self):
        e1, e2, e3 = Named('e1'), Named('e2'), Named('e3')
        pairs = {(e1, e2), (e2, e3), (e1, e3)}
        self.assertEqual([(e1, e3)], implied_pairs(pairs))
        self.assertEqual(frozenset({(e1, e2), (e2, e3)}), reduce_interleave(pairs))

    test_04_reduce_interleave.basic = True

    def test_05_glue_outside_comm(self):
        e1, e2 = Named('e1'), Named('e2')
        with self.assertRaises(ErrInvalidGlue):
            GluedLpo(small_lpo(), {'x': GlueRelation([(e1, e2)])})
        with self.assertRaises(ErrInvalidGlue):
            GluedLpo(small_lpo(), {'x': GlueRelation([(Named('n1'), e1)])}, glues=[])

    test_05_glue_outside_comm.basic = True

    def test_06_empty_glue_dropped(self):
        glpo = GluedLpo(small_lpo(), {'x': GlueRelation()})
        self.assertEqual(GluedLpo(small_lpo(), {}), glpo)
        self.assertEqual(0, len(glpo.glue_of('x')))

    test_06_empty_glue_dropped.basic = True

    def test_07_glue_of_left(self):
        glue = self.left.glue_of('t4')
        self.assertEqual(2, len(glue))
        self.assertEqual(1, len(self.right.glue_of('t4')))
        self.assertEqual(frozenset(), self.left.base.interleave)

    test_07_glue_of_left.basic = True

    def test_08_refines(self):
        self.assertTrue(refines(self.lpo_ii, self.left))
        self.assertTrue(refines(lpo_from_firing_sequence(self.fig1, ['t4', 't1', 't2']), self.left))
        result = refines(self.left.base, self.left)
        self.assertFalse(result)
        self.assertEqual('glue-resolved', result.clause)
        self.assertEqual(by_label(self.lpo_ii, 't4'), result.edge)

    test_08_refines.basic = True

    def test_09_refines_clauses(self):
        t1, t2, t4 = (by_label(self.lpo_ii, label) for label in ('t1', 't2', 't4'))
        extra = self.lpo_ii.with_interleave([(t2, t4), (t1, t4)])
        self.assertEqual('interleave-justified', refines(extra, self.left).clause)
        kept = GluedLpo(self.lpo_ii, {})
        self.assertEqual('interleave-kept', refines(self.lpo_ii.with_interleave(()), kept).clause)
        with self.assertRaises(ErrUniverseMismatch):
            refines(self.lpo_ii, self.right)

    test_09_refines_clauses.basic = True

    def test_10_refinements(self):
        left = list(refinements(self.left))
        right = list(refinements(self.right))
        self.assertEqual(2, len(left))
        self.assertEqual(1, len(right))
        self.assertIn(self.lpo_ii, left)
        for lpo in left + right:
            self.assertTrue(validate_lpo_pn(self.fig1, lpo).ok)
        self.assertEqual(2, len(justified_pairs(self.left)))

    test_10_refinements.basic = True

    def test_11_embeds(self):
        prefix = lpo_from_firing_sequence(self.fig1, ['t1'])
        self.assertTrue(embeds(prefix, self.lpo_ii))
        self.assertFalse(embeds(self.lpo_ii, prefix))
        self.assertTrue(embeds(self.lpo_ii, self.lpo_ii))

    test_11_embeds.basic = True

    def test_12_element_depths(self):
        depths = element_depths(self.lpo_ii)
        self.assertEqual(0, min(depths.values()))
        self.assertEqual(1, depths[by_label(self.lpo_ii, 't1')])
        self.assertEqual(2, depths[by_label(self.lpo_ii, 't2')])
        self.assertEqual(1, depths[by_label(self.lpo_ii, 't4')])
        self.assertEqual(3, depths[by_label(self.lpo_ii, 'p5', nodes=True)])

    test_12_element_depths.basic = True

    def test_13_check_bound(self):
        with self.assertRaises(ErrEventBound):
            check_bound(-1)
        check_bound(0)

    test_13_check_bound.basic = True

    def test_14_refinement_equality_counterexample(self):
        lpos = enumerate_computations_pn(self.fig1, 3).lpos
        check = check_refinement_equality(lpos, lambda lpo: GluedLpo(lpo.with_interleave(()), {}),
                                          lambda lpo: validate_lpo_pn(self.fig1, lpo))
        self.assertFalse(check)
        self.assertEqual(CounterexampleKind.NOT_REFINED, check.counterexample.kind)
        self.assertEqual('not-refined', check.as_dict()['counterexample']['kind'])

    test_14_refinement_equality_counterexample.basic = True

    def test_15_refinement_equality_holds(self):
        lpos = enumerate_computations_pn(self.fig1, 3).lpos
        check = check_refinement_equality(lpos, lambda lpo: glpo_from_lpo_pn(self.fig1, lpo),
                                          lambda lpo: validate_lpo_pn(self.fig1, lpo))
        self.assertTrue(check)
        self.assertEqual(9, check.counts['lpos'])

    test_15_refinement_equality_holds.basic = True

    def test_16_separation_without_witness(self):
        check = check_separation([self.left, self.right], lambda a, b: None)
        self.assertFalse(check.holds)
        self.assertEqual(CounterexampleKind.MISSING_WITNESS, check.counterexample.kind)

    test_16_separation_without_witness.basic = True

    def test_17_as_dict(self):
        document = self.left.as_dict()
        self.assertEqual('gluepo.glpo/1', document['schema'])
        self.assertEqual(2, len(document['glue']['t4']))
        self.assertEqual('gluepo.lpo/1', self.lpo_ii.as_dict()['schema'])
        self.assertEqual(1, len(self.lpo_ii.as_dict()['interleave']))

    test_17_as_dict.basic = True

    def test_18_maximal_filter(self):
        prefix = lpo_from_firing_sequence(self.fig1, ['t1', 't2'])
        self.assertTrue(embeds(prefix, self.lpo_ii))
        self.assertEqual({self.lpo_i, self.lpo_ii}, set(maximal_filter([prefix, self.lpo_i, self.lpo_ii])))
        self.assertEqual([self.lpo_i], maximal_filter([self.lpo_i]))

    test_18_maximal_filter.basic = True

    def test_19_partial_order_axioms(self):
        lpos = enumerate_computations_pn(self.fig1, 4).lpos + enumerate_computations_pn(self.refill, 4).lpos + \
            enumerate_computations_cts(self.fig2, 3).lpos
        checked = 0
        for lpo in lpos:
            elements = sorted(lpo.elements)
            if len(elements) > 40:
                continue
            checked += 1
            for a in elements:
                self.assertTrue(lpo.leq(a, a))
                for b in elements:
                    if a != b and lpo.leq(a, b):
                        self.assertFalse(lpo.leq(b, a), msg=f'{lpo}: {a} and {b}')
                    for c in elements:
                        if lpo.leq(a, b) and lpo.leq(b, c):
                            self.assertTrue(lpo.leq(a, c), msg=f'{lpo}: {a}, {b}, {c}')
        self.assertGreater(checked, 10)

    test_19_partial_order_axioms.basic = True
