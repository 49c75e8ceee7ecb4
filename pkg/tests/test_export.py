"""
Export NoseTests

DOT rendering and JSON documents.
"""
import json

from gluepo.export import export_dot, report_document, to_json
from gluepo.pti_net import enumerate_computations_pn, lpo_from_firing_sequence
from tests import BaseTests


class ExportTests(BaseTests):

    def setUp(self):
        super().setUp()
        glpos = enumerate_computations_pn(self.fig1, 4, maximal_only=True).glpos
        self.left = next(g for g in glpos if 't2' in g.base.edge_label.values())

    def test_00_glue_annotations(self):
        dot = export_dot(self.left)
        self.assertEqual(2, dot.count('glue:t4'))
        self.assertTrue(dot.startswith('digraph G {'))
        self.assertNotIn('style=dashed', dot)

    test_00_glue_annotations.basic = True

    def test_01_dashed_interleave(self):
        dot = export_dot(lpo_from_firing_sequence(self.fig1, ['t1', 't2', 't4']), name='ii')
        self.assertEqual(1, dot.count('style=dashed'))
        self.assertTrue(dot.startswith('digraph ii {'))

    test_01_dashed_interleave.basic = True

    def test_02_empty_computation(self):
        dot = export_dot(lpo_from_firing_sequence(self.fig1, []))
        self.assertEqual(1, dot.count('shape=box'))
        self.assertEqual(3, dot.count('shape=ellipse'))
        self.assertIn('label="t_eps"', dot)
        self.assertIn('label="p7\\nd=1"', dot)

    test_02_empty_computation.basic = True

    def test_03_deterministic(self):
        again = enumerate_computations_pn(self.fig1, 4, maximal_only=True).glpos
        other = next(g for g in again if 't2' in g.base.edge_label.values())
        self.assertEqual(export_dot(self.left), export_dot(other))

    test_03_deterministic.basic = True

    def test_04_json(self):
        document = json.loads(to_json(self.left))
        self.assertEqual('gluepo.glpo/1', document['schema'])
        self.assertEqual(2, len(document['glue']['t4']))
        report = json.loads(to_json(report_document('glue', count=1)))
        self.assertEqual(dict(schema='gluepo.report/1', command='glue', count=1), report)

    test_04_json.basic = True
