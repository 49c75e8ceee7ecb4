"""
Command line NoseTests
"""
from io import StringIO
import json
import os
import tempfile
import unittest
from unittest import mock

from gluepo.parsers import fixture_path
from gluepocli.cli import main
from gluepocli.runconfig import RunConfig
from gluepocli.clierrors import GluepoEnvironmentError
from tests import SHARED_LETTER

FIG1 = fixture_path('fig1.pti')
FIG2 = fixture_path('fig2.cts')


class GluepocliTest(unittest.TestCase):

    def setUp(self):
        self.workdir = tempfile.TemporaryDirectory()
        self.shared = os.path.join(self.workdir.name, 'shared.async')
        with open(self.shared, 'w') as handle:
            handle.write(SHARED_LETTER)

    def tearDown(self):
        self.workdir.cleanup()

    def gluepo(self, *args):
        out = StringIO()
        status = main(list(args), out=out)
        return status, out.getvalue()

    def test_00_unfold_maximal(self):
        status, output = self.gluepo('unfold', FIG1, '--max-events', '4', '--maximal-only')
        self.assertEqual(0, status)
        self.assertEqual('3 LPOs', output.splitlines()[-1])

    test_00_unfold_maximal.basic = True

    def test_01_glue_maximal(self):
        status, output = self.gluepo('glue', FIG1, '--max-events', '4', '--maximal-only')
        self.assertEqual(0, status)
        self.assertEqual('2 g-LPOs', output.splitlines()[-1])

    test_01_glue_maximal.basic = True

    def test_02_check_equivalence(self):
        status, output = self.gluepo('check-equivalence', FIG2, '--max-events', '4')
        self.assertEqual(0, status)
        self.assertIn('holds', output)
        status, _ = self.gluepo('check-equivalence', FIG2, '--max-events', '3',
                                '--multicast-block-mode', 'cannot-receive')
        self.assertEqual(0, status)

    test_02_check_equivalence.basic = True

    def test_03_json(self):
        status, output = self.gluepo('unfold', FIG1, '--format', 'json', '--max-events', '2')
        self.assertEqual(0, status)
        document = json.loads(output)
        self.assertEqual('unfold', document['command'])
        self.assertEqual(6, document['count'])
        self.assertEqual(6, len(document['items']))

    test_03_json.basic = True

    def test_04_separate(self):
        status, output = self.gluepo('separate', FIG1, '--max-events', '4', '--maximal-only')
        self.assertEqual(0, status)
        self.assertIn('participation-mismatch', output)
        self.assertEqual('1 separated pair', output.splitlines()[-1])
        status, _ = self.gluepo('separate', FIG1, '--index', '99')
        self.assertEqual(2, status)

    test_04_separate.basic = True

    def test_05_compose(self):
        status, output = self.gluepo('compose', FIG2)
        self.assertEqual(0, status)
        self.assertTrue(output.startswith('system fig2\n\nagent T1|T2|T3\n'))
        self.assertEqual(2, self.gluepo('compose', FIG1)[0])

    test_05_compose.basic = True

    def test_06_baseline(self):
        status, output = self.gluepo('baseline', self.shared, '--max-events', '3')
        self.assertEqual(0, status)
        self.assertIn('baseline: holds', output)
        self.assertEqual(2, self.gluepo('baseline', FIG1)[0])

    test_06_baseline.basic = True

    def test_07_render(self):
        status, output = self.gluepo('render', FIG1, '--glued', '--index', '1', '--maximal-only')
        self.assertEqual(0, status)
        self.assertTrue(output.startswith('digraph G1 {'))
        self.assertEqual(2, self.gluepo('render', FIG1, '--index', '99')[0])

    test_07_render.basic = True

    def test_08_usage_errors(self):
        self.assertEqual(2, self.gluepo('explode', FIG1)[0])
        self.assertEqual(2, self.gluepo('unfold', FIG1, '--no-such-flag')[0])
        self.assertEqual(2, self.gluepo('unfold', FIG1, '--max-events', '99')[0])
        self.assertEqual(2, self.gluepo('unfold', FIG1, '--kind', 'cts')[0])
        self.assertEqual(2, self.gluepo('unfold', os.path.join(self.workdir.name, 'missing.pti'))[0])
        broken = os.path.join(self.workdir.name, 'broken.pti')
        with open(broken, 'w') as handle:
            handle.write('place p1\n')
        self.assertEqual(2, self.gluepo('unfold', broken)[0])

    test_08_usage_errors.basic = True

    def test_09_cap_from_environment(self):
        with mock.patch.dict(os.environ, {'GLUEPO_MAX_EVENTS_CAP': '2'}):
            self.assertEqual(2, RunConfig.get_cap_from_env())
            self.assertEqual(2, self.gluepo('unfold', FIG1, '--max-events', '3')[0])
            self.assertEqual(0, self.gluepo('unfold', FIG1, '--max-events', '2')[0])
        with mock.patch.dict(os.environ, {'GLUEPO_MAX_EVENTS_CAP': 'lots'}):
            with self.assertRaises(GluepoEnvironmentError):
                RunConfig.get_cap_from_env()
            self.assertEqual(2, self.gluepo('unfold', FIG1)[0])

    test_09_cap_from_environment.basic = True

    def test_10_random_suite(self):
        status, output = self.gluepo('random-suite', '--kind', 'async', '--count', '3', '--max-events', '2')
        self.assertEqual(0, status)
        self.assertIn('3 random async models', output)
        self.assertIn('no violations', output)

    test_10_random_suite.basic = True


if __name__ == '__main__':
    unittest.main()
