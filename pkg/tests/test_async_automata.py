"""
Asynchronous automata NoseTests

Fixed interaction systems need no interleaving order: every computation is the only refinement of its glue-free wrapper.
"""
from gluepo.async_automata import (AsyncEdgeId, E_INIT, Process, ProcessHistory, async_steps, check_baseline_async,
                                   enumerate_computations_async, executions_async, lpo_from_execution_async,
                                   validate_lpo_async)
from gluepo.core_po import GluedLpo, Lpo, refinements
from gluepo.errors import ErrInvalidExecution, ErrInvalidModel
from tests import BaseTests


class AsyncAutomataTests(BaseTests):

    def test_00_model(self):
        self.assertEqual(['a', 'b', 'c'], self.shared.alphabet)
        self.assertEqual((0, 1), self.shared.owners('a'))
        self.assertEqual((1,), self.shared.owners('c'))
        self.assertEqual('init', E_INIT.key)

    test_00_model.basic = True

    def test_01_invalid_processes(self):
        with self.assertRaises(ErrInvalidModel):
            Process('P', ['s0'], 's1', [])
        with self.assertRaises(ErrInvalidModel):
            Process('P', ['s0'], 's0', [('s0', 'a', 's0')], alphabet=['b'])
        with self.assertRaises(ErrInvalidModel):
            Process('P', ['s0'], 's0', [('s0', 'init', 's0')])

    test_01_invalid_processes.basic = True

    def test_02_joint_steps(self):
        steps = async_steps(self.shared, ('0', '0'), 'a')
        self.assertEqual(1, len(steps))
        self.assertEqual(((0, '0', '1'), (1, '0', '1')), steps[0].moves)
        self.assertEqual([], async_steps(self.shared, ('1', '0'), 'a'))
        self.assertEqual([], async_steps(self.shared, ('0', '0'), 'z'))

    test_02_joint_steps.basic = True

    def test_03_independent(self):
        self.assertEqual(5, len(executions_async(self.independent, 2)))
        lpos = enumerate_computations_async(self.independent, 2)
        self.assertEqual(4, len(lpos))
        self.assertEqual(1, len(enumerate_computations_async(self.independent, 2, maximal_only=True)))
        for lpo in lpos:
            self.assertEqual(frozenset(), lpo.interleave)
            self.assertTrue(validate_lpo_async(self.independent, lpo).ok)

    test_03_independent.basic = True

    def test_04_shared_letter(self):
        lpos = enumerate_computations_async(self.shared, 3)
        self.assertEqual(5, len(lpos))
        biggest = lpos[-1]
        joint = next(edge for edge in biggest.edges if edge.letter == 'a')
        self.assertEqual(frozenset({ProcessHistory(0, ('0',)), ProcessHistory(1, ('0',))}), joint.preset)
        self.assertEqual([biggest], list(refinements(GluedLpo(biggest, {}))))

    test_04_shared_letter.basic = True

    def test_05_invalid(self):
        step = async_steps(self.shared, ('0', '0'), 'a')[0]
        with self.assertRaises(ErrInvalidExecution):
            lpo_from_execution_async(self.shared, (step, step))
        lpo = lpo_from_execution_async(self.shared, (step,))
        edge = next(edge for edge in lpo.edges if isinstance(edge, AsyncEdgeId) and edge != E_INIT)
        report = validate_lpo_async(self.shared, lpo.with_interleave([(E_INIT, edge)]))
        self.assertIn('interleave-empty', report.clauses())

    test_05_invalid.basic = True

    def test_06_baseline(self):
        for system, bound in ((self.independent, 2), (self.shared, 3)):
            check = check_baseline_async(system, bound)
            self.assertTrue(check, msg=f'{check.as_dict()}')
        self.assertEqual(5, check_baseline_async(self.shared, 3).counts['lpos'])

    test_06_baseline.basic = True

    def test_07_missing_owner(self):
        first, second = ProcessHistory(0, ('0',)), ProcessHistory(1, ('0',))
        moved = ProcessHistory(0, ('0', '1'))
        alone = AsyncEdgeId(frozenset({first}), 'a')
        lpo = Lpo([first, second, moved], [E_INIT, alone],
                  {(E_INIT, first), (E_INIT, second), (first, alone), (alone, moved)}, (),
                  {first: 'P1:0', second: 'P2:0', moved: 'P1:1'}, {E_INIT: E_INIT.letter, alone: 'a'})
        report = validate_lpo_async(self.shared, lpo)
        self.assertEqual(['participants'], report.clauses())

    test_07_missing_owner.basic = True
