"""
CTS NoseTests

Executions with blocking multicast, composition, computations, glue and separation on the three agent example.
"""
import logging
from functools import reduce

from gluepo.core_po import Lpo, refinements
from gluepo.cts import (AgentHistory, ChannelOrderMismatch, CtsAgent, E_EPSILON, LocalMove, Message,
                        NextLabelMismatch, MaximalityMismatch, blocks, check_refinement_theorem_cts,
                        check_separation_theorem_cts, compose, enumerate_computations_cts, executions,
                        glpo_from_lpo_cts, lpo_from_execution, separation_witness_cts, system_step,
                        validate_lpo_cts)
from gluepo.errors import ErrInvalidComputation, ErrInvalidExecution, ErrInvalidModel
from gluepo.lib import MulticastBlockMode, Order, Side
from gluepo.parsers import parse_model
from tests import BaseTests

verbose_logger = logging.getLogger('verbose_logger')

V1 = Message('v1', '!', 'c')

QUIET_RECEIVER = """
system relay

agent A
state a0
state a1
init a0
trans a0 -> a1 on m ! c

agent B
state b0
state b1
init b0
trans b0 -> b1 on m ? c

agent C
state c0 listen c
state c1
init c0
trans c0 -> c1 on m ? c
"""


def payloads(execution) -> tuple:
    return tuple(step.label.payload for step in execution)


def run(sys, *labels):
    return next(e for e in executions(sys, len(labels)) if payloads(e) == labels)


def edge_of(lpo, payload):
    return next(edge for edge, label in lpo.edge_label.items() if label.payload == payload)


def nest(states):
    return reduce(lambda folded, state: (folded, state), states[1:], states[0])


def reachable_states(sys):
    seen, todo = {sys.initial}, [sys.initial]
    while todo:
        states = todo.pop()
        for label in sys.send_labels():
            for step in system_step(sys, states, label):
                if step.apply(states) not in seen:
                    seen.add(step.apply(states))
                    todo.append(step.apply(states))
    return sorted(seen, key=str)


class CtsTests(BaseTests):

    def test_00_model(self):
        self.assertEqual(['T1', 'T2', 'T3'], [agent.name for agent in self.fig2.agents])
        t2, t3 = self.fig2.agents[1], self.fig2.agents[2]
        self.assertEqual(frozenset({'*', 'c'}), t2.listening['2'])
        self.assertEqual(frozenset({'*'}), t2.listening['1'])
        self.assertEqual(frozenset({'*', 'd'}), t3.listening['1'])
        self.assertEqual('(v1,!,c)', str(V1))
        self.assertEqual('(init,!,*)', E_EPSILON.key)

    test_00_model.basic = True

    def test_01_invalid_agents(self):
        with self.assertRaises(ErrInvalidModel):
            CtsAgent('A', ['s0'], 's9', [])
        with self.assertRaises(ErrInvalidModel):
            CtsAgent('A', ['s0'], 's0', [('s0', Message('m', '!', 'c'), 's1')])
        with self.assertRaises(ErrInvalidModel):
            CtsAgent('A', ['s0'], 's0', [], {'s1': ['c']})

    test_01_invalid_agents.basic = True

    def test_02_blocking_multicast(self):
        self.assertEqual([], system_step(self.fig2, ('1', '2', '2'), V1))
        steps = system_step(self.fig2, ('1', '1', '1'), V1)
        self.assertEqual(1, len(steps))
        self.assertEqual((0,), steps[0].participants)
        t2 = self.fig2.agents[1]
        self.assertTrue(blocks(t2, '2', V1))
        self.assertTrue(blocks(t2, '2', V1, MulticastBlockMode.CANNOT_RECEIVE))
        t3 = self.fig2.agents[2]
        self.assertTrue(blocks(t3, '1', Message('v2', '!', 'd')))
        self.assertFalse(blocks(t3, '1', Message('v2', '!', 'd'), MulticastBlockMode.CANNOT_RECEIVE))

    test_02_blocking_multicast.basic = True

    def test_03_executions(self):
        self.assertEqual(6, len(executions(self.fig2, 2)))
        self.assertEqual(10, len(executions(self.fig2, 3)))
        found = [payloads(e) for e in executions(self.fig2, 4)]
        expected = [(), ('v1',), ('v1', 'v2'), ('v1', 'v2', 'v3'), ('v1', 'v2', 'v4'), ('v1', 'v2', 'v4', 'v3'),
                    ('v2',), ('v2', 'v3'), ('v2', 'v3', 'v1'), ('v2', 'v4'), ('v2', 'v4', 'v3'),
                    ('v2', 'v4', 'v3', 'v1')]
        self.assertEqual(expected, found)

    test_03_executions.basic = True

    def test_04_lpo_interleave(self):
        lpo = lpo_from_execution(self.fig2, run(self.fig2, 'v1', 'v2', 'v3'))
        self.assertEqual({(edge_of(lpo, 'v1'), edge_of(lpo, 'v2'))}, set(lpo.interleave))
        lpo = lpo_from_execution(self.fig2, run(self.fig2, 'v2', 'v3', 'v1'))
        self.assertEqual({(edge_of(lpo, 'v3'), edge_of(lpo, 'v1'))}, set(lpo.interleave))
        self.assertTrue(validate_lpo_cts(self.fig2, lpo).ok)
        self.assertEqual('T3:2', lpo.node_label[AgentHistory(2, ('1', '2'))])

    test_04_lpo_interleave.basic = True

    def test_05_invalid_execution(self):
        step = system_step(self.fig2, ('1', '1', '1'), V1)[0]
        later = run(self.fig2, 'v2')
        with self.assertRaises(ErrInvalidExecution) as context:
            lpo_from_execution(self.fig2, later + (step,))
        self.assertEqual(2, context.exception.getDetails()['position'])

    test_05_invalid_execution.basic = True

    def test_06_validator_rejects(self):
        lpo = lpo_from_execution(self.fig2, run(self.fig2, 'v1', 'v2', 'v3'))
        report = validate_lpo_cts(self.fig2, lpo.with_interleave(()))
        self.assertIn('multicast-comparability', report.clauses())
        with self.assertRaises(ErrInvalidComputation):
            glpo_from_lpo_cts(self.fig2, lpo.with_interleave(()))
        senders = lpo_from_execution(self.senders, run(self.senders, 'x', 'y'))
        self.assertIn('channel-order', validate_lpo_cts(self.senders, senders.with_interleave(())).clauses())

    test_06_validator_rejects.basic = True

    def test_07_enumerate_counts(self):
        at_two = enumerate_computations_cts(self.fig2, 2)
        self.assertEqual((6, 6), (len(at_two.lpos), len(at_two.glpos)))
        at_four = enumerate_computations_cts(self.fig2, 4)
        self.assertEqual((12, 10), (len(at_four.lpos), len(at_four.glpos)))
        for lpo in at_four.lpos:
            self.assertTrue(validate_lpo_cts(self.fig2, lpo).ok, msg=f'{lpo}')
        for mode in MulticastBlockMode:
            maximal = enumerate_computations_cts(self.fig2, 4, maximal_only=True, mode=mode)
            self.assertEqual((4, 2), (len(maximal.lpos), len(maximal.glpos)), msg=f'{mode}')

    test_07_enumerate_counts.basic = True

    def test_08_glue_refinements(self):
        glpos = enumerate_computations_cts(self.fig2, 4, maximal_only=True).glpos
        for glpo in glpos:
            self.assertEqual(2, len(list(refinements(glpo))))
        glpo = glpo_from_lpo_cts(self.fig2, lpo_from_execution(self.fig2, run(self.fig2, 'v1', 'v2', 'v3')))
        self.assertEqual(frozenset(), glpo.base.interleave)
        self.assertEqual(glpo, glpo_from_lpo_cts(self.fig2, lpo_from_execution(self.fig2,
                                                                                run(self.fig2, 'v2', 'v3', 'v1'))))
        self.assertTrue(len(glpo.glue_of(V1)) > 0)

    test_08_glue_refinements.basic = True

    def test_09_next_label_witness(self):
        glpos = enumerate_computations_cts(self.fig2, 4, maximal_only=True).glpos
        v4 = next(g for g in glpos if any(label.payload == 'v4' for label in g.base.edge_label.values()))
        v3 = next(g for g in glpos if g is not v4)
        witness = separation_witness_cts(v3, v4)
        verbose_logger.info(f'{witness}')
        self.assertIsInstance(witness, NextLabelMismatch)
        self.assertEqual(2, witness.agent)
        self.assertEqual('2:1.2', witness.history.key)
        self.assertEqual(LocalMove(Message('v3', '?', 'e'), '3'), witness.left_label)
        self.assertEqual(LocalMove(Message('v4', '!', 'b'), '4'), witness.right_label)
        self.assertTrue(witness.validate(v3, v4))
        self.assertFalse(witness.validate(v4, v3))
        self.assertIsNone(separation_witness_cts(v3, v3))

    test_09_next_label_witness.basic = True

    def test_10_maximality_witness(self):
        short = glpo_from_lpo_cts(self.fig2, lpo_from_execution(self.fig2, run(self.fig2, 'v2')))
        long = glpo_from_lpo_cts(self.fig2, lpo_from_execution(self.fig2, run(self.fig2, 'v2', 'v3')))
        witness = separation_witness_cts(short, long)
        self.assertIsInstance(witness, MaximalityMismatch)
        self.assertEqual(Side.LEFT, witness.maximal_in)
        self.assertTrue(witness.validate(short, long))

    test_10_maximality_witness.basic = True

    def test_11_channel_order_witness(self):
        first = glpo_from_lpo_cts(self.senders, lpo_from_execution(self.senders, run(self.senders, 'x', 'y')))
        second = glpo_from_lpo_cts(self.senders, lpo_from_execution(self.senders, run(self.senders, 'y', 'x')))
        witness = separation_witness_cts(first, second)
        self.assertIsInstance(witness, ChannelOrderMismatch)
        self.assertEqual((Order.BEFORE, Order.AFTER), witness.orders)
        self.assertTrue(witness.validate(first, second))
        self.assertEqual(['before', 'after'], witness.as_dict()['orders'])

    test_11_channel_order_witness.basic = True

    def test_12_compose(self):
        a, b = self.senders.agents
        product = compose(a, b)
        self.assertEqual('A|B', product.name)
        self.assertEqual(('a0', 'b0'), product.initial)
        self.assertEqual(4, len(product.transitions))
        self.assertEqual(4, len(product.reachable().states))
        t1, t2 = self.fig2.agents[0], self.fig2.agents[1]
        joined = compose(t1, t2)
        self.assertEqual([], joined.moves(('1', '2'), V1))
        self.assertEqual([('2', '1')], joined.moves(('1', '1'), V1))
        self.assertIn('c', joined.listening[('1', '2')])

    test_12_compose.basic = True

    def test_13_theorems(self):
        for mode in MulticastBlockMode:
            refinement = check_refinement_theorem_cts(self.fig2, 4, mode)
            self.assertTrue(refinement, msg=f'{mode}: {refinement.as_dict()}')
            separation = check_separation_theorem_cts(self.fig2, 4, mode)
            self.assertTrue(separation, msg=f'{mode}: {separation.as_dict()}')
        self.assertTrue(check_refinement_theorem_cts(self.senders, 2))
        self.assertTrue(check_separation_theorem_cts(self.senders, 2))

    test_13_theorems.basic = True

    def test_14_compose_matches_system_step(self):
        relay = parse_model(QUIET_RECEIVER)
        b, c = relay.agents[1], relay.agents[2]
        self.assertEqual([('b0', 'c1')], compose(b, c).moves(('b0', 'c0'), Message('m', '?', 'c')))
        for sys in (self.senders, self.fig2, relay):
            folded = reduce(compose, sys.agents)
            for states in reachable_states(sys):
                for label in sys.send_labels():
                    expected = {nest(step.apply(states)) for step in system_step(sys, states, label)}
                    self.assertEqual(expected, set(folded.moves(nest(states), label)),
                                     msg=f'{sys.name} {states} {label}')

    test_14_compose_matches_system_step.basic = True

    def test_15_initial_edge_rejected(self):
        lpo = lpo_from_execution(self.fig2, ())
        detached = Lpo(lpo.nodes, lpo.edges, {pair for pair in lpo.comm if pair[0] != E_EPSILON}, lpo.interleave,
                       lpo.node_label, lpo.edge_label)
        report = validate_lpo_cts(self.fig2, detached)
        self.assertIn('initial-edge', report.clauses())
        self.assertTrue(validate_lpo_cts(self.fig2, lpo).ok)

    test_15_initial_edge_rejected.basic = True
