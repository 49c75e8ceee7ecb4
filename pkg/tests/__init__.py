import unittest
from os import getenv

import coolname
from hypothesis import settings, HealthCheck

from gluepo.parsers import fixture_path, parse_model, parse_model_file
from gluepo.settings import Settings

test_run_id = coolname.generate_slug(2)

FIG1_FIXTURE = getenv('GLUEPO_FIG1_FIXTURE', fixture_path('fig1.pti'))
FIG2_FIXTURE = getenv('GLUEPO_FIG2_FIXTURE', fixture_path('fig2.cts'))

settings.register_profile('ci', max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile('dev', max_examples=25, deadline=None)
settings.load_profile(getenv('HYPOTHESIS_PROFILE', 'dev'))

HALTING_NET = """
net halting
place p0 init 1
place p1
place p2
trans ta
trans tb
arc p0 -> ta
arc ta -> p1
arc p1 -> tb
arc tb -> p2
"""

TOKENS_NET = """
net tokens
place p init 2
place q
trans a
trans b
arc p -> a
arc a -> q
arc q -> b
"""

REFILL_NET = """
net refill
place p init 2
place q
place r init 1
trans a
trans b
trans c
arc p -> a
arc a -> q
arc q -> b
arc b -> r
arc r -> c
inhibit q c
"""

TWO_SENDERS = """
system senders

agent A
state a0
state a1
init a0
trans a0 -> a1 on x ! c

agent B
state b0
state b1
init b0
trans b0 -> b1 on y ! c
"""

INDEPENDENT_PROCESSES = """
system independent

process P1
state s0
state s1
init s0
trans s0 -> s1 on a

process P2
state s0
state s1
init s0
trans s0 -> s1 on b
"""

SHARED_LETTER = """
system shared

process P1
state 0
state 1
init 0
trans 0 -> 1 on a
trans 1 -> 0 on b

process P2
state 0
state 1
init 0
trans 0 -> 1 on a
trans 1 -> 0 on c
"""


class BaseTests(unittest.TestCase):

    def setUp(self):
        self.fig1 = parse_model_file(FIG1_FIXTURE)
        self.fig2 = parse_model_file(FIG2_FIXTURE)
        self.halting = parse_model(HALTING_NET)
        self.tokens = parse_model(TOKENS_NET)
        self.refill = parse_model(REFILL_NET)
        self.senders = parse_model(TWO_SENDERS)
        self.independent = parse_model(INDEPENDENT_PROCESSES)
        self.shared = parse_model(SHARED_LETTER)
        self.max_events = Settings.maxEventsDefault
        self.test_run_id = test_run_id
