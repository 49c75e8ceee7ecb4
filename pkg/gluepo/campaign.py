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
Campaign module

Runs the theorem checkers over a seeded series of random models and collects the failures.
"""
import logging
from time import monotonic
from typing import List, Optional

import coolname
import humanfriendly

from gluepo.async_automata import check_baseline_async
from gluepo.core_po import TheoremCheck
from gluepo.cts import check_refinement_theorem_cts, check_separation_theorem_cts
from gluepo.lib import ModelKind, MulticastBlockMode
from gluepo.parsers import emit_model
from gluepo.pti_net import check_refinement_theorem_pn, check_separation_theorem_pn
from gluepo.random_models import random_async_system, random_cts_system, random_pti_net
from gluepo.settings import Settings

logger = logging.getLogger('gluepo.campaign')


class CampaignFailure(object):
    def __init__(self, seed: int, check: str, model_text: str, result: TheoremCheck):
        """A check that did not hold on one random model.

        Args:
            seed (int): Seed of the model
            check (str): Name of the check
            model_text (str): The model, in its text format
            result (TheoremCheck): The failed check, with its counterexample
        """
        self.seed = seed
        self.check = check
        self.model_text = model_text
        self.result = result

    def as_dict(self) -> dict:
        return dict(seed=self.seed, check=self.check, model=self.model_text, result=self.result.as_dict())


class CampaignReport(object):
    def __init__(self, name: str, kind: ModelKind, count: int, seed: int, max_events: int):
        self.name = name
        self.kind = kind
        self.count = count
        self.seed = seed
        self.max_events = max_events
        self.checks_run = 0
        self.failures: List[CampaignFailure] = []
        self.elapsed = 0.0

    @property
    def holds(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        verdict = 'no violations' if self.holds else humanfriendly.pluralize(len(self.failures), 'violation')
        return f'{self.name}: {humanfriendly.pluralize(self.count, f"random {self.kind} model")}, ' \
               f'{humanfriendly.pluralize(self.checks_run, "check")}, {verdict} ' \
               f'in {humanfriendly.format_timespan(self.elapsed)}'

    def as_dict(self) -> dict:
        return dict(name=self.name, kind=str(self.kind), count=self.count, seed=self.seed,
                    max_events=self.max_events, checks_run=self.checks_run, holds=self.holds,
                    elapsed=round(self.elapsed, 3), failures=[failure.as_dict() for failure in self.failures])


def _checks(kind: ModelKind, seed: int, max_events: int, mode: Optional[MulticastBlockMode]):
    if kind is ModelKind.PTI:
        net = random_pti_net(seed)
        yield net, 'refinement', lambda: check_refinement_theorem_pn(net, max_events)
        yield net, 'separation', lambda: check_separation_theorem_pn(net, max_events)
    elif kind is ModelKind.CTS:
        system = random_cts_system(seed)
        for each in ([mode] if mode is not None else list(MulticastBlockMode)):
            yield system, f'refinement/{each}', lambda m=each: check_refinement_theorem_cts(system, max_events, m)
            yield system, f'separation/{each}', lambda m=each: check_separation_theorem_cts(system, max_events, m)
    else:
        system = random_async_system(seed)
        yield system, 'baseline', lambda: check_baseline_async(system, max_events)


def run_campaign(kind: ModelKind, count: int = Settings.randomCount, seed: int = Settings.randomSeed,
                 max_events: int = Settings.randomMaxEvents,
                 mode: Optional[MulticastBlockMode] = None) -> CampaignReport:
    """Check count random models of a kind, seeds seed .. seed + count - 1.

    Args:
        kind (ModelKind): pti, cts or async
        count (int): Number of models
        seed (int): First seed
        max_events (int): Enumeration bound
        mode (MulticastBlockMode): CTS mode, both modes when None

    Returns:
        CampaignReport: the checks run and the failures found
    """
    report = CampaignReport(coolname.generate_slug(2), kind, count, seed, max_events)
    started = monotonic()
    for model_seed in range(seed, seed + count):
        for model, name, check in _checks(kind, model_seed, max_events, mode):
            result = check()
            report.checks_run += 1
            if not result.holds:
                logger.warning(f'{report.name}: {name} fails on seed {model_seed}: {result.counterexample.kind}')
                report.failures.append(CampaignFailure(model_seed, name, emit_model(model), result))
        if (model_seed - seed + 1) % 50 == 0:
            logger.info(f'{report.name}: {model_seed - seed + 1} of {count} models checked')
    report.elapsed = monotonic() - started
    logger.info(report.summary())
    return report
