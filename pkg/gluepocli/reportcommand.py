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

from enum import Enum
import sys
from typing import Sequence, TextIO, Union

import humanfriendly

from gluepo.core_po import GluedLpo, Lpo, TheoremCheck, element_depths
from gluepo.export import export_dot, report_document, to_json

NOUNS = dict(lpos="LPO", glpos="g-LPO", refinements="refinement", pairs="pair")


class ReportFormat(Enum):
    summary = "summary"
    json = "json"
    dot = "dot"

    def __str__(self):
        return self.value


class Commands(Enum):
    Unfold = "unfold"
    Glue = "glue"
    CheckEquivalence = "check-equivalence"
    Separate = "separate"
    Compose = "compose"
    Baseline = "baseline"
    Render = "render"
    RandomSuite = "random-suite"

    def __str__(self):
        return self.value


def describe(x: Union[Lpo, GluedLpo]) -> str:
    """One line: the edge labels by depth, then the interleaving and glue sizes."""
    lpo = x.base if isinstance(x, GluedLpo) else x
    depths = element_depths(lpo)
    steps = ' '.join(str(lpo.edge_label[edge]) for edge in sorted(lpo.edges, key=lambda e: (depths[e], e.key)))
    line = f"{steps} [{humanfriendly.pluralize(len(lpo.interleave), 'interleaving pair')}"
    if isinstance(x, GluedLpo):
        for label, relation in sorted(x.assignment.items(), key=lambda item: str(item[0])):
            line += f", glue {label}:{len(relation.pairs)}"
    return line + "]"


class ReportCommand:
    """
    Print the results of a command
    """

    def __init__(self, format: ReportFormat = ReportFormat.summary, out: TextIO = None):
        self._format = format
        self._out = out or sys.stdout

    @property
    def format(self):
        return self._format

    def write(self, text: str):
        print(text, file=self._out)

    def list_one(self, index: int, x: Union[Lpo, GluedLpo]):
        if self._format is ReportFormat.dot:
            self.write(export_dot(x, name=f"G{index}"))
        else:
            self.write(f"{index}: {describe(x)}")

    def list_all(self, command: str, items: Sequence[Union[Lpo, GluedLpo]], noun: str, **extra) -> int:
        if self._format is ReportFormat.json:
            self.write(to_json(report_document(command, count=len(items), items=[x.as_dict() for x in items],
                                               **extra)))
            return len(items)
        for counter, x in enumerate(items):
            self.list_one(counter, x)
        if self._format is ReportFormat.summary:
            self.write(humanfriendly.pluralize(len(items), noun))
        return len(items)

    def report_check(self, command: str, name: str, check: TheoremCheck, **extra) -> bool:
        """Print a check verdict; a failed check always dumps its counterexample as JSON."""
        if self._format is ReportFormat.json:
            self.write(to_json(report_document(command, check=name, **extra, result=check.as_dict())))
            return check.holds
        counts = ', '.join(humanfriendly.pluralize(value, NOUNS.get(key, key)) for key, value in check.counts.items())
        self.write(f"{name}: {'holds' if check.holds else 'VIOLATED'} ({counts})")
        if not check.holds:
            self.write(to_json(check.counterexample))
        return check.holds
