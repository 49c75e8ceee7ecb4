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
import os
from typing import Optional

from gluepo.errors import ErrEventBound
from gluepo.lib import ModelKind, MulticastBlockMode
from gluepo.settings import Settings
from gluepocli.clierrors import GluepoEnvironmentError
from gluepocli.reportcommand import ReportFormat


class GluepoEnv(Enum):
    GLUEPO_MAX_EVENTS_CAP = Settings.MAX_EVENTS_CAP_ENV

    def __str__(self):
        return self.value


class RunConfig:

    def __init__(self, model_path: Optional[str] = None, kind: Optional[ModelKind] = None,
                 max_events: int = Settings.maxEventsDefault, maximal_only: bool = False,
                 mode: Optional[MulticastBlockMode] = None, report_format: ReportFormat = ReportFormat.summary,
                 seed: int = Settings.randomSeed, cap: Optional[int] = None):

        self._model_path = model_path
        self._kind = kind
        self._max_events = max_events
        self._maximal_only = maximal_only
        self._mode = mode
        self._format = report_format
        self._seed = seed
        self._cap = RunConfig.get_cap_from_env() if cap is None else cap
        ErrEventBound.checkAndRaise(max_events, self._cap)

    @staticmethod
    def get_cap_from_env() -> int:
        value = os.getenv(GluepoEnv.GLUEPO_MAX_EVENTS_CAP.value)
        if value is None:
            return Settings.maxEventsCap
        try:
            cap = int(value)
        except ValueError:
            raise GluepoEnvironmentError(f"Environment variable '{GluepoEnv.GLUEPO_MAX_EVENTS_CAP}' "
                                         f"must be an integer, not '{value}'")
        if cap < 0:
            raise GluepoEnvironmentError(f"Environment variable '{GluepoEnv.GLUEPO_MAX_EVENTS_CAP}' "
                                         f"can't be negative")
        return cap

    @property
    def model_path(self):
        return self._model_path

    @property
    def kind(self):
        return self._kind

    @kind.setter
    def kind(self, kind: ModelKind):
        self._kind = kind

    @property
    def max_events(self):
        return self._max_events

    @property
    def maximal_only(self):
        return self._maximal_only

    @property
    def mode(self):
        return self._mode

    @property
    def block_mode(self) -> MulticastBlockMode:
        """The mode for single-mode analyses; listening unless one was asked for."""
        return self._mode or MulticastBlockMode.LISTENING

    @property
    def format(self):
        return self._format

    @property
    def seed(self):
        return self._seed

    @property
    def cap(self):
        return self._cap

    def __repr__(self):
        return (f"RunConfig(model_path={self._model_path!r}, kind={self._kind}, max_events={self._max_events}, "
                f"maximal_only={self._maximal_only}, mode={self._mode}, format={self._format}, "
                f"seed={self._seed}, cap={self._cap})")
