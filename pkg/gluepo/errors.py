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
Errors module

Provides all specific Exceptions
"""

from gluepo.settings import Settings
import logging
from typing import Tuple

logger = logging.getLogger('gluepo.errors')


class ErrGluepoGeneric(Exception):
    """Gluepo Generic Exception

    Constructor

    Args:
        msg (str): Short description of the error
        details (dict): The offending values
    """

    def __init__(self, msg: str, details: dict = None):
        super().__init__(msg)
        self.details = details or dict()

    def getDetails(self) -> dict:
        """Get details about the offending values

        Returns:
            dict: The offending values

        """
        return self.details


class ErrUnknownElement(ErrGluepoGeneric):
    """An element id is not part of the partial order

    Constructor

    Args:
        element: The unknown element
    """

    def __init__(self, element):
        super().__init__(f"Unknown element: {element}", dict(element=str(element)))


class ErrUnknownTransition(ErrGluepoGeneric):
    """A transition id is not declared by the net

    Constructor

    Args:
        transition (str): The unknown transition id
    """

    def __init__(self, transition: str):
        super().__init__(f"Unknown transition: {transition}", dict(transition=transition))


class ErrNotEnabled(ErrGluepoGeneric):
    """A transition was fired in a marking where it is not enabled

    Constructor

    Args:
        transition (str): The transition id
        marking (dict): The marking, as a place to token count dict
    """

    def __init__(self, transition: str, marking: dict):
        super().__init__(f"Transition {transition} is not enabled at {marking}",
                         dict(transition=transition, marking=marking))


class ErrInvalidSequence(ErrGluepoGeneric):
    """A firing sequence cannot be played from the initial marking

    Constructor

    Args:
        position (int): Index of the first step that cannot fire
        transition (str): The transition at that step
    """

    def __init__(self, position: int, transition: str):
        super().__init__(f"Step {position} ({transition}) of the firing sequence is not enabled",
                         dict(position=position, transition=transition))


class ErrUnresolvedProvenance(ErrGluepoGeneric):
    """The tokens a transition consumes cannot be matched to the histories present in its places

    Constructor

    Args:
        position (int): Index of the step
        msg (str): What could not be resolved
    """

    def __init__(self, position: int, msg: str):
        super().__init__(f"Step {position}: {msg}", dict(position=position))


class ErrUniverseMismatch(ErrGluepoGeneric):
    """Two partial orders compared for refinement do not share their elements

    Constructor

    Args:
        only_left (list): Keys of the elements present only in the first argument
        only_right (list): Keys of the elements present only in the second argument
    """

    def __init__(self, only_left: list, only_right: list):
        super().__init__(f"Element universes differ ({len(only_left)} only left, {len(only_right)} only right)",
                         dict(only_left=only_left, only_right=only_right))


class ErrInvalidComputation(ErrGluepoGeneric):
    """A partial order handed to a builder is not a computation of the model

    Constructor

    Args:
        report: The validity report listing the violated clauses
    """

    def __init__(self, report):
        self.report = report
        super().__init__(f"Not a computation of the model: {', '.join(report.clauses())}", report.as_dict())


class ErrInvalidExecution(ErrGluepoGeneric):
    """An execution contains a step the system cannot take

    Constructor

    Args:
        position (int): Index of the offending step
        step (str): The step, rendered as text
    """

    def __init__(self, position: int, step: str):
        super().__init__(f"Step {position} ({step}) cannot be taken by the system",
                         dict(position=position, step=step))


class ErrModelMismatch(ErrGluepoGeneric):
    """Two computations compared against each other do not stem from the same model

    Constructor

    Args:
        msg (str): Short description of the difference
    """

    def __init__(self, msg: str):
        super().__init__(msg)


class ErrSeparationIncomplete(ErrGluepoGeneric):
    """Two distinct glued partial orders differ in a way none of the certificate shapes covers

    Constructor

    Args:
        left (str): Key summary of the first argument
        right (str): Key summary of the second argument
    """

    def __init__(self, left: str, right: str):
        super().__init__("No separation certificate found for distinct glued partial orders",
                         dict(left=left, right=right))


class ErrModelSyntax(ErrGluepoGeneric):
    """A model text does not follow the grammar

    Constructor

    Args:
        msg (str): Short description of the error
        line (int): 1 based line number
        column (int): 1 based column number
    """

    def __init__(self, msg: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {msg}", dict(line=line, column=column))
        self.line = line
        self.column = column

    def getPosition(self) -> Tuple[int, int]:
        """Get the position of the error

        Returns:
            int, int: line, column

        """
        return self.line, self.column


class ErrModelSemantic(ErrGluepoGeneric):
    """A model text parses but declares an inconsistent model

    Constructor

    Args:
        msg (str): Short description of the error
        line (int): 1 based line number of the offending declaration
    """

    def __init__(self, msg: str, line: int):
        super().__init__(f"{line}: {msg}", dict(line=line))
        self.line = line


class ErrEventBound(Exception):
    """Out of limit on the 'max_events' enumeration bound

    Constructor

    Args:
        error_code (int): ERR_NEGATIVE or ERR_OVER_CAP
        cap (int): The cap in force
    """
    ERR_NEGATIVE = 0
    ERR_OVER_CAP = 1

    def __init__(self, error_code, cap: int = Settings.maxEventsCap):
        if error_code == ErrEventBound.ERR_NEGATIVE:
            super().__init__("max_events can't be smaller than 0")
        elif error_code == ErrEventBound.ERR_OVER_CAP:
            super().__init__(f"max_events can't be greater than {cap} (set {Settings.MAX_EVENTS_CAP_ENV} to raise it)")
        else:
            super().__init__(str(error_code))

    @staticmethod
    def checkAndRaise(max_events: int, cap: int = Settings.maxEventsCap):
        """Check and Raise an Exception if needed

        Args:
            max_events (int): The requested enumeration bound
            cap (int): The hard cap

        Raises:
            ErrEventBound: If we are out of limits

        """
        if max_events < 0:
            raise ErrEventBound(ErrEventBound.ERR_NEGATIVE, cap)

        if max_events > cap:
            raise ErrEventBound(ErrEventBound.ERR_OVER_CAP, cap)


class ErrInvalidGlue(ErrGluepoGeneric):
    """A glued partial order breaks its own invariants

    Constructor

    Args:
        msg (str): Which invariant is broken
    """

    def __init__(self, msg: str):
        super().__init__(msg)


class ErrInvalidModel(ErrGluepoGeneric):
    """A model object is built from inconsistent parts

    Constructor

    Args:
        msg (str): Short description of the inconsistency
    """

    def __init__(self, msg: str):
        super().__init__(msg)
