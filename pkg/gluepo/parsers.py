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
Parsers module

Reads the PTI-net and system text formats into model values, and writes model values back in
canonical text.
"""
import logging
import os
from typing import Dict, List, NamedTuple, Tuple, Union

from lark import Lark, Token, Transformer
from lark.exceptions import UnexpectedEOF, UnexpectedInput, VisitError

from gluepo.async_automata import AsyncSystem, Process
from gluepo.cts import CtsAgent, CtsSystem, Message, state_name
from gluepo.errors import ErrInvalidModel, ErrModelSemantic, ErrModelSyntax
from gluepo.pti_net import PtiNet
from gluepo.settings import Settings

logger = logging.getLogger('gluepo.parsers')

FIXTURES_DIR = os.path.join(os.path.dirname(__file__), 'fixtures')

Model = Union[PtiNet, CtsSystem, AsyncSystem]

GRAMMAR = r"""
start: _NL* header _NL (statement _NL)*

header: "net" NAME          -> net_header
      | "system" NAME       -> system_header

?statement: place | trans | move | arc | inhibit | agent | process | state | init

place: "place" NAME ("init" INT)?
trans: "trans" NAME
move: "trans" NAME "->" NAME "on" NAME (POLARITY channel)?
arc: "arc" NAME "->" NAME INT?
inhibit: "inhibit" NAME NAME
agent: "agent" NAME
process: "process" NAME
state: "state" NAME ("listen" channel ("," channel)*)?
init: "init" NAME

channel: NAME | STAR

STAR: "*"
POLARITY: "!" | "?"
NAME: /[A-Za-z0-9_][A-Za-z0-9_.\-]*/
_NL: /(\r?\n[\t ]*(#[^\n]*)?)+/
COMMENT: /#[^\n]*/

%import common.INT
%import common.WS_INLINE
%ignore WS_INLINE
%ignore COMMENT
"""


class Statement(NamedTuple):
    kind: str
    args: tuple
    line: int


class StatementBuilder(Transformer):
    """Turns the parse tree into a flat list of statements, header first."""

    @staticmethod
    def _make(kind: str, items: list, *args) -> Statement:
        line = next((item.line for item in items if isinstance(item, Token)), 0)
        return Statement(kind, tuple(args), line)

    def start(self, items):
        return list(items)

    def net_header(self, items):
        return self._make('net', items, str(items[0]))

    def system_header(self, items):
        return self._make('system', items, str(items[0]))

    def place(self, items):
        return self._make('place', items, str(items[0]), int(items[1]) if len(items) > 1 else 0)

    def trans(self, items):
        return self._make('trans', items, str(items[0]))

    def move(self, items):
        polarity = str(items[3]) if len(items) > 3 else None
        channel = str(items[4]) if len(items) > 4 else None
        return self._make('move', items, str(items[0]), str(items[1]), str(items[2]), polarity, channel)

    def arc(self, items):
        return self._make('arc', items, str(items[0]), str(items[1]), int(items[2]) if len(items) > 2 else 1)

    def inhibit(self, items):
        return self._make('inhibit', items, str(items[0]), str(items[1]))

    def agent(self, items):
        return self._make('agent', items, str(items[0]))

    def process(self, items):
        return self._make('process', items, str(items[0]))

    def state(self, items):
        return self._make('state', items, str(items[0]), tuple(str(item) for item in items[1:]))

    def init(self, items):
        return self._make('init', items, str(items[0]))

    def channel(self, items):
        return items[0]


parser = Lark(GRAMMAR, parser='lalr', transformer=StatementBuilder())


def _statements(text: str) -> List[Statement]:
    for number, line in enumerate(text.splitlines(), start=1):
        words = line.split('#', 1)[0].split()
        if not words:
            continue
        if words[0] not in ('net', 'system'):
            raise ErrModelSyntax('missing header', number, 1)
        break
    else:
        raise ErrModelSyntax('missing header', 1, 1)
    try:
        return parser.parse(text + '\n')
    except UnexpectedEOF as e:
        raise ErrModelSyntax(f'unexpected end of input, expected {sorted(e.expected)}', len(text.splitlines()), 1)
    except UnexpectedInput as e:
        raise ErrModelSyntax(f'unexpected input: {str(e).splitlines()[0]}', e.line, e.column)
    except VisitError as e:
        raise ErrModelSyntax(f'bad value: {e.orig_exc}', 0, 0)


def _build_net(header: Statement, statements: List[Statement]) -> PtiNet:
    places: List[str] = []
    initial: Dict[str, int] = {}
    transitions: List[str] = []
    flow: Dict[Tuple[str, str], int] = {}
    inhibitors = []
    for statement in statements:
        if statement.kind == 'place':
            name, tokens = statement.args
            if name in places:
                raise ErrModelSemantic(f'duplicate place {name}', statement.line)
            places.append(name)
            initial[name] = tokens
        elif statement.kind == 'trans':
            name = statement.args[0]
            if name in transitions:
                raise ErrModelSemantic(f'duplicate transition {name}', statement.line)
            if name == Settings.EPSILON_TRANSITION:
                raise ErrModelSemantic(f'{name} is reserved', statement.line)
            transitions.append(name)
        elif statement.kind not in ('arc', 'inhibit'):
            raise ErrModelSemantic(f'{statement.kind} is not allowed in a net', statement.line)
    for name in set(places) & set(transitions):
        line = next(s.line for s in statements if s.kind == 'trans' and s.args[0] == name)
        raise ErrModelSemantic(f'{name} is both a place and a transition', line)
    for statement in statements:
        if statement.kind == 'arc':
            src, dst, weight = statement.args
            for end in (src, dst):
                if end not in places and end not in transitions:
                    raise ErrModelSemantic(f'unknown place or transition {end}', statement.line)
            if (src in places) == (dst in places):
                raise ErrModelSemantic(f'arc {src} -> {dst} must join a place and a transition', statement.line)
            if (src, dst) in flow:
                raise ErrModelSemantic(f'duplicate arc {src} -> {dst}', statement.line)
            flow[(src, dst)] = weight
        elif statement.kind == 'inhibit':
            place, transition = statement.args
            if place not in places or transition not in transitions:
                raise ErrModelSemantic(f'inhibitor {place} {transition} must join a place and a transition',
                                       statement.line)
            inhibitors.append((place, transition))
    for transition in transitions:
        if not any(dst == transition for _, dst in flow):
            line = next(s.line for s in statements if s.kind == 'trans' and s.args[0] == transition)
            raise ErrModelSemantic(f'transition {transition} has an empty preset', line)
    try:
        return PtiNet(places, transitions, flow, inhibitors, initial, name=header.args[0])
    except ErrInvalidModel as e:
        raise ErrModelSemantic(str(e), header.line)


def _stanzas(statements: List[Statement]) -> List[Tuple[Statement, List[Statement]]]:
    stanzas = []
    for statement in statements:
        if statement.kind in ('agent', 'process'):
            if stanzas and stanzas[0][0].kind != statement.kind:
                raise ErrModelSemantic('agents and processes cannot be mixed in one system', statement.line)
            if any(opening.args[0] == statement.args[0] for opening, _ in stanzas):
                raise ErrModelSemantic(f'duplicate {statement.kind} {statement.args[0]}', statement.line)
            stanzas.append((statement, []))
        elif statement.kind in ('state', 'init', 'move'):
            if not stanzas:
                raise ErrModelSemantic(f'{statement.kind} outside an agent or process', statement.line)
            stanzas[-1][1].append(statement)
        else:
            raise ErrModelSemantic(f'{statement.kind} is not allowed in a system', statement.line)
    return stanzas


def _states_and_init(opening: Statement, body: List[Statement]) -> Tuple[Dict[str, Statement], str]:
    states: Dict[str, Statement] = {}
    initial = None
    for statement in body:
        if statement.kind == 'state':
            if statement.args[0] in states:
                raise ErrModelSemantic(f'duplicate state {statement.args[0]}', statement.line)
            states[statement.args[0]] = statement
        elif statement.kind == 'init':
            if initial is not None:
                raise ErrModelSemantic(f'second init in {opening.args[0]}', statement.line)
            initial = statement
    if initial is None:
        raise ErrModelSemantic(f'{opening.kind} {opening.args[0]} has no init', opening.line)
    if initial.args[0] not in states:
        raise ErrModelSemantic(f'unknown state {initial.args[0]}', initial.line)
    for statement in body:
        if statement.kind == 'move':
            for state in statement.args[:2]:
                if state not in states:
                    raise ErrModelSemantic(f'unknown state {state}', statement.line)
            if statement.args[2] == Settings.INIT_PAYLOAD:
                raise ErrModelSemantic(f'{Settings.INIT_PAYLOAD} is reserved', statement.line)
    return states, initial.args[0]


def _build_system(header: Statement, statements: List[Statement]) -> Union[CtsSystem, AsyncSystem]:
    stanzas = _stanzas(statements)
    if stanzas and stanzas[0][0].kind == 'process':
        processes = []
        for opening, body in stanzas:
            states, initial = _states_and_init(opening, body)
            moves = []
            for statement in body:
                if statement.kind == 'state' and statement.args[1]:
                    raise ErrModelSemantic('processes do not listen to channels', statement.line)
                if statement.kind == 'move':
                    src, dst, letter, polarity, _ = statement.args
                    if polarity is not None:
                        raise ErrModelSemantic('process transitions carry a letter only', statement.line)
                    moves.append((src, letter, dst))
            processes.append(Process(opening.args[0], states, initial, moves))
        return AsyncSystem(processes, name=header.args[0])
    agents = []
    for opening, body in stanzas:
        states, initial = _states_and_init(opening, body)
        moves = []
        for statement in body:
            if statement.kind == 'move':
                src, dst, payload, polarity, channel = statement.args
                if polarity is None:
                    raise ErrModelSemantic('agent transitions need a polarity and a channel', statement.line)
                moves.append((src, Message(payload, polarity, channel), dst))
        listening = {name: statement.args[1] for name, statement in states.items()}
        try:
            agents.append(CtsAgent(opening.args[0], states, initial, moves, listening))
        except ErrInvalidModel as e:
            raise ErrModelSemantic(str(e), opening.line)
    return CtsSystem(agents, name=header.args[0])


def parse_model(text: str) -> Model:
    """Parse a model text.

    Args:
        text (str): A `net` or `system` document

    Returns:
        PtiNet, CtsSystem or AsyncSystem: depending on the header and the stanzas

    Raises:
        ErrModelSyntax: the text does not follow the grammar
        ErrModelSemantic: the text declares an inconsistent model
    """
    statements = _statements(text)
    header, body = statements[0], statements[1:]
    logger.debug(f'parsed {len(body)} statements for {header.kind} {header.args[0]}')
    if header.kind == 'net':
        return _build_net(header, body)
    return _build_system(header, body)


def parse_model_file(path: str) -> Model:
    with open(path) as handle:
        return parse_model(handle.read())


def fixture_path(name: str) -> str:
    return os.path.join(FIXTURES_DIR, name)


def emit_model(model: Model) -> str:
    """Canonical text of a model; parse_model reads it back to an equal value."""
    lines = []
    if isinstance(model, PtiNet):
        lines.append(f'net {model.name}')
        for i, place in enumerate(model.places):
            tokens = model.initial[i]
            lines.append(f'place {place} init {tokens}' if tokens else f'place {place}')
        lines.extend(f'trans {transition}' for transition in model.transitions)
        for (src, dst), weight in sorted(model.flow.items()):
            lines.append(f'arc {src} -> {dst} {weight}' if weight != 1 else f'arc {src} -> {dst}')
        lines.extend(f'inhibit {place} {transition}' for place, transition in sorted(model.inhibitors))
    elif isinstance(model, CtsSystem):
        lines.append(f'system {model.name}')
        for agent in model.agents:
            lines.extend(['', f'agent {agent.name}'])
            for state in agent.states:
                channels = sorted(agent.listening[state] - {Settings.BROADCAST_CHANNEL})
                listen = f' listen {",".join(channels)}' if channels else ''
                lines.append(f'state {state_name(state)}{listen}')
            lines.append(f'init {state_name(agent.initial)}')
            for src, label, dst in sorted(agent.transitions, key=lambda t: (state_name(t[0]), str(t[1]), state_name(t[2]))):
                lines.append(f'trans {state_name(src)} -> {state_name(dst)} on {label.payload} {label.polarity} '
                             f'{label.channel}')
    else:
        lines.append(f'system {model.name}')
        for process in model.processes:
            lines.extend(['', f'process {process.name}'])
            lines.extend(f'state {state}' for state in process.states)
            lines.append(f'init {process.initial}')
            for src, letter, dst in sorted(process.transitions, key=lambda t: tuple(map(str, t))):
                lines.append(f'trans {src} -> {dst} on {letter}')
    return '\n'.join(lines) + '\n'
