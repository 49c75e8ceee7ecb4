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

import argparse
from functools import reduce
import logging
import sys
from typing import List, Optional, Union

import humanfriendly

from gluepo.async_automata import AsyncSystem, check_baseline_async, enumerate_computations_async
from gluepo.campaign import run_campaign
from gluepo.core_po import Computations, GluedLpo, check_separation
from gluepo.cts import (CtsSystem, check_refinement_theorem_cts, compose, enumerate_computations_cts,
                        separation_witness_cts)
from gluepo.errors import ErrEventBound, ErrGluepoGeneric, ErrModelSemantic, ErrModelSyntax
from gluepo.export import report_document, to_json
from gluepo.lib import ModelKind, MulticastBlockMode
from gluepo.parsers import emit_model, parse_model_file
from gluepo.pti_net import (PtiNet, check_refinement_theorem_pn, enumerate_computations_pn,
                            separation_witness_pn)
from gluepo.settings import Settings
from gluepocli.clierrors import GluepoEnvironmentError, GluepoUsageError
from gluepocli.reportcommand import Commands, ReportCommand, ReportFormat
from gluepocli.runconfig import RunConfig

Model = Union[PtiNet, CtsSystem, AsyncSystem]

logger = logging.getLogger('gluepocli.cli')


def model_kind(model: Model) -> ModelKind:
    if isinstance(model, PtiNet):
        return ModelKind.PTI
    if isinstance(model, CtsSystem):
        return ModelKind.CTS
    return ModelKind.ASYNC


def load_model(config: RunConfig) -> Model:
    model = parse_model_file(config.model_path)
    kind = model_kind(model)
    if config.kind is not None and config.kind is not kind:
        raise GluepoUsageError(f"{config.model_path} is a {kind} model, not {config.kind}")
    config.kind = kind
    logger.debug(f"loaded {kind} model {model.name} from {config.model_path}")
    return model


def computations(model: Model, config: RunConfig) -> Computations:
    if config.kind is ModelKind.PTI:
        return enumerate_computations_pn(model, config.max_events, config.maximal_only)
    if config.kind is ModelKind.CTS:
        return enumerate_computations_cts(model, config.max_events, config.maximal_only, config.block_mode)
    lpos = enumerate_computations_async(model, config.max_events, config.maximal_only)
    return Computations(lpos, [GluedLpo(lpo, {}) for lpo in lpos])


def unfold_command(model: Model, config: RunConfig, printer: ReportCommand, glued: bool = False) -> int:
    found = computations(model, config)
    if glued:
        printer.list_all(str(Commands.Glue), found.glpos, "g-LPO", model=model.name)
    else:
        printer.list_all(str(Commands.Unfold), found.lpos, "LPO", model=model.name)
    return Settings.EXIT_OK


def check_equivalence_command(model: Model, config: RunConfig, printer: ReportCommand) -> int:
    if config.kind is ModelKind.PTI:
        check = check_refinement_theorem_pn(model, config.max_events)
    elif config.kind is ModelKind.CTS:
        check = check_refinement_theorem_cts(model, config.max_events, config.block_mode)
    else:
        check = check_baseline_async(model, config.max_events)
    holds = printer.report_check(str(Commands.CheckEquivalence), "refinement equality", check, model=model.name)
    return Settings.EXIT_OK if holds else Settings.EXIT_VIOLATION


def separate_command(model: Model, config: RunConfig, printer: ReportCommand, index: Optional[int]) -> int:
    if config.kind is ModelKind.ASYNC:
        raise GluepoUsageError("separate needs a pti or cts model")
    find_witness = separation_witness_pn if config.kind is ModelKind.PTI else separation_witness_cts
    glpos = computations(model, config).glpos
    check = check_separation(glpos, find_witness)
    if not check.holds:
        printer.report_check(str(Commands.Separate), "separation", check, model=model.name)
        return Settings.EXIT_VIOLATION
    if index is not None and not 0 <= index < len(glpos):
        raise GluepoUsageError(f"--index {index} is out of range, there are {len(glpos)} g-LPOs")
    pairs = [(i, j) for i in range(len(glpos)) for j in range(i + 1, len(glpos)) if index in (None, i, j)]
    witnesses = [(i, j, find_witness(glpos[i], glpos[j])) for i, j in pairs]
    if printer.format is ReportFormat.json:
        printer.write(to_json(report_document(str(Commands.Separate), model=model.name, holds=True,
                                              witnesses=[dict(left=i, right=j, witness=w.as_dict())
                                                         for i, j, w in witnesses])))
    else:
        for i, j, witness in witnesses:
            printer.write(f"{i} {j}: {witness}")
        printer.write(humanfriendly.pluralize(len(witnesses), "separated pair"))
    return Settings.EXIT_OK


def compose_command(model: Model, config: RunConfig, printer: ReportCommand) -> int:
    if config.kind is not ModelKind.CTS:
        raise GluepoUsageError("compose needs a cts model")
    product = reduce(compose, model.agents).reachable()
    text = emit_model(CtsSystem([product], name=model.name))
    if printer.format is ReportFormat.json:
        printer.write(to_json(report_document(str(Commands.Compose), model=model.name, agent=product.name,
                                              states=len(product.states), text=text)))
    else:
        printer.write(text)
    return Settings.EXIT_OK


def baseline_command(model: Model, config: RunConfig, printer: ReportCommand) -> int:
    if config.kind is not ModelKind.ASYNC:
        raise GluepoUsageError("baseline needs an async model")
    holds = printer.report_check(str(Commands.Baseline), "baseline", check_baseline_async(model, config.max_events),
                                 model=model.name)
    return Settings.EXIT_OK if holds else Settings.EXIT_VIOLATION


def render_command(model: Model, config: RunConfig, printer: ReportCommand, index: int, glued: bool) -> int:
    found = computations(model, config)
    items = found.glpos if glued else found.lpos
    if not 0 <= index < len(items):
        raise GluepoUsageError(f"--index {index} is out of range, there are {len(items)} computations")
    if printer.format is ReportFormat.json:
        printer.write(to_json(items[index]))
    else:
        printer.list_one(index, items[index])
    return Settings.EXIT_OK


def random_suite_command(config: RunConfig, printer: ReportCommand, count: int) -> int:
    report = run_campaign(config.kind or ModelKind.PTI, count, config.seed, config.max_events, config.mode)
    if printer.format is ReportFormat.json:
        printer.write(to_json(report_document(str(Commands.RandomSuite), **report.as_dict())))
    else:
        printer.write(report.summary())
        for failure in report.failures:
            printer.write(to_json(failure))
    return Settings.EXIT_OK if report.holds else Settings.EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-events", type=int, default=None,
                        help=f"Bound on the number of events [default: {Settings.maxEventsDefault}, "
                             f"{Settings.randomMaxEvents} for random-suite]")
    common.add_argument("--multicast-block-mode", type=MulticastBlockMode, choices=list(MulticastBlockMode),
                        default=None, dest="mode",
                        help="Which histories a multicast is ordered against [default: listening]")
    common.add_argument("--format", type=ReportFormat, choices=list(ReportFormat), default=None,
                        help="Format of the report [default: summary, dot for render]")
    common.add_argument("--kind", type=ModelKind, choices=list(ModelKind), default=None,
                        help="Model kind; checked against the model file, picks the generator for random-suite")
    common.add_argument("--debug", default=False, action="store_true",
                        help="Turn on logging at debug level [default: %(default)s]")

    with_model = argparse.ArgumentParser(add_help=False, parents=[common])
    with_model.add_argument("model", help="Model file (.pti net or .cts/.async system)")
    with_model.add_argument("--maximal-only", default=False, action="store_true",
                            help="Keep only computations maximal under embedding [default: %(default)s]")

    parser = argparse.ArgumentParser(prog="gluepo",
                                     description="Partial order and glued partial order semantics for "
                                                 "Petri nets with inhibitor arcs, channeled transition systems "
                                                 "and asynchronous automata")
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    commands.add_parser(str(Commands.Unfold), parents=[with_model], help="Enumerate the computations")
    commands.add_parser(str(Commands.Glue), parents=[with_model], help="Enumerate the glued computations")
    commands.add_parser(str(Commands.CheckEquivalence), parents=[with_model],
                        help="Check computations against the refinements of the glued computations")
    separate = commands.add_parser(str(Commands.Separate), parents=[with_model],
                                   help="Separation certificates between glued computations")
    separate.add_argument("--index", type=int, default=None, help="Only pairs involving this glued computation")
    commands.add_parser(str(Commands.Compose), parents=[with_model], help="Emit the product agent of a system")
    commands.add_parser(str(Commands.Baseline), parents=[with_model],
                        help="Check an asynchronous automata system needs no interleaving order")
    render = commands.add_parser(str(Commands.Render), parents=[with_model], help="Render one computation")
    render.add_argument("--index", type=int, default=0, help="Which computation [default: %(default)s]")
    render.add_argument("--glued", default=False, action="store_true",
                        help="Render a glued computation [default: %(default)s]")
    suite = commands.add_parser(str(Commands.RandomSuite), parents=[common],
                                help="Run the checks over seeded random models")
    suite.add_argument("--seed", type=int, default=Settings.randomSeed, help="First seed [default: %(default)s]")
    suite.add_argument("--count", type=int, default=Settings.randomCount,
                       help="Number of models [default: %(default)s]")
    return parser


def dispatch(args: argparse.Namespace, printer: ReportCommand) -> int:
    command = Commands(args.command)
    if command is Commands.RandomSuite:
        max_events = Settings.randomMaxEvents if args.max_events is None else args.max_events
        config = RunConfig(kind=args.kind, max_events=max_events, mode=args.mode, report_format=args.format,
                           seed=args.seed)
        if args.count < 0:
            raise GluepoUsageError("--count can't be negative")
        return random_suite_command(config, printer, args.count)

    max_events = Settings.maxEventsDefault if args.max_events is None else args.max_events
    config = RunConfig(args.model, args.kind, max_events, args.maximal_only, args.mode, args.format)
    logger.debug(f"{command}: {config}")
    model = load_model(config)
    if command in (Commands.Unfold, Commands.Glue):
        return unfold_command(model, config, printer, glued=command is Commands.Glue)
    if command is Commands.CheckEquivalence:
        return check_equivalence_command(model, config, printer)
    if command is Commands.Separate:
        return separate_command(model, config, printer, args.index)
    if command is Commands.Compose:
        return compose_command(model, config, printer)
    if command is Commands.Baseline:
        return baseline_command(model, config, printer)
    return render_command(model, config, printer, args.index, args.glued)


def main(args: List[str], out=None) -> int:
    """

    :param args: Expect sys.argv without the program name
    :param out: Stream for the report, stdout by default
    :return: The exit status
    """
    parser = build_parser()
    try:
        args = parser.parse_args(args)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else Settings.EXIT_USAGE

    if args.debug:
        logging.basicConfig(format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
                            level=logging.DEBUG)
    else:
        logging.basicConfig(format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
                            level=logging.INFO)

    logging.debug("logging is on at DEBUG level")

    if args.format is None:
        args.format = ReportFormat.dot if args.command == str(Commands.Render) else ReportFormat.summary
    printer = ReportCommand(args.format, out)
    try:
        return dispatch(args, printer)
    except (ErrModelSyntax, ErrModelSemantic, ErrEventBound, GluepoUsageError, GluepoEnvironmentError,
            OSError) as e:
        print(f"gluepo: error: {e}", file=sys.stderr)
        return Settings.EXIT_USAGE
    except ErrGluepoGeneric as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(to_json(dict(error=type(e).__name__, message=str(e), details=e.getDetails())), file=sys.stderr)
        return Settings.EXIT_VIOLATION


def run():
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    run()
