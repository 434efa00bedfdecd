"""
CLI entrypoint for entgeo.

Commands:
    measure   pair-probe table, M, G and classification of a pure state
    hopf      Clifford/Hopf map image(s) and K-invariants of a 2- or 3-qubit state
    scott     Scott Q_m measure of a pure state
    roof      convex-roof value of M or G for a mixed state (up to 4 qubits)
    state     summary of a state, or its State/Density JSON with --emit
    sweep     M, G and every pair value along a state family (CSV by default)

Usage:
    entgeo measure --state ghz:4 --probe fr
    entgeo hopf --state ghz:3 --all-perms
    entgeo scott --state ghz:4 --m 2
    entgeo roof --state werner:0.8 --probe qc --seed 7
    entgeo state --state w:3 --emit > w3.json
    entgeo measure --state-file w3.json --probe qc
    entgeo sweep --family mems --param 0:1:0.05 --probe fr

Exit status is 0 on success, 2 for usage or input errors and 1 when a
computation fails. Diagnostics are one line on stderr:
``entgeo: error: <flag>: <message>``.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from typing import List, Optional, Sequence, Union

from agents import EntanglementAnalyzer
from agents.reports import hopf_report, scott_report, state_summary, sweep_table
from data import FAMILIES, check_family_values, parse_range, parse_state, resolve_state_spec
from evaluators import ProbeKind
from measures import Average
from numerics.types import DensityMatrix, StateVector
from roof import roof_measure
from tracing.tracer import Tracer
from utils.config import OUTPUT_FORMATS, AnalysisConfig, load_config
from utils.errors import ConfigError, EntanglementError
from utils.exporters import emit_report, emit_state

PROG = "entgeo"
USAGE_EXIT = 2
COMPUTATION_EXIT = 1

State = Union[StateVector, DensityMatrix]


class CommandError(Exception):
    """A failure already attributed to a flag, carrying its exit status."""

    def __init__(self, flag: str, message: str, exit_code: int):
        super().__init__(message)
        self.flag = flag
        self.exit_code = exit_code


def setup_logging(debug: bool = False) -> logging.Logger:
    """
    Configure application logging.

    Debug mode logs to stderr and logs/run.log; stdout only ever carries the report.
    """
    if debug:
        os.makedirs("logs", exist_ok=True)
        logging.basicConfig(
            level=logging.DEBUG,
            format="%(asctime)s %(levelname)s %(message)s",
            handlers=[
                logging.StreamHandler(sys.stderr),
                logging.FileHandler("logs/run.log", encoding="utf-8"),
            ],
        )
        logger = logging.getLogger(PROG)
        logger.debug("Debug logging enabled")
        return logger
    return logging.getLogger(PROG)


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=OUTPUT_FORMATS, help="Report format (default: json)")
    common.add_argument("--tol", type=float, help="Classification tolerance (default: 1e-9)")
    common.add_argument(
        "--debug",
        action="store_true",
        help="Enable debug logging to stderr and logs/run.log",
    )
    return common


def _state_flags() -> argparse.ArgumentParser:
    state = argparse.ArgumentParser(add_help=False)
    group = state.add_mutually_exclusive_group(required=True)
    group.add_argument("--state", help="Named state, e.g. ghz:4, w:3, mems:0.9, werner:0.5, random:5:12345")
    group.add_argument("--state-file", dest="state_file", help="Path to a State JSON or Density JSON file")
    return state


def _probe_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--probe",
        choices=[kind.value for kind in ProbeKind],
        help="Pair probe: fr (mutual information) or qc (quasi-concurrence); default fr",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Pair-averaged multipartite entanglement measures",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=__doc__,
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    common = _common_flags()
    state = _state_flags()

    measure = subparsers.add_parser("measure", parents=[common, state], help="Pair table, M, G, class")
    _probe_flag(measure)

    hopf = subparsers.add_parser("hopf", parents=[common, state], help="Hopf map images and K")
    hopf.add_argument("--all-perms", dest="all_perms", action="store_true", help="One image per qubit relabeling")

    scott = subparsers.add_parser("scott", parents=[common, state], help="Scott Q_m")
    scott.add_argument("--m", type=int, help="Subset size (default: 1)")

    roof = subparsers.add_parser("roof", parents=[common, state], help="Convex roof for mixed states")
    _probe_flag(roof)
    roof.add_argument("--average", choices=[kind.value for kind in Average], help="default arithmetic")
    roof.add_argument("--budget", type=int, help="Objective evaluations per restart (default: 20000)")
    roof.add_argument("--restarts", type=int, help="Number of restarts (default: 8)")
    roof.add_argument("--k-max", dest="k_max", type=int, help="Largest decomposition size (default: min(2r, r^2))")
    roof.add_argument("--seed", type=int, help="Restart seed (default: 0)")

    summary = subparsers.add_parser("state", parents=[common, state], help="Summarize or emit a state")
    summary.add_argument("--emit", action="store_true", help="Print the state as State/Density JSON")

    sweep = subparsers.add_parser("sweep", parents=[common], help="Measures along a state family")
    sweep.add_argument("--family", required=True, choices=sorted(FAMILIES))
    sweep.add_argument("--param", required=True, help="Inclusive range start:stop:step")
    _probe_flag(sweep)
    sweep.set_defaults(format="csv")

    return parser


def resolve_state(args: argparse.Namespace) -> State:
    """Build the input state from --state or --state-file; input errors exit with status 2."""
    if args.state_file:
        try:
            with open(args.state_file, "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as err:
            raise CommandError("--state-file", f"cannot read {args.state_file}: {err.strerror}", USAGE_EXIT)
        try:
            return parse_state(text)
        except EntanglementError as err:
            raise CommandError("--state-file", f"{err.code}: {err}", USAGE_EXIT) from err
    try:
        return resolve_state_spec(args.state)
    except EntanglementError as err:
        raise CommandError("--state", str(err), USAGE_EXIT) from err


def _state_flag(args: argparse.Namespace) -> str:
    return "--state-file" if getattr(args, "state_file", None) else "--state"


def _run_measure(args: argparse.Namespace, config: AnalysisConfig, logger: logging.Logger) -> str:
    state = resolve_state(args)
    analyzer = EntanglementAnalyzer(probe=config.probe, tolerance=config.tolerance, tracer=Tracer())
    report = analyzer.analyze(state, label=args.state or args.state_file)
    logger.debug("trace", extra={"trace": analyzer.tracer.current_trace})
    return emit_report(report, config.output_format)


def _run_hopf(args: argparse.Namespace, config: AnalysisConfig, logger: logging.Logger) -> str:
    return emit_report(hopf_report(resolve_state(args), all_perms=args.all_perms), config.output_format)


def _run_scott(args: argparse.Namespace, config: AnalysisConfig, logger: logging.Logger) -> str:
    state = resolve_state(args)
    if isinstance(state, StateVector) and not 1 <= config.scott_m <= state.n_qubits // 2:
        raise CommandError(
            "--m", f"must lie in 1..{state.n_qubits // 2} for {state.n_qubits} qubits", USAGE_EXIT
        )
    return emit_report(scott_report(state, config.scott_m), config.output_format)


def _run_roof(args: argparse.Namespace, config: AnalysisConfig, logger: logging.Logger) -> str:
    state = resolve_state(args)
    rho = DensityMatrix.from_state(state) if isinstance(state, StateVector) else state
    tracer = Tracer()
    result = roof_measure(
        rho,
        probe=config.probe,
        average=config.average,
        budget=config.budget,
        restarts=config.restarts,
        seed=config.seed,
        k_max=config.k_max,
        tracer=tracer,
    )
    logger.debug("trace", extra={"trace": tracer.current_trace})
    return emit_report(result, config.output_format)


def _run_state(args: argparse.Namespace, config: AnalysisConfig, logger: logging.Logger) -> str:
    state = resolve_state(args)
    if args.emit:
        return emit_state(state)
    return emit_report(state_summary(state), config.output_format)


def _run_sweep(args: argparse.Namespace, config: AnalysisConfig, logger: logging.Logger) -> str:
    try:
        values = parse_range(args.param)
        check_family_values(args.family, values)
    except EntanglementError as err:
        raise CommandError("--param", str(err), USAGE_EXIT) from err
    try:
        table = sweep_table(args.family, values, config.probe, config.tolerance)
    except EntanglementError as err:
        raise CommandError("--param", str(err), COMPUTATION_EXIT) from err
    return emit_report(table, config.output_format)


COMMANDS = {
    "measure": _run_measure,
    "hopf": _run_hopf,
    "scott": _run_scott,
    "roof": _run_roof,
    "state": _run_state,
    "sweep": _run_sweep,
}


def _error(flag: str, message: str) -> None:
    sys.stderr.write(f"{PROG}: error: {flag}: {message}\n")


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Execute one command and write its report to stdout.

    Returns:
        int: 0 on success, 2 on usage or input errors, 1 on computation errors
    """
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as exc:
        return int(exc.code or 0)

    logger = setup_logging(debug=args.debug)
    try:
        config = load_config(args)
    except ConfigError as err:
        _error(err.flag or args.command, str(err))
        return USAGE_EXIT

    try:
        output = COMMANDS[args.command](args, config, logger)
    except CommandError as err:
        _error(err.flag, str(err))
        return err.exit_code
    except EntanglementError as err:
        logger.debug("computation failed", exc_info=True)
        _error(_state_flag(args), str(err))
        return COMPUTATION_EXIT

    sys.stdout.write(output)
    return 0


def main(argv: Optional[List[str]] = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
