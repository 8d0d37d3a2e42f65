"""
Command-line interface for the blind graph-rewriting machine.

    run     --graph F.pg --program F.pop [--max-steps K] [--trace none|hash|full]
    check   --graph F.pg --program F.pop
    fmt     [--program F.pop] [--graph F.pg]
    gadget  verify --gate not|and|or|cond [--seeds K]
    gadget  fixture --gate G --inputs BITS [--seed K]
    gadget  program --gate G
    oracle  --nodes 1|2|3 [--max-path K] [--programs K] [--seed K] [--dump]

Exit codes: 0 success/halted/pass, 1 verification failure, 2 cycled,
3 step limit, 4 input or parse error.
"""

import argparse
import contextlib
import logging
import sys
from typing import List, Optional, TextIO

from config.settings import Settings, load_settings
from gadgets.gates import GateKind, build_gate, gate_fixture_text, verify_gate
from graph_core.codec import decode_state, encode_text
from graph_core.errors import GraphError, OriginOutOfRange, ParseError
from graph_core.state import GraphState
from machine.runner import Cycled, Halted, RunLimits, is_comp_fixed, outcome_line, run
from machine.trace import TraceMode
from op_engine.program import Composition, parse_program, print_program
from oracle.sweeps import SweepBounds, run_all_checks
from reports.render import render_case_dump, render_gate_report, render_oracle_reports, render_trace

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CYCLED = 2
EXIT_STEP_LIMIT = 3
EXIT_INPUT = 4


class UsageError(Exception):
    """Bad command line: unknown flag, missing argument, bad value."""


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        kwargs.setdefault("allow_abbrev", False)
        super().__init__(*args, **kwargs)

    def error(self, message):
        raise UsageError(message)


class InputError(Exception):
    """Wraps a file or validation failure with the file it came from."""

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


def _build_parser(settings: Settings) -> _Parser:
    parser = _Parser(prog="blindgraph", description="Blind graph-rewriting machine")
    parser.add_argument("--verbose", action="store_true", help="debug logging on stderr")
    commands = parser.add_subparsers(dest="command", parser_class=_Parser)
    commands.required = True

    run_cmd = commands.add_parser("run", help="iterate T to the first fixed point")
    run_cmd.add_argument("--graph", required=True)
    run_cmd.add_argument("--program", required=True)
    run_cmd.add_argument("--max-steps", type=int, default=settings.run.max_steps)
    run_cmd.add_argument("--trace", choices=[m.value for m in TraceMode], default=settings.run.trace)

    check_cmd = commands.add_parser("check", help="is the initial state a fixed point of T")
    check_cmd.add_argument("--graph", required=True)
    check_cmd.add_argument("--program", required=True)

    fmt_cmd = commands.add_parser("fmt", help="print canonical program and/or graph text")
    fmt_cmd.add_argument("--program")
    fmt_cmd.add_argument("--graph")

    gadget_cmd = commands.add_parser("gadget", help="boolean and conditional gadgets")
    gadget_actions = gadget_cmd.add_subparsers(dest="action", parser_class=_Parser)
    gadget_actions.required = True
    gates = [k.value for k in GateKind]

    verify_cmd = gadget_actions.add_parser("verify")
    verify_cmd.add_argument("--gate", required=True, choices=gates)
    verify_cmd.add_argument("--seeds", type=int, default=settings.gadget.seeds)

    fixture_cmd = gadget_actions.add_parser("fixture")
    fixture_cmd.add_argument("--gate", required=True, choices=gates)
    fixture_cmd.add_argument("--inputs", required=True)
    fixture_cmd.add_argument("--seed", type=int, default=0)

    program_cmd = gadget_actions.add_parser("program")
    program_cmd.add_argument("--gate", required=True, choices=gates)

    oracle_cmd = commands.add_parser("oracle", help="exhaustive checks of the op semantics")
    oracle_cmd.add_argument("--nodes", type=int, required=True, choices=[1, 2, 3])
    oracle_cmd.add_argument("--max-path", type=int, default=settings.oracle.max_path)
    oracle_cmd.add_argument("--programs", type=int, default=settings.oracle.programs)
    oracle_cmd.add_argument("--seed", type=int, default=settings.oracle.seed)
    oracle_cmd.add_argument("--dump", action="store_true", help="print case<TAB>status lines")
    return parser


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="ascii", newline="") as f:
            return f.read()
    except (OSError, UnicodeDecodeError) as e:
        raise InputError(f"{path}: cannot read: {e}") from e


def _load_graph(path: str) -> GraphState:
    try:
        return decode_state(_read(path), source=path)
    except ParseError:
        raise
    except GraphError as e:
        raise InputError(f"{path}: {e}") from e


def _load_program(path: str) -> Composition:
    return parse_program(_read(path), source=path)


def _check_origins(graph: GraphState, program: Composition, path: str) -> None:
    for index, op in enumerate(program.ops):
        if not graph.has_node(op.origin):
            error = OriginOutOfRange(op.origin, graph.n, op_index=index)
            line = program.line_of(index)
            where = f"{path}:{line}" if line is not None else path
            raise InputError(f"{where}: {error}")


def _cmd_run(args, settings: Settings, out: TextIO) -> int:
    graph = _load_graph(args.graph)
    program = _load_program(args.program)
    _check_origins(graph, program, args.program)
    limits = RunLimits(max_steps=args.max_steps, max_tracked_states=settings.run.max_tracked_states)
    outcome, trace = run(graph, program, limits, TraceMode(args.trace))
    out.write(render_trace(trace))
    out.write(outcome_line(outcome) + "\n")
    if isinstance(outcome, Halted):
        return EXIT_OK
    if isinstance(outcome, Cycled):
        return EXIT_CYCLED
    return EXIT_STEP_LIMIT


def _cmd_check(args, settings: Settings, out: TextIO) -> int:
    graph = _load_graph(args.graph)
    program = _load_program(args.program)
    _check_origins(graph, program, args.program)
    out.write(f"fixed-point {'yes' if is_comp_fixed(graph, program) else 'no'}\n")
    return EXIT_OK


def _cmd_fmt(args, settings: Settings, out: TextIO) -> int:
    if not args.program and not args.graph:
        raise UsageError("fmt needs --program and/or --graph")
    if args.program:
        out.write(print_program(_load_program(args.program)))
    if args.graph:
        out.write(encode_text(_load_graph(args.graph)))
    return EXIT_OK


def _parse_bits(bits: str, arity: int) -> tuple:
    if len(bits) != arity or any(ch not in "01" for ch in bits):
        raise UsageError(f"--inputs needs {arity} bit(s) of 0/1, got {bits!r}")
    return tuple(ch == "1" for ch in bits)


def _cmd_gadget(args, settings: Settings, out: TextIO) -> int:
    gadget = build_gate(args.gate)
    if args.action == "verify":
        report = verify_gate(gadget, args.seeds)
        out.write(render_gate_report(report))
        return EXIT_OK if report.passed else EXIT_FAILED
    if args.action == "fixture":
        out.write(gate_fixture_text(gadget.kind, _parse_bits(args.inputs, gadget.arity), args.seed))
        return EXIT_OK
    out.write(print_program(gadget.program))
    return EXIT_OK


def _cmd_oracle(args, settings: Settings, out: TextIO) -> int:
    bounds = SweepBounds(args.nodes, max_target_len=args.max_path, max_source_len=args.max_path)
    reports = run_all_checks(bounds, args.programs, args.seed, keep_cases=args.dump)
    out.write(render_oracle_reports(reports))
    if args.dump:
        out.write(render_case_dump(reports))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


_COMMANDS = {
    "run": _cmd_run,
    "check": _cmd_check,
    "fmt": _cmd_fmt,
    "gadget": _cmd_gadget,
    "oracle": _cmd_oracle,
}


def _configure_logging(verbose: bool, err: TextIO) -> None:
    level = logging.DEBUG if verbose else logging.WARNING
    logging.basicConfig(stream=err, level=level, format="%(levelname)s %(name)s: %(message)s", force=True)


def _parse_args(parser: _Parser, argv: List[str], out: TextIO) -> Optional[argparse.Namespace]:
    """parse_args with help text sent to out; None once help has been printed."""
    try:
        with contextlib.redirect_stdout(out):
            return parser.parse_args(argv)
    except SystemExit as e:
        if e.code:
            raise UsageError(f"argument parsing exited with status {e.code}") from e
        return None


def execute(argv: List[str], out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    """Run one command; returns the process exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        settings = load_settings()
        args = _parse_args(_build_parser(settings), argv, out)
        if args is None:
            return EXIT_OK
        _configure_logging(args.verbose, err)
        return _COMMANDS[args.command](args, settings, out)
    except UsageError as e:
        err.write(f"usage error: {e}\n")
    except ParseError as e:
        err.write(f"error: {e}\n")
    except InputError as e:
        err.write(f"error: {e.message}\n")
    except (GraphError, OSError, ValueError) as e:
        err.write(f"error: {e}\n")
    return EXIT_INPUT
