"""Command line interface for the Specht module verification toolkit."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Callable, Iterable, Optional, TextIO

from .config import Settings
from .core.combinatorics import Partition, Tableau
from .core.errors import InvalidInputError, ResourceLimitError, SpechtBrauerError
from .core.pipeline import Processor


LOGGER = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_RESOURCE = 2


class UsageError(Exception):
    """Raised by the parser instead of exiting the interpreter."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def configure_logging(verbose: bool = False) -> None:
    level = logging.DEBUG if verbose else logging.INFO
    logging.basicConfig(level=level, format="%(asctime)s [%(levelname)s] %(name)s: %(message)s")


def parse_record(text: str) -> dict:
    return json.loads(text)


def render_record(record: dict, mode: str, indent: int) -> str:
    if mode == "structured":
        return json.dumps(record, indent=indent)
    width = max((len(key) for key in record), default=0)
    lines = []
    for key, value in record.items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value)
        elif value is None:
            value = "none"
        lines.append(f"{key.ljust(width)}: {value}")
    return "\n".join(lines)


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except InvalidInputError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _tableau(text: str) -> Tableau:
    try:
        return Tableau.parse(text)
    except InvalidInputError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def command_core(processor: Processor, args: argparse.Namespace):
    return processor.core(args.shape, args.p)


def command_dim(processor: Processor, args: argparse.Namespace):
    return processor.dimension(args.shape)


def command_straighten(processor: Processor, args: argparse.Namespace):
    return processor.straighten(args.tableau, args.p)


def command_hgroup(processor: Processor, args: argparse.Namespace):
    return processor.hgroup(args.shape)


def command_vertex_cert(processor: Processor, args: argparse.Namespace):
    return processor.vertex_certificate(args.shape, args.p)


def command_brauer(processor: Processor, args: argparse.Namespace):
    return processor.brauer(args.shape, args.p, args.q)


def command_block(processor: Processor, args: argparse.Namespace):
    return processor.block(args.n, args.p, args.core)


def command_initial(processor: Processor, args: argparse.Namespace):
    return processor.initial(args.core, args.w, args.p, args.r)


def command_two_row(processor: Processor, args: argparse.Namespace):
    return processor.two_row(args.n, args.p)


def command_endo(processor: Processor, args: argparse.Namespace):
    return processor.endomorphisms(args.shape, args.p)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="specht-brauer", description="Specht modules, Brauer quotients and blocks of symmetric groups")
    parser.add_argument("--config", default=None, help="Path to the configuration YAML file")
    parser.add_argument("--verbose", action="store_true", help="Enable debug logging")
    parser.add_argument("--output", choices=("text", "structured"), default=None, help="Override output.mode")
    parser.add_argument("--max-group-order", type=int, default=None, help="Override limits.max_group_order")
    parser.add_argument("--max-dim", type=int, default=None, help="Override limits.max_dim")

    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, handler: Callable, help_text: str) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, help=help_text)
        sub.set_defaults(func=handler)
        return sub

    core_parser = add("core", command_core, "p-core, weight and p-quotient of a partition")
    core_parser.add_argument("--lambda", dest="shape", type=_partition, required=True)
    core_parser.add_argument("--p", type=int, required=True)

    dim_parser = add("dim", command_dim, "Hook lengths and dimension of S^λ")
    dim_parser.add_argument("--lambda", dest="shape", type=_partition, required=True)

    straighten_parser = add("straighten", command_straighten, "Expand e_t in the standard polytabloid basis")
    straighten_parser.add_argument("--tableau", type=_tableau, required=True, help="Rows separated by ';', e.g. 1,3;2")
    straighten_parser.add_argument("--p", type=int, required=True)

    hgroup_parser = add("hgroup", command_hgroup, "Generators and order of H(t) for the greatest tableau")
    hgroup_parser.add_argument("--lambda", dest="shape", type=_partition, required=True)

    vertex_parser = add("vertex-cert", command_vertex_cert, "Vertex lower-bound certificate")
    vertex_parser.add_argument("--lambda", dest="shape", type=_partition, required=True)
    vertex_parser.add_argument("--p", type=int, required=True)

    brauer_parser = add("brauer", command_brauer, "Brauer quotient of S^λ at a p-subgroup")
    brauer_parser.add_argument("--lambda", dest="shape", type=_partition, required=True)
    brauer_parser.add_argument("--p", type=int, required=True)
    brauer_parser.add_argument("--q", required=True, help="Generators separated by ';', e.g. (1,2);(3,4)")

    block_parser = add("block", command_block, "Blocks of S_n with heights")
    block_parser.add_argument("--n", type=int, required=True)
    block_parser.add_argument("--p", type=int, required=True)
    block_parser.add_argument("--core", type=_partition, default=None)

    initial_parser = add("initial", command_initial, "Checks on the initial partition γ + wp")
    initial_parser.add_argument("--core", type=_partition, required=True)
    initial_parser.add_argument("--w", type=int, required=True)
    initial_parser.add_argument("--p", type=int, required=True)
    initial_parser.add_argument("--r", type=int, default=None)

    two_row_parser = add("two-row", command_two_row, "Report on S^(n-2,2)")
    two_row_parser.add_argument("--n", type=int, required=True)
    two_row_parser.add_argument("--p", type=int, required=True)

    endo_parser = add("endo", command_endo, "Endomorphism algebra and indecomposability of S^λ")
    endo_parser.add_argument("--lambda", dest="shape", type=_partition, required=True)
    endo_parser.add_argument("--p", type=int, required=True)

    return parser


def load_settings(args: argparse.Namespace) -> Settings:
    settings = Settings.load(args.config)
    if args.max_group_order is not None:
        settings.limits.max_group_order = args.max_group_order
    if args.max_dim is not None:
        settings.limits.max_dim = args.max_dim
    if args.output is not None:
        settings.output.mode = args.output
    return settings


def _arguments(args: argparse.Namespace) -> dict:
    return {
        key: (str(value) if isinstance(value, (Partition, Tableau)) else value)
        for key, value in vars(args).items()
        if key != "func"
    }


def run(argv: Optional[Iterable[str]] = None, *, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except UsageError as exc:
        print(str(exc), file=stderr)
        return EXIT_INVALID

    configure_logging(args.verbose)
    try:
        settings = load_settings(args)
    except (FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INVALID

    processor = Processor(settings)
    try:
        report = args.func(processor, args)
    except ResourceLimitError as exc:
        LOGGER.warning("Resource limit reached in %s", args.command)
        message = f"resource limit: {exc}"
        if exc.partial is not None:
            message += f" (partial: {exc.partial})"
        print(message, file=stderr)
        processor.persist_record(args.command, _arguments(args), {"error": str(exc), "partial": exc.partial}, exit_code=EXIT_RESOURCE)
        return EXIT_RESOURCE
    except (InvalidInputError, SpechtBrauerError) as exc:
        print(f"invalid input: {exc}", file=stderr)
        return EXIT_INVALID

    record = report.to_record()
    print(render_record(record, settings.output.mode, settings.output.indent), file=stdout)
    processor.persist_record(args.command, _arguments(args), record)
    return EXIT_OK


def main(argv: Optional[Iterable[str]] = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":  # pragma: no cover - CLI entry point
    main()
