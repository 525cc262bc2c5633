"""
Command line for pentads of Cartan type and their graded Lie algebras

Exit status: 0 success, 1 validation error or failed verify-paper,
2 input/parse error, 3 expansion size limit exceeded.
"""
import argparse
import logging
import sys
from typing import List, Optional

import config
from backend.input_loader import InputLoader
from backend.storage import StorageManager
from processing.constructions.base_construction import PentadConstruction
from processing.constructions.contragredient import ContragredientConstruction
from processing.constructions.km_realize import MODES, derived_realization, realize
from processing.constructions.sl2fd import SL2FDConstruction
from processing.errors import ExpansionLimitExceeded, InputFormatError, PentadLieError
from processing.exactq import format_rational
from processing.pentad import cartan_matrix, structure_decomposition, structure_summary
from processing.verification import FixtureVerifier

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INPUT = 2
EXIT_LIMIT = 3


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pentad-lie",
        description="Exact computations with pentads of Cartan type and minimal graded Lie algebras",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output(p, default_format="table"):
        p.add_argument("--format", choices=config.OUTPUT_FORMATS, default=default_format)
        p.add_argument("--output", help="also write the result to this path")

    p = sub.add_parser("cartan", help="print the Cartan matrix of a pentad")
    p.add_argument("--pentad", required=True)
    add_output(p, "json")

    p = sub.add_parser("expand", help="dimension table of a minimal graded expansion")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--pentad")
    source.add_argument("--matrix", action="append", help="contragredient G(C); repeat for a batch")
    source.add_argument("--reduced-matrix", action="append", help="reduced contragredient G'(C)")
    p.add_argument("--max-degree", type=_positive, default=config.DEFAULT_MAX_DEGREE)
    add_output(p)

    p = sub.add_parser("realize", help="pentad and certificate realizing a matrix")
    p.add_argument("--matrix", required=True)
    p.add_argument("--mode", choices=[m.replace("_", "-") for m in MODES], default="full-km")
    p.add_argument("--max-degree", type=_positive, default=config.DEFAULT_MAX_DEGREE,
                   help="cutoff for the derived mode")
    p.add_argument("--output")

    p = sub.add_parser("structure", help="rank and dimension summary of a pentad")
    p.add_argument("--pentad", required=True)
    p.add_argument("--decompose", action="store_true", help="also list bases of span{h}, Z and Delta")
    add_output(p, "json")

    p = sub.add_parser("sl2fd", help="truncations of the sl2 finite-dimensional algebra")
    p.add_argument("--indices", required=True, help='index set, e.g. "(-1),(1,0),(2,0)"')
    action = p.add_mutually_exclusive_group()
    action.add_argument("--minor", action="store_true", help="print the minor of C~ (default)")
    action.add_argument("--expand", type=_positive, metavar="N")
    action.add_argument("--compare", type=_positive, metavar="N")
    add_output(p)

    p = sub.add_parser("verify-paper", help="run the built-in regression fixtures")
    p.add_argument("--max-degree", type=_positive, default=config.VERIFY_PAPER_MAX_DEGREE)
    p.add_argument("--output")
    return parser


class CommandRunner:
    """Dispatch parsed arguments to the processing layer"""

    def __init__(self, stdout=None):
        self.loader = InputLoader()
        self.storage = StorageManager()
        self.stdout = stdout or sys.stdout

    def emit(self, text: str, args: argparse.Namespace, name: str, format: str = "json") -> None:
        self.stdout.write(text)
        if getattr(args, "output", None):
            path = self.storage.save_result(text, name, format, output_path=args.output)
            log.info("saved %s", path)

    def run(self, args: argparse.Namespace) -> int:
        handler = getattr(self, "cmd_" + args.command.replace("-", "_"))
        return handler(args)

    def cmd_cartan(self, args) -> int:
        pentad = self.loader.load_pentad(args.pentad)
        self.emit(self.storage.render_matrix(cartan_matrix(pentad), args.format), args, "cartan", args.format)
        return EXIT_OK

    def cmd_expand(self, args) -> int:
        if args.pentad:
            constructions = [PentadConstruction(self.loader.load_pentad(args.pentad))]
        else:
            reduced = bool(args.reduced_matrix)
            paths = args.reduced_matrix or args.matrix
            constructions = [
                ContragredientConstruction(self.loader.load_matrix(path), reduced=reduced) for path in paths
            ]
        rendered = []
        for construction in constructions:
            table = construction.dimension_table(args.max_degree)
            rendered.append(self.storage.render_dimensions(table, args.format))
        self.emit("".join(rendered), args, "expand", args.format)
        return EXIT_OK

    def cmd_realize(self, args) -> int:
        c = self.loader.load_matrix(args.matrix)
        mode = args.mode.replace("-", "_")
        pentad, certificate = realize(c, mode)
        report = {"pentad": pentad.to_dict(), "certificate": certificate.to_dict()}
        if mode == "derived":
            dims = derived_realization(c, args.max_degree)
            report["derived_degrees"] = {str(k): v for k, v in sorted(dims.items())}
        self.emit(self.storage.to_json(report), args, f"realize_{mode}")
        return EXIT_OK if certificate.ok else EXIT_INVALID

    def cmd_structure(self, args) -> int:
        pentad = self.loader.load_pentad(args.pentad)
        data = structure_summary(pentad).to_dict()
        if args.decompose:
            decomposition = structure_decomposition(pentad)
            for key in ("coroot_span", "center", "delta"):
                vectors = getattr(decomposition, key)
                data[key] = [[format_rational(a) for a in v] for v in vectors]
            text = self.storage.to_json(data)
        else:
            text = self.storage.render_mapping(data, args.format)
        self.emit(text, args, "structure", args.format)
        return EXIT_OK

    def cmd_sl2fd(self, args) -> int:
        construction = SL2FDConstruction(self.loader.parse_indices(args.indices))
        if args.expand:
            text = self.storage.render_dimensions(construction.dimension_table(args.expand), args.format)
            self.emit(text, args, "sl2fd_expand", args.format)
            return EXIT_OK
        if args.compare:
            comparison = construction.compare(args.compare)
            self.emit(self.storage.to_json(comparison.to_dict()), args, "sl2fd_compare")
            return EXIT_OK if comparison.ok else EXIT_INVALID
        self.emit(self.storage.render_matrix(construction.minor(), args.format), args, "sl2fd_minor", args.format)
        return EXIT_OK

    def cmd_verify_paper(self, args) -> int:
        report = FixtureVerifier(args.max_degree).run()
        lines = [
            f"{'PASS' if r['passed'] else 'FAIL'}  {r['fixture']}: {r['detail']}" for r in report["results"]
        ]
        lines.append(f"{report['total_fixtures'] - len(report['failed_fixtures'])}/{report['total_fixtures']} fixtures passed")
        self.emit("\n".join(lines) + "\n", args, "verify_paper", "table")
        return EXIT_OK if report["passed"] else EXIT_INVALID


def run(argv: Optional[List[str]] = None, stdout=None) -> int:
    """
    Parse argv and run one command

    Returns:
        Process exit status
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_INPUT

    level = logging.DEBUG if args.verbose else getattr(logging, str(config.LOG_LEVEL).upper(), logging.WARNING)
    logging.basicConfig(level=level, format=config.LOG_FORMAT, stream=sys.stderr)
    log.debug("command %s", args.command)

    try:
        return CommandRunner(stdout).run(args)
    except ExpansionLimitExceeded as e:
        sys.stderr.write(f"error: {e} [invariant: {e.invariant}]\n")
        return EXIT_LIMIT
    except InputFormatError as e:
        sys.stderr.write(f"error: {e} [invariant: {e.invariant}]\n")
        return EXIT_INPUT
    except PentadLieError as e:
        sys.stderr.write(f"error: {e} [invariant: {e.invariant}]\n")
        return EXIT_INVALID
    except OSError as e:
        sys.stderr.write(f"error: {e} [invariant: {InputFormatError.invariant}]\n")
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())
