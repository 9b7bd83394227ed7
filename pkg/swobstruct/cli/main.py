"""Command-line entry point.

Exit codes: 0 when the command ran to completion (whatever the verdict),
2 for input or parse errors, 3 when a computed result failed its own
validation or a reproduced example disagrees with its expected conclusion.
"""

import argparse
import json
import re
import sys
from typing import Any, Dict, List, Optional, Sequence, TextIO, Tuple

from swobstruct import __version__
from swobstruct.cli.documents import InputDocument, document_schema, fixture_document, load_document
from swobstruct.errors import (
    FixtureMismatchError,
    InputError,
    InternalValidationError,
    InvalidParamsError,
)
from swobstruct.lattice.base import square
from swobstruct.obstruction.checkers import check_action
from swobstruct.obstruction.hypotheses import ManifoldData
from swobstruct.obstruction.verdict import Verdict, verdict_schema
from swobstruct.search.characteristic import find_characteristic
from swobstruct.search.fixtures import build_example, list_examples
from swobstruct.search.orthogonal import find_orthogonal_square2_system
from swobstruct.utils.config import get_settings
from swobstruct.utils.logger import get_logger, log_error

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_VALIDATION = 3

_RANGE = re.compile(r"^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$")


def _square_range(text: str) -> Tuple[int, int]:
    match = _RANGE.match(text)
    if not match:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}")
    return int(match.group(1)), int(match.group(2))


def _param(text: str) -> Tuple[str, int]:
    key, sep, value = text.partition("=")
    if not sep or not key:
        raise argparse.ArgumentTypeError(f"expected key=value, got {text!r}")
    try:
        return key.strip(), int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"parameter {key} needs an integer value, got {value!r}") from None


def _attach_negative_ranges(argv: Sequence[str]) -> List[str]:
    """Fold ``--square -8..0`` into ``--square=-8..0``.

    argparse reads a separate value starting with ``-`` as an option unless it
    is a plain negative number.
    """
    joined: List[str] = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token == "--square" and i + 1 < len(argv) and _RANGE.match(argv[i + 1]):
            joined.append(f"--square={argv[i + 1]}")
            i += 2
            continue
        joined.append(token)
        i += 1
    return joined


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subparser per command."""
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument(
        "--format",
        choices=["json", "text"],
        default=argparse.SUPPRESS,
        help="Report format (overrides the document option)",
    )

    parser = argparse.ArgumentParser(
        prog="swobstruct",
        description="Families Seiberg-Witten obstructions to realising lattice isometries",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--format", choices=["json", "text"], default=None, help="Report format")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", parents=[fmt], help="Run the obstruction check of a document")
    check.add_argument("file", help="Input document (JSON)")

    sw = sub.add_parser("sw-class", parents=[fmt], help="Print the Stiefel-Whitney class only")
    sw.add_argument("file", help="Input document (JSON)")

    chars = sub.add_parser(
        "search-characteristic", parents=[fmt], help="Enumerate characteristic vectors"
    )
    chars.add_argument("file", help="Input document; only the lattice is used")
    chars.add_argument("--bound", type=int, required=True, help="Coordinate bound")
    chars.add_argument(
        "--square", type=_square_range, required=True, help="Square range LO..HI, e.g. -8..0"
    )
    chars.add_argument("--limit", type=int, default=None, help="Maximum number of results")
    chars.add_argument("--workers", type=int, default=None, help="Worker processes")

    orth = sub.add_parser(
        "search-orthogonal", parents=[fmt], help="Find orthogonal square-2 systems orthogonal to c"
    )
    orth.add_argument("file", help="Input document; lattice and characteristic are used")
    orth.add_argument("--count", type=int, required=True, help="Vectors per system")
    orth.add_argument("--bound", type=int, required=True, help="Coordinate bound")
    orth.add_argument("--all", action="store_true", dest="find_all", help="Return every system")
    orth.add_argument("--limit", type=int, default=None, help="Maximum number of systems")
    orth.add_argument("--workers", type=int, default=None, help="Worker processes")

    rep = sub.add_parser("reproduce", parents=[fmt], help="Check a built-in example")
    rep.add_argument("id", help="Example id (see list-examples)")
    rep.add_argument(
        "params", nargs="*", type=_param, metavar="KEY=VALUE", help="Example parameters, e.g. a=4 b=1"
    )
    rep.add_argument(
        "--param",
        type=_param,
        action="append",
        default=[],
        metavar="KEY=VALUE",
        help="Example parameter, same as a bare KEY=VALUE",
    )
    rep.add_argument(
        "--emit-document", action="store_true", help="Print the example as an input document instead"
    )

    sub.add_parser("list-examples", parents=[fmt], help="List built-in examples")

    schema = sub.add_parser("schema", help="Print a JSON Schema")
    schema.add_argument(
        "--document", action="store_true", help="Schema of the input document instead of the report"
    )
    return parser


def _output_format(args: argparse.Namespace, doc: Optional[InputDocument] = None) -> str:
    if getattr(args, "format", None):
        return args.format
    if doc is not None and doc.options.format:
        return doc.options.format
    return get_settings().default_output_format


def _print_verdict(verdict: Verdict, fmt: str, out: TextIO) -> None:
    out.write((verdict.to_json() if fmt == "json" else verdict.to_text()) + "\n")


def _json_line(data: Any, out: TextIO) -> None:
    out.write(json.dumps(data, sort_keys=True) + "\n")


def _cmd_check(args: argparse.Namespace, out: TextIO) -> int:
    doc = load_document(args.file)
    l = doc.build_lattice()
    action = doc.build_action(l)
    c = doc.build_characteristic(l)
    verdict = check_action(ManifoldData(l), action, c, all_splits=doc.options.all_splits)
    _print_verdict(verdict, _output_format(args, doc), out)
    return EXIT_OK


def _cmd_sw_class(args: argparse.Namespace, out: TextIO) -> int:
    doc = load_document(args.file)
    l = doc.build_lattice()
    action = doc.build_action(l)
    c = doc.build_characteristic(l)
    verdict = check_action(ManifoldData(l), action, c, all_splits=doc.options.all_splits)
    inv = verdict.invariants
    failed = [h.name for h in verdict.failed_hypotheses]
    if _output_format(args, doc) == "json":
        _json_line(
            {
                "base": inv.base,
                "sw_class": inv.sw_class,
                "w_top": inv.w_top,
                "failed_hypotheses": failed,
            },
            out,
        )
    elif inv.w_top is None:
        out.write("class not computed; failed hypotheses: " + ", ".join(failed) + "\n")
    else:
        out.write(f"base: {inv.base}\n")
        out.write("w: " + (" + ".join(inv.sw_class or []) or "0") + "\n")
        out.write(f"top: {inv.w_top}\n")
    return EXIT_OK


def _cmd_search_characteristic(args: argparse.Namespace, out: TextIO) -> int:
    doc = load_document(args.file)
    l = doc.build_lattice()
    results = find_characteristic(l, args.bound, args.square, limit=args.limit, workers=args.workers)
    for v in results:
        _json_line({"vector": list(v), "square": square(l, v)}, out)
    return EXIT_OK


def _cmd_search_orthogonal(args: argparse.Namespace, out: TextIO) -> int:
    doc = load_document(args.file)
    l = doc.build_lattice()
    c = doc.build_characteristic(l) if doc.characteristic is not None else (0,) * l.rank
    systems = find_orthogonal_square2_system(
        l,
        c,
        args.count,
        args.bound,
        find_all=args.find_all,
        limit=args.limit,
        workers=args.workers,
    )
    for system in systems:
        _json_line({"system": [list(v) for v in system]}, out)
    return EXIT_OK


def _cmd_reproduce(args: argparse.Namespace, out: TextIO) -> int:
    params: Dict[str, int] = {}
    for key, value in [*args.params, *args.param]:
        if key in params:
            raise InvalidParamsError(f"parameter {key} given twice", "reproduce")
        params[key] = value
    fixture = build_example(args.id, params)
    if args.emit_document:
        document = fixture_document(fixture.lattice, fixture.action, fixture.c)
        out.write(json.dumps(document, indent=2) + "\n")
        return EXIT_OK
    verdict = fixture.run()
    _print_verdict(verdict, _output_format(args), out)
    if verdict.conclusion != fixture.expected:
        raise FixtureMismatchError(
            f"example {args.id} concluded {verdict.conclusion.value}, expected {fixture.expected.value}",
            "reproduce",
            details={"example": args.id, "params": params},
        )
    return EXIT_OK


def _cmd_list_examples(args: argparse.Namespace, out: TextIO) -> int:
    examples = list_examples()
    if _output_format(args) == "json":
        for entry in examples:
            _json_line(entry, out)
        return EXIT_OK
    for entry in examples:
        params = " ".join(f"{k}={v}" for k, v in entry["params"].items())  # type: ignore[union-attr]
        out.write(f"{entry['id']:<28} {params:<16} {entry['summary']}\n")
    return EXIT_OK


def _cmd_schema(args: argparse.Namespace, out: TextIO) -> int:
    schema = document_schema() if args.document else verdict_schema()
    out.write(json.dumps(schema, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


_COMMANDS = {
    "check": _cmd_check,
    "sw-class": _cmd_sw_class,
    "search-characteristic": _cmd_search_characteristic,
    "search-orthogonal": _cmd_search_orthogonal,
    "reproduce": _cmd_reproduce,
    "list-examples": _cmd_list_examples,
    "schema": _cmd_schema,
}


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    """Run one command and return its exit code.

    Args:
        argv: Arguments without the program name; defaults to ``sys.argv[1:]``
        out: Report stream, stdout by default
        err: Error stream, stderr by default

    Returns:
        Exit code
    """
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(_attach_negative_ranges(sys.argv[1:] if argv is None else argv))
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else EXIT_INPUT

    try:
        return _COMMANDS[args.command](args, out)
    except InputError as e:
        log_error(logger, e, context=e.details, operation=e.operation)
        err.write(f"error: {e.message}\n")
        return EXIT_INPUT
    except InternalValidationError as e:
        log_error(logger, e, context=e.details, operation=e.operation)
        err.write(f"internal validation failed: {e.message}\n")
        return EXIT_VALIDATION


def main() -> None:
    """Console script entry point."""
    sys.exit(run())


__all__: List[str] = ["build_parser", "main", "run"]
