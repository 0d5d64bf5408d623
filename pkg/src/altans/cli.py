"""Command-line interface.

Exit codes: 0 success, 2 invalid input, 3 infeasible request (e.g. a code
whose walk does not close, or a size guard), 4 expectation mismatch.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import io
from .altan import AltanResult, altan_patch, color_root, iterated_altan
from .boundary import boundary_edges_code, classify
from .builders import build_named
from .errors import CodeWalkError, InvalidGraphError, LimitExceededError, SizeGuardError
from .graph import BLACK, WHITE, PeripheralRoot, RootedGraph
from .kekule import HEURISTICS, count_perfect_matchings
from .plane import Patch, degree2_root

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_INFEASIBLE = 3
EXIT_MISMATCH = 4


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INVALID):
        super().__init__(message)
        self.code = code


def _add_source(sp: argparse.ArgumentParser) -> None:
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("-i", "--input", help="graph/patch JSON file")
    src.add_argument("--name", help="catalog structure id")


def _add_output(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("-o", "--output", help="write here instead of standard output")


def _load(args) -> io.Structure:
    if args.input:
        try:
            text = Path(args.input).read_text()
        except OSError as exc:
            raise CliError(f"cannot read {args.input}: {exc}") from exc
        return io.loads(text)
    try:
        p = build_named(args.name)
    except KeyError as exc:
        raise CliError(str(exc.args[0])) from exc
    return io.Structure(p.graph, p.plane, p)


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _require_patch(s: io.Structure) -> Patch:
    if s.patch is None:
        raise CliError("this command needs a patch (rotation and outer_face)")
    return s.patch


def cmd_build(args) -> int:
    try:
        p = build_named(args.name)
    except KeyError as exc:
        raise CliError(str(exc.args[0])) from exc
    _emit(io.dumps(p), args.output)
    return EXIT_OK


def _initial_root(s: io.Structure, mode: str) -> PeripheralRoot:
    if mode == "given":
        if s.root is None:
            raise CliError("input has no root; use --root degree2|black|white|explicit:...")
        return s.root
    if mode.startswith("explicit:"):
        try:
            return PeripheralRoot(tuple(int(t) for t in mode[len("explicit:"):].split(",") if t))
        except ValueError as exc:
            raise CliError(f"bad explicit root: {exc}") from exc
    p = _require_patch(s)
    if mode == "degree2":
        return degree2_root(p)
    if mode in ("black", "white"):
        return color_root(p, BLACK if mode == "black" else WHITE)
    raise CliError(f"unknown root mode {mode!r}")


def cmd_altan(args) -> int:
    if args.iterate < 0:
        raise CliError("--iterate must be nonnegative")
    if args.iterate == 0:
        if args.input:
            text = Path(args.input).read_text()
            io.loads(text)
        else:
            text = io.dumps(_load(args).patch)
        _emit(text, args.output)
        return EXIT_OK
    s = _load(args)
    mode = args.root or ("given" if s.root is not None else "degree2")
    root = _initial_root(s, mode)
    result: AltanResult = iterated_altan(RootedGraph(s.graph, root), args.iterate)
    shape = result.graph
    if s.patch is not None:
        try:
            q = altan_patch(s.patch, root.vertices)
            for _ in range(args.iterate - 1):
                q = altan_patch(q)
        except InvalidGraphError as exc:
            print(f"note: embedding dropped ({exc})", file=sys.stderr)
        else:
            if q.graph != result.graph:
                raise AssertionError("patch altan disagrees with abstract altan")
            shape = q
    _emit(io.dumps(shape, root=result.s1, altan=result), args.output)
    return EXIT_OK


def cmd_classify(args) -> int:
    p = _require_patch(_load(args))
    print(json.dumps(classify(p).as_dict()))
    return EXIT_OK


def cmd_code(args) -> int:
    code = boundary_edges_code(_require_patch(_load(args)))
    if args.up_to_reflection:
        print(",".join(str(c) for c in code.reflection_canonical()))
    else:
        print(code)
    return EXIT_OK


def cmd_kekule(args) -> int:
    s = _load(args)
    k = count_perfect_matchings(s.graph, heuristic=args.heuristic)
    print(k)
    if args.expect is not None and k != args.expect:
        print(f"expected {args.expect}, counted {k}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import run_all

    results = run_all()
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"[{status}] {r.number:2d}  {r.name}  ({r.detail})")
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} criteria passed")
    return EXIT_OK if not failed else EXIT_MISMATCH


def cmd_export(args) -> int:
    s = _load(args)
    if args.format == "dot":
        text = io.to_dot(s.graph)
    else:
        text = io.dumps(s)
    _emit(text, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="altans", description="Altans, boundary codes and Kekulé counts.")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("build", help="write a catalog structure as JSON")
    sp.add_argument("--name", required=True)
    _add_output(sp)
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("altan", help="apply (iterated) altans")
    _add_source(sp)
    sp.add_argument("--iterate", type=int, default=1)
    sp.add_argument("--root", help="degree2 | black | white | given | explicit:v1,v2,...")
    _add_output(sp)
    sp.set_defaults(func=cmd_altan)

    sp = sub.add_parser("classify", help="print the patch class as JSON")
    _add_source(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("code", help="print the canonical boundary-edges code")
    _add_source(sp)
    sp.add_argument("--up-to-reflection", action="store_true")
    sp.set_defaults(func=cmd_code)

    sp = sub.add_parser("kekule", help="count Kekulé structures")
    _add_source(sp)
    sp.add_argument("--expect", type=int)
    sp.add_argument("--heuristic", choices=sorted(HEURISTICS), default="min-degree")
    sp.set_defaults(func=cmd_kekule)

    sp = sub.add_parser("verify", help="run every acceptance check")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("export", help="emit JSON or DOT")
    _add_source(sp)
    sp.add_argument("--format", choices=("dot", "json"), default="json")
    _add_output(sp)
    sp.set_defaults(func=cmd_export)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (CodeWalkError, SizeGuardError, LimitExceededError) as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (InvalidGraphError, ValueError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
