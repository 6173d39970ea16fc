"""Command-line interface.

    multiedge convert --direction tree-to-path "(2(1()))"
    multiedge convert path-to-tree BB
    multiedge enumerate trees 3 --count
    multiedge count --family motzkin3 --size 6
    multiedge verify --max-size 9
    multiedge table
    multiedge render "(1(2())1())"

Exit status: 0 on success, 1 on invalid input or a failed check, 2 on
usage errors.  Any input argument given as ``-`` is read from stdin.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import bijection, enumeration, verify
from .core import InvalidObject, ParseError, PathKind, parse_path, parse_tree
from .render import render_path, render_tree

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2

DIRECTIONS = ("tree-to-path", "path-to-tree")

_GENERATORS = {
    "trees": enumeration.gen_trees,
    "motzkin3": enumeration.gen_motzkin3,
    "motzkin2": enumeration.gen_motzkin2,
    "dyck": enumeration.gen_dyck,
}
_COUNTERS = {
    "trees": enumeration.count_trees,
    "motzkin3": enumeration.count_motzkin3,
    "motzkin2": enumeration.count_motzkin2,
    "dyck": enumeration.count_dyck,
}
FAMILIES = tuple(_GENERATORS)


class UsageError(Exception):
    pass


def _read(arg: str) -> str:
    return sys.stdin.read().strip() if arg == "-" else arg


def convert(direction: str, text: str) -> str:
    """Map a tree to its path or back; returns canonical text."""
    if direction == "tree-to-path":
        return str(bijection.forward(parse_tree(text)))
    if direction == "path-to-tree":
        return str(bijection.inverse(parse_path(text, PathKind.MOTZKIN3)))
    raise UsageError(f"unknown direction {direction!r}; choose from {', '.join(DIRECTIONS)}")


def table_rows() -> list[tuple[str, str, str, str]]:
    """Every weight-3 tree with its Dyck, 2-Motzkin and 3-Motzkin images."""
    return [tuple(map(str, bijection.trace(t))) for t in enumeration.gen_trees(3)]


def render(text: str) -> str:
    text = text.strip()
    if text.startswith("("):
        return render_tree(parse_tree(text))
    return render_path(parse_path(text, PathKind.MOTZKIN3).steps)


# ---------------------------------------------------------------------------

def _family_and_size(args: argparse.Namespace) -> tuple[str, int]:
    pos = list(args.positional)
    family, size = args.family, args.size
    if pos and pos[0] in FAMILIES:
        if family is not None:
            raise UsageError("family given twice")
        family = pos.pop(0)
    if pos:
        if size is not None:
            raise UsageError("size given twice")
        try:
            size = int(pos.pop(0))
        except ValueError:
            raise UsageError(f"size must be an integer, got {args.positional[-1]!r}") from None
    if pos:
        raise UsageError(f"unexpected arguments: {' '.join(pos)}")
    if family is None or size is None:
        raise UsageError(f"need a family ({', '.join(FAMILIES)}) and a size")
    if size < 0:
        raise UsageError("size must be non-negative")
    return family, size


def _cmd_convert(args: argparse.Namespace) -> int:
    pos = list(args.positional)
    direction = args.direction
    if len(pos) == 2:
        if direction is not None:
            raise UsageError("direction given twice")
        direction = pos.pop(0)
    if len(pos) != 1:
        raise UsageError("convert takes one input object")
    if direction is None:
        raise UsageError("missing --direction")
    print(convert(direction, _read(pos[0])))
    return EXIT_OK


def _cmd_enumerate(args: argparse.Namespace) -> int:
    family, size = _family_and_size(args)
    stream = _GENERATORS[family](size)
    if args.count:
        print(sum(1 for _ in stream))
    else:
        out = sys.stdout
        for obj in stream:
            out.write(f"{obj}\n")
    return EXIT_OK


def _cmd_count(args: argparse.Namespace) -> int:
    family, size = _family_and_size(args)
    print(_COUNTERS[family](size))
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    max_size = args.max_size if args.max_size is not None else args.max_pos
    if max_size is None:
        max_size = 9
    if max_size < 1:
        raise UsageError("max size must be >= 1")
    ok = True
    for r in verify.run_checks(max_size):
        print(r.line(), flush=True)
        ok &= r.passed
    print("all checks passed" if ok else "SOME CHECKS FAILED")
    return EXIT_OK if ok else EXIT_INVALID


def _cmd_table(args: argparse.Namespace) -> int:
    print("tree\tdyck\tmotzkin2\tmotzkin3")
    for row in table_rows():
        print("\t".join(row))
    return EXIT_OK


def _cmd_render(args: argparse.Namespace) -> int:
    print(render(_read(args.object)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="multiedge",
        description="Multi-edge trees <-> 3-coloured Motzkin paths.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("convert", help="apply the bijection or its inverse")
    c.add_argument("positional", nargs="+", metavar="[DIRECTION] INPUT")
    c.add_argument("--direction", choices=DIRECTIONS)
    c.set_defaults(func=_cmd_convert)

    for name, func, helptext in (
        ("enumerate", _cmd_enumerate, "list every object of a family and size"),
        ("count", _cmd_count, "count a family by dynamic programming"),
    ):
        e = sub.add_parser(name, help=helptext)
        e.add_argument("positional", nargs="*", metavar="[FAMILY] [SIZE]")
        e.add_argument("--family", choices=FAMILIES)
        e.add_argument("--size", type=int)
        if name == "enumerate":
            e.add_argument("--count", action="store_true", help="print only the number of objects")
        e.set_defaults(func=func)

    v = sub.add_parser("verify", help="exhaustively check the bijection and the series")
    v.add_argument("max_pos", nargs="?", type=int, metavar="MAX_SIZE")
    v.add_argument("--max-size", type=int)
    v.set_defaults(func=_cmd_verify)

    t = sub.add_parser("table", help="all weight-3 trees with every intermediate path")
    t.set_defaults(func=_cmd_table)

    r = sub.add_parser("render", help="ASCII drawing of a tree or path")
    r.add_argument("object")
    r.set_defaults(func=_cmd_render)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        parser.error(str(e))  # exits with status 2
    except (ParseError, InvalidObject, bijection.DomainError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
