"""Combinatorial objects: multi-edge trees and lattice paths.

Trees use a nested-parenthesis text form where every child link is
prefixed by its multiplicity::

    ()              single node
    (3())           one edge of multiplicity 3
    (1(1())1())     root with two children, the first having one child

Paths are strings over ``U`` (up), ``D`` (down) and the level steps
``R``, ``G`` (red, green) and ``B`` (blue).  Which letters are legal
depends on the path kind.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterator, Union

__all__ = [
    "ParseError",
    "InvalidObject",
    "Violation",
    "PathKind",
    "MultiEdgeTree",
    "DyckPath",
    "Motzkin2Path",
    "Motzkin3Path",
    "parse_tree",
    "serialize_tree",
    "parse_path",
    "serialize_path",
    "check_steps",
    "validate",
]


class ParseError(ValueError):
    """Malformed text.  ``offset`` is the UTF-8 byte offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.reason = message
        self.offset = offset


class InvalidObject(ValueError):
    """A constructed value breaks one of its type invariants."""

    def __init__(self, violation: "Violation"):
        super().__init__(violation.message)
        self.violation = violation


@dataclass(frozen=True)
class Violation:
    invariant: str
    message: str
    position: int | None = None

    def __str__(self) -> str:
        where = "" if self.position is None else f" at {self.position}"
        return f"{self.invariant}{where}: {self.message}"


# ---------------------------------------------------------------------------
# trees
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MultiEdgeTree:
    """Rooted plane tree whose child links carry positive multiplicities.

    ``children`` is a tuple of ``(multiplicity, subtree)`` pairs, left to
    right.  A tree whose multiplicities are all 1 doubles as a plain tree.
    """

    children: tuple[tuple[int, "MultiEdgeTree"], ...] = ()

    def __post_init__(self) -> None:
        kids = tuple(self.children)
        for a, sub in kids:
            if isinstance(a, bool) or not isinstance(a, int):
                raise TypeError(f"multiplicity must be an int, got {a!r}")
            if a < 1:
                raise InvalidObject(
                    Violation("multiplicity>=1", f"multiplicity {a} is not positive"))
            if not isinstance(sub, MultiEdgeTree):
                raise TypeError(f"subtree must be a MultiEdgeTree, got {sub!r}")
        object.__setattr__(self, "children", kids)

    def walk(self) -> Iterator[int | None]:
        """Depth-first edge events: the multiplicity on descent, None on return."""
        stack = [iter(self.children)]
        while stack:
            for a, sub in stack[-1]:
                yield a
                stack.append(iter(sub.children))
                break
            else:
                stack.pop()
                if stack:
                    yield None

    def multiplicities(self) -> list[int]:
        """Edge multiplicities in pre-order."""
        return [a for a in self.walk() if a is not None]

    @property
    def total_weight(self) -> int:
        return sum(self.multiplicities())

    @property
    def plain_edge_count(self) -> int:
        return len(self.multiplicities())

    @property
    def is_plain(self) -> bool:
        return all(a == 1 for a in self.walk() if a is not None)

    def __str__(self) -> str:
        return serialize_tree(self)

    def __repr__(self) -> str:
        return f"MultiEdgeTree({serialize_tree(self)!r})"


_TOKEN = re.compile(r"\s+|\(|\)|[0-9]+|.", re.DOTALL)


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8"))


def parse_tree(text: str) -> MultiEdgeTree:
    """Parse the parenthesised tree form.  Whitespace between tokens is ignored."""
    # each open node: (multiplicity of the link above it, children so far)
    stack: list[tuple[int | None, list]] = []
    pending: int | None = None
    pending_at = 0
    result: MultiEdgeTree | None = None

    def fail(msg: str, index: int) -> ParseError:
        return ParseError(msg, _byte_offset(text, index))

    for m in _TOKEN.finditer(text):
        tok, at = m.group(), m.start()
        if tok[0].isspace():
            continue
        if result is not None:
            raise fail(f"unexpected {tok!r} after complete tree", at)
        if tok == "(":
            if stack and pending is None:
                raise fail("expected multiplicity before '('", at)
            stack.append((pending, []))
            pending = None
        elif tok == ")":
            if not stack:
                raise fail("unbalanced ')'", at)
            if pending is not None:
                raise fail("multiplicity not followed by a subtree", at)
            a, kids = stack.pop()
            node = MultiEdgeTree(tuple(kids))
            if stack:
                stack[-1][1].append((a, node))
            else:
                result = node
        elif tok.isdigit():
            if not stack:
                raise fail("expected '('", at)
            if pending is not None:
                raise fail("expected '(' after multiplicity", at)
            value = int(tok)
            if value < 1:
                raise fail("multiplicity must be >= 1", at)
            pending, pending_at = value, at
        else:
            raise fail(f"unexpected character {tok!r}", at)

    if result is None:
        if pending is not None:
            raise fail("multiplicity not followed by a subtree", pending_at)
        if stack:
            raise fail("unbalanced '(': missing ')'", len(text))
        raise fail("empty input", len(text))
    return result


def serialize_tree(t: MultiEdgeTree) -> str:
    parts = ["("]
    for a in t.walk():
        parts.append(")" if a is None else f"{a}(")
    parts.append(")")
    return "".join(parts)


# ---------------------------------------------------------------------------
# paths
# ---------------------------------------------------------------------------

class PathKind(enum.Enum):
    DYCK = "UD"
    MOTZKIN2 = "UDRG"
    MOTZKIN3 = "UDRGB"

    @property
    def alphabet(self) -> str:
        return self.value

    @classmethod
    def from_name(cls, name: str) -> "PathKind":
        key = name.strip().lower().replace("_", "-")
        aliases = {
            "dyck": cls.DYCK,
            "motzkin2": cls.MOTZKIN2, "2-motzkin": cls.MOTZKIN2, "motzkin-2": cls.MOTZKIN2,
            "motzkin3": cls.MOTZKIN3, "3-motzkin": cls.MOTZKIN3, "motzkin-3": cls.MOTZKIN3,
        }
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown path kind {name!r}") from None


def check_steps(steps: str, kind: PathKind) -> Violation | None:
    """First broken path invariant for ``steps`` read as ``kind``, or None."""
    alphabet = kind.value
    height = 0
    for i, s in enumerate(steps):
        if s not in alphabet:
            return Violation("alphabet", f"letter {s!r} not allowed in {kind.name} path", i)
        if s == "U":
            height += 1
        elif s == "D":
            height -= 1
            if height < 0:
                return Violation("prefix-nonnegative", "path dips below the axis", i)
    if height != 0:
        return Violation("final-height", f"path ends at height {height}, not 0", len(steps))
    if kind is PathKind.DYCK and len(steps) % 2:
        return Violation("even-length", "Dyck path has odd length", len(steps))
    return None


@dataclass(frozen=True)
class _Path:
    steps: str = ""

    kind = PathKind.MOTZKIN3

    def __post_init__(self) -> None:
        if not isinstance(self.steps, str):
            object.__setattr__(self, "steps", "".join(self.steps))
        v = check_steps(self.steps, self.kind)
        if v is not None:
            raise InvalidObject(v)

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[str]:
        return iter(self.steps)

    def __str__(self) -> str:
        return self.steps

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.steps!r})"


@dataclass(frozen=True, repr=False)
class DyckPath(_Path):
    kind = PathKind.DYCK


@dataclass(frozen=True, repr=False)
class Motzkin2Path(_Path):
    kind = PathKind.MOTZKIN2


@dataclass(frozen=True, repr=False)
class Motzkin3Path(_Path):
    kind = PathKind.MOTZKIN3

    @property
    def blue_count(self) -> int:
        return self.steps.count("B")

    def erase_blue(self) -> Motzkin2Path:
        return Motzkin2Path(self.steps.replace("B", ""))


Path = Union[DyckPath, Motzkin2Path, Motzkin3Path]

_PATH_TYPES = {
    PathKind.DYCK: DyckPath,
    PathKind.MOTZKIN2: Motzkin2Path,
    PathKind.MOTZKIN3: Motzkin3Path,
}


def parse_path(text: str, kind: PathKind | str) -> Path:
    """Parse a path of the given kind.  Surrounding whitespace is stripped."""
    if isinstance(kind, str):
        kind = PathKind.from_name(kind)
    steps = text.strip()
    v = check_steps(steps, kind)
    if v is not None:
        raise ParseError(v.message, _byte_offset(steps, v.position or 0))
    return _PATH_TYPES[kind](steps)


def serialize_path(p: Path) -> str:
    return p.steps


def validate(obj: object, kind: PathKind | str | None = None) -> Violation | None:
    """Check every invariant of ``obj``; return the first violation or None.

    ``obj`` may be a constructed value or raw text.  Raw text needs
    ``kind``: a PathKind (or its name) or ``"tree"``.
    """
    if isinstance(obj, str):
        if kind is None:
            raise TypeError("validating raw text needs a kind")
        if kind == "tree":
            try:
                obj = parse_tree(obj)
            except ParseError as e:
                inv = "multiplicity>=1" if "multiplicity must be" in e.reason else "syntax"
                return Violation(inv, e.reason, e.offset)
            except InvalidObject as e:
                return e.violation
        else:
            if isinstance(kind, str):
                kind = PathKind.from_name(kind)
            return check_steps(obj, kind)

    if isinstance(obj, MultiEdgeTree):
        for i, a in enumerate(obj.multiplicities()):
            if a < 1:
                return Violation("multiplicity>=1", f"edge {i} has multiplicity {a}", i)
        return None
    if isinstance(obj, _Path):
        v = check_steps(obj.steps, obj.kind)
        if v is None and isinstance(obj, Motzkin3Path):
            v = check_steps(obj.steps.replace("B", ""), PathKind.MOTZKIN2)
            if v is not None:
                v = Violation("blue-erasure", v.message, v.position)
        return v
    raise TypeError(f"cannot validate {type(obj).__name__}")
