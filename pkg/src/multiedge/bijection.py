"""Multi-edge trees with N edges <-> 3-coloured Motzkin paths of length N-1.

The map runs in three reversible stages:

1. forget the multiplicities and encode the plain tree as a Dyck path
   (up on descent, down on return);
2. drop the first and last step of the Dyck path and read the rest in
   consecutive pairs: UU -> U, DD -> D, UD -> R, DU -> G;
3. weave a-1 blue level steps into the 2-Motzkin path for every edge of
   multiplicity a, edge i (in pre-order) owning the gap just before
   symbol i, the last edge owning the gap after the final symbol.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .core import DyckPath, MultiEdgeTree, Motzkin2Path, Motzkin3Path

__all__ = [
    "DomainError",
    "strip_multiplicities",
    "attach_multiplicities",
    "tree_to_dyck",
    "dyck_to_tree",
    "dyck_to_motzkin2",
    "motzkin2_to_dyck",
    "weave_blue",
    "unweave_blue",
    "forward",
    "inverse",
    "Trace",
    "trace",
]

_PAIR_TO_STEP = {"UU": "U", "DD": "D", "UD": "R", "DU": "G"}
_STEP_TO_PAIR = {v: k for k, v in _PAIR_TO_STEP.items()}


class DomainError(ValueError):
    """Argument lies outside the domain of a bijection stage."""


def _shape(t: MultiEdgeTree) -> str:
    return "".join("D" if a is None else "U" for a in t.walk())


def _build(steps: str, mults: Sequence[int]) -> MultiEdgeTree:
    # steps is a valid Dyck word; mults has one entry per U, in order
    stack: list[tuple[int, list]] = [(0, [])]
    it = iter(mults)
    for s in steps:
        if s == "U":
            stack.append((next(it), []))
        else:
            a, kids = stack.pop()
            stack[-1][1].append((a, MultiEdgeTree(tuple(kids))))
    return MultiEdgeTree(tuple(stack[0][1]))


def strip_multiplicities(t: MultiEdgeTree) -> tuple[MultiEdgeTree, list[int]]:
    """Split ``t`` into its plain shape and its pre-order multiplicities."""
    events = list(t.walk())
    mults = [a for a in events if a is not None]
    if not mults:
        raise DomainError("bijection requires N >= 1; the single-node tree has no edges")
    shape = "".join("D" if a is None else "U" for a in events)
    return _build(shape, [1] * len(mults)), mults


def attach_multiplicities(plain: MultiEdgeTree, mults: Sequence[int]) -> MultiEdgeTree:
    """Relabel the edges of ``plain`` in pre-order with ``mults``."""
    n = plain.plain_edge_count
    if len(mults) != n:
        raise DomainError(f"tree has {n} edges but {len(mults)} multiplicities given")
    if any(a < 1 for a in mults):
        raise DomainError("multiplicities must be >= 1")
    return _build(_shape(plain), mults)


def tree_to_dyck(p: MultiEdgeTree) -> DyckPath:
    events = list(p.walk())
    if any(a is not None and a != 1 for a in events):
        raise DomainError("tree_to_dyck needs a plain tree (all multiplicities 1)")
    return DyckPath("".join("D" if a is None else "U" for a in events))


def dyck_to_tree(d: DyckPath) -> MultiEdgeTree:
    if not d.steps:
        raise DomainError("the empty Dyck path encodes the edgeless tree")
    return _build(d.steps, [1] * (len(d) // 2))


def dyck_to_motzkin2(d: DyckPath) -> Motzkin2Path:
    if not d.steps:
        raise DomainError("cannot shorten the empty Dyck path")
    inner = d.steps[1:-1]
    return Motzkin2Path("".join(_PAIR_TO_STEP[inner[i:i + 2]] for i in range(0, len(inner), 2)))


def motzkin2_to_dyck(m: Motzkin2Path) -> DyckPath:
    return DyckPath("U" + "".join(_STEP_TO_PAIR[s] for s in m.steps) + "D")


def weave_blue(m: Motzkin2Path, mult: Sequence[int]) -> Motzkin3Path:
    """Insert ``mult[i] - 1`` blue steps into gap i of ``m``."""
    if len(mult) != len(m) + 1:
        raise DomainError(
            f"a path of length {len(m)} has {len(m) + 1} gaps, got {len(mult)} multiplicities")
    parts = []
    for i, a in enumerate(mult):
        if a < 1:
            raise DomainError(f"multiplicity {a} at position {i} is not positive")
        parts.append("B" * (a - 1))
        if i < len(m):
            parts.append(m.steps[i])
    return Motzkin3Path("".join(parts))


def unweave_blue(p: Motzkin3Path) -> tuple[Motzkin2Path, list[int]]:
    mult = [1]
    rest = []
    for s in p.steps:
        if s == "B":
            mult[-1] += 1
        else:
            rest.append(s)
            mult.append(1)
    return Motzkin2Path("".join(rest)), mult


def forward(t: MultiEdgeTree) -> Motzkin3Path:
    plain, mult = strip_multiplicities(t)
    return weave_blue(dyck_to_motzkin2(tree_to_dyck(plain)), mult)


def inverse(p: Motzkin3Path) -> MultiEdgeTree:
    m, mult = unweave_blue(p)
    return _build(motzkin2_to_dyck(m).steps, mult)


class Trace(NamedTuple):
    tree: MultiEdgeTree
    dyck: DyckPath
    motzkin2: Motzkin2Path
    motzkin3: Motzkin3Path


def trace(t: MultiEdgeTree) -> Trace:
    """Every intermediate object of ``forward(t)``."""
    plain, mult = strip_multiplicities(t)
    d = tree_to_dyck(plain)
    m = dyck_to_motzkin2(d)
    return Trace(t, d, m, weave_blue(m, mult))
