"""Exhaustive generators and dynamic-programming counters.

Every generator yields its objects in lexicographic order of their text
form, so listings are reproducible byte for byte.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .core import DyckPath, MultiEdgeTree, Motzkin2Path, Motzkin3Path, serialize_tree

__all__ = [
    "gen_trees",
    "gen_dyck",
    "gen_motzkin2",
    "gen_motzkin3",
    "count_trees",
    "count_dyck",
    "count_motzkin2",
    "count_motzkin3",
]


def _check_size(n: int) -> None:
    if n < 0:
        raise ValueError(f"size must be non-negative, got {n}")


@lru_cache(maxsize=None)
def _forests(w: int) -> tuple[tuple[tuple[int, MultiEdgeTree], ...], ...]:
    # first edge multiplicity a, first subtree weight k, remaining siblings w-a-k
    if w == 0:
        return ((),)
    out = []
    for a in range(1, w + 1):
        for k in range(w - a + 1):
            for sub in _trees(k):
                for rest in _forests(w - a - k):
                    out.append(((a, sub),) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def _trees(w: int) -> tuple[MultiEdgeTree, ...]:
    return tuple(sorted((MultiEdgeTree(f) for f in _forests(w)), key=serialize_tree))


def gen_trees(N: int) -> Iterator[MultiEdgeTree]:
    """All multi-edge trees of total weight ``N``."""
    _check_size(N)
    return iter(_trees(N))


def _gen_paths(length: int, levels: str) -> Iterator[str]:
    # letters tried in sorted order => output is lexicographic
    letters = "".join(sorted("UD" + levels))
    buf: list[str] = []

    def rec(height: int) -> Iterator[str]:
        left = length - len(buf)
        if left == 0:
            yield "".join(buf)
            return
        for s in letters:
            if s == "U":
                if height + 1 > left - 1:
                    continue
                h = height + 1
            elif s == "D":
                if height == 0:
                    continue
                h = height - 1
            else:
                if height > left - 1:
                    continue
                h = height
            buf.append(s)
            yield from rec(h)
            buf.pop()

    return rec(0)


def gen_dyck(n: int) -> Iterator[DyckPath]:
    """Dyck paths of semilength ``n`` (length 2n)."""
    _check_size(n)
    return (DyckPath(s) for s in _gen_paths(2 * n, ""))


def gen_motzkin2(L: int) -> Iterator[Motzkin2Path]:
    _check_size(L)
    return (Motzkin2Path(s) for s in _gen_paths(L, "RG"))


def gen_motzkin3(L: int) -> Iterator[Motzkin3Path]:
    _check_size(L)
    return (Motzkin3Path(s) for s in _gen_paths(L, "RGB"))


@lru_cache(maxsize=None)
def _count_forests(w: int) -> int:
    if w == 0:
        return 1
    return sum(
        count_trees(k) * _count_forests(w - a - k)
        for a in range(1, w + 1)
        for k in range(w - a + 1)
    )


def count_trees(N: int) -> int:
    _check_size(N)
    for w in range(N):  # fill the cache bottom-up, keeps recursion shallow
        _count_forests(w)
    return _count_forests(N)


def _count_paths(length: int, colours: int) -> int:
    ways = [1]  # ways[h]: prefixes ending at height h
    for _ in range(length):
        nxt = [0] * (len(ways) + 1)
        for h, c in enumerate(ways):
            if not c:
                continue
            nxt[h + 1] += c
            nxt[h] += colours * c
            if h:
                nxt[h - 1] += c
        ways = nxt
    return ways[0]


def count_dyck(n: int) -> int:
    _check_size(n)
    return _count_paths(2 * n, 0)


def count_motzkin2(L: int) -> int:
    _check_size(L)
    return _count_paths(L, 2)


def count_motzkin3(L: int) -> int:
    _check_size(L)
    return _count_paths(L, 3)
