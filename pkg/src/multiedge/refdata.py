"""Reference sequence prefixes and OEIS b-file reading."""

from __future__ import annotations

import io
import os
from typing import IO, Union

__all__ = ["SEQUENCES", "BFileError", "known_prefix", "parse_bfile", "load_bfile"]

# multi-edge trees by number of edges (with multiplicity)
_A002212 = (
    1, 1, 3, 10, 36, 137, 543, 2219, 9285, 39587, 171369, 751236, 3328218,
    14878455, 67030785, 304036170, 1387247580, 6363044315,
)

SEQUENCES: dict[str, tuple[int, ...]] = {
    "A002212": _A002212,
    # 3-coloured Motzkin paths by length: the tree counts shifted by one
    "A091965": _A002212[1:],
}


class BFileError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def known_prefix(seq_id: str) -> list[int]:
    try:
        return list(SEQUENCES[seq_id.strip().upper()])
    except KeyError:
        raise KeyError(f"unknown sequence id {seq_id!r}; known: {', '.join(SEQUENCES)}") from None


def parse_bfile(text: str) -> list[tuple[int, int]]:
    """Parse b-file content: ``index value`` per line, '#' comments, blank lines skipped."""
    out: list[tuple[int, int]] = []
    for lineno, raw in enumerate(io.StringIO(text), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise BFileError(f"expected 'index value', got {line!r}", lineno)
        try:
            idx, val = int(fields[0]), int(fields[1])
        except ValueError:
            raise BFileError(f"non-integer field in {line!r}", lineno) from None
        if out and idx <= out[-1][0]:
            raise BFileError(f"index {idx} does not increase (previous {out[-1][0]})", lineno)
        out.append((idx, val))
    return out


def load_bfile(source: Union[str, os.PathLike, IO[str]]) -> list[tuple[int, int]]:
    """Read a b-file from a path or an open text stream."""
    if hasattr(source, "read"):
        return parse_bfile(source.read())
    with open(source, encoding="ascii") as fh:
        return parse_bfile(fh.read())
