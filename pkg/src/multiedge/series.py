"""Exact coefficient expansions of the two counting series.

F counts multi-edge trees by total weight and solves
``z*F**2 - (1 - z)*F + (1 - z) = 0``; M counts 3-coloured Motzkin paths
by length and solves ``M = 1 + 3*z*M + z**2*M**2``.  They are tied by
``F = 1 + z*M``.  Everything here is integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

__all__ = [
    "CoeffSeries",
    "f_coeffs",
    "m_coeffs",
    "check_identity",
    "f_residual",
    "m_residual",
    "convolve",
]


@dataclass(frozen=True)
class CoeffSeries:
    kind: Literal["F", "M"]
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if self.kind not in ("F", "M"):
            raise ValueError(f"kind must be 'F' or 'M', got {self.kind!r}")
        head = (1, 1) if self.kind == "F" else (1, 3)
        if self.coeffs[:2] != head[:len(self.coeffs)]:
            raise ValueError(f"{self.kind} series must start {head}, got {self.coeffs[:2]}")
        if any(c <= 0 for c in self.coeffs):
            raise ValueError("coefficients must be positive")

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self) -> int:
        return len(self.coeffs)

    @property
    def last(self) -> int:
        return self.coeffs[-1]

    def as_list(self) -> list[int]:
        return list(self.coeffs)


def convolve(a: Sequence[int], b: Sequence[int], upTo: int) -> list[int]:
    """Coefficients 0..upTo of the product of two truncated series."""
    out = [0] * (upTo + 1)
    for i, x in enumerate(a[:upTo + 1]):
        if x:
            for j, y in enumerate(b[:upTo + 1 - i]):
                out[i + j] += x * y
    return out


def f_coeffs(upTo: int) -> CoeffSeries:
    if upTo < 0:
        raise ValueError("upTo must be >= 0")
    f = [1]
    for N in range(1, upTo + 1):
        conv = sum(f[i] * f[N - 1 - i] for i in range(N))
        f.append(f[N - 1] + conv - (N == 1))
    return CoeffSeries("F", f)


def m_coeffs(upTo: int) -> CoeffSeries:
    if upTo < 0:
        raise ValueError("upTo must be >= 0")
    m = [1]
    for L in range(1, upTo + 1):
        m.append(3 * m[L - 1] + sum(m[i] * m[L - 2 - i] for i in range(L - 1)))
    return CoeffSeries("M", m)


def check_identity(upTo: int) -> int | None:
    """Check F = 1 + z*M through z**upTo.

    Returns None when every coefficient agrees, otherwise the first
    index N at which they differ.
    """
    if upTo < 1:
        raise ValueError("upTo must be >= 1")
    f = f_coeffs(upTo)
    m = m_coeffs(upTo - 1)
    if f[0] != 1:
        return 0
    for N in range(1, upTo + 1):
        if f[N] != m[N - 1]:
            return N
    return None


def f_residual(coeffs: Sequence[int]) -> list[int]:
    """Coefficients of z*F^2 - (1-z)*F + (1-z) through the given order."""
    n = len(coeffs) - 1
    sq = convolve(coeffs, coeffs, n)
    res = []
    for k in range(n + 1):
        r = (sq[k - 1] if k else 0) - coeffs[k] + (coeffs[k - 1] if k else 0)
        r += (k == 0) - (k == 1)
        res.append(r)
    return res


def m_residual(coeffs: Sequence[int]) -> list[int]:
    """Coefficients of M - 1 - 3z*M - z^2*M^2 through the given order."""
    n = len(coeffs) - 1
    sq = convolve(coeffs, coeffs, n)
    res = []
    for k in range(n + 1):
        r = coeffs[k] - (k == 0)
        if k >= 1:
            r -= 3 * coeffs[k - 1]
        if k >= 2:
            r -= sq[k - 2]
        res.append(r)
    return res
