"""Exhaustive checks of the bijection and the counting series."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import bijection, enumeration, series
from .core import validate

__all__ = ["CheckResult", "run_checks", "CHECKS"]


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    counterexample: str | None = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status}  {self.name}"
        if self.detail:
            text += f"  ({self.detail})"
        if self.counterexample is not None:
            text += f"\n      counterexample: {self.counterexample}"
        return text


def _fail(name: str, obj: object, why: str) -> CheckResult:
    return CheckResult(name, False, why, str(obj) if str(obj) else '""')


def check_tree_round_trip(N: int) -> CheckResult:
    name = f"trees N={N}: inverse(forward(t)) == t, length law, colour counts"
    count = 0
    for t in enumeration.gen_trees(N):
        count += 1
        p = bijection.forward(t)
        if bijection.inverse(p) != t:
            return _fail(name, t, "round trip broken")
        if len(p) != N - 1:
            return _fail(name, t, f"path length {len(p)} != {N - 1}")
        mults = t.multiplicities()
        if p.blue_count != sum(a - 1 for a in mults) or len(p) - p.blue_count != len(mults) - 1:
            return _fail(name, t, "blue / non-blue counts wrong")
        if validate(p) is not None:
            return _fail(name, t, str(validate(p)))
    return CheckResult(name, True, f"{count} trees")


def check_path_round_trip(N: int) -> CheckResult:
    L = N - 1
    name = f"paths L={L}: forward(inverse(p)) == p"
    count = 0
    for p in enumeration.gen_motzkin3(L):
        count += 1
        t = bijection.inverse(p)
        if t.total_weight != L + 1:
            return _fail(name, p, f"tree weight {t.total_weight} != {L + 1}")
        if bijection.forward(t) != p:
            return _fail(name, p, "round trip broken")
    return CheckResult(name, True, f"{count} paths")


def check_set_bijectivity(N: int) -> CheckResult:
    name = f"image of trees N={N} == all 3-Motzkin paths of length {N - 1}"
    trees = list(enumeration.gen_trees(N))
    image = {bijection.forward(t) for t in trees}
    paths = set(enumeration.gen_motzkin3(N - 1))
    if len(image) != len(trees):
        return CheckResult(name, False, "forward is not injective")
    if image != paths:
        odd = min(map(str, image ^ paths))
        return _fail(name, odd, "image and path set differ")
    return CheckResult(name, True, f"{len(trees)} trees <-> {len(paths)} paths")


def check_counts(N: int) -> CheckResult:
    name = f"series vs enumeration N={N}"
    f = series.f_coeffs(N)[N]
    m = series.m_coeffs(N - 1)[N - 1]
    got = {
        "stream trees": sum(1 for _ in enumeration.gen_trees(N)),
        "count_trees": enumeration.count_trees(N),
        "stream motzkin3": sum(1 for _ in enumeration.gen_motzkin3(N - 1)),
        "count_motzkin3": enumeration.count_motzkin3(N - 1),
        "m_coeffs": m,
    }
    bad = {k: v for k, v in got.items() if v != f}
    if bad:
        return CheckResult(name, False, f"f_N={f} but {bad}")
    return CheckResult(name, True, f"f_{N} = m_{N - 1} = {f}")


def check_series(upTo: int) -> CheckResult:
    name = f"F = 1 + zM and functional equations through order {upTo}"
    first = series.check_identity(upTo)
    if first is not None:
        return CheckResult(name, False, f"first mismatch at z^{first}")
    fr = series.f_residual(series.f_coeffs(upTo).coeffs)
    mr = series.m_residual(series.m_coeffs(upTo).coeffs)
    for label, res in (("F", fr), ("M", mr)):
        nz = [k for k, r in enumerate(res) if r]
        if nz:
            return CheckResult(name, False, f"{label} residual nonzero at z^{nz[0]}")
    return CheckResult(name, True)


CHECKS: tuple[Callable[[int], CheckResult], ...] = (
    check_tree_round_trip,
    check_path_round_trip,
    check_set_bijectivity,
    check_counts,
)


def run_checks(max_size: int) -> list[CheckResult]:
    """Run every check for sizes 1..max_size; deterministic order."""
    if max_size < 1:
        raise ValueError("max_size must be >= 1")
    results = [check(N) for N in range(1, max_size + 1) for check in CHECKS]
    results.append(check_series(max(max_size, 50)))
    return results
