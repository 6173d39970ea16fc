import itertools
from math import comb

import pytest

from multiedge.core import PathKind, parse_tree, validate
from multiedge.enumeration import (
    count_dyck,
    count_motzkin2,
    count_motzkin3,
    count_trees,
    gen_dyck,
    gen_motzkin2,
    gen_motzkin3,
    gen_trees,
)

from conftest import TABLE_1


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def brute_paths(length, alphabet, kind):
    return {
        "".join(w) for w in itertools.product(alphabet, repeat=length)
        if validate("".join(w), kind) is None
    }


def brute_trees(N):
    """Plain shapes times every way to spread N over their edges."""
    from multiedge.bijection import attach_multiplicities, dyck_to_tree
    from multiedge.core import DyckPath

    out = set()
    for n in range(1, N + 1):
        for w in brute_paths(2 * n, "UD", PathKind.DYCK):
            shape = dyck_to_tree(DyckPath(w))
            for mults in itertools.product(range(1, N + 1), repeat=n):
                if sum(mults) == N:
                    out.add(str(attach_multiplicities(shape, mults)))
    return out


def test_gen_trees_small():
    assert [str(t) for t in gen_trees(0)] == ["()"]
    assert [str(t) for t in gen_trees(1)] == ["(1())"]
    got = [str(t) for t in gen_trees(3)]
    assert len(got) == 10
    assert set(got) == {row[0] for row in TABLE_1}


def test_gen_trees_543():
    assert sum(1 for _ in gen_trees(6)) == 543


@pytest.mark.parametrize("N", range(1, 7))
def test_gen_trees_matches_brute_force(N):
    got = [str(t) for t in gen_trees(N)]
    assert len(got) == len(set(got))
    assert set(got) == brute_trees(N)


@pytest.mark.parametrize("N", range(0, 8))
def test_gen_trees_order_and_validity(N):
    texts = [str(t) for t in gen_trees(N)]
    assert texts == sorted(texts)
    for t in gen_trees(N):
        assert t.total_weight == N
        assert validate(t) is None
        assert parse_tree(str(t)) == t


def test_tree_order_with_multidigit_multiplicity():
    texts = [str(t) for t in gen_trees(10)]
    assert texts == sorted(texts)
    assert "(10())" in texts
    assert texts.index("(10())") < texts.index("(2(8()))")


def test_gen_motzkin3_small():
    assert [p.steps for p in gen_motzkin3(0)] == [""]
    assert {p.steps for p in gen_motzkin3(2)} == {row[3] for row in TABLE_1}
    assert sum(1 for _ in gen_motzkin3(5)) == 543


def test_gen_dyck_and_motzkin2_small():
    assert {p.steps for p in gen_dyck(2)} == {"UUDD", "UDUD"}
    assert [p.steps for p in gen_dyck(0)] == [""]
    assert {p.steps for p in gen_motzkin2(1)} == {"R", "G"}
    assert {p.steps for p in gen_motzkin2(2)} == {"UD", "RR", "RG", "GR", "GG"}


@pytest.mark.parametrize("gen, alphabet, kind, sizes", [
    (gen_motzkin3, "UDRGB", PathKind.MOTZKIN3, range(0, 7)),
    (gen_motzkin2, "UDRG", PathKind.MOTZKIN2, range(0, 8)),
])
def test_path_generators_match_brute_force(gen, alphabet, kind, sizes):
    for L in sizes:
        got = [p.steps for p in gen(L)]
        assert got == sorted(got)
        assert len(got) == len(set(got))
        assert set(got) == brute_paths(L, alphabet, kind)


@pytest.mark.parametrize("n", range(0, 7))
def test_gen_dyck_matches_brute_force(n):
    got = [p.steps for p in gen_dyck(n)]
    assert got == sorted(got)
    assert set(got) == brute_paths(2 * n, "UD", PathKind.DYCK)


@pytest.mark.parametrize("size", range(0, 10))
def test_stream_lengths_equal_counts(size):
    assert sum(1 for _ in gen_trees(size)) == count_trees(size)
    assert sum(1 for _ in gen_motzkin3(size)) == count_motzkin3(size)
    assert sum(1 for _ in gen_motzkin2(size)) == count_motzkin2(size)
    assert sum(1 for _ in gen_dyck(size)) == count_dyck(size)


@pytest.mark.parametrize("L", range(0, 15))
def test_path_counts_closed_forms(L):
    assert count_dyck(L) == catalan(L)
    two = sum(comb(L, 2 * k) * catalan(k) * 2 ** (L - 2 * k) for k in range(L // 2 + 1))
    assert count_motzkin2(L) == two == catalan(L + 1)


def test_count_values():
    assert count_trees(5) == 137
    assert count_motzkin3(0) == 1
    assert count_motzkin3(6) == 2219
    assert count_trees(10) == 171369


def test_trees_to_paths_count_law():
    for N in range(1, 13):
        assert count_trees(N) == count_motzkin3(N - 1)


def test_negative_size_rejected():
    with pytest.raises(ValueError):
        gen_trees(-1)
    with pytest.raises(ValueError):
        count_motzkin3(-2)
