import random

import pytest
from hypothesis import strategies as st

from multiedge.core import MultiEdgeTree

# (tree, Dyck path, 2-Motzkin path, 3-Motzkin path) for every tree with 3 edges,
# read off the published worked example
TABLE_1 = [
    ("(1(1(1())))", "UUUDDD", "UD", "UD"),
    ("(2(1()))", "UUDD", "R", "BR"),
    ("(1(2()))", "UUDD", "R", "RB"),
    ("(3())", "UD", "", "BB"),
    ("(1(1())1())", "UUDDUD", "RG", "RG"),
    ("(2()1())", "UDUD", "G", "BG"),
    ("(1()2())", "UDUD", "G", "GB"),
    ("(1()1(1()))", "UDUUDD", "GR", "GR"),
    ("(1()1()1())", "UDUDUD", "GG", "GG"),
    ("(1(1()1()))", "UUDUDD", "RR", "RR"),
]


def nested_to_tree(node):
    """[(mult, [(mult, [...]), ...]), ...] -> MultiEdgeTree."""
    return MultiEdgeTree(tuple((a, nested_to_tree(kids)) for a, kids in node))


def random_tree(rng: random.Random, weight: int) -> MultiEdgeTree:
    """Tree of exactly ``weight`` edges (with multiplicity) grown by random attachment."""
    n = rng.randint(1, weight)
    # random composition of weight into n positive parts
    cuts = sorted(rng.sample(range(1, weight), n - 1))
    mults = [b - a for a, b in zip([0] + cuts, cuts + [weight])]
    root: list = []
    nodes = [root]
    for a in mults:
        parent = rng.choice(nodes)
        kids: list = []
        parent.append((a, kids))
        nodes.append(kids)
    return nested_to_tree(root)


def seeded_trees(count=1000, seed=20260418, max_weight=60):
    rng = random.Random(seed)
    return [random_tree(rng, rng.randint(10, max_weight)) for _ in range(count)]


@pytest.fixture(scope="session")
def random_trees():
    return seeded_trees()


def trees_strategy(max_leaves=12, max_mult=5):
    return st.recursive(
        st.just(MultiEdgeTree()),
        lambda sub: st.lists(st.tuples(st.integers(1, max_mult), sub), max_size=4).map(
            lambda kids: MultiEdgeTree(tuple(kids))),
        max_leaves=max_leaves,
    )


# one summary line per acceptance criterion
_ACCEPTANCE: list[tuple[int, str, str]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _ACCEPTANCE.append((mark.args[0], mark.args[1], "PASS" if report.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, status in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"[{status}] {number}. {title}")
