import pytest
from hypothesis import strategies as st

from wellcovered.graph import Graph


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.from_edges(n, chosen)


@st.composite
def graph_and_subset(draw, min_n=1, max_n=7):
    G = draw(graphs(min_n, max_n))
    S = draw(st.integers(0, (1 << G.n) - 1))
    return G, S


@pytest.fixture(scope="session")
def corpus6():
    from wellcovered.corpus import corpus

    return list(corpus(range(1, 7)))


@pytest.fixture(scope="session")
def corpus7():
    from wellcovered.corpus import corpus

    return list(corpus(range(1, 8)))


ACCEPTANCE: list[tuple[str, bool, str]] = []


def record(criterion: str, ok: bool, detail: str) -> None:
    ACCEPTANCE.append((criterion, ok, detail))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, ok, detail in ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {criterion:<28} {detail}")
