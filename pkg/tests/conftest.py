from itertools import combinations

from hypothesis import strategies as st

from hypembed.graph import Graph


@st.composite
def graphs(draw, min_order=0, max_order=9):
    order = draw(st.integers(min_order, max_order))
    pairs = list(combinations(range(order), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(order, [e for e, k in zip(pairs, keep) if k])


def relabel(g, perm):
    """Edge set of ``g`` after sending vertex ``v`` to ``perm[v]``."""
    return sorted(tuple(sorted((perm[u], perm[v]))) for u, v in g.edges)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
