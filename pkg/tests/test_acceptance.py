"""Exit criteria. Each test prints one PASS/FAIL line in the terminal summary."""

import time
from itertools import combinations

import pytest

from conftest import ACCEPTANCE_LINES
from hypembed.bounds import (
    bw_balanced_multipartite,
    bw_clique_product,
    dilation_lower_bound,
    dilation_upper_from_antimatching,
    has_perfect_antimatching,
    lindsey_lex_edge_count,
)
from hypembed.constructions import (
    AntiMatching,
    antimatching_embedding,
    clique_product_embedding,
    folded_identity_embedding,
    folded_low_dilation_embedding,
    multipartite_embedding,
    multipartite_labels,
    wheel_gray_embedding,
)
from hypembed.graph import (
    clique_product,
    complete_graph,
    complete_multipartite,
    folded_hypercube,
    hypercube,
    wheel,
)
from hypembed.metrics import dilation, edge_dilations, evaluate, wirelength
from hypembed.oracle import oracle_bisection_width, oracle_dilation, oracle_lindsey_max, oracle_wirelength
from hypembed.verify import random_graphs, structured_graphs

PRODUCED = []


def produced(label, e):
    PRODUCED.append((label, e))
    return e


class Criterion:
    def __init__(self, number, title, budget=None):
        self.number, self.title, self.budget = number, title, budget
        self.failures = []

    def check(self, ok, what):
        if not ok:
            self.failures.append(what)

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        if self.budget is not None and elapsed >= self.budget:
            self.failures.append(f"took {elapsed:.1f}s, budget {self.budget}s")
        ok = exc_type is None and not self.failures
        detail = "" if ok else f"  <- {self.failures[:3] if self.failures else exc}"
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  [{self.number:2d}] {self.title} ({elapsed:.2f}s){detail}")
        if exc_type is None:
            assert not self.failures, self.failures
        return False


@pytest.fixture(scope="module")
def corpus():
    """200 seeded order-8 graphs plus the structured set, with their exact optima."""
    start = time.perf_counter()
    graphs = random_graphs(8, 200, seed=0) + structured_graphs(3)
    rows = []
    for g in graphs:
        rows.append(
            {
                "graph": g,
                "dil": oracle_dilation(g, 3).value,
                "wl": oracle_wirelength(g, 3).value,
                "bw": oracle_bisection_width(g).value,
                "am": has_perfect_antimatching(g),
            }
        )
    corpus_seconds[0] = time.perf_counter() - start
    return rows


corpus_seconds = [0.0]


def test_01_multipartite_wirelength():
    with Criterion(1, "multipartite WL = n*2^(2n-p-2)*(2^p-1), 2<=n<=8", budget=60) as c:
        for n in range(2, 9):
            for p in range(1, n):
                e = produced(f"multipartite {n},{p}", multipartite_embedding(n, p))
                want = n * 2 ** (2 * n - p - 2) * (2**p - 1)
                c.check(wirelength(e) == want, (n, p, wirelength(e), want))


def test_02_part_distance_sums():
    with Criterion(2, "per-part distance sum = n*2^(2(n-1-p))") as c:
        for n in range(2, 9):
            for p in range(1, n):
                want = n * 2 ** (2 * (n - 1 - p))
                for i, part in enumerate(multipartite_labels(n, p)):
                    got = sum(bin(x ^ y).count("1") for x, y in combinations(part, 2))
                    c.check(got == want, (n, p, i, got, want))


def test_03_folded():
    with Criterion(3, "folded WL = n*2^n, 2<=n<=12", budget=10) as c:
        for n in range(2, 13):
            e = produced(f"folded {n}", folded_identity_embedding(n))
            c.check(wirelength(e) == n * 2**n, (n, wirelength(e)))


def test_04_wheel():
    with Criterion(4, "wheel WL = (n+2)*2^(n-1), one rim edge of dilation 2, oracle at n<=3", budget=60) as c:
        for n in range(2, 13):
            e = produced(f"wheel {n}", wheel_gray_embedding(n))
            c.check(wirelength(e) == (n + 2) * 2 ** (n - 1), (n, wirelength(e)))
            rim = [d for (u, _), d in edge_dilations(e).items() if u != 0]
            c.check(rim.count(2) == 1 and rim.count(1) == len(rim) - 1, (n, "rim profile"))
        c.check(oracle_wirelength(wheel(8), 3).value == 20, "oracle W_8")
        c.check(oracle_wirelength(wheel(4), 2).value == 8, "oracle W_4")


def test_05_clique_product():
    with Criterion(5, "clique product WL = n*2^(3n/2-2), oracle at n=2") as c:
        for n in (2, 4, 6, 8):
            e = produced(f"clique {n}", clique_product_embedding(n))
            c.check(wirelength(e) == n * 2 ** (3 * n // 2 - 2), (n, wirelength(e)))
        c.check(oracle_wirelength(clique_product([2, 2]), 2).value == 4, "oracle n=2")


def test_06_bisection_closed_forms():
    with Criterion(6, "bisection closed forms match the oracle", budget=300) as c:
        for t, r in ((2, 1), (2, 2), (3, 1), (4, 1), (4, 2)):
            got = oracle_bisection_width(complete_multipartite([2 * r] * t)).value
            c.check(got == bw_balanced_multipartite(t, r), ("multipartite", t, r, got))
        for p in ((1, 2), (2, 4)):
            got = oracle_bisection_width(clique_product([2 * p[0], p[1]])).value
            c.check(got == bw_clique_product(p), ("clique", p, got))
        for n in range(1, 5):
            c.check(oracle_bisection_width(hypercube(n)).value == 2 ** (n - 1), ("Q", n))
        for n in range(2, 5):
            c.check(oracle_bisection_width(folded_hypercube(n)).value == 2**n, ("FQ", n))


def test_07_antimatching_equivalence(corpus):
    with Criterion(7, "dil(G,Q_3) <= 2 iff perfect anti-matching, 206 graphs", budget=600) as c:
        c.start -= corpus_seconds[0]  # oracle sweep counts against this budget
        names = {row["graph"].name for row in corpus}
        c.check({"K_8", "C_8", "Q_3", "W_8", "K_{4,4}", "K_{2,2,2,2}"} <= names, "structured set")
        c.check(len(corpus) == 206, len(corpus))
        for row in corpus:
            c.check((row["dil"] <= 2) == (row["am"] is not None), row["graph"].name)
            if row["am"] is not None:
                e = produced(row["graph"].name, antimatching_embedding(row["graph"], row["am"]))
                c.check(dilation(e) <= 2, ("construction", row["graph"].name))


def test_08_bound_soundness(corpus):
    with Criterion(8, "dilation and wirelength lower bounds hold on the corpus") as c:
        for row in corpus:
            g = row["graph"]
            c.check(dilation_lower_bound(3, g.max_degree()) <= row["dil"], ("dil", g.name))
            c.check(3 * row["bw"] <= row["wl"], ("wl", g.name))


def test_09_congestion_bound():
    with Criterion(9, "canonical congestion >= ceil(BW/2^(n-1))") as c:
        for n in range(2, 7):
            e = produced(f"folded {n}", folded_identity_embedding(n))
            bound = -(-(2**n) // 2 ** (n - 1))
            c.check(bound == 2, ("bound", n))
            c.check(evaluate(e).congestion >= bound, ("FQ", n))
        g = complete_multipartite([4, 4, 4, 4])
        bound = -(-bw_balanced_multipartite(4, 2) // 8)
        am = AntiMatching.of((2 * k, 2 * k + 1) for k in range(8))
        for label, e in (("antimatching", antimatching_embedding(g, am)), ("multipartite", multipartite_embedding(4, 2))):
            produced(label, e)
            c.check(evaluate(e).congestion >= bound, (label, evaluate(e).congestion, bound))


def test_10_lindsey():
    with Criterion(10, "lex prefix maximizes induced edges", budget=60) as c:
        for p in ((2, 2), (2, 4), (3, 3), (2, 2, 3)):
            total = 1
            for x in p:
                total *= x
            for m in range(1, total + 1):
                c.check(oracle_lindsey_max(p, m) == lindsey_lex_edge_count(sorted(p), m), (p, m))


def test_11_dilation_values():
    with Criterion(11, "dilation values for K_{4,4,4,4}, K_16, W_16") as c:
        g = complete_multipartite([4, 4, 4, 4])
        e = produced("K4444", antimatching_embedding(g, AntiMatching.of((2 * k, 2 * k + 1) for k in range(8))))
        c.check(dilation(e) == 3, dilation(e))
        c.check(dilation_upper_from_antimatching(complete_graph(16)) == 4, "K_16")
        c.check(dilation_upper_from_antimatching(wheel(16)) == 4, "W_16")
        c.check(dilation_upper_from_antimatching(g) == 3, "K_{4,4,4,4}")


def test_12_wirelength_identity():
    with Criterion(12, "sum of dilations = sum of congestions = wirelength") as c:
        extra = [folded_low_dilation_embedding(n) for n in range(2, 9)]
        everything = PRODUCED + [("extra", e) for e in extra]
        if len(PRODUCED) < 10:
            everything += [(f"mp {n}", multipartite_embedding(n, 1)) for n in range(2, 7)]
            everything += [(f"wheel {n}", wheel_gray_embedding(n)) for n in range(2, 9)]
        for label, e in everything:
            r = evaluate(e)
            c.check(
                sum(r.per_edge_dilation.values()) == r.wirelength == sum(r.per_host_edge_congestion.values()),
                label,
            )
