"""Closed-form versus construction and oracle versus formula checks.

Checks are grouped by scope and reported in a fixed order. A guard violation
inside a check marks that check failed and the run continues.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterator

import numpy as np

from .bounds import (
    bw_balanced_multipartite,
    bw_clique_product,
    dilation_lower_bound,
    dilation_upper_from_antimatching,
    has_perfect_antimatching,
    lindsey_lex_edge_count,
)
from .constructions import (
    AntiMatching,
    antimatching_embedding,
    clique_product_embedding,
    folded_identity_embedding,
    folded_low_dilation_embedding,
    multipartite_embedding,
    multipartite_labels,
    wheel_gray_embedding,
)
from .graph import (
    Graph,
    clique_product,
    complete_graph,
    complete_multipartite,
    cycle,
    folded_hypercube,
    hypercube,
    popcount,
    wheel,
)
from .metrics import Embedding, dilation, edge_dilations, evaluate, wirelength
from .oracle import oracle_bisection_width, oracle_dilation, oracle_lindsey_max, oracle_wirelength

SCOPES = (
    "multipartite",
    "folded",
    "wheel",
    "clique-product",
    "bisection",
    "antimatching",
    "bounds",
    "congestion",
    "lindsey",
    "dilation",
    "identity",
)

# older scope names kept so existing invocations keep working
SCOPE_ALIASES = {"theorem3": "antimatching"}

CORPUS_SIZE = 200
LINDSEY_CASES = ((2, 2), (2, 4), (3, 3), (2, 2, 3))


@dataclass
class Check:
    id: str
    passed: bool
    detail: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"id": self.id, "passed": self.passed, "detail": self.detail}


def random_graphs(order: int, count: int, seed: int) -> list[Graph]:
    """Seeded corpus for the sampled sweeps.

    Uses numpy's PCG64 bit generator. Graph ``k`` draws a density
    ``d ~ U[0.3, 0.95)`` and then keeps each vertex pair, in ascending
    lexicographic order, with probability ``d``.
    """
    rng = np.random.Generator(np.random.PCG64(seed))
    pairs = list(combinations(range(order), 2))
    graphs = []
    for k in range(count):
        density = rng.uniform(0.3, 0.95)
        keep = rng.random(len(pairs)) < density
        edges = [e for e, kept in zip(pairs, keep) if kept]
        graphs.append(Graph.from_edges(order, edges, f"random_{seed}_{k}"))
    return graphs


def all_graphs(order: int) -> list[Graph]:
    pairs = list(combinations(range(order), 2))
    return [
        Graph.from_edges(order, [e for i, e in enumerate(pairs) if mask >> i & 1], f"all_{order}_{mask}")
        for mask in range(1 << len(pairs))
    ]


def structured_graphs(n: int) -> list[Graph]:
    N = 1 << n
    out = [complete_graph(N), hypercube(n) if n >= 1 else complete_graph(1)]
    if N >= 3:
        out.append(cycle(N))
    if N >= 4:
        out += [wheel(N), complete_multipartite([N // 2, N // 2])]
        out.append(complete_multipartite([2] * (N // 2)))
    return out


def sweep_corpus(n: int, seed: int) -> list[Graph]:
    """Order-``2^n`` graphs: exhaustive for ``n <= 2``, seeded sample plus structured set otherwise."""
    if n <= 2:
        return all_graphs(1 << n)
    return random_graphs(1 << n, CORPUS_SIZE, seed) + structured_graphs(n)


class Verifier:
    def __init__(self, max_n: int, seed: int = 0):
        if max_n < 1:
            raise ValueError("max_n must be >= 1")
        self.max_n = max_n
        self.seed = seed
        self._corpus: list[tuple[Graph, dict]] | None = None
        self.embeddings: list[tuple[str, Embedding]] = []

    # -- helpers -------------------------------------------------------------

    def _track(self, label: str, e: Embedding) -> Embedding:
        self.embeddings.append((label, e))
        return e

    def _corpus_results(self) -> list[tuple[Graph, dict]]:
        if self._corpus is None:
            n = min(self.max_n, 3)
            rows = []
            for g in sweep_corpus(n, self.seed):
                rows.append(
                    (
                        g,
                        {
                            "n": n,
                            "dil": oracle_dilation(g, n).value,
                            "wl": oracle_wirelength(g, n).value,
                            "bw": oracle_bisection_width(g).value,
                            "am": has_perfect_antimatching(g),
                        },
                    )
                )
            self._corpus = rows
        return self._corpus

    # -- scopes ---------------------------------------------------------------

    def multipartite(self) -> Iterator[Check]:
        for n in range(2, min(self.max_n, 8) + 1):
            for p in range(1, n):
                e = self._track(f"multipartite n={n} p={p}", multipartite_embedding(n, p))
                want = n * 2 ** (2 * n - p - 2) * (2**p - 1)
                got = wirelength(e)
                yield Check(f"multipartite.wirelength.n{n}.p{p}", got == want, {"expected": want, "got": got})
                part_want = n * 2 ** (2 * (n - 1 - p))
                sums = [sum(popcount(x ^ y) for x, y in combinations(V, 2)) for V in multipartite_labels(n, p)]
                yield Check(
                    f"multipartite.part-distance.n{n}.p{p}",
                    all(s == part_want for s in sums),
                    {"expected": part_want, "got": sorted(set(sums))},
                )

    def folded(self) -> Iterator[Check]:
        for n in range(2, min(self.max_n, 12) + 1):
            e = self._track(f"folded n={n}", folded_identity_embedding(n))
            got, want = wirelength(e), n * 2**n
            yield Check(f"folded.wirelength.n{n}", got == want, {"expected": want, "got": got})
            low = self._track(f"folded-low n={n}", folded_low_dilation_embedding(n))
            yield Check(f"folded.dilation2.n{n}", dilation(low) == 2, {"got": dilation(low)})

    def wheel(self) -> Iterator[Check]:
        for n in range(2, min(self.max_n, 12) + 1):
            e = self._track(f"wheel n={n}", wheel_gray_embedding(n))
            got, want = wirelength(e), (n + 2) * 2 ** (n - 1)
            per = edge_dilations(e)
            long_rim = [uv for uv, d in per.items() if uv[0] != 0 and d == 2]
            other_rim = [d for uv, d in per.items() if uv[0] != 0 and d != 1 and d != 2]
            yield Check(
                f"wheel.wirelength.n{n}",
                got == want and len(long_rim) == 1 and not other_rim,
                {"expected": want, "got": got, "rim_edges_of_dilation_2": len(long_rim)},
            )
        for n in range(2, min(self.max_n, 3) + 1):
            c = oracle_wirelength(wheel(1 << n), n)
            want = (n + 2) * 2 ** (n - 1)
            yield Check(f"wheel.oracle.n{n}", c.value == want, {"expected": want, "got": c.value, "search_space": c.search_space})

    def clique_product(self) -> Iterator[Check]:
        for n in range(2, min(self.max_n, 8) + 1, 2):
            e = self._track(f"clique-product n={n}", clique_product_embedding(n))
            got, want = wirelength(e), n * 2 ** (3 * n // 2 - 2)
            yield Check(f"clique-product.wirelength.n{n}", got == want, {"expected": want, "got": got})
        if self.max_n >= 2:
            c = oracle_wirelength(clique_product([2, 2]), 2)
            yield Check("clique-product.oracle.n2", c.value == 4, {"expected": 4, "got": c.value})

    def bisection(self) -> Iterator[Check]:
        cap = 1 << self.max_n
        for t, r in ((2, 1), (2, 2), (3, 1), (4, 1), (4, 2)):
            if 2 * r * t > cap:
                continue
            g = complete_multipartite([2 * r] * t)
            got, want = oracle_bisection_width(g).value, bw_balanced_multipartite(t, r)
            yield Check(f"bisection.multipartite.t{t}.r{r}", got == want, {"expected": want, "got": got})
        for p in ((1, 2), (2, 4)):
            sizes = [2 * p[0], *p[1:]]
            if math.prod(sizes) > cap:
                continue
            got, want = oracle_bisection_width(clique_product(sizes)).value, bw_clique_product(p)
            yield Check(f"bisection.clique-product.{'-'.join(map(str, p))}", got == want, {"expected": want, "got": got})
        for n in range(1, min(self.max_n, 4) + 1):
            got = oracle_bisection_width(hypercube(n)).value
            yield Check(f"bisection.hypercube.n{n}", got == 1 << (n - 1), {"expected": 1 << (n - 1), "got": got})
        for n in range(2, min(self.max_n, 4) + 1):
            got = oracle_bisection_width(folded_hypercube(n)).value
            yield Check(f"bisection.folded.n{n}", got == 1 << n, {"expected": 1 << n, "got": got})

    def antimatching(self) -> Iterator[Check]:
        rows = self._corpus_results()
        bad = [g.name for g, r in rows if (r["dil"] <= r["n"] - 1) != (r["am"] is not None)]
        with_am = sum(1 for _, r in rows if r["am"] is not None)
        yield Check(
            "antimatching.dilation-equivalence",
            not bad,
            {"graphs": len(rows), "with_antimatching": with_am, "disagreements": bad},
        )
        bad_emb = []
        for g, r in rows:
            if r["am"] is not None and g.size:
                e = antimatching_embedding(g, r["am"])
                if dilation(e) > r["n"] - 1:
                    bad_emb.append(g.name)
        yield Check("antimatching.construction-dilation", not bad_emb, {"violations": bad_emb})

    def bounds(self) -> Iterator[Check]:
        rows = self._corpus_results()
        dil_bad = [g.name for g, r in rows if dilation_lower_bound(r["n"], g.max_degree()) > r["dil"]]
        wl_bad = [g.name for g, r in rows if r["n"] * r["bw"] > r["wl"]]
        yield Check("bounds.dilation-lower-bound", not dil_bad, {"graphs": len(rows), "violations": dil_bad})
        yield Check("bounds.wirelength-lower-bound", not wl_bad, {"graphs": len(rows), "violations": wl_bad})

    def congestion(self) -> Iterator[Check]:
        cases: list[tuple[str, Embedding, int, int | None]] = []
        for n in range(2, min(self.max_n, 6) + 1):
            cases.append((f"folded.n{n}", folded_identity_embedding(n), 1 << n, 2))
        if self.max_n >= 4:
            g = complete_multipartite([4, 4, 4, 4])
            am = AntiMatching.of((2 * k, 2 * k + 1) for k in range(8))
            cases.append(("K4444.antimatching", antimatching_embedding(g, am), bw_balanced_multipartite(4, 2), None))
            cases.append(("K4444.multipartite", multipartite_embedding(4, 2), bw_balanced_multipartite(4, 2), None))
        for label, e, bw, expected_bound in cases:
            self._track(f"congestion {label}", e)
            n = e.host_dim
            bound = math.ceil(bw / 2 ** (n - 1))
            got = evaluate(e).congestion
            ok = got >= bound and (expected_bound is None or bound == expected_bound)
            yield Check(f"congestion.{label}", ok, {"bound": bound, "congestion": got})

    def lindsey(self) -> Iterator[Check]:
        for p in LINDSEY_CASES:
            total = math.prod(p)
            bad = [m for m in range(1, total + 1) if oracle_lindsey_max(p, m) != lindsey_lex_edge_count(sorted(p), m)]
            yield Check(f"lindsey.{'-'.join(map(str, p))}", not bad, {"m_checked": total, "mismatches": bad})

    def dilation(self) -> Iterator[Check]:
        if self.max_n < 4:
            return
        g = complete_multipartite([4, 4, 4, 4])
        am = AntiMatching.of((2 * k, 2 * k + 1) for k in range(8))
        e = self._track("antimatching K4444", antimatching_embedding(g, am))
        yield Check("dilation.K4444.antimatching", dilation(e) == 3, {"expected": 3, "got": dilation(e)})
        for label, guest, want in (
            ("K16", complete_graph(16), 4),
            ("W16", wheel(16), 4),
            ("K4444", g, 3),
        ):
            got = dilation_upper_from_antimatching(guest)
            yield Check(f"dilation.upper.{label}", got == want, {"expected": want, "got": got})

    def identity(self) -> Iterator[Check]:
        bad = []
        for label, e in self.embeddings:
            r = evaluate(e)
            if not (sum(r.per_edge_dilation.values()) == r.wirelength == sum(r.per_host_edge_congestion.values())):
                bad.append(label)
        yield Check("identity.wirelength-sums", not bad, {"embeddings": len(self.embeddings), "violations": bad})


def _scope_method(v: Verifier, scope: str) -> Callable[[], Iterator[Check]]:
    return getattr(v, scope.replace("-", "_"))


def run(scope: str = "all", max_n: int = 4, seed: int = 0) -> dict:
    """Run one scope (or all) and return the machine-readable report."""
    scope = SCOPE_ALIASES.get(scope, scope)
    if scope != "all" and scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}; choose from all, {', '.join(SCOPES)}")
    v = Verifier(max_n, seed)
    selected = list(SCOPES) if scope == "all" else [scope]
    if "identity" in selected and scope == "identity":
        # nothing else has produced embeddings yet; build the constructions first
        for other in ("multipartite", "folded", "wheel", "clique-product", "congestion", "dilation"):
            for _ in _scope_method(v, other)():
                pass
    checks: list[Check] = []
    for s in selected:
        try:
            checks.extend(_scope_method(v, s)())
        except ValueError as exc:  # includes GuardError
            checks.append(Check(f"{s}.error", False, {"error": str(exc)}))
    return {
        "scope": scope,
        "max_n": max_n,
        "seed": seed,
        "passed": all(c.passed for c in checks),
        "checks": [c.as_dict() for c in checks],
    }
