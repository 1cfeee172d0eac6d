"""Lower bounds on embedding costs, closed-form bisection widths and Lindsey counts."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import networkx as nx
import numpy as np

from .constructions import AntiMatching
from .graph import MAX_ORDER, Graph, GuardError, complement, recognize


@dataclass(frozen=True)
class BoundReport:
    host_dim: int
    dilation_lb: int
    wirelength_lb: int
    congestion_lb_exact: Fraction
    congestion_lb_int: int
    bw_used: int
    bw_source: str  # "closed-form" | "oracle" | "user-supplied"


def has_perfect_antimatching(g: Graph) -> AntiMatching | None:
    """A perfect matching of the complement of ``g``, or ``None``."""
    if g.order % 2:
        return None
    co = nx.Graph()
    co.add_nodes_from(range(g.order))
    co.add_edges_from(complement(g).edges)
    mate = nx.max_weight_matching(co, maxcardinality=True)
    if 2 * len(mate) != g.order:
        return None
    return AntiMatching(tuple(sorted((min(a, b), max(a, b)) for a, b in mate)))


def _dim_of_order(order: int) -> int:
    n = order.bit_length() - 1
    if order < 1 or order != 1 << n:
        raise ValueError(f"order {order} is not a power of two")
    return n


def dilation_upper_from_antimatching(g: Graph) -> int:
    """Exact ``dil(G, Q_n)`` class for order ``2^n``: ``n - 1`` or ``n``.

    Returns ``n - 1`` when a perfect anti-matching exists (an upper bound),
    otherwise ``n`` (exact).
    """
    n = _dim_of_order(g.order)
    return n - 1 if has_perfect_antimatching(g) is not None else n


def dilation_lower_bound(n: int, max_degree: int) -> int:
    if max_degree < 0 or max_degree >= 1 << n:
        raise ValueError(f"degree {max_degree} impossible for a guest of order 2^{n}")
    k, covered = 0, 0  # covered = sum_{i=1}^{k} C(n, i)
    while covered < max_degree:
        k += 1
        covered += math.comb(n, k)
    return k


def ec_lower_bound(bw_guest: int, bw_host: int) -> tuple[Fraction, int]:
    if bw_host < 1:
        raise ValueError("host bisection width must be positive")
    exact = Fraction(bw_guest, bw_host)
    return exact, math.ceil(exact)


def wl_lower_bound(n: int, bw_guest: int) -> int:
    return n * bw_guest


def bw_balanced_multipartite(t: int, r: int) -> int:
    """Bisection width of the complete t-partite graph with parts of size 2r."""
    if t < 2 or r < 1:
        raise ValueError(f"need t >= 2 and r >= 1, got t={t}, r={r}")
    return r * r * t * (t - 1)


def bw_clique_product(p: Sequence[int]) -> int:
    """Bisection width of ``K_{2p_1} □ K_{p_2} □ ... □ K_{p_t}``.

    Requires ``2*p_1 <= p_2 <= ... <= p_t``.
    """
    p = [int(x) for x in p]
    if len(p) < 2 or p[0] < 1:
        raise ValueError("need at least two factors and p_1 >= 1")
    sizes = [2 * p[0]] + p[1:]
    if any(a > b for a, b in zip(sizes, sizes[1:])):
        raise ValueError(f"ordering 2p_1 <= p_2 <= ... violated by {p}")
    return p[0] ** 2 * math.prod(p[1:])


def bw_hypercube(n: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    return 1 << (n - 1)


def bw_folded_hypercube(n: int) -> int:
    if n < 2:
        raise ValueError("n must be >= 2")
    return 1 << n


def lindsey_lex_edge_count(p: Sequence[int], m: int) -> int:
    """Edges induced by the first ``m`` vertices of ``K_{p_1} □ ... □ K_{p_t}`` in lex order.

    Coordinate 1 is the most significant, so the first ``m`` vertices are the
    mixed-radix indices ``0..m-1``.
    """
    p = [int(x) for x in p]
    if not p or any(x < 1 for x in p):
        raise ValueError("clique sizes must be positive")
    if any(a > b for a, b in zip(p, p[1:])):
        raise ValueError(f"clique sizes must be ascending, got {p}")
    total = math.prod(p)
    if total > MAX_ORDER:
        raise GuardError(f"product order {total} exceeds the 2^20 vertex guard")
    if not 1 <= m <= total:
        raise ValueError(f"m must lie in [1, {total}], got {m}")
    idx = np.arange(m, dtype=np.int64)
    edges = 0
    stride = total
    for size in p:
        stride //= size
        # vertices agreeing everywhere except this coordinate share a key
        key = (idx // (stride * size)) * stride + idx % stride
        counts = np.bincount(key)
        edges += int((counts * (counts - 1) // 2).sum())
    return edges


def closed_form_bw(g: Graph) -> int | None:
    """Bisection width from a closed form when ``g`` is a recognized family."""
    found = recognize(g)
    if found is None:
        return None
    family, params = found
    if family == "hypercube":
        return bw_hypercube(params[0])
    if family == "folded":
        return bw_folded_hypercube(params[0])
    if family == "multipartite":
        size = params[0]
        if size % 2 == 0 and all(s == size for s in params):
            return bw_balanced_multipartite(len(params), size // 2)
        return None
    if family == "clique_product":
        if params[0] % 2 == 0:
            try:
                return bw_clique_product([params[0] // 2] + params[1:])
            except ValueError:
                return None
    return None


def bound_report(g: Graph, host_dim: int, bw: int | str | None = "auto") -> BoundReport:
    """Collect the dilation, wirelength and congestion lower bounds for ``g`` in ``Q_host_dim``.

    ``bw`` is an integer (user-supplied) or ``"auto"``: closed form for a
    recognized family, otherwise the exhaustive oracle.
    """
    if g.order != 1 << host_dim:
        raise ValueError(f"bounds need a guest of order 2^{host_dim}, got {g.order}")
    if bw is None or bw == "auto":
        value = closed_form_bw(g)
        source = "closed-form"
        if value is None:
            from .oracle import oracle_bisection_width

            value = oracle_bisection_width(g).value
            source = "oracle"
    else:
        value, source = int(bw), "user-supplied"
        if value < 0:
            raise ValueError("bisection width must be non-negative")
    exact, ceiling = ec_lower_bound(value, bw_hypercube(host_dim)) if host_dim >= 1 else (Fraction(0), 0)
    return BoundReport(
        host_dim=host_dim,
        dilation_lb=dilation_lower_bound(host_dim, g.max_degree()),
        wirelength_lb=wl_lower_bound(host_dim, value),
        congestion_lb_exact=exact,
        congestion_lb_int=ceiling,
        bw_used=value,
        bw_source=source,
    )
