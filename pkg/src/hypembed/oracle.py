"""Exhaustive ground truth for tiny instances.

Every search here is exact. Guards are hard errors; nothing is truncated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Sequence

from .graph import Graph, GuardError, clique_product, popcount
from .metrics import apply_perm

MAX_INJECTION_CANDIDATES = 10**7
MAX_BISECTION_ORDER = 24
MAX_LINDSEY_ORDER = 12


@dataclass(frozen=True)
class OracleCertificate:
    quantity: str  # "dilation" | "wirelength" | "bisection_width"
    value: int
    witness: tuple
    search_space: int


def _injection_count(host_order: int, guest_order: int, symmetry: bool, n: int) -> float:
    count = math.perm(host_order, guest_order)
    if symmetry and guest_order:
        count /= host_order * math.factorial(n)
    return count


def _embedding_search(g: Graph, n: int, objective: str, symmetry: bool) -> OracleCertificate:
    if n < 0:
        raise ValueError("host dimension must be non-negative")
    host = 1 << n
    N = g.order
    if N > host:
        raise ValueError(f"guest of order {N} does not fit in Q_{n}")
    if _injection_count(host, N, symmetry, n) > MAX_INJECTION_CANDIDATES:
        raise GuardError(
            f"exhaustive {objective} search for order {N} into Q_{n} exceeds the "
            f"{MAX_INJECTION_CANDIDATES:.0e} candidate guard"
        )

    earlier = [[u for u in g.neighbors(v) if u < v] for v in range(N)]
    # edges whose later endpoint is still unplaced once vertices 0..v are placed
    pending = [sum(1 for u, w in g.edges if w > v) for v in range(N)]
    perms = [p for p in permutations(range(n)) if list(p) != list(range(n))] if symmetry else []
    use_max = objective == "dilation"

    image = [0] * N
    best_cost = math.inf
    best_map: tuple[int, ...] | None = None
    nodes = 0

    def search(v: int, used: int, cost: int, live: tuple) -> None:
        nonlocal best_cost, best_map, nodes
        nodes += 1
        if v == N:
            if cost < best_cost:
                best_cost, best_map = cost, tuple(image)
            return
        candidates = (0,) if symmetry and v == 0 else range(host)
        for h in candidates:
            if used >> h & 1:
                continue
            dists = [popcount(h ^ image[u]) for u in earlier[v]]
            if use_max:
                c = max([cost, *dists])
                bound = max(c, 1) if pending[v] else c
            else:
                c = cost + sum(dists)
                bound = c + pending[v]
            if bound >= best_cost:
                continue
            still_live = []
            canonical = True
            for p in live:
                ph = apply_perm(h, p)
                if ph < h:
                    canonical = False
                    break
                if ph == h:
                    still_live.append(p)
            if not canonical:
                continue
            image[v] = h
            search(v + 1, used | 1 << h, c, tuple(still_live))

    search(0, 0, 0, tuple(perms))
    return OracleCertificate(objective, int(best_cost), best_map, nodes)


def oracle_dilation(g: Graph, n: int, symmetry: bool = True) -> OracleCertificate:
    """Minimum dilation of ``g`` into ``Q_n`` over all injections.

    With ``symmetry`` the search fixes vertex 0 on hypercube vertex 0 and
    keeps only maps that are lexicographically minimal under coordinate
    permutations. The witness is the lexicographically smallest optimal map.
    """
    return _embedding_search(g, n, "dilation", symmetry)


def oracle_wirelength(g: Graph, n: int, symmetry: bool = True) -> OracleCertificate:
    return _embedding_search(g, n, "wirelength", symmetry)


def oracle_bisection_width(g: Graph) -> OracleCertificate:
    """Exact bisection width by branch and bound over sides containing vertex 0.

    The witness is ``(A, B)`` with ``0 in A``; ties go to the lexicographically
    smallest sorted ``A``.
    """
    N = g.order
    if N > MAX_BISECTION_ORDER:
        raise GuardError(f"bisection oracle is limited to order {MAX_BISECTION_ORDER}, got {N}")
    if N < 2:
        return OracleCertificate("bisection_width", 0, (tuple(range(N)), ()), 1)
    sizes = {N // 2, (N + 1) // 2}
    max_a = max(sizes)
    adj = g.adj
    best_cost = math.inf
    best_side: tuple[int, ...] | None = None
    nodes = 0

    def search(v: int, a_mask: int, b_mask: int, na: int, cut: int) -> None:
        nonlocal best_cost, best_side, nodes
        nodes += 1
        if v == N:
            if na in sizes:
                side = tuple(i for i in range(N) if a_mask >> i & 1)
                if cut < best_cost or (cut == best_cost and side < best_side):
                    best_cost, best_side = cut, side
            return
        nb = v - na
        if na < max_a:
            c = cut + popcount(adj[v] & b_mask)
            if c <= best_cost:
                search(v + 1, a_mask | 1 << v, b_mask, na + 1, c)
        if nb < max_a and v > 0:
            c = cut + popcount(adj[v] & a_mask)
            if c <= best_cost:
                search(v + 1, a_mask, b_mask | 1 << v, na, c)

    search(0, 0, 0, 0, 0)
    a = best_side
    b = tuple(i for i in range(N) if i not in set(a))
    return OracleCertificate("bisection_width", int(best_cost), (a, b), nodes)


def oracle_lindsey_max(p: Sequence[int], m: int) -> int:
    """Maximum number of edges induced by ``m`` vertices of ``K_{p_1} □ ... □ K_{p_t}``."""
    p = [int(x) for x in p]
    total = math.prod(p)
    if total > MAX_LINDSEY_ORDER:
        raise GuardError(f"Lindsey oracle is limited to {MAX_LINDSEY_ORDER} vertices, got {total}")
    if not 0 <= m <= total:
        raise ValueError(f"m must lie in [0, {total}], got {m}")
    if m < 2:
        return 0
    g = clique_product(p)
    best = 0
    for subset in combinations(range(total), m):
        mask = 0
        for v in subset:
            mask |= 1 << v
        best = max(best, g.induced_edge_count(mask))
    return best


def cut_of(g: Graph, side: Sequence[int]) -> int:
    mask = 0
    for v in side:
        mask |= 1 << v
    return g.cut_size(mask)
