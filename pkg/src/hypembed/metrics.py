"""Embeddings into hypercubes and their dilation, wirelength and congestion."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, HypercubeVertex, popcount

ROUTING_LABEL = "canonical-routing congestion (e-cube, ascending bit order)"


@dataclass(frozen=True)
class Embedding:
    """Injective placement of ``guest`` vertices on ``Q_host_dim``.

    ``map[v]`` is the integer label of the hypercube vertex hosting guest
    vertex ``v``. Paths are implied by :func:`ecube_route`.
    """

    guest: Graph
    host_dim: int
    map: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "map", tuple(int(x) for x in self.map))
        if self.host_dim < 0:
            raise ValueError("host dimension must be non-negative")
        if len(self.map) != self.guest.order:
            raise ValueError(f"map has {len(self.map)} entries for a guest of order {self.guest.order}")
        if self.guest.order > 1 << self.host_dim:
            raise ValueError(f"guest of order {self.guest.order} does not fit in Q_{self.host_dim}")
        bound = 1 << self.host_dim
        if any(not 0 <= x < bound for x in self.map):
            raise ValueError(f"image outside Q_{self.host_dim}")
        if len(set(self.map)) != len(self.map):
            raise ValueError("embedding map is not injective")


@dataclass(frozen=True)
class MetricsReport:
    per_edge_dilation: dict[tuple[int, int], int]
    dilation: int
    wirelength: int
    per_host_edge_congestion: dict[tuple[int, int], int]
    congestion: int


def ecube_route(x: HypercubeVertex, y: HypercubeVertex) -> list[HypercubeVertex]:
    """Shortest path from ``x`` to ``y`` correcting differing bits lowest first."""
    if x.dim != y.dim:
        raise ValueError(f"dimension mismatch: {x.dim} vs {y.dim}")
    return [HypercubeVertex(b, x.dim) for b in _route_bits(x.bits, y.bits)]


def _route_bits(a: int, b: int) -> list[int]:
    path = [a]
    diff = a ^ b
    while diff:
        low = diff & -diff
        a ^= low
        diff ^= low
        path.append(a)
    return path


def edge_dilations(e: Embedding) -> dict[tuple[int, int], int]:
    m = e.map
    return {(u, v): popcount(m[u] ^ m[v]) for u, v in e.guest.edges}


def dilation(e: Embedding) -> int:
    m = e.map
    return max((popcount(m[u] ^ m[v]) for u, v in e.guest.edges), default=0)


def wirelength(e: Embedding) -> int:
    m = e.map
    return sum(popcount(m[u] ^ m[v]) for u, v in e.guest.edges)


def edge_congestion(e: Embedding) -> tuple[dict[tuple[int, int], int], int]:
    """Load of each host edge under e-cube routing; only nonzero loads are kept."""
    load: Counter[tuple[int, int]] = Counter()
    m = e.map
    for u, v in e.guest.edges:
        a, diff = m[u], m[u] ^ m[v]
        while diff:
            low = diff & -diff
            b = a ^ low
            load[(a, b) if a < b else (b, a)] += 1
            a = b
            diff ^= low
    table = dict(sorted(load.items()))
    return table, max(table.values(), default=0)


def evaluate(e: Embedding) -> MetricsReport:
    per_edge = edge_dilations(e)
    table, worst = edge_congestion(e)
    return MetricsReport(
        per_edge_dilation=per_edge,
        dilation=max(per_edge.values(), default=0),
        wirelength=sum(per_edge.values()),
        per_host_edge_congestion=table,
        congestion=worst,
    )


def translate(e: Embedding, mask: int) -> Embedding:
    return Embedding(e.guest, e.host_dim, tuple(x ^ mask for x in e.map))


def permute_coordinates(e: Embedding, perm: Sequence[int]) -> Embedding:
    """Move bit ``i`` of every image to position ``perm[i]``."""
    if sorted(perm) != list(range(e.host_dim)):
        raise ValueError("perm must be a permutation of the host coordinates")
    return Embedding(e.guest, e.host_dim, tuple(apply_perm(x, perm) for x in e.map))


def apply_perm(x: int, perm: Sequence[int]) -> int:
    y = 0
    for i, j in enumerate(perm):
        y |= (x >> i & 1) << j
    return y
