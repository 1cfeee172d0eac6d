"""Graphs over dense integer vertices, family generators and hypercube arithmetic."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 1 << 20
MAX_DIM = 20


class GuardError(ValueError):
    """Raised when a request exceeds a hard size guard."""


def popcount(x: int) -> int:
    return x.bit_count()


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..order-1``.

    Edges are stored as ascending ``(u, v)`` pairs with ``u < v``; ``adj`` holds
    one neighbourhood bitset per vertex.
    """

    order: int
    edges: tuple[tuple[int, int], ...]
    name: str = ""
    adj: tuple[int, ...] = field(default=(), repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError("order must be non-negative")
        if self.order > MAX_ORDER:
            raise GuardError(f"order {self.order} exceeds the 2^20 vertex guard")
        canon = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.order and 0 <= v < self.order):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{self.order - 1}")
            e = (u, v) if u < v else (v, u)
            if e in canon:
                raise ValueError(f"duplicate edge {e}")
            canon.add(e)
        object.__setattr__(self, "edges", tuple(sorted(canon)))
        adj = [0] * self.order
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "adj", tuple(adj))

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[Sequence[int]], name: str = "") -> "Graph":
        return cls(order, tuple((int(u), int(v)) for u, v in edges), name)

    @property
    def size(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def max_degree(self) -> int:
        return max((popcount(a) for a in self.adj), default=0)

    def neighbors(self, v: int) -> list[int]:
        a = self.adj[v]
        return [u for u in range(self.order) if a >> u & 1]

    def cut_size(self, side: int) -> int:
        """Number of edges leaving the vertex set given as a bitmask."""
        return sum(popcount(self.adj[v] & ~side) for v in iter_bits(side))

    def induced_edge_count(self, side: int) -> int:
        return sum(popcount(self.adj[v] & side) for v in iter_bits(side)) // 2

    def renamed(self, name: str) -> "Graph":
        return Graph(self.order, self.edges, name)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_dim(n: int, low: int) -> None:
    if not low <= n <= MAX_DIM:
        raise GuardError(f"dimension must lie in [{low}, {MAX_DIM}], got {n}")


# -- hypercube vertices -----------------------------------------------------


@dataclass(frozen=True, order=True)
class HypercubeVertex:
    bits: int
    dim: int

    def __post_init__(self) -> None:
        if self.dim < 0 or not 0 <= self.bits < (1 << self.dim):
            raise ValueError(f"{self.bits} is not a vertex of Q_{self.dim}")

    def antipode(self) -> "HypercubeVertex":
        return HypercubeVertex(self.bits ^ ((1 << self.dim) - 1), self.dim)

    def __str__(self) -> str:
        return format(self.bits, f"0{self.dim}b") if self.dim else ""


def hamming_distance(x: HypercubeVertex, y: HypercubeVertex) -> int:
    if x.dim != y.dim:
        raise ValueError(f"dimension mismatch: {x.dim} vs {y.dim}")
    return popcount(x.bits ^ y.bits)


def gray_code(i: int, n: int) -> HypercubeVertex:
    """Reflected binary Gray code of index ``i`` in ``Q_n``."""
    if not 0 <= i < (1 << n):
        raise ValueError(f"index {i} outside [0, 2^{n})")
    return HypercubeVertex(i ^ (i >> 1), n)


# -- generators -------------------------------------------------------------


def hypercube(n: int) -> Graph:
    _check_dim(n, 1)
    edges = [(v, v | 1 << k) for v in range(1 << n) for k in range(n) if not v >> k & 1]
    return Graph(1 << n, tuple(edges), f"Q_{n}")


def folded_hypercube(n: int) -> Graph:
    _check_dim(n, 2)
    full = (1 << n) - 1
    q = hypercube(n)
    diagonals = [(v, v ^ full) for v in range(1 << (n - 1))]
    return Graph(q.order, q.edges + tuple(diagonals), f"FQ_{n}")


def complete_multipartite(part_sizes: Sequence[int]) -> Graph:
    sizes = [int(s) for s in part_sizes]
    if len(sizes) < 2:
        raise ValueError("a complete multipartite graph needs at least 2 parts")
    if any(s < 1 for s in sizes):
        raise ValueError("part sizes must be positive")
    order = sum(sizes)
    if order > MAX_ORDER:
        raise GuardError(f"order {order} exceeds the 2^20 vertex guard")
    part_end = []
    end = 0
    for s in sizes:
        end += s
        part_end.extend([end] * s)
    edges = [(u, v) for u in range(order) for v in range(part_end[u], order)]
    return Graph(order, tuple(edges), "K_{" + ",".join(map(str, sizes)) + "}")


def wheel(n_vertices: int) -> Graph:
    """Wheel with hub 0 and rim ``1, 2, ..., n_vertices - 1`` in cyclic order."""
    if n_vertices < 4:
        raise ValueError("a wheel needs at least 4 vertices")
    if n_vertices > MAX_ORDER:
        raise GuardError(f"order {n_vertices} exceeds the 2^20 vertex guard")
    spokes = [(0, v) for v in range(1, n_vertices)]
    rim = [(v, v + 1) for v in range(1, n_vertices - 1)] + [(1, n_vertices - 1)]
    return Graph(n_vertices, tuple(spokes + rim), f"W_{n_vertices}")


def complete_graph(n_vertices: int) -> Graph:
    if n_vertices < 1:
        raise ValueError("complete graph needs at least 1 vertex")
    if n_vertices > 1 << 12:
        raise GuardError("complete graphs are limited to 2^12 vertices")
    return Graph(n_vertices, tuple(combinations(range(n_vertices), 2)), f"K_{n_vertices}")


def cycle(n_vertices: int) -> Graph:
    if n_vertices < 3:
        raise ValueError("cycle needs at least 3 vertices")
    if n_vertices > MAX_ORDER:
        raise GuardError(f"order {n_vertices} exceeds the 2^20 vertex guard")
    edges = [(i, (i + 1) % n_vertices) for i in range(n_vertices)]
    return Graph(n_vertices, tuple(edges), f"C_{n_vertices}")


def empty_graph(n_vertices: int) -> Graph:
    return Graph(n_vertices, (), f"E_{n_vertices}")


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Vertex ``(a, b)`` of ``g □ h`` is numbered ``a * h.order + b``."""
    order = g.order * h.order
    if order > MAX_ORDER:
        raise GuardError(f"product order {order} exceeds the 2^20 vertex guard")
    m = h.order
    edges = [(a * m + u, a * m + v) for a in range(g.order) for u, v in h.edges]
    edges += [(u * m + b, v * m + b) for u, v in g.edges for b in range(m)]
    return Graph(order, tuple(edges), f"{g.name}□{h.name}")


def clique_product(sizes: Sequence[int]) -> Graph:
    sizes = list(sizes)
    if len(sizes) < 1:
        raise ValueError("need at least one factor")
    g = complete_graph(sizes[0])
    for s in sizes[1:]:
        g = cartesian_product(g, complete_graph(s))
    return g


def complement(g: Graph) -> Graph:
    edges = [(u, v) for u, v in combinations(range(g.order), 2) if not g.adj[u] >> v & 1]
    return Graph(g.order, tuple(edges), f"co({g.name})" if g.name else "")


# -- family recognition -----------------------------------------------------

_FAMILY_PATTERNS = [
    (re.compile(r"^Q_(\d+)$"), "hypercube"),
    (re.compile(r"^FQ_(\d+)$"), "folded"),
    (re.compile(r"^W_(\d+)$"), "wheel"),
    (re.compile(r"^C_(\d+)$"), "cycle"),
    (re.compile(r"^K_\{(\d+(?:,\d+)+)\}$"), "multipartite"),
    (re.compile(r"^K_(\d+(?:□K_\d+)+)$"), "clique_product"),
    (re.compile(r"^K_(\d+)$"), "complete"),
]


def recognize(g: Graph) -> tuple[str, list[int]] | None:
    """Identify ``g`` as a generated family member.

    The name only proposes a candidate; the graph is accepted when it equals
    the regenerated family member edge for edge.
    """
    for pattern, family in _FAMILY_PATTERNS:
        m = pattern.match(g.name)
        if not m:
            continue
        params = [int(x) for x in re.findall(r"\d+", m.group(1))]
        try:
            candidate = build_family(family, params)
        except ValueError:
            return None
        if candidate.order == g.order and candidate.edges == g.edges:
            return family, params
        return None
    return None


def build_family(family: str, params: Sequence[int]) -> Graph:
    params = [int(p) for p in params]

    def arity(k: int) -> None:
        if len(params) != k:
            raise ValueError(f"family {family!r} takes {k} parameter(s), got {len(params)}")

    if family == "hypercube":
        arity(1)
        return hypercube(params[0])
    if family == "folded":
        arity(1)
        return folded_hypercube(params[0])
    if family == "wheel":
        arity(1)
        return wheel(params[0])
    if family == "complete":
        arity(1)
        return complete_graph(params[0])
    if family == "cycle":
        arity(1)
        return cycle(params[0])
    if family == "multipartite":
        return complete_multipartite(params)
    if family == "clique_product":
        if len(params) < 2:
            raise ValueError("clique_product takes at least 2 clique sizes")
        return clique_product(params)
    raise ValueError(f"unknown family {family!r}")
