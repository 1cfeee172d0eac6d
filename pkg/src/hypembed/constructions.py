"""Explicit embeddings of guest families into hypercubes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import (
    Graph,
    GuardError,
    clique_product,
    complete_multipartite,
    folded_hypercube,
    gray_code,
    wheel,
)
from .metrics import Embedding

MAX_CONSTRUCTION_DIM = 12


@dataclass(frozen=True)
class AntiMatching:
    """Disjoint pairs of non-adjacent guest vertices."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        pairs = tuple((min(a, b), max(a, b)) for a, b in self.pairs)
        seen: set[int] = set()
        for a, b in pairs:
            if a == b:
                raise ValueError(f"pair ({a}, {b}) repeats a vertex")
            if a in seen or b in seen:
                raise ValueError("anti-matching pairs must be disjoint")
            seen.update((a, b))
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def of(cls, pairs: Iterable[Sequence[int]]) -> "AntiMatching":
        return cls(tuple((int(a), int(b)) for a, b in pairs))

    def __len__(self) -> int:
        return len(self.pairs)

    def is_perfect_for(self, g: Graph) -> bool:
        return 2 * len(self.pairs) == g.order

    def check(self, g: Graph) -> None:
        for a, b in self.pairs:
            if b >= g.order:
                raise ValueError(f"pair ({a}, {b}) is outside the guest")
            if g.has_edge(a, b):
                raise ValueError(f"pair ({a}, {b}) is an edge of the guest")


def _dim_of_order(order: int) -> int:
    n = order.bit_length() - 1
    if order < 1 or order != 1 << n:
        raise ValueError(f"guest order {order} is not a power of two")
    return n


def _check_range(n: int, low: int) -> None:
    if not low <= n <= MAX_CONSTRUCTION_DIM:
        raise GuardError(f"n must lie in [{low}, {MAX_CONSTRUCTION_DIM}], got {n}")


def antimatching_embedding(g: Graph, am: AntiMatching) -> Embedding:
    """Send the k-th pair to the antipodal pair ``{k, ~k}``.

    The smaller guest vertex of each pair gets the smaller image ``k``.
    """
    n = _dim_of_order(g.order)
    am.check(g)
    if not am.is_perfect_for(g):
        raise ValueError(f"anti-matching has {len(am)} pairs, need {g.order // 2}")
    full = (1 << n) - 1
    image = [0] * g.order
    for k, (a, b) in enumerate(am.pairs):
        image[a] = k
        image[b] = k ^ full
    return Embedding(g, n, tuple(image))


def multipartite_labels(n: int, p: int) -> list[list[int]]:
    """Label classes ``V_1..V_{2^p}`` of the wirelength-optimal multipartite labeling.

    ``V_i`` holds ``j*2^(p+1) + i - 1`` for ``0 <= j < 2^(n-p-1)`` and
    ``j*2^(p+1) - i`` for ``1 <= j <= 2^(n-p-1)``.
    """
    if not 1 <= p < n:
        raise ValueError(f"need 1 <= p < n, got n={n}, p={p}")
    _check_range(n, 2)
    step = 1 << (p + 1)
    half = 1 << (n - p - 1)
    classes = []
    for i in range(1, (1 << p) + 1):
        low = [j * step + i - 1 for j in range(half)]
        high = [j * step - i for j in range(1, half + 1)]
        classes.append(sorted(low + high))
    return classes


def multipartite_embedding(n: int, p: int) -> Embedding:
    """``K_{2^(n-p),...,2^(n-p)}`` with ``2^p`` parts into ``Q_n``.

    Guest part ``i`` (consecutive vertex range) receives the labels of
    ``V_{i+1}`` in ascending order; each label is its own hypercube vertex.
    """
    classes = multipartite_labels(n, p)
    guest = complete_multipartite([len(c) for c in classes])
    image = [x for c in classes for x in c]
    return Embedding(guest, n, tuple(image))


def folded_identity_embedding(n: int) -> Embedding:
    _check_range(n, 2)
    g = folded_hypercube(n)
    return Embedding(g, n, tuple(range(g.order)))


def folded_low_dilation_embedding(n: int) -> Embedding:
    """Dilation-2 placement of ``FQ_n``: bit ``i`` of the image is ``x_i XOR x_(i+1)``.

    Flipping one guest bit touches at most two image bits; flipping all guest
    bits only changes the top image bit.
    """
    _check_range(n, 2)
    g = folded_hypercube(n)
    return Embedding(g, n, tuple(x ^ (x >> 1) for x in range(g.order)))


def wheel_gray_embedding(n: int) -> Embedding:
    """Hub on Gray code 0, rim vertex ``k`` on Gray code ``k``."""
    _check_range(n, 2)
    g = wheel(1 << n)
    return Embedding(g, n, tuple(gray_code(k, n).bits for k in range(g.order)))


def clique_product_embedding(n: int) -> Embedding:
    """``K_{2^(n/2)} □ K_{2^(n/2)}``: vertex ``(a, b)`` goes to the string ``a`` then ``b``."""
    if n % 2:
        raise ValueError(f"n must be even, got {n}")
    _check_range(n, 2)
    h = n // 2
    g = clique_product([1 << h, 1 << h])
    side = 1 << h
    image = [(a << h) | b for a in range(side) for b in range(side)]
    return Embedding(g, n, tuple(image))
