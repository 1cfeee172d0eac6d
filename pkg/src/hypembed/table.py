"""Recompute the summary table of dilations and wirelengths for the studied families."""

from __future__ import annotations

import math

from .bounds import (
    bw_balanced_multipartite,
    bw_clique_product,
    bw_folded_hypercube,
    dilation_lower_bound,
    dilation_upper_from_antimatching,
    has_perfect_antimatching,
)
from .constructions import (
    antimatching_embedding,
    clique_product_embedding,
    folded_identity_embedding,
    folded_low_dilation_embedding,
    multipartite_embedding,
    wheel_gray_embedding,
)
from .graph import GuardError, complete_graph, hypercube
from .metrics import dilation, wirelength

MAX_TABLE_DIM = 8


def _dilation_cell(lower: int, upper: int) -> str:
    return str(upper) if lower == upper else f"{lower}..{upper}"


def _multipartite_row(n: int, p: int) -> dict:
    emb = multipartite_embedding(n, p)
    g = emb.guest
    lower = dilation_lower_bound(n, g.max_degree())
    upper = dilation_upper_from_antimatching(g)
    am = has_perfect_antimatching(g)
    witnessed = dilation(antimatching_embedding(g, am)) if am is not None else n
    upper = min(upper, witnessed)
    if n - math.log2(n + 1) < p:
        claim, ok_dil = str(n - 1), lower == upper == n - 1
    else:
        claim, ok_dil = f"<= {n - 1}", upper <= n - 1
    wl_claim = n * 2 ** (2 * n - p - 2) * (2**p - 1)
    wl = wirelength(emb)
    wl_lb = n * bw_balanced_multipartite(2**p, 2 ** (n - p - 1))
    label = g.name if 2**p <= 4 else f"K_{{{2 ** (n - p)},...,{2 ** (n - p)}}} ({2**p} parts)"
    return {
        "graph": label,
        "dilation_claim": claim,
        "dilation": _dilation_cell(lower, upper),
        "wirelength_claim": wl_claim,
        "wirelength": wl,
        "wirelength_lb": wl_lb,
        "construction_dilation": dilation(emb),
        "passed": ok_dil and wl == wl_claim == wl_lb,
    }


def _complete_row(n: int) -> dict:
    g = complete_graph(1 << n)
    lower = dilation_lower_bound(n, g.max_degree())
    upper = dilation_upper_from_antimatching(g)
    return {
        "graph": f"{g.name} (p=n)",
        "dilation_claim": str(n),
        "dilation": _dilation_cell(lower, upper),
        "wirelength_claim": None,
        "wirelength": None,
        "wirelength_lb": None,
        "construction_dilation": None,
        "passed": lower == upper == n,
    }


def _folded_row(n: int) -> dict:
    ident = folded_identity_embedding(n)
    g = ident.guest
    # more edges than Q_n, so no dilation-1 placement exists
    lower = 2 if g.size > hypercube(n).size else 1
    upper = dilation(folded_low_dilation_embedding(n))
    wl_claim = n * 2**n
    wl = wirelength(ident)
    wl_lb = n * bw_folded_hypercube(n)
    return {
        "graph": g.name,
        "dilation_claim": "2",
        "dilation": _dilation_cell(lower, upper),
        "wirelength_claim": wl_claim,
        "wirelength": wl,
        "wirelength_lb": wl_lb,
        "construction_dilation": dilation(ident),
        "passed": lower == upper == 2 and wl == wl_claim == wl_lb,
    }


def _wheel_row(n: int) -> dict:
    emb = wheel_gray_embedding(n)
    g = emb.guest
    lower = dilation_lower_bound(n, g.max_degree())
    upper = dilation_upper_from_antimatching(g)
    exact = n if has_perfect_antimatching(g) is None else None
    wl_claim = (n + 2) * 2 ** (n - 1)
    wl = wirelength(emb)
    # spokes reach every other vertex once; an odd rim needs at least one extra step
    wl_lb = sum(k * math.comb(n, k) for k in range(1, n + 1)) + 2**n
    return {
        "graph": g.name,
        "dilation_claim": str(n),
        "dilation": str(exact) if exact is not None else _dilation_cell(lower, upper),
        "wirelength_claim": wl_claim,
        "wirelength": wl,
        "wirelength_lb": wl_lb,
        "construction_dilation": dilation(emb),
        "passed": exact == n and wl == wl_claim == wl_lb,
    }


def _clique_row(n: int) -> dict:
    if n % 2:
        return {
            "graph": f"K_2^(n/2)□K_2^(n/2), n={n}",
            "dilation_claim": "<= n/2",
            "dilation": "n/a (n odd)",
            "wirelength_claim": None,
            "wirelength": None,
            "wirelength_lb": None,
            "construction_dilation": None,
            "passed": True,
        }
    emb = clique_product_embedding(n)
    d = dilation(emb)
    wl_claim = n * 2 ** (3 * n // 2 - 2)
    wl = wirelength(emb)
    wl_lb = n * bw_clique_product([2 ** (n // 2 - 1), 2 ** (n // 2)])
    return {
        "graph": emb.guest.name,
        "dilation_claim": f"<= {n // 2}",
        "dilation": f"<= {d}",
        "wirelength_claim": wl_claim,
        "wirelength": wl,
        "wirelength_lb": wl_lb,
        "construction_dilation": d,
        "passed": d <= n // 2 and wl == wl_claim == wl_lb,
    }


def table1(n: int, p: int) -> list[dict]:
    """One row per family at dimension ``n``; every cell is recomputed."""
    if not 2 <= n <= MAX_TABLE_DIM:
        raise GuardError(f"table1 supports 2 <= n <= {MAX_TABLE_DIM}, got {n}")
    if not 1 <= p < n:
        raise ValueError(f"need 1 <= p < n, got p={p}")
    return [
        _multipartite_row(n, p),
        _complete_row(n),
        _folded_row(n),
        _wheel_row(n),
        _clique_row(n),
    ]


def render_text(rows: list[dict]) -> str:
    headers = ["graph", "dil claim", "dil", "WL claim", "WL", "WL lower", "status"]
    body = [
        [
            r["graph"],
            r["dilation_claim"],
            r["dilation"],
            "-" if r["wirelength_claim"] is None else str(r["wirelength_claim"]),
            "-" if r["wirelength"] is None else str(r["wirelength"]),
            "-" if r["wirelength_lb"] is None else str(r["wirelength_lb"]),
            "ok" if r["passed"] else "MISMATCH",
        ]
        for r in rows
    ]
    widths = [max(len(h), *(len(row[i]) for row in body)) for i, h in enumerate(headers)]
    line = lambda cells: "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()
    out = [line(headers), line(["-" * w for w in widths])]
    out += [line(row) for row in body]
    return "\n".join(out) + "\n"
