"""JSON and DOT encodings for graphs, embeddings and reports.

All writers produce byte-identical output for equal inputs.
"""

from __future__ import annotations

import json
from typing import Any

from .bounds import BoundReport
from .constructions import AntiMatching
from .graph import Graph, build_family
from .metrics import ROUTING_LABEL, Embedding, MetricsReport
from .oracle import OracleCertificate


def dumps(obj: Any, compact: bool = False) -> str:
    if compact:
        return json.dumps(obj, separators=(", ", ": ")) + "\n"
    return json.dumps(obj, indent=2) + "\n"


def graph_to_dict(g: Graph) -> dict:
    return {"name": g.name, "order": g.order, "edges": [list(e) for e in g.edges]}


def graph_from_dict(d: dict) -> Graph:
    """Accept either a plain graph object or a family descriptor."""
    if "family" in d:
        return build_family(d["family"], d.get("params", []))
    try:
        return Graph.from_edges(int(d["order"]), d["edges"], str(d.get("name", "")))
    except KeyError as exc:
        raise ValueError(f"graph JSON is missing field {exc}") from None


def graph_to_dot(g: Graph, embedding: Embedding | None = None) -> str:
    """Graphviz text; with an embedding each node is labelled by its hypercube address."""
    title = g.name.replace('"', r"\"")
    lines = [f'graph "{title}" {{']
    for v in range(g.order):
        if embedding is None:
            lines.append(f"  {v};")
        else:
            addr = format(embedding.map[v], f"0{embedding.host_dim}b") if embedding.host_dim else ""
            lines.append(f'  {v} [label="{v}\\n{addr}"];')
    for u, v in g.edges:
        if embedding is None:
            lines.append(f"  {u} -- {v};")
        else:
            d = (embedding.map[u] ^ embedding.map[v]).bit_count()
            lines.append(f'  {u} -- {v} [label="{d}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def embedding_to_dict(e: Embedding) -> dict:
    return {"guest": graph_to_dict(e.guest), "host_dim": e.host_dim, "map": list(e.map)}


def embedding_from_dict(d: dict) -> Embedding:
    try:
        return Embedding(graph_from_dict(d["guest"]), int(d["host_dim"]), tuple(d["map"]))
    except KeyError as exc:
        raise ValueError(f"embedding JSON is missing field {exc}") from None


def antimatching_from_json(d: Any) -> AntiMatching:
    pairs = d["pairs"] if isinstance(d, dict) else d
    return AntiMatching.of(pairs)


def _edge_key(e: tuple[int, int]) -> str:
    return f"{e[0]}-{e[1]}"


def metrics_to_dict(r: MetricsReport, full: bool = False) -> dict:
    out: dict[str, Any] = {
        "dilation": r.dilation,
        "wirelength": r.wirelength,
        "congestion": r.congestion,
        "congestion_kind": ROUTING_LABEL,
    }
    if full:
        out["per_edge_dilation"] = {_edge_key(e): d for e, d in r.per_edge_dilation.items()}
        out["per_host_edge_congestion"] = {_edge_key(e): c for e, c in r.per_host_edge_congestion.items()}
    return out


def bounds_to_dict(b: BoundReport) -> dict:
    return {
        "host_dim": b.host_dim,
        "dilation_lb": b.dilation_lb,
        "wirelength_lb": b.wirelength_lb,
        "congestion_lb_exact": f"{b.congestion_lb_exact.numerator}/{b.congestion_lb_exact.denominator}",
        "congestion_lb_int": b.congestion_lb_int,
        "bw_used": b.bw_used,
        "bw_source": b.bw_source,
    }


def certificate_to_dict(c: OracleCertificate) -> dict:
    if c.quantity == "bisection_width":
        witness: Any = {"parts": [list(c.witness[0]), list(c.witness[1])]}
    else:
        witness = {"map": list(c.witness)}
    return {"quantity": c.quantity, "value": c.value, "witness": witness, "search_space": c.search_space}
