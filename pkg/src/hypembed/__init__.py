"""Embeddings of graphs into hypercubes: constructions, cost measures, bounds and exact oracles."""

from .bounds import (
    BoundReport,
    bound_report,
    bw_balanced_multipartite,
    bw_clique_product,
    bw_folded_hypercube,
    bw_hypercube,
    dilation_lower_bound,
    dilation_upper_from_antimatching,
    ec_lower_bound,
    has_perfect_antimatching,
    lindsey_lex_edge_count,
    wl_lower_bound,
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
    GuardError,
    HypercubeVertex,
    cartesian_product,
    clique_product,
    complement,
    complete_graph,
    complete_multipartite,
    cycle,
    folded_hypercube,
    gray_code,
    hamming_distance,
    hypercube,
    wheel,
)
from .metrics import (
    Embedding,
    MetricsReport,
    dilation,
    ecube_route,
    edge_congestion,
    edge_dilations,
    evaluate,
    wirelength,
)
from .oracle import (
    OracleCertificate,
    oracle_bisection_width,
    oracle_dilation,
    oracle_lindsey_max,
    oracle_wirelength,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "bound_report",
    "bw_balanced_multipartite",
    "bw_clique_product",
    "bw_folded_hypercube",
    "bw_hypercube",
    "dilation_lower_bound",
    "dilation_upper_from_antimatching",
    "ec_lower_bound",
    "has_perfect_antimatching",
    "lindsey_lex_edge_count",
    "wl_lower_bound",
    "AntiMatching",
    "antimatching_embedding",
    "clique_product_embedding",
    "folded_identity_embedding",
    "folded_low_dilation_embedding",
    "multipartite_embedding",
    "multipartite_labels",
    "wheel_gray_embedding",
    "Graph",
    "GuardError",
    "HypercubeVertex",
    "cartesian_product",
    "clique_product",
    "complement",
    "complete_graph",
    "complete_multipartite",
    "cycle",
    "folded_hypercube",
    "gray_code",
    "hamming_distance",
    "hypercube",
    "wheel",
    "Embedding",
    "MetricsReport",
    "dilation",
    "ecube_route",
    "edge_congestion",
    "edge_dilations",
    "evaluate",
    "wirelength",
    "OracleCertificate",
    "oracle_bisection_width",
    "oracle_dilation",
    "oracle_lindsey_max",
    "oracle_wirelength",
]
