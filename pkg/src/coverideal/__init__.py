"""Cover ideals of graphs, their symbolic powers, and checkable certificates
for linear quotients and vertex decomposability."""

__version__ = "0.1.0"

from ._budget import Budget
from .betti import (
    BettiTable,
    betti_table,
    betti_table_hochster,
    componentwise_linear_witness,
    has_linear_resolution,
    is_componentwise_linear,
    linear_resolution_witness,
    regularity,
)
from .complex import SimplicialComplex, independence_complex, reduced_homology_ranks, stanley_reisner
from .constructions import (
    AttachmentSpec,
    CliquePartition,
    StarCompleteSpec,
    add_whiskers,
    attach,
    attach_sizes,
    cameron_walker,
    clique_whisker,
    from_family_spec,
    g_k,
    is_pure,
    layer_vertices,
    star_complete,
)
from .decomposable import (
    VDCertificate,
    is_vertex_decomposable,
    seq_cm_proxy,
    validate_vertex_decomposition,
)
from .errors import (
    BudgetExceeded,
    CertificateError,
    ComplexError,
    CoverIdealError,
    FormatError,
    GraphError,
    IdealError,
    InvalidVertexError,
    RingMismatchError,
    TooLargeError,
)
from .graph import (
    Graph,
    closed_neighbors,
    connected_components,
    disjoint_union,
    graph_isomorphic,
    induced_delete,
    induced_matching_number,
    induced_subgraph,
    is_cameron_walker,
    is_clique,
    is_independent,
    is_shedding,
    is_simplicial,
    matching_number,
    maximal_independent_sets,
    minimal_vertex_covers,
    neighbors,
)
from .ideal import (
    MonomialIdeal,
    alexander_dual,
    colon_by_monomial,
    cover_ideal,
    deg_max,
    degree_component,
    edge_ideal,
    from_strings,
    intersect,
    minimalize,
    multiply,
    polarize,
    power,
    sum_ideals,
    symbolic_power_cover,
)
from .quotients import (
    LinearQuotientCertificate,
    betti_from_linear_quotients,
    linear_quotients_order,
    validate_linear_quotients,
)

__all__ = [
    "AttachmentSpec",
    "BettiTable",
    "Budget",
    "BudgetExceeded",
    "CertificateError",
    "CliquePartition",
    "ComplexError",
    "CoverIdealError",
    "FormatError",
    "Graph",
    "GraphError",
    "IdealError",
    "InvalidVertexError",
    "LinearQuotientCertificate",
    "MonomialIdeal",
    "RingMismatchError",
    "SimplicialComplex",
    "StarCompleteSpec",
    "TooLargeError",
    "VDCertificate",
    "add_whiskers",
    "alexander_dual",
    "attach",
    "attach_sizes",
    "betti_from_linear_quotients",
    "betti_table",
    "betti_table_hochster",
    "cameron_walker",
    "clique_whisker",
    "closed_neighbors",
    "colon_by_monomial",
    "componentwise_linear_witness",
    "connected_components",
    "cover_ideal",
    "deg_max",
    "degree_component",
    "disjoint_union",
    "edge_ideal",
    "from_family_spec",
    "from_strings",
    "g_k",
    "graph_isomorphic",
    "has_linear_resolution",
    "independence_complex",
    "induced_delete",
    "induced_matching_number",
    "induced_subgraph",
    "intersect",
    "is_cameron_walker",
    "is_clique",
    "is_componentwise_linear",
    "is_independent",
    "is_pure",
    "is_shedding",
    "is_simplicial",
    "is_vertex_decomposable",
    "layer_vertices",
    "linear_quotients_order",
    "linear_resolution_witness",
    "matching_number",
    "maximal_independent_sets",
    "minimal_vertex_covers",
    "minimalize",
    "multiply",
    "neighbors",
    "polarize",
    "power",
    "reduced_homology_ranks",
    "regularity",
    "seq_cm_proxy",
    "stanley_reisner",
    "star_complete",
    "sum_ideals",
    "symbolic_power_cover",
    "validate_linear_quotients",
    "validate_vertex_decomposition",
]
