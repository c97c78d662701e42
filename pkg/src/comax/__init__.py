"""Co-maximal subgroup hypergraphs of dihedral groups: construction,
structural invariants and embeddability."""

from .embedding import (
    Basis,
    Embedding,
    Obstruction,
    Surface,
    SurfaceClass,
    TripleCertificate,
    classify_surface,
    euler_genus_lower_bounds,
    find_triple_certificate,
    kmn_genus,
    planarity,
    rotation_genus,
)
from .hypergraph import (
    CoMaximalGraph,
    Hypergraph,
    IncidenceGraph,
    build_comaximal_graph,
    build_hypergraph,
    incidence_graph,
    maximal_cliques,
)
from .lattice import (
    InvalidParameter,
    InvalidSubgroup,
    Subgroup,
    enumerate_subgroups,
    intersect,
    is_comaximal,
    product_size,
    subgroup_order,
    vertex_set,
)
from .structure import (
    StructureReport,
    analyze_structure,
    chromatic_number,
    diameter,
    distance,
    girth,
    is_helly,
    is_hypertree,
    is_star,
    predict,
    uniform_k,
)

__all__ = [
    "Basis",
    "Embedding",
    "Obstruction",
    "Surface",
    "SurfaceClass",
    "TripleCertificate",
    "classify_surface",
    "euler_genus_lower_bounds",
    "find_triple_certificate",
    "kmn_genus",
    "planarity",
    "rotation_genus",
    "CoMaximalGraph",
    "Hypergraph",
    "IncidenceGraph",
    "build_comaximal_graph",
    "build_hypergraph",
    "incidence_graph",
    "maximal_cliques",
    "InvalidParameter",
    "InvalidSubgroup",
    "Subgroup",
    "enumerate_subgroups",
    "intersect",
    "is_comaximal",
    "product_size",
    "subgroup_order",
    "vertex_set",
    "StructureReport",
    "analyze_structure",
    "chromatic_number",
    "diameter",
    "distance",
    "girth",
    "is_helly",
    "is_hypertree",
    "is_star",
    "predict",
    "uniform_k",
]

__version__ = "0.1.0"
