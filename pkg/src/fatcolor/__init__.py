"""Exact toolkit for fair-and-tolerant (FAT) vertex colorings."""

__version__ = "0.1.0"

from fatcolor.construction import (
    ConstructionPlan,
    ConstructionReport,
    PredictedProperties,
    SweepEntry,
    build_graph,
    non_equivalence_sweep,
    plan_construction,
    predict_properties,
    verify_construction,
)
from fatcolor.fat import (
    FatParameters,
    FatVerdict,
    InvalidColoringError,
    Partition,
    derive_parameters,
    enumerate_partitions,
    fat_chromatic_number,
    fat_k_coloring_exists,
    verify_fat,
)
from fatcolor.graph import (
    EquivalenceCertificate,
    Graph,
    clique_number,
    count_neighbors_in,
    degree,
    hom_equivalence_certificate,
    homomorphism_exists,
    induced_subgraph,
    is_regular,
)
from fatcolor.rational import format_rational, make_rational, parse_rational, rat_arith

__all__ = [
    "ConstructionPlan",
    "ConstructionReport",
    "EquivalenceCertificate",
    "FatParameters",
    "FatVerdict",
    "Graph",
    "InvalidColoringError",
    "Partition",
    "PredictedProperties",
    "SweepEntry",
    "build_graph",
    "clique_number",
    "count_neighbors_in",
    "degree",
    "derive_parameters",
    "enumerate_partitions",
    "fat_chromatic_number",
    "fat_k_coloring_exists",
    "format_rational",
    "hom_equivalence_certificate",
    "homomorphism_exists",
    "induced_subgraph",
    "is_regular",
    "make_rational",
    "non_equivalence_sweep",
    "parse_rational",
    "plan_construction",
    "predict_properties",
    "rat_arith",
    "verify_construction",
    "verify_fat",
]
