"""Parsimonious voice-leading graphs of triads and their graph-theoretic diagnostics."""

from .pitch import (
    PRESETS,
    PitchClassSet,
    ScaleParseError,
    Triad,
    TriadQuality,
    extract_triads,
    parse_scale,
    preset_scale,
)
from .graph import (
    VoiceLeadingGraph,
    adjacency_matrix,
    build_graph,
    count_walks,
    degree,
    is_parsimonious_pair,
    walk_matrix,
)
from .classical import (
    EulerClass,
    eccentricity_summary,
    euler_classify,
    find_euler_trail,
    find_isomorphism,
    find_subgraph_isomorphism,
    geodesic_distances,
    hamiltonian_circuits,
    is_regular,
)
from .centrality import (
    betweenness_centrality,
    centrality_report,
    closeness_centrality,
    communicability,
    degree_centrality,
    katz_centrality,
    spectral_radius,
)
from .census import CensusCategory, classify_graph, enumerate_pitch_sets, run_census

__version__ = "0.1.0"
