"""Clique complexes, Hodge Laplacians, and coined quantum walks for
detecting higher-order (simplicial) community structure."""

from .complexes import (
    SimplicialComplex,
    canonical_simplex,
    clique_complex,
    faces,
    parse_edge_lines,
    read_edge_list,
)
from .community import (
    CommunityPartition,
    ModularityReport,
    SymmetryReport,
    detect_communities,
    exact_down_communities,
    exact_up_communities,
    membership_matrix,
    simplicial_modularity,
    verify_symmetry,
)
from .datasets import karate_club_complex, karate_club_edges, karate_club_factions
from .errors import (
    DegenerateSimplexError,
    InvalidEdgeError,
    InvalidParameterError,
    IsolatedSimplexError,
    NoAdjacencyError,
    NumericalError,
    SimplicialError,
    UnknownSimplexError,
)
from .hodge import (
    ChainIdentityReport,
    HodgeLaplacian,
    SpectrumReport,
    betti_number,
    hodge_laplacian,
    laplacian_spectrum,
    verify_chain_identities,
)
from .walk import (
    TransitionTable,
    UnitarySpectrum,
    UnitaryWalk,
    WalkSpace,
    amplitude_lower_bound,
    basis_state,
    build_walk_space,
    coin_operator,
    evolve,
    finite_time_average,
    fourier_block,
    long_time_average_spectral,
    shift_operator,
    step_operator,
    transition_probability,
    transition_profile,
    unitary_spectrum,
)

__version__ = "0.1.0"

__all__ = [
    "SimplicialComplex",
    "canonical_simplex",
    "clique_complex",
    "faces",
    "parse_edge_lines",
    "read_edge_list",
    "CommunityPartition",
    "ModularityReport",
    "SymmetryReport",
    "detect_communities",
    "exact_down_communities",
    "exact_up_communities",
    "membership_matrix",
    "simplicial_modularity",
    "verify_symmetry",
    "karate_club_complex",
    "karate_club_edges",
    "karate_club_factions",
    "SimplicialError",
    "DegenerateSimplexError",
    "InvalidEdgeError",
    "InvalidParameterError",
    "IsolatedSimplexError",
    "NoAdjacencyError",
    "NumericalError",
    "UnknownSimplexError",
    "ChainIdentityReport",
    "HodgeLaplacian",
    "SpectrumReport",
    "betti_number",
    "hodge_laplacian",
    "laplacian_spectrum",
    "verify_chain_identities",
    "TransitionTable",
    "UnitarySpectrum",
    "UnitaryWalk",
    "WalkSpace",
    "amplitude_lower_bound",
    "basis_state",
    "build_walk_space",
    "coin_operator",
    "evolve",
    "finite_time_average",
    "fourier_block",
    "long_time_average_spectral",
    "shift_operator",
    "step_operator",
    "transition_probability",
    "transition_profile",
    "unitary_spectrum",
]
