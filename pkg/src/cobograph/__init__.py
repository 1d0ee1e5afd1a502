"""Ground states and condensate fidelity of hard-core fermion pairs on graphs."""

from .basis import PairBasis
from .coboson import (
    CobosonProfile,
    ansatz_amplitudes,
    dilute_expansion,
    expectation_energy,
    fidelity,
    profile_from_ground_state,
)
from .graphs import (
    Boundary,
    Family,
    Graph,
    GraphMeta,
    load_graph,
    make_chain,
    make_complete,
    make_hanoi,
    make_hexagonal_lattice,
    make_sierpinski,
    make_square_lattice,
    make_star,
    make_triangular_lattice,
    make_vicsek,
    save_graph,
)
from .hamiltonian import ModelOptions, SparseSymMatrix, build_h1, build_h2, build_h3
from .metrics import (
    DimensionFit,
    MetricsReport,
    all_pairs_distances,
    average_path_length,
    betweenness_centrality,
    circuit_rank,
    degree_histogram,
    fit_dimension,
    metrics_report,
)
from .records import FidelityRecord, InstanceSpec, compute_fidelity_record
from .solver import GroundState, dense_ground_state, ground_state

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
