"""Entanglement of indistinguishable particles shared between two parties.

Pure N-particle boson or fermion states in the Fock basis, split between
Alice's and Bob's modes, with mode entanglement, particle entanglement under
the local particle-number superselection rule, and single-particle entropies.
"""

__version__ = "0.1.0"

from .asymptotics import (
    SuperadditivityReport,
    ScalingRow,
    alice_number_variance,
    check_superadditivity,
    copies_scaling,
    delta,
    ep_of_copies,
    ep_split_singles_asymptote,
    ep_split_singles_exact,
)
from .bipartite import (
    DensityMatrix,
    Sector,
    SectorDecomposition,
    Side,
    coefficient_matrix,
    project_local_number,
    reduced_density_matrix,
    schmidt_probabilities,
    sector_decomposition,
)
from .fock import (
    FockState,
    ModePartition,
    Statistics,
    apply_annihilation,
    apply_creation,
    basis_state,
    compose,
    inner_product,
    make_state,
    vacuum,
)
from .measures import (
    MeasureReport,
    full_report,
    mode_entanglement,
    modified_single_particle_dm,
    particle_entanglement,
    py_spectrum,
    qc_fermions,
    shannon_entropy,
    single_particle_dm,
    single_particle_entropy,
    von_neumann_entropy,
)
from .parser import format_state, parse_state
