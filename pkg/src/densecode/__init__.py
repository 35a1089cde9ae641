"""Equally-distant two-qubit dense-coding alphabets and their Holevo capacities."""

from .alphabets import (
    Alphabet,
    LocalUnitary,
    closure_table,
    equally_distant_alphabet,
    equally_distant_generators,
    general_u2,
    generate_alphabet,
    make_alphabet,
    mixed_overlap,
    overlap_matrix,
    standard_alphabet,
    standard_generators,
)
from .capacity import (
    CapacityReport,
    capacity_difference_xpauli,
    depolarizing_spectrum_closed_form,
    holevo_quantity,
    ideal_capacity_mixed,
    ideal_capacity_pure,
    noisy_capacity_uniform,
    optimize_prior,
    xpauli_delta_sq,
)
from .channels import PauliChannelParams, apply_pauli_channel, averaged_state, depolarizing, x_pauli
from .linalg import hermitian_eigenvalues, partial_trace_B, tensor_with_identity_on_B, von_neumann_entropy
from .search import search_min_max_overlap
from .states import SchmidtState, SpectralMixture, spectral_mixture_density, werner_like

__version__ = "0.1.0"
