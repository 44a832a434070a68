"""Exact arithmetic for two-row symmetric group representations.

The package realizes the irreducible representations labeled by two-row
Young diagrams inside spaces of square-free multilinear forms, builds their
Gelfand-Tsetlin bases from closed formulas, and studies the spectral
measures of vectors induced along a direction sequence, which turn out to
be Markov chains on the two-row branching graph with an explicit kernel.
Everything is computed over the rationals; nothing is floating point.
"""

from .forms import (
    Permutation,
    SquareFreeForm,
    act,
    decompose_step,
    divergence,
    harmonic_preimage,
    inner,
    is_harmonic,
    pseudo_monomial,
    psi,
)
from .gz import (
    GzVector,
    closed_harmonic_norm_sq,
    closed_norm_sq_in_H,
    full_gz_basis,
    gz_harmonic,
    gz_in_H,
    iter_basis,
    orthogonal_form_matrix,
    transposition_matrix_in_basis,
    yjm_apply,
    yjm_eigencheck,
)
from .linalg import harmonic_dim
from .markov import (
    BitPrefix,
    KernelEntry,
    MarkovReport,
    MarkovViolation,
    SpectralTable,
    TransitionKernel,
    bernoulli,
    central_alpha_transition,
    central_kernel,
    central_alpha_prob,
    central_shape_weight,
    central_table,
    central_transition_oracle,
    good_tableau_ratio,
    induced_transition,
    is_markov,
    kernel_from_prefix,
    kernel_matches,
    negative_control_tables,
    path_product_table,
    sample_path,
    sample_tableau,
    spectral_measure,
    transition_counts,
    within_three_sigma,
)
from .ygraph import (
    Cell,
    TwoRowDiagram,
    TwoRowTableau,
    cotransition,
    dim,
    enumerate_all_tableaux,
    enumerate_diagrams,
    enumerate_tableaux,
    good_tableau,
    hook_length,
)

__version__ = "0.1.0"

__all__ = [
    "BitPrefix",
    "Cell",
    "GzVector",
    "KernelEntry",
    "MarkovReport",
    "MarkovViolation",
    "Permutation",
    "SpectralTable",
    "SquareFreeForm",
    "TransitionKernel",
    "TwoRowDiagram",
    "TwoRowTableau",
    "act",
    "bernoulli",
    "central_alpha_transition",
    "central_kernel",
    "central_alpha_prob",
    "central_shape_weight",
    "central_table",
    "central_transition_oracle",
    "closed_harmonic_norm_sq",
    "closed_norm_sq_in_H",
    "cotransition",
    "decompose_step",
    "dim",
    "divergence",
    "enumerate_all_tableaux",
    "enumerate_diagrams",
    "enumerate_tableaux",
    "full_gz_basis",
    "good_tableau",
    "good_tableau_ratio",
    "gz_harmonic",
    "gz_in_H",
    "harmonic_dim",
    "harmonic_preimage",
    "hook_length",
    "induced_transition",
    "inner",
    "is_harmonic",
    "is_markov",
    "iter_basis",
    "kernel_from_prefix",
    "kernel_matches",
    "negative_control_tables",
    "orthogonal_form_matrix",
    "path_product_table",
    "pseudo_monomial",
    "psi",
    "sample_path",
    "sample_tableau",
    "spectral_measure",
    "transition_counts",
    "transposition_matrix_in_basis",
    "within_three_sigma",
    "yjm_apply",
    "yjm_eigencheck",
]
