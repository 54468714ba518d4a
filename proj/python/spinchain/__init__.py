"""Spectral and eigenstate statistics of random nearest-neighbour qubit chains."""

from spinchain._core import (  # noqa: F401
    PauliString,
    SampledHamiltonian,
    Term,
    anticommuting_neighbours,
    characteristic_fn,
    commutes,
    cyclic_xy_z_spectrum,
    diagonalize,
    epsj_z_closed_form,
    expected_trace_h2,
    fixed_hamiltonian,
    gaussian_cdf_error,
    gue_reference_density,
    hciz_joint_density,
    hciz_normalization,
    hciz_one_point,
    hciz_two_point,
    hs_inner,
    linear_entropy,
    min_gap,
    partial_trace,
    purity,
    sample,
    sampled_eigenvalues,
    semicircle_density,
    surmise,
    trace_moment,
    translation_basis_purity,
    unfolded_spacings,
    xy_plus_z_cdf_error,
    xy_plus_z_closed_form,
)

__version__ = "0.1.0"
