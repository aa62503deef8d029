"""SE(2) continuous wavelet transform: irreducible representations on the
circle, the analysis operator and its reproducing kernel, minimal-uncertainty
wavelets, ring projectors and the direct-integral decomposition of plane
functions, CR residuals, and the Bargmann-transform bridge."""

from se2wave._core import (  # noqa: F401
    GroupElement,
    PlaneFunction,
    RingDistribution,
    WaveletField,
    act,
    analyze,
    analyze_at,
    apply_field,
    apply_irrep,
    bargmann_classical,
    bargmann_of_ring,
    bargmann_se2,
    compose,
    cr_residual,
    dpi_x1,
    dpi_x2,
    dpi_x3,
    field_norm,
    group_fourier,
    h_omega_norm,
    holomorphy_residual,
    inner_product,
    inverse,
    j0,
    kernel,
    minimal_wavelet,
    norm,
    plancherel_sum,
    project,
    read_circle_csv,
    read_pgm,
    read_se2f_field,
    read_se2f_plane,
    reconstruct,
    render_ring,
    reproduce_check,
    restriction_theorem_check,
    ring_restrict,
    rotate,
    run_suite,
    spectral_derivative,
    surjective_invert,
    uncertainty_gap,
    weak_reconstruct,
    write_circle_csv,
    write_se2f_field,
    write_se2f_plane,
)

__version__ = "0.1.0"
