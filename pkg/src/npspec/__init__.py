"""Spectral analysis of the boundary-flux (Neumann-Poincare) operator on a
conformal family of algebraic domains and on pairs of disks, with forward
plasmonic resonance scans and inverse recovery of shape and gap parameters.
"""

from .errors import (
    CurveOverlap,
    DegenerateParametrization,
    ExactPole,
    GramNotPositive,
    IllConditioned,
    Inconsistent,
    NearSingular,
    NoContrast,
    NoPeaks,
    NPSpecError,
    OutOfRange,
    SeriesPole,
)
from .geometry import (
    AlgebraicDomain,
    BoundaryCurve,
    area,
    boundary_point,
    circle,
    curvature,
    discretize,
    jacobian,
    normal,
)
from .analytic import (
    AsymptoticEigenpair,
    FourierSeries,
    asymptotic_eigenpairs,
    matrix_M,
    matrix_M_spectrum,
    np_apply_fourier,
    single_layer_fourier,
)
from .nystrom import (
    DiscreteOperator,
    SpectralDecomposition,
    discretize_np,
    discretize_single_layer,
    gram_matrix,
    numeric_spectrum,
    resolvent_solve,
)
from .gpt import (
    gpt_direct,
    gpt_spectral_sum,
    harmonic_flux,
    harmonic_moment,
    m11_asymptotic,
    m22cc_asymptotic,
)
from .twodisks import (
    DiskEigenmode,
    TwoDiskConfig,
    disk_eigenmode,
    eigendensity_samples,
    eigenvalue,
    gap_field,
    gap_field_with_tail,
    m11_eps,
    m11_eps_with_tail,
    mode_potential,
    mode_single_layer,
    reconstruct_eps,
    resonance_conductivity,
    resonant_gap_estimate,
    x1_series,
)
from .material import (
    DrudeModel,
    SyntheticContrast,
    lambda_from_sigma,
    lambda_of_wavelength,
    parse_material_config,
    sigma_from_lambda,
    sigma_of_wavelength,
)
from .scan import (
    Peak,
    PeakSet,
    ResonanceScan,
    ShapeClassification,
    ShapeReconstruction,
    classify_domain,
    detect_peaks,
    forward_scan,
    reconstruct_gap_from_scan,
    reconstruct_shape_from_scan,
    size_from_peak,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraicDomain",
    "AsymptoticEigenpair",
    "BoundaryCurve",
    "CurveOverlap",
    "DegenerateParametrization",
    "DiscreteOperator",
    "DiskEigenmode",
    "DrudeModel",
    "ExactPole",
    "FourierSeries",
    "GramNotPositive",
    "IllConditioned",
    "Inconsistent",
    "NPSpecError",
    "NearSingular",
    "NoContrast",
    "NoPeaks",
    "OutOfRange",
    "Peak",
    "PeakSet",
    "ResonanceScan",
    "SeriesPole",
    "ShapeClassification",
    "ShapeReconstruction",
    "SpectralDecomposition",
    "SyntheticContrast",
    "TwoDiskConfig",
    "area",
    "asymptotic_eigenpairs",
    "boundary_point",
    "circle",
    "classify_domain",
    "curvature",
    "detect_peaks",
    "discretize",
    "discretize_np",
    "discretize_single_layer",
    "disk_eigenmode",
    "eigendensity_samples",
    "eigenvalue",
    "forward_scan",
    "gap_field",
    "gap_field_with_tail",
    "gpt_direct",
    "gpt_spectral_sum",
    "harmonic_flux",
    "harmonic_moment",
    "gram_matrix",
    "jacobian",
    "lambda_from_sigma",
    "lambda_of_wavelength",
    "m11_asymptotic",
    "m11_eps",
    "m11_eps_with_tail",
    "m22cc_asymptotic",
    "matrix_M",
    "matrix_M_spectrum",
    "mode_potential",
    "mode_single_layer",
    "normal",
    "np_apply_fourier",
    "numeric_spectrum",
    "parse_material_config",
    "reconstruct_eps",
    "reconstruct_gap_from_scan",
    "reconstruct_shape_from_scan",
    "resolvent_solve",
    "resonance_conductivity",
    "resonant_gap_estimate",
    "sigma_from_lambda",
    "sigma_of_wavelength",
    "single_layer_fourier",
    "size_from_peak",
    "x1_series",
]
