"""Strong-convergence experiments for the Euler scheme of kinetic SDEs
driven by isotropic alpha-stable noise.

The package couples every coarse resolution of a shear-transported Euler
scheme to a common fine-grid reference on shared noise paths, and measures
the empirical strong order against the prediction

    rho(alpha, beta) = 1/2 + min( beta / (alpha (1 + alpha)), 1/2 ),

where alpha in (1, 2) is the stability index of the driver and beta the
anisotropic Hölder regularity of the drift.
"""

__version__ = "0.1.0"

from .alpha_stable import (
    RngStream,
    StableParams,
    empirical_cf,
    sample_isotropic_stable_increment,
    sample_one_sided_stable,
)
from .kinetic_path import (
    MasterPath,
    PhasePoint,
    aniso_dist,
    build_master_path,
    gamma_shift,
    grid_map_kn,
    moment_diagnostic,
)
from .drifts import (
    DRIFT_KINDS,
    DriftSpec,
    beta_range,
    constant_drift,
    drift_eval,
    holder_seminorm_by_scale,
    holder_seminorm_estimate,
    multiscale_drift,
    separable_drift,
    zero_drift,
)
from .scheme import SchemeConfig, Trajectory, exact_solution, run_euler, run_reference
from .harness import (
    DiagnosticRow,
    ExperimentConfig,
    RateReport,
    drift_diagnostics,
    empirical_moment_norm,
    fit_rate,
    noise_diagnostics,
    strong_error_experiment,
    theoretical_rate,
    write_csv,
    write_diagnostics_csv,
    xi_hat_value,
)

__all__ = [
    "__version__",
    "RngStream",
    "StableParams",
    "empirical_cf",
    "sample_isotropic_stable_increment",
    "sample_one_sided_stable",
    "MasterPath",
    "PhasePoint",
    "aniso_dist",
    "build_master_path",
    "gamma_shift",
    "grid_map_kn",
    "moment_diagnostic",
    "DRIFT_KINDS",
    "DriftSpec",
    "beta_range",
    "constant_drift",
    "drift_eval",
    "holder_seminorm_by_scale",
    "holder_seminorm_estimate",
    "multiscale_drift",
    "separable_drift",
    "zero_drift",
    "SchemeConfig",
    "Trajectory",
    "exact_solution",
    "run_euler",
    "run_reference",
    "DiagnosticRow",
    "ExperimentConfig",
    "RateReport",
    "drift_diagnostics",
    "empirical_moment_norm",
    "fit_rate",
    "noise_diagnostics",
    "strong_error_experiment",
    "theoretical_rate",
    "write_csv",
    "write_diagnostics_csv",
    "xi_hat_value",
]
