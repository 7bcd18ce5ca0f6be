"""CGMN solver for finite-difference Helmholtz problems.

Symmetric Kaczmarz double sweeps accelerated by conjugate gradients, with a
Fourier-symbol analyzer that predicts the optimal relaxation parameter from
the number of gridpoints per wavelength.
"""

from ._core import (
    Cell1D,
    ComplexProblem,
    ConvergenceHistory,
    OmegaCurve,
    OmegaCurveSample,
    RealProblem,
    SolveStatus,
    SweepPlan,
    __version__,
    amplitude,
    analytic_eigenpair_1d,
    apply_I_minus_Q,
    apply_R,
    build_helmholtz_1d,
    build_helmholtz_2d,
    cgmn_solve,
    condition_proxy,
    double_sweep,
    optimal_omega,
    richardson_solve,
    run_fixed_h_1d,
    run_fixed_ng_1d,
    scattered_field_rhs,
    verify_oracle,
)

__all__ = [
    "Cell1D",
    "ComplexProblem",
    "ConvergenceHistory",
    "OmegaCurve",
    "OmegaCurveSample",
    "RealProblem",
    "SolveStatus",
    "SweepPlan",
    "__version__",
    "amplitude",
    "analytic_eigenpair_1d",
    "apply_I_minus_Q",
    "apply_R",
    "build_helmholtz_1d",
    "build_helmholtz_2d",
    "cgmn_solve",
    "condition_proxy",
    "double_sweep",
    "optimal_omega",
    "richardson_solve",
    "run_fixed_h_1d",
    "run_fixed_ng_1d",
    "scattered_field_rhs",
    "verify_oracle",
]
