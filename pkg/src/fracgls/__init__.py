"""Solvers for the one-dimensional fractional CGLS equation.

The equation couples Ginzburg-Landau damping with Schrodinger dispersion
through a Riesz fractional derivative of order alpha in (1, 2]:

    (eta - i beta) dpsi/dt = d^alpha psi / d|x|^alpha
                             + (1/eps^2) (V(x) - |psi|^2) psi.

Two schemes are provided on a shared uniform grid: an implicit
finite-difference method built on the fractional centered-difference
stencil (ifdm) and a Strang-split Fourier spectral method (tsfs), plus
error, conservation, convergence, and linear-stability analysis tools and
a CSV-emitting command line.
"""

from .analysis import (AmplificationProbe, ErrorReport, amplification_factor,
                       amplification_sweep, conservation_drift,
                       convergence_order, discrete_l2_norm, error_report,
                       probe_amplification)
from .cli import RunConfig, main
from .core import (EXAMPLE_DOMAIN, CglsParams, ComplexField, GridSpec,
                   Quantity, RealField, TimeGrid, build_grid, example_preset,
                   field_quantity, sample_initial_condition,
                   sample_potential)
from .errors import ConvergenceError, DivergenceError, SolverError
from .ifdm import (DEFAULT_PICARD, IfdmWorkspace, PicardConfig, ifdm_prepare,
                   ifdm_solve, ifdm_step, recorded_steps)
from .riesz import (FracCenteredStencil, apply_riesz,
                    assemble_operator_matrix, fourier_symbol,
                    periodic_operator_matrix, stencil_coefficients)
from .tsfs import (TSFS_PICARD, SpectralGrid, SpectralMultiplier,
                   dft_forward, dft_inverse, nonlinear_substep, spectral_grid,
                   spectral_multiplier, spectral_substep, tsfs_solve,
                   tsfs_step)

__version__ = "0.1.0"

__all__ = [
    "AmplificationProbe",
    "CglsParams",
    "ComplexField",
    "ConvergenceError",
    "DEFAULT_PICARD",
    "DivergenceError",
    "ErrorReport",
    "EXAMPLE_DOMAIN",
    "FracCenteredStencil",
    "GridSpec",
    "IfdmWorkspace",
    "PicardConfig",
    "Quantity",
    "RealField",
    "RunConfig",
    "SolverError",
    "SpectralGrid",
    "SpectralMultiplier",
    "TSFS_PICARD",
    "TimeGrid",
    "amplification_factor",
    "amplification_sweep",
    "apply_riesz",
    "assemble_operator_matrix",
    "build_grid",
    "conservation_drift",
    "convergence_order",
    "dft_forward",
    "dft_inverse",
    "discrete_l2_norm",
    "error_report",
    "example_preset",
    "field_quantity",
    "fourier_symbol",
    "ifdm_prepare",
    "ifdm_solve",
    "ifdm_step",
    "main",
    "nonlinear_substep",
    "periodic_operator_matrix",
    "probe_amplification",
    "recorded_steps",
    "sample_initial_condition",
    "sample_potential",
    "spectral_grid",
    "spectral_multiplier",
    "spectral_substep",
    "stencil_coefficients",
    "tsfs_solve",
    "tsfs_step",
    "__version__",
]
