"""Time-splitting Fourier spectral stepping of the CGLS equation.

One step is the symmetric (Strang) composition

    psi <- NL(tau/2) -> SP(tau) -> NL(tau/2),

second order in tau. SP(tau) solves the linear fractional part exactly in
Fourier space: each mode k is damped and rotated by

    exp( -(eta + i beta) / (eta^2 + beta^2) |mu_k|^alpha tau ),

with mu_k = 2 pi k / (b - a), since 1/(eta - i beta) equals
(eta + i beta)/(eta^2 + beta^2). NL(dt) solves the pointwise flow of the
potential plus cubic terms. Writing rho = |psi|^2, the flow admits the
closed form

    psi+ = exp( (eta + i beta) c (2 V - rho+ - rho) ) psi,
    c = dt / (2 (eta^2 + beta^2) eps^2),

once the updated modulus rho+ is known, and rho+ itself satisfies the
scalar fixed-point equation

    rho+ = rho exp( 2 eta c (2 V - rho+ - rho) ),

iterated per node from rho+ = rho. When eta = 0 the exponent is purely
imaginary; the modulus is then invariant and the first iterate is
already exact.

Transforms use the library FFT behind an explicit ascending-wavenumber
ordering: coefficient arrays here are always indexed by k = -m/2 .. m/2-1,
and SpectralGrid.fft_index maps that ordering onto the FFT's native
layout. The Nyquist mode k = -m/2 contributes through |mu_{-m/2}|^alpha
like every other mode; no special-casing.

Substeps accept negative dt so that a step can be algebraically reversed
(the eta = 0 reversibility check); tau = 0 is rejected.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (CglsParams, ComplexField, GridSpec, RealField, TimeGrid,
                   _as_locked_array, sample_initial_condition,
                   sample_potential)
from .errors import ConvergenceError, DivergenceError
from .ifdm import PicardConfig, recorded_steps

__all__ = [
    "SpectralGrid",
    "SpectralMultiplier",
    "spectral_grid",
    "spectral_multiplier",
    "dft_forward",
    "dft_inverse",
    "spectral_substep",
    "nonlinear_substep",
    "tsfs_step",
    "tsfs_solve",
    "TSFS_PICARD",
]

#: Default stopping rule of the pointwise modulus iteration. Tighter than
#: the implicit solver's because each evaluation is a scalar exponential.
TSFS_PICARD = PicardConfig(tol=1e-12, max_iter=50)

#: Real exponents beyond this bound would overflow exp(); the nonlinear
#: substep raises DivergenceError instead of producing inf.
MAX_EXPONENT = 700.0


@dataclass(frozen=True, eq=False)
class SpectralGrid:
    """Wavenumber bookkeeping for an m-node grid.

    k holds the integer modes in ascending order -m/2 .. m/2-1 and mu
    the matching continuous wavenumbers 2 pi k / (b - a). fft_index
    gives the position of mode k inside the FFT's native array layout.
    """

    k: np.ndarray
    mu: np.ndarray
    fft_index: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "k", _as_locked_array(self.k, np.intp))
        object.__setattr__(self, "mu", _as_locked_array(self.mu, np.float64))
        object.__setattr__(self, "fft_index",
                           _as_locked_array(self.fft_index, np.intp))


def spectral_grid(grid: GridSpec) -> SpectralGrid:
    """Build the ascending-wavenumber view of a spatial grid."""
    m = grid.m
    k = np.arange(-(m // 2), m // 2)
    mu = 2.0 * np.pi * k / (grid.b - grid.a)
    return SpectralGrid(k=k, mu=mu, fft_index=k % m)


@dataclass(frozen=True, eq=False)
class SpectralMultiplier:
    """Per-mode factors of the exact linear propagator over one step.

    factors is indexed ascending in k, matching SpectralGrid.
    """

    factors: np.ndarray
    tau: float
    alpha: float

    def __post_init__(self):
        object.__setattr__(self, "factors",
                           _as_locked_array(self.factors, np.complex128))


def spectral_multiplier(params: CglsParams, sgrid: SpectralGrid,
                        tau: float) -> SpectralMultiplier:
    """Damping-rotation factors exp(-(eta+i beta)/(eta^2+beta^2) |mu|^a tau)."""
    if tau == 0:
        raise ValueError("time step must be nonzero")
    lam = (params.eta + 1j * params.beta) / (params.eta ** 2 + params.beta ** 2)
    factors = np.exp(-lam * np.abs(sgrid.mu) ** params.alpha * tau)
    return SpectralMultiplier(factors=factors, tau=tau, alpha=params.alpha)


def dft_forward(field: ComplexField, grid: GridSpec) -> np.ndarray:
    """Coefficients psi_hat_k = sum_j psi_j exp(-2 pi i k j / m), ascending k."""
    if len(field) != grid.m:
        raise ValueError(
            f"field length {len(field)} does not match grid m={grid.m}"
        )
    sgrid = spectral_grid(grid)
    return np.fft.fft(field.values)[sgrid.fft_index]


def dft_inverse(coeffs: np.ndarray, grid: GridSpec,
                time: float = 0.0) -> ComplexField:
    """Inverse of dft_forward; coeffs are indexed ascending in k."""
    coeffs = np.asarray(coeffs, dtype=np.complex128)
    if coeffs.shape != (grid.m,):
        raise ValueError(
            f"expected {grid.m} coefficients, got shape {coeffs.shape}"
        )
    sgrid = spectral_grid(grid)
    native = np.empty(grid.m, dtype=np.complex128)
    native[sgrid.fft_index] = coeffs
    return ComplexField(np.fft.ifft(native), time=time)


def spectral_substep(field: ComplexField, params: CglsParams, grid: GridSpec,
                     tau: float) -> ComplexField:
    """Apply the exact linear propagator over tau (negative tau reverses)."""
    sgrid = spectral_grid(grid)
    mult = spectral_multiplier(params, sgrid, tau)
    coeffs = dft_forward(field, grid)
    return dft_inverse(mult.factors * coeffs, grid, time=field.time)


def nonlinear_substep(field: ComplexField, potential: RealField,
                      params: CglsParams, dt: float,
                      picard: PicardConfig = TSFS_PICARD,
                      nonlinear: bool = True,
                      max_exponent: float = MAX_EXPONENT) -> ComplexField:
    """Solve the pointwise potential-cubic flow over dt.

    nonlinear=False drops the cubic (|psi|^2) terms and keeps the potential
    flow, which is then exact in one evaluation. Raises DivergenceError
    when a real exponent exceeds max_exponent and ConvergenceError when the
    modulus iteration exhausts its budget.
    """
    if dt == 0:
        raise ValueError("substep length must be nonzero")
    if len(potential) != len(field):
        raise ValueError(
            f"potential length {len(potential)} does not match field "
            f"length {len(field)}"
        )
    eta, beta = params.eta, params.beta
    c = dt / (2.0 * (eta ** 2 + beta ** 2) * params.eps ** 2)
    v = potential.values
    psi = field.values

    if not nonlinear:
        drive = 2.0 * v
    else:
        rho = psi.real * psi.real + psi.imag * psi.imag
        if eta == 0.0:
            rho_new = rho
        else:
            rho_new = rho
            converged = False
            for _ in range(picard.max_iter):
                arg = 2.0 * eta * c * (2.0 * v - rho_new - rho)
                if np.max(np.abs(arg)) > max_exponent:
                    raise DivergenceError(
                        "modulus iteration exponent exceeded "
                        f"{max_exponent}; flow is blowing up"
                    )
                nxt = rho * np.exp(arg)
                residual = float(np.max(np.abs(nxt - rho_new)))
                rho_new = nxt
                if residual <= picard.tol:
                    converged = True
                    break
            if not converged:
                raise ConvergenceError(
                    f"modulus iteration did not reach tol={picard.tol} "
                    f"within {picard.max_iter} iterations",
                    residual=residual, iterations=picard.max_iter,
                )
        drive = 2.0 * v - rho_new - rho

    exponent = (eta + 1j * beta) * c * drive
    if np.max(exponent.real) > max_exponent:
        raise DivergenceError(
            f"substep exponent exceeded {max_exponent}; flow is blowing up"
        )
    return ComplexField(np.exp(exponent) * psi, time=field.time)


def tsfs_step(field: ComplexField, potential: RealField, params: CglsParams,
              grid: GridSpec, tau: float,
              picard: PicardConfig = TSFS_PICARD,
              nonlinear: bool = True) -> ComplexField:
    """One Strang step NL(tau/2) -> SP(tau) -> NL(tau/2)."""
    if tau == 0:
        raise ValueError("time step must be nonzero")
    half = 0.5 * tau
    out = nonlinear_substep(field, potential, params, half, picard,
                            nonlinear=nonlinear)
    out = spectral_substep(out, params, grid, tau)
    out = nonlinear_substep(out, potential, params, half, picard,
                            nonlinear=nonlinear)
    return ComplexField(out.values, time=field.time + tau)


def tsfs_solve(params: CglsParams, grid: GridSpec, timegrid: TimeGrid,
               picard: PicardConfig = TSFS_PICARD, record_every: int = 1,
               nonlinear: bool = True, potential: bool = True) -> list:
    """Run the splitting scheme from the benchmark initial condition.

    Returns the recorded trajectory: the initial field, then every
    record_every-th level, always including the final time. Step errors
    propagate with the 0-based index of the failing step attached.
    """
    keep = set(recorded_steps(timegrid.n_steps, record_every))
    if potential:
        v = sample_potential(params, grid)
    else:
        v = RealField(np.zeros(grid.m))
    psi = sample_initial_condition(params, grid)
    trajectory = [psi]
    for n in range(1, timegrid.n_steps + 1):
        try:
            psi = tsfs_step(psi, v, params, grid, timegrid.tau, picard,
                            nonlinear=nonlinear)
        except (ConvergenceError, DivergenceError) as exc:
            exc.step_index = n - 1
            raise
        if n in keep:
            trajectory.append(psi)
    return trajectory
