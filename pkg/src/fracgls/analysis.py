"""Error norms, conservation checks, convergence fits, stability probes.

Discrete norms follow the conventions used throughout the package: the
conserved quantity is the weighted norm

    ||psi|| = sqrt( (b - a)/m  sum_j |psi_j|^2 ),

while error comparisons of real-valued quantities report the plain maximum
and the root mean square

    linf = max_j |d_j|,      l2 = sqrt( (1/N) sum_j d_j^2 ),

normalized by the actual number of compared nodes N.

Linear stability of the implicit scheme is probed through its single-mode
amplification factor with the potential and the modulus frozen: inserting
psi_j^n = xi^n exp(i omega x_j) into the scheme with V equiv V_frozen and
the squared modulus frozen at psi_max gives

    xi = (1 - w) / (1 + w),
    w = ( r S(omega h) - tau (V_frozen - psi_max) / (2 eps^2) )
        / (eta - i beta),

with r = tau / (2 h^alpha) and S the Fourier symbol of the stencil. When
eta = 0 the numerator and denominator are complex conjugates, so |xi| = 1
identically; eta > 0 with V_frozen <= psi_max pushes Re w > 0 and
|xi| < 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import (CglsParams, ComplexField, GridSpec, Quantity, RealField,
                   field_quantity)
from .riesz import FracCenteredStencil, fourier_symbol

__all__ = [
    "ErrorReport",
    "error_report",
    "discrete_l2_norm",
    "conservation_drift",
    "convergence_order",
    "AmplificationProbe",
    "amplification_factor",
    "probe_amplification",
    "amplification_sweep",
]


@dataclass(frozen=True, eq=False)
class ErrorReport:
    """Pointwise and summary errors of one quantity at one time."""

    quantity: Quantity
    pointwise: RealField
    l2: float
    linf: float
    t: float
    alpha: float


def error_report(field_a: ComplexField, field_b: ComplexField,
                 quantity: Quantity, grid: GridSpec,
                 alpha: float = float("nan")) -> ErrorReport:
    """Compare one derived quantity of two fields on the same grid.

    The report is tagged with field_a's time and, when given, the alpha the
    fields were computed for (reporting metadata only).
    """
    if len(field_a) != grid.m or len(field_b) != grid.m:
        raise ValueError(
            f"field lengths {len(field_a)}, {len(field_b)} do not match "
            f"grid m={grid.m}"
        )
    qa = field_quantity(field_a, quantity).values
    qb = field_quantity(field_b, quantity).values
    d = np.abs(qa - qb)
    return ErrorReport(
        quantity=quantity,
        pointwise=RealField(d),
        l2=float(np.sqrt(np.mean(d * d))),
        linf=float(np.max(d)),
        t=field_a.time,
        alpha=alpha,
    )


def discrete_l2_norm(field: ComplexField, grid: GridSpec) -> float:
    """Weighted norm sqrt((b-a)/m sum |psi_j|^2); the conserved quantity."""
    if len(field) != grid.m:
        raise ValueError(
            f"field length {len(field)} does not match grid m={grid.m}"
        )
    psi = field.values
    return float(np.sqrt((grid.b - grid.a) / grid.m
                         * np.sum(psi.real ** 2 + psi.imag ** 2)))


def conservation_drift(trajectory: list, grid: GridSpec) -> np.ndarray:
    """Relative deviation of the weighted norm from its initial value.

    Returns norm(t_n)/norm(t_0) - 1 for every recorded field. Rejects an
    initial field of zero norm, for which relative drift is undefined.
    """
    if not trajectory:
        raise ValueError("trajectory is empty")
    norms = np.array([discrete_l2_norm(f, grid) for f in trajectory])
    if norms[0] == 0.0:
        raise ValueError("initial field has zero norm; relative drift undefined")
    return norms / norms[0] - 1.0


def convergence_order(pairs: list) -> float:
    """Least-squares slope of log(error) against log(step size).

    pairs holds (step_size, error) tuples; at least two are required and
    both entries must be strictly positive, since a zero error has no
    logarithm and indicates the comparison is degenerate.
    """
    if len(pairs) < 2:
        raise ValueError(f"need at least two (step, error) pairs, got {len(pairs)}")
    steps = np.array([p[0] for p in pairs], dtype=np.float64)
    errors = np.array([p[1] for p in pairs], dtype=np.float64)
    if not np.all(steps > 0):
        raise ValueError("step sizes must be strictly positive")
    if not np.all(errors > 0):
        raise ValueError("errors must be strictly positive; a zero error "
                         "makes the fit degenerate")
    slope = np.polyfit(np.log(steps), np.log(errors), 1)[0]
    return float(slope)


@dataclass(frozen=True)
class AmplificationProbe:
    """One evaluation of the frozen-coefficient amplification factor."""

    omega: float
    v_frozen: float
    psi_max: float
    r: float
    xi: complex


def amplification_factor(params: CglsParams, stencil: FracCenteredStencil,
                         h: float, tau: float, omega: float,
                         v_frozen: float, psi_max: float) -> complex:
    """Single-mode amplification factor xi of the implicit scheme.

    psi_max is the frozen squared modulus (the bound on |psi_j|^2), so it
    enters the formula directly alongside v_frozen.
    """
    if stencil.alpha != params.alpha:
        raise ValueError(
            f"stencil order {stencil.alpha} does not match params.alpha="
            f"{params.alpha}"
        )
    if not h > 0:
        raise ValueError(f"grid spacing must be positive, got h={h}")
    if not tau > 0:
        raise ValueError(f"time step must be positive, got tau={tau}")
    if psi_max < 0:
        raise ValueError(f"psi_max must be nonnegative, got {psi_max}")
    s = fourier_symbol(stencil, omega * h)
    r = tau / (2.0 * h ** stencil.alpha)
    lam = params.eta - 1j * params.beta
    w = (r * s - tau * (v_frozen - psi_max)
         / (2.0 * params.eps ** 2)) / lam
    denom = 1.0 + w
    if abs(denom) < 1e-14 * max(1.0, abs(w)):
        # Unreachable for beta != 0: w then has a nonzero imaginary part
        # whenever its numerator is nonzero, and w = -1 needs a real w.
        raise ValueError(
            f"degenerate parameters: 1 + w vanishes at omega={omega}"
        )
    return complex((1.0 - w) / denom)


def probe_amplification(params: CglsParams, stencil: FracCenteredStencil,
                        h: float, tau: float, omega: float,
                        v_frozen: float, psi_max: float) -> AmplificationProbe:
    """amplification_factor plus the inputs that produced it."""
    xi = amplification_factor(params, stencil, h, tau, omega,
                              v_frozen, psi_max)
    return AmplificationProbe(omega=omega, v_frozen=v_frozen,
                              psi_max=psi_max,
                              r=tau / (2.0 * h ** stencil.alpha), xi=xi)


def amplification_sweep(params: CglsParams, stencil: FracCenteredStencil,
                        h: float, tau: float, omega_count: int,
                        v_frozen: float, psi_max: float) -> float:
    """Worst |xi| over omega_count frequencies uniform on (0, pi/h]."""
    if omega_count < 2:
        raise ValueError(f"omega_count must be >= 2, got {omega_count}")
    omegas = (math.pi / h) * np.arange(1, omega_count + 1) / omega_count
    worst = 0.0
    for omega in omegas:
        xi = amplification_factor(params, stencil, h, tau, float(omega),
                                  v_frozen, psi_max)
        worst = max(worst, abs(xi))
    return worst
