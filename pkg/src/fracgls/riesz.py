"""Fractional centered-difference approximation of the Riesz derivative.

The Riesz derivative of order alpha in (1, 2] acts on a grid function f as

    d^alpha f / d|x|^alpha  ~=  -h^(-alpha) * sum_j g_j f(x - j h),

a symmetric discrete convolution whose coefficients

    g_j = (-1)^j Gamma(alpha+1) / (Gamma(alpha/2 - j + 1) Gamma(alpha/2 + j + 1))

decay like |j|^(-1-alpha) and reduce to the classical (2, -1) second
difference at alpha = 2. The approximation is second-order accurate in h.

On a finite grid the convolution is truncated to in-domain indices: values
outside [a, b] are treated as zero. A wrap-around (periodic) application
mode exists for unit tests against the Fourier symbol; the implicit solver
uses the truncated form, and the periodic mode is a test-only device.

Matrices are assembled densely: at desk scale (m up to a few thousand) the
O(m^2) apply and the O(m^3) one-time factorization are both cheap, and the
dense form keeps the implicit solve plain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg as sla

from .core import ComplexField, GridSpec

__all__ = [
    "FracCenteredStencil",
    "stencil_coefficients",
    "apply_riesz",
    "assemble_operator_matrix",
    "periodic_operator_matrix",
    "fourier_symbol",
]


@dataclass(frozen=True, eq=False)
class FracCenteredStencil:
    """One-sided coefficient sequence g_0..g_M; g_{-j} = g_j by symmetry."""

    alpha: float
    coeffs: np.ndarray

    def __post_init__(self):
        if not 1 < self.alpha <= 2:
            raise ValueError(f"alpha must lie in (1, 2], got {self.alpha}")
        arr = np.array(self.coeffs, dtype=np.float64)
        if arr.ndim != 1 or arr.size < 2:
            raise ValueError("stencil needs coefficients g_0..g_M with M >= 1")
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    @property
    def M(self) -> int:
        """Largest stored offset."""
        return self.coeffs.size - 1


def stencil_coefficients(alpha: float, M: int) -> FracCenteredStencil:
    """Compute g_0..g_M by the ratio recurrence.

    The seed is g_0 = Gamma(alpha+1)/Gamma(alpha/2+1)^2 and successive
    coefficients follow from Gamma(z+1) = z Gamma(z):

        g_{j+1} = g_j * (j - alpha/2) / (j + alpha/2 + 1).

    The recurrence avoids evaluating Gamma at large arguments (overflow
    beyond offsets of about 170) and costs O(M). At alpha = 2 the j = 1
    ratio vanishes, so the sequence is exactly (2, -1, 0, 0, ...).
    """
    if not 1 < alpha <= 2:
        raise ValueError(f"alpha must lie in (1, 2], got {alpha}")
    if M < 1:
        raise ValueError(f"need M >= 1 offsets, got M={M}")
    g0 = math.gamma(alpha + 1.0) / math.gamma(alpha / 2.0 + 1.0) ** 2
    j = np.arange(M, dtype=np.float64)
    ratios = (j - alpha / 2.0) / (j + alpha / 2.0 + 1.0)
    coeffs = np.empty(M + 1)
    coeffs[0] = g0
    coeffs[1:] = g0 * np.cumprod(ratios)
    return FracCenteredStencil(alpha=alpha, coeffs=coeffs)


def _check_cover(stencil: FracCenteredStencil, m: int):
    if stencil.M < m - 1:
        raise ValueError(
            f"stencil covers offsets up to {stencil.M}, need {m - 1} for {m} nodes"
        )


def apply_riesz(stencil: FracCenteredStencil, field: ComplexField, h: float,
                periodic: bool = False) -> ComplexField:
    """Apply the discrete Riesz operator to a field.

    Default (truncated) mode keeps convolution indices inside 0..m-1,
    treating values outside the domain as zero:

        out_i = -h^(-alpha) * sum_{l=0..m-1} g_|i-l| f_l.

    With periodic=True the indices wrap around modulo m instead; this mode
    exists for operator unit tests against the Fourier symbol and is not
    part of the solver pipeline. The operator is linear in the field either
    way.
    """
    if not h > 0:
        raise ValueError(f"grid spacing must be positive, got h={h}")
    m = len(field)
    _check_cover(stencil, m)
    f = field.values
    g = stencil.coeffs[:m]
    if periodic:
        col = _periodic_column(g, m)
        out = sla.circulant(col) @ f
    else:
        kernel = np.concatenate([g[:0:-1], g])
        out = np.convolve(f, kernel)[m - 1:2 * m - 1]
    return ComplexField(-float(h) ** (-stencil.alpha) * out, time=field.time)


def _periodic_column(g: np.ndarray, m: int) -> np.ndarray:
    """Fold offsets j and j - m of the symmetric kernel onto residues mod m."""
    col = g.copy()
    col[1:] += g[:0:-1]
    return col


def assemble_operator_matrix(stencil: FracCenteredStencil, grid: GridSpec) -> np.ndarray:
    """Materialize the truncated convolution as a symmetric Toeplitz matrix.

    G[i, l] = g_|i-l|, so apply_riesz(field) = -h^(-alpha) * (G @ field).
    The matrix is real; complex right-hand sides upcast on multiply.
    """
    _check_cover(stencil, grid.m)
    return sla.toeplitz(stencil.coeffs[:grid.m])


def periodic_operator_matrix(stencil: FracCenteredStencil, grid: GridSpec) -> np.ndarray:
    """Wrap-around counterpart of :func:`assemble_operator_matrix`.

    Circulant with column c_0 = g_0, c_r = g_r + g_{m-r}; its eigenvalue on
    the grid mode exp(i mu_k x) is the symbol S(mu_k h). Test-only, like
    apply_riesz(periodic=True).
    """
    _check_cover(stencil, grid.m)
    return sla.circulant(_periodic_column(stencil.coeffs[:grid.m], grid.m))


def fourier_symbol(stencil: FracCenteredStencil, omega):
    """Evaluate S(omega) = g_0 + 2 sum_{j>=1} g_j cos(j omega).

    The symbol of the symmetric stencil is real, nonnegative for
    alpha in (1, 2] once M is large, and tends to (2 - 2 cos omega)^(alpha/2)
    as M grows. Accepts a scalar or an array of angles.
    """
    w = np.asarray(omega, dtype=np.float64)
    g = stencil.coeffs
    j = np.arange(1, g.size)
    s = g[0] + 2.0 * np.cos(np.multiply.outer(w, j)) @ g[1:]
    return float(s) if np.isscalar(omega) or w.ndim == 0 else s
