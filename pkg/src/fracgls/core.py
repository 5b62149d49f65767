"""Domain types and model setup shared by both solvers.

The model solved throughout the package is the 1-D Riesz-fractional complex
Ginzburg-Landau-Schrodinger equation

    (eta - i*beta) dpsi/dt = d^alpha psi / d|x|^alpha
                             + (1/eps^2) (V(x) - |psi|^2) psi

on a uniform grid over [a, b] with the periodic node convention: m
subintervals give m stored nodes x_0..x_{m-1}, and x_m is identified with
x_0 by the discrete Fourier transform pair. The external potential is
V(x) = 1/(1 + exp(-gamma_x x^2)) and the benchmark initial state is the
constant-modulus plane wave of :func:`sample_initial_condition`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

__all__ = [
    "Quantity",
    "GridSpec",
    "TimeGrid",
    "CglsParams",
    "ComplexField",
    "RealField",
    "build_grid",
    "sample_potential",
    "sample_initial_condition",
    "field_quantity",
    "example_preset",
    "EXAMPLE_DOMAIN",
]

#: Benchmark spatial domain (a, b) used by the default presets.
EXAMPLE_DOMAIN = (-5.0, 5.0)


class Quantity(Enum):
    """Real-valued views of a complex field used by error tables."""

    ABS_SQUARED = "abs2"
    REAL_PART = "re"
    IMAG_PART = "im"


@dataclass(frozen=True)
class GridSpec:
    """Uniform spatial grid on [a, b] with m subintervals.

    Stores m nodes x_j = a + j*h, j = 0..m-1; the node x_m = b is identified
    with x_0 under the periodic convention, so fields never carry it.
    """

    a: float
    b: float
    m: int

    def __post_init__(self):
        if not self.b > self.a:
            raise ValueError(f"grid requires b > a, got a={self.a}, b={self.b}")
        if self.m < 4:
            raise ValueError(f"grid requires m >= 4 subintervals, got m={self.m}")
        if self.m % 2 != 0:
            raise ValueError(
                f"grid requires even m (spectral index window -m/2..m/2-1), got m={self.m}"
            )

    @property
    def h(self) -> float:
        """Grid spacing (b - a)/m."""
        return (self.b - self.a) / self.m

    @property
    def nodes(self) -> np.ndarray:
        """Node coordinates x_0..x_{m-1}."""
        return self.a + self.h * np.arange(self.m)


@dataclass(frozen=True)
class TimeGrid:
    """Uniform time stepping: n_steps steps of size tau."""

    tau: float
    n_steps: int

    def __post_init__(self):
        if not self.tau > 0:
            raise ValueError(f"time step must be positive, got tau={self.tau}")
        if self.n_steps < 1:
            raise ValueError(f"need at least one step, got n_steps={self.n_steps}")

    @property
    def t_final(self) -> float:
        return self.n_steps * self.tau

    @classmethod
    def from_final_time(cls, tau: float, t_final: float) -> "TimeGrid":
        """Build a grid reaching t_final, requiring t_final/tau integral.

        The ratio may be off an integer by at most 1e-9 relative, which
        absorbs decimal round-off in configs like tau=0.1, t_final=0.5.
        """
        if not tau > 0:
            raise ValueError(f"time step must be positive, got tau={tau}")
        ratio = t_final / tau
        n = round(ratio)
        if n < 1 or abs(ratio - n) > 1e-9 * max(1.0, abs(ratio)):
            raise ValueError(
                f"t_final={t_final} is not an integer multiple of tau={tau}"
            )
        return cls(tau=tau, n_steps=n)


@dataclass(frozen=True)
class CglsParams:
    """Model constants of the CGLS equation.

    eta >= 0 damps (dissipative part), beta != 0 disperses (Schrodinger
    part), eps in (0, 1] scales the nonlinearity, alpha in (1, 2] is the
    fractional order, gamma_x > 0 steepens the potential, and L > 0 sets
    the initial-condition wavelength.
    """

    eta: float
    beta: float
    eps: float
    alpha: float
    gamma_x: float = 1.0
    L: float = 100.0

    def __post_init__(self):
        if self.eta < 0:
            raise ValueError(f"eta must be >= 0, got {self.eta}")
        if self.beta == 0:
            raise ValueError("beta must be nonzero (complex-coefficient case)")
        if not 0 < self.eps <= 1:
            raise ValueError(f"eps must lie in (0, 1], got {self.eps}")
        if not 1 < self.alpha <= 2:
            raise ValueError(f"alpha must lie in (1, 2], got {self.alpha}")
        if not self.gamma_x > 0:
            raise ValueError(f"gamma_x must be positive, got {self.gamma_x}")
        if not self.L > 0:
            raise ValueError(f"L must be positive, got {self.L}")


def _as_locked_array(values, dtype) -> np.ndarray:
    arr = np.array(values, dtype=dtype)
    if arr.ndim != 1:
        raise ValueError(f"field values must be one-dimensional, got shape {arr.shape}")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class ComplexField:
    """Complex amplitudes psi_j on the grid nodes at one time level."""

    values: np.ndarray
    time: float = 0.0

    def __post_init__(self):
        arr = _as_locked_array(self.values, np.complex128)
        if not np.all(np.isfinite(arr)):
            raise ValueError("field contains non-finite entries (solver divergence "
                             "is an error, not a NaN field)")
        object.__setattr__(self, "values", arr)

    def __len__(self) -> int:
        return self.values.size


@dataclass(frozen=True, eq=False)
class RealField:
    """Real samples on the grid nodes (potential values, |psi|^2, ...)."""

    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", _as_locked_array(self.values, np.float64))

    def __len__(self) -> int:
        return self.values.size


def build_grid(a: float, b: float, m: int) -> GridSpec:
    """Validate and build the uniform grid on [a, b] with m subintervals."""
    return GridSpec(a=a, b=b, m=m)


def sample_potential(params: CglsParams, grid: GridSpec) -> RealField:
    """Sample V(x) = 1/(1 + exp(-gamma_x x^2)) at the grid nodes.

    Values lie in [1/2, 1) and increase with |x|; the profile is even.
    """
    x = grid.nodes
    return RealField(1.0 / (1.0 + np.exp(-params.gamma_x * x * x)))


def sample_initial_condition(params: CglsParams, grid: GridSpec) -> ComplexField:
    """Sample the benchmark plane wave sqrt(1-(20*pi/L)^2) exp(i(20*pi/L)x).

    The modulus is constant across the grid. Requires L > 20*pi so the
    amplitude is a positive real; L = 20*pi (zero amplitude) is rejected.
    """
    k = 20.0 * math.pi / params.L
    radicand = 1.0 - k * k
    if radicand <= 0:
        raise ValueError(
            f"initial condition needs (20*pi/L)^2 < 1, got L={params.L}"
        )
    amp = math.sqrt(radicand)
    return ComplexField(amp * np.exp(1j * k * grid.nodes), time=0.0)


def field_quantity(field: ComplexField, quantity: Quantity) -> RealField:
    """Extract |psi|^2, Re psi, or Im psi elementwise."""
    v = field.values
    if quantity is Quantity.ABS_SQUARED:
        out = v.real * v.real + v.imag * v.imag
    elif quantity is Quantity.REAL_PART:
        out = v.real.copy()
    elif quantity is Quantity.IMAG_PART:
        out = v.imag.copy()
    else:
        raise ValueError(f"unknown quantity {quantity!r}")
    return RealField(out)


def example_preset(alpha: float) -> CglsParams:
    """Benchmark parameter set: eta = beta = eps = gamma_x = 1, L = 100.

    The companion spatial domain is :data:`EXAMPLE_DOMAIN` with m = 50
    (h = 0.2) and the usual time step is tau = 0.1.
    """
    return CglsParams(eta=1.0, beta=1.0, eps=1.0, alpha=alpha, gamma_x=1.0, L=100.0)
