"""Implicit finite-difference stepping of the CGLS equation.

One step of the Crank-Nicolson-type scheme solves

    A psi^{n+1} = B psi^n - (1/(2 eps^2)) (|psi^{n+1}|^2 psi^{n+1}
                                           + |psi^n|^2 psi^n)

with the constant matrices

    A = (eta - i beta)/tau I + (h^-alpha / 2) G - diag(V)/(2 eps^2),
    B = (eta - i beta)/tau I - (h^-alpha / 2) G + diag(V)/(2 eps^2),

where G is the dense centered-difference operator matrix. A and B satisfy
A + B = 2 (eta - i beta)/tau I, the scheme's time-averaging symmetry. The
potential term is linear in the unknown, so it lives inside A and B; only
the cubic term is implicit, and it is resolved by Picard iteration with the
cubic lagged at the previous iterate. (psi)^2 conj(psi) is evaluated as
|psi|^2 psi, the identical form without cancellation.

A is factorized once per workspace and the factorization is reused by every
step and every Picard iterate, since only right-hand sides change. Boundary
rows use the same truncated stencil as interior rows (zero extension); no
ghost nodes. A wrap-around variant of the operator can be requested for
unit tests (single-mode amplification oracles) and is not part of the
product pipeline.

A workspace is owned by exactly one solve at a time: it carries the
factorization plus per-step iteration diagnostics. Distinct solves may run
concurrently on distinct workspaces.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg as sla

from .core import (CglsParams, ComplexField, GridSpec, TimeGrid,
                   sample_initial_condition, sample_potential)
from .errors import ConvergenceError, DivergenceError, SolverError
from .riesz import (FracCenteredStencil, assemble_operator_matrix,
                    periodic_operator_matrix, stencil_coefficients)

__all__ = [
    "PicardConfig",
    "IfdmWorkspace",
    "ifdm_prepare",
    "ifdm_step",
    "ifdm_solve",
    "DEFAULT_PICARD",
    "recorded_steps",
]


@dataclass(frozen=True)
class PicardConfig:
    """Stopping rule for the inner fixed-point iterations.

    tol bounds the max-norm distance between successive iterates; max_iter
    caps the iteration count before a ConvergenceError.
    """

    tol: float = 1e-10
    max_iter: int = 100

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError(f"tolerance must be positive, got {self.tol}")
        if self.max_iter < 1:
            raise ValueError(f"max_iter must be >= 1, got {self.max_iter}")


#: Default iteration budget of the implicit solver.
DEFAULT_PICARD = PicardConfig(tol=1e-10, max_iter=100)


@dataclass(eq=False)
class IfdmWorkspace:
    """Prepared linear system for a fixed (params, grid, tau) triple.

    picard_iterations and last_residuals are diagnostics refreshed by each
    step: the former accumulates one count per executed step, the latter
    holds the residual sequence of the most recent step.
    """

    params: CglsParams
    grid: GridSpec
    tau: float
    stencil: FracCenteredStencil
    potential: np.ndarray
    A: np.ndarray
    B: np.ndarray
    lu: tuple
    nonlinear: bool
    periodic: bool
    picard_iterations: list = field(default_factory=list)
    last_residuals: list = field(default_factory=list)


def ifdm_prepare(params: CglsParams, grid: GridSpec, tau: float,
                 nonlinear: bool = True, potential: bool = True,
                 periodic: bool = False) -> IfdmWorkspace:
    """Assemble A and B and factorize A once.

    nonlinear=False drops the cubic term (the step becomes a single linear
    solve); potential=False zeroes V; periodic=True assembles the
    wrap-around operator for single-mode unit tests.
    """
    if not tau > 0:
        raise ValueError(f"time step must be positive, got tau={tau}")
    stencil = stencil_coefficients(params.alpha, grid.m - 1)
    if periodic:
        G = periodic_operator_matrix(stencil, grid)
    else:
        G = assemble_operator_matrix(stencil, grid)
    if potential:
        V = sample_potential(params, grid).values
    else:
        V = np.zeros(grid.m)
    lam = (params.eta - 1j * params.beta) / tau
    half_op = 0.5 * grid.h ** (-params.alpha) * G
    v_part = np.diag(V / (2.0 * params.eps ** 2))
    eye = np.eye(grid.m)
    A = lam * eye + half_op - v_part
    B = lam * eye - half_op + v_part
    try:
        lu = sla.lu_factor(A)
    except sla.LinAlgError as exc:
        raise SolverError(
            f"factorization of the implicit system failed ({exc}); "
            "degenerate parameter choice"
        ) from exc
    return IfdmWorkspace(params=params, grid=grid, tau=tau, stencil=stencil,
                         potential=V, A=A, B=B, lu=lu, nonlinear=nonlinear,
                         periodic=periodic)


def ifdm_step(ws: IfdmWorkspace, psi_n: ComplexField,
              picard: PicardConfig = DEFAULT_PICARD) -> ComplexField:
    """Advance one time step.

    The Picard iteration starts from psi^{(0)} = psi^n, solves with the
    cubic lagged at the current iterate, and stops when successive iterates
    agree to picard.tol in max-norm. Raises ConvergenceError when the
    budget runs out and DivergenceError if an iterate goes non-finite.
    """
    if len(psi_n) != ws.grid.m:
        raise ValueError(
            f"field length {len(psi_n)} does not match workspace grid m={ws.grid.m}"
        )
    psi = psi_n.values
    scale = 1.0 / (2.0 * ws.params.eps ** 2)
    t_next = psi_n.time + ws.tau

    if not ws.nonlinear:
        out = sla.lu_solve(ws.lu, ws.B @ psi)
        if not np.all(np.isfinite(out)):
            raise DivergenceError("linear solve produced non-finite values")
        ws.picard_iterations.append(0)
        ws.last_residuals = []
        return ComplexField(out, time=t_next)

    rho_n = psi.real * psi.real + psi.imag * psi.imag
    base_rhs = ws.B @ psi - scale * (rho_n * psi)
    if not np.all(np.isfinite(base_rhs)):
        raise DivergenceError("right-hand side went non-finite at iterate 0")
    iterate = psi
    residuals = []
    for k in range(1, picard.max_iter + 1):
        rho_k = iterate.real * iterate.real + iterate.imag * iterate.imag
        rhs = base_rhs - scale * (rho_k * iterate)
        if not np.all(np.isfinite(rhs)):
            raise DivergenceError(f"right-hand side went non-finite at "
                                  f"iterate {k}")
        nxt = sla.lu_solve(ws.lu, rhs)
        if not np.all(np.isfinite(nxt)):
            raise DivergenceError(f"iterate {k} went non-finite")
        residual = float(np.max(np.abs(nxt - iterate)))
        residuals.append(residual)
        iterate = nxt
        if residual <= picard.tol:
            ws.picard_iterations.append(k)
            ws.last_residuals = residuals
            return ComplexField(iterate, time=t_next)
    raise ConvergenceError(
        f"Picard iteration did not reach tol={picard.tol} within "
        f"{picard.max_iter} iterations (residual {residuals[-1]:.3e})",
        residual=residuals[-1], iterations=picard.max_iter,
    )


def recorded_steps(n_steps: int, record_every: int) -> list:
    """Step indices a solve records: 0 and the last, plus every record_every-th."""
    if record_every < 1:
        raise ValueError(f"record_every must be >= 1, got {record_every}")
    steps = [n for n in range(n_steps + 1)
             if n == 0 or n == n_steps or n % record_every == 0]
    return steps


def ifdm_solve(params: CglsParams, grid: GridSpec, timegrid: TimeGrid,
               picard: PicardConfig = DEFAULT_PICARD, record_every: int = 1,
               nonlinear: bool = True, potential: bool = True,
               periodic: bool = False) -> list:
    """Run the implicit scheme from the benchmark initial condition.

    Returns the recorded trajectory: the initial field, then every
    record_every-th level, always including the final time. Step errors
    propagate with the 0-based index of the failing step attached.
    """
    keep = set(recorded_steps(timegrid.n_steps, record_every))
    ws = ifdm_prepare(params, grid, timegrid.tau, nonlinear=nonlinear,
                      potential=potential, periodic=periodic)
    psi = sample_initial_condition(params, grid)
    trajectory = [psi]
    for n in range(1, timegrid.n_steps + 1):
        try:
            psi = ifdm_step(ws, psi, picard)
        except (ConvergenceError, DivergenceError) as exc:
            exc.step_index = n - 1
            raise
        if n in keep:
            trajectory.append(psi)
    return trajectory
