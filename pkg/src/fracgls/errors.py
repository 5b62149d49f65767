"""Exception types shared by the solver modules.

Input validation raises plain :class:`ValueError`; the classes here cover
failures that occur while a solver is running, so callers can distinguish
"you configured this wrong" from "the iteration did not go through".
"""

from __future__ import annotations


class SolverError(RuntimeError):
    """Base class for runtime solver failures."""


class ConvergenceError(SolverError):
    """An inner fixed-point iteration exhausted its iteration budget.

    Attributes
    ----------
    residual : float
        Max-norm distance between the last two iterates.
    iterations : int
        Number of iterations performed.
    step_index : int or None
        Index of the failing time step when raised from a solve loop.
    """

    def __init__(self, message: str, residual: float, iterations: int,
                 step_index: int | None = None):
        super().__init__(message)
        self.residual = residual
        self.iterations = iterations
        self.step_index = step_index


class DivergenceError(SolverError):
    """An iterate left the representable range (non-finite values or a
    guarded exponent overflow).

    Attributes
    ----------
    step_index : int or None
        Index of the failing time step when raised from a solve loop.
    """

    def __init__(self, message: str, step_index: int | None = None):
        super().__init__(message)
        self.step_index = step_index
