"""
Measuring temporal convergence order
====================================

Both solvers are built from second order pieces. Halving the time step
twice against a fine reference solution exposes the observed order as
the slope of the error curve on log axes.
"""

import numpy as np

from fracgls import (EXAMPLE_DOMAIN, GridSpec, TimeGrid,
                     convergence_order, example_preset, ifdm_solve,
                     tsfs_solve)

params = example_preset(alpha=1.5)
grid = GridSpec(a=EXAMPLE_DOMAIN[0], b=EXAMPLE_DOMAIN[1], m=50)
t_final = 0.5

# A solve recorded only at its final level stands in for the exact
# solution when its step is 16 times finer than the coarsest run.
reference_grid = TimeGrid.from_final_time(tau=0.1 / 16.0, t_final=t_final)

for name, solve in (("splitting", tsfs_solve), ("implicit", ifdm_solve)):
    reference = solve(params, grid, reference_grid,
                      record_every=reference_grid.n_steps)[-1]

    # Each refinement halves tau. The max-norm error against the
    # reference should then shrink by about a factor of four.
    pairs = []
    for level in range(3):
        tau = 0.1 / 2 ** level
        timegrid = TimeGrid.from_final_time(tau=tau, t_final=t_final)
        final = solve(params, grid, timegrid,
                      record_every=timegrid.n_steps)[-1]
        err = float(np.max(np.abs(final.values - reference.values)))
        pairs.append((tau, err))
        print(f"{name}:  tau = {tau:.4f}   error = {err:.4e}")

    order = convergence_order(pairs)
    print(f"{name}: observed temporal order {order:.3f}\n")
