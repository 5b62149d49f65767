"""
Von Neumann amplification sweep
===============================

Freezing the potential and the density turns one implicit step into a
multiplier on each spatial frequency. Scanning that multiplier over the
resolvable band shows whether any mode can grow.
"""

import numpy as np

from fracgls import (EXAMPLE_DOMAIN, CglsParams, GridSpec,
                     amplification_factor, amplification_sweep,
                     example_preset, sample_potential,
                     stencil_coefficients)

params = example_preset(alpha=1.5)
grid = GridSpec(a=EXAMPLE_DOMAIN[0], b=EXAMPLE_DOMAIN[1], m=50)
tau = 0.1
stencil = stencil_coefficients(params.alpha, grid.m - 1)

# Freeze both nonlinear terms at the largest value the potential takes
# on the grid, the most pessimistic balanced choice.
v_max = float(np.max(sample_potential(params, grid).values))

# A coarse scan of the band (0, pi/h] locates the least damped mode.
print("omega      |xi|")
for omega in np.pi / grid.h * np.arange(1, 9) / 8.0:
    xi = amplification_factor(params, stencil, omega=omega, h=grid.h,
                              tau=tau, v_frozen=v_max, psi_max=v_max)
    print(f"{omega:7.4f}   {abs(xi):.12f}")

# The dense sweep confirms the scan. With dissipation active every
# frequency is damped, so the worst magnitude stays below one.
worst = amplification_sweep(params, stencil, h=grid.h, tau=tau,
                            omega_count=1024, v_frozen=v_max,
                            psi_max=v_max)
print(f"\nmax |xi| over 1024 frequencies: {worst:.12f}")

# Removing dissipation makes the scheme purely rotational and the
# sweep sits on the unit circle to round-off.
lossless = CglsParams(eta=0.0, beta=params.beta, eps=params.eps,
                      alpha=params.alpha)
unit = amplification_sweep(lossless, stencil, h=grid.h, tau=tau,
                           omega_count=1024, v_frozen=v_max, psi_max=v_max)
print(f"max |xi| without dissipation:   {unit:.12f}")
