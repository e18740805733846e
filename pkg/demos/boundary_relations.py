"""Boundary values of Cauchy integrals on the unit circle.

The Cauchy integral J[f](z) reproduces f inside the contour and vanishes
outside.  On the contour itself the two one-sided limits exist and satisfy

    interior limit = f(t0)        (relation I: uniform continuity)
    exterior limit = 0
    (1/pi i) P.V. int f(t)/(t - t0) dt = f(t0)    (relation II)

This script evaluates both relations at a ring of boundary points for a
rational and an entire density, then sweeps targets across the whole plane
to show the residuals of the integral formula are uniformly small up to and
including the contour.
"""

import numpy as np

from cauchykit import (BoundaryFunction, boundary_value, build_unit_circle,
                       cauchy_functional, one_sided_limit,
                       uniform_convergence_residuals,
                       vanishing_contour_integral)

contour, grid = build_unit_circle(256)

densities = {
    "f(t) = 1/(t-2)": BoundaryFunction(
        lambda t: 1.0 / (t - 2.0),
        derivs=(lambda t: -1.0 / (t - 2.0) ** 2,)),
    "f(t) = exp(t)": BoundaryFunction(np.exp, derivs=(np.exp,)),
}

print("=== one-sided limits and the principal-value relation ===")
points = np.exp(2j * np.pi * np.arange(32) / 32)
for name, f in densities.items():
    res_interior = max(abs(one_sided_limit(f, contour, grid, t0, "interior")
                           - f(t0)) for t0 in points)
    res_exterior = max(abs(one_sided_limit(f, contour, grid, t0, "exterior"))
                       for t0 in points)
    res_pv = max(abs(boundary_value(f, contour, grid, t0) - f(t0))
                 for t0 in points)
    print(f"{name:>18}:  |f+ - f| = {res_interior:.2e}   "
          f"|f-| = {res_exterior:.2e}   |K_0[f] - f| = {res_pv:.2e}")

print()
print("=== uniform convergence of the integral formula across the plane ===")
rng = np.random.default_rng(0)
targets = np.concatenate([
    0.9 * np.sqrt(rng.random(40)) * np.exp(2j * np.pi * rng.random(40)),
    np.exp(2j * np.pi * np.arange(12) / 12),
    (1.35 + 2.0 * rng.random(40)) * np.exp(2j * np.pi * rng.random(40))])
for name, f in densities.items():
    rep = uniform_convergence_residuals(f, contour, grid, targets, 0)
    print(f"{name:>18}:  max |J[f] - f| inside+boundary = "
          f"{rep.max_inside:.2e}   max |J[f]| outside = {rep.max_outside:.2e}")

print()
print("=== the functional itself jumps across the contour ===")
f = densities["f(t) = 1/(t-2)"]
for r in (0.5, 0.9, 0.99, 1.01, 1.1, 2.0):
    z = r * np.exp(0.4j)
    val = cauchy_functional(f, contour, grid, z).value
    side = "inside " if r < 1 else "outside"
    print(f"  |z| = {r:4.2f} ({side}):  J[f](z) = {val:+.6f}   "
          f"f(z) = {f(np.array([z]))[0]:+.6f}")
print("  (the integral tracks f inside, then drops to zero outside: the")
print("   functional is not an analytic function across the contour)")

print()
print("=== contour integrals of the boundary functionals vanish ===")
for n in (0, 1):
    val = vanishing_contour_integral(f, contour, grid, n)
    print(f"  | contour-int K_{n}[f](z) dz | = {abs(val):.2e}")
