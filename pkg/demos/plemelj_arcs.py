"""Cauchy-type integrals along open arcs and their jump relations.

Unlike the closed-contour functional, the arc integral

    f(z) = (1/2 pi i) int_L g(t)/(t - z) dt

is one analytic function everywhere off the arc, dying out like 1/z at
infinity.  Approaching an interior arc point from the two sides gives limits
that differ exactly by the density g, and the function is recoverable from
that jump alone.  Nested principal values obey the order-exchange identity
with its -pi^2 g(x, x) correction.
"""

import numpy as np

from cauchykit import (ArcDensity, arc_cauchy_integral, gauss_panel_grid,
                       plemelj_limits, poincare_bertrand_residual,
                       reconstruct_from_jump, segment)

arc = segment(-1.0, 1.0)
grid = gauss_panel_grid(24, 12)
g = ArcDensity(lambda t: 1.0 - t ** 2)

print("=== the arc integral off the chord [-1, 1] ===")
for z in (2j, 1.5 + 0.5j, -0.3 - 2.0j):
    val = arc_cauchy_integral(g, arc, grid, z)
    print(f"  f({z:+.1f}) = {val:+.10f}")
z_far = 1e3 * np.exp(0.7j)
moment = -(4.0 / 3.0) / (2j * np.pi)       # (1/2 pi i) int (1-t^2) dt
print(f"  far field: z f(z) at |z|=1e3 = {z_far * arc_cauchy_integral(g, arc, grid, z_far):+.6f}")
print(f"  residue prediction              = {moment:+.6f}")

print()
print("=== one-sided limits and the jump ===")
print("  x0      f+              f-              (f+ - f-)    g(x0)")
for x0 in (-0.6, 0.0, 0.3, 0.8):
    plus, minus = plemelj_limits(g, arc, grid, complex(x0))
    jump = (plus.value - minus.value).real
    print(f"  {x0:+4.1f}  {plus.value:+.6f}  {minus.value:+.6f}  "
          f"{jump:+.6f}    {1.0 - x0 ** 2:+.6f}")

print()
print("=== reconstruction from the jump ===")
for z in (2j, -1.4 + 0.8j):
    direct = arc_cauchy_integral(g, arc, grid, z)
    rebuilt = reconstruct_from_jump(g, arc, grid, z)
    print(f"  z = {z:+.1f}: direct {direct:+.10f}  from jump {rebuilt:+.10f}")

print()
print("=== closing the arc flips the world ===")
print("  an almost-closed circular arc behaves like the open-arc theory")
print("  (plus/minus limits straddling the density), but once closed the")
print("  plus limit becomes f itself and the minus limit collapses to 0;")
print("  see tests/test_plemelj.py::test_closure_consistency_with_closed_contour")

print()
print("=== Poincare-Bertrand order exchange ===")
for name, f2 in (("1", lambda t, tp: np.ones_like(np.asarray(t, dtype=complex))),
                 ("t t'", lambda t, tp: np.asarray(t) * tp),
                 ("t^2 + t'^2", lambda t, tp: np.asarray(t) ** 2
                  + np.asarray(tp) ** 2)):
    res = poincare_bertrand_residual(f2, arc, grid, 0.2 + 0.0j)
    print(f"  f2 = {name:>10}:  |LHS - RHS| = {res:.2e}")
