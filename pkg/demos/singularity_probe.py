"""Direct problem, and the experimental inverse probe.

Direct: place poles and branch points strictly outside the unit circle and
watch every Cauchy functional annihilate on the exterior while reproducing
the density inside - regardless of the singularity type.

Inverse (open problem, probed heuristically): given only boundary samples of
a function regular inside, estimate where its exterior singularities sit.
For meromorphic data a Pade fit of the Taylor coefficients recovers pole
locations and strengths; for branch cuts the denominator roots cluster along
the cut and the probe reports them as diagnostics without asserting poles.
"""

import numpy as np

from cauchykit import (SingularityPrescription, build_unit_circle,
                       catalog_function, cauchy_functional,
                       exterior_annihilation_check, pade_pole_probe,
                       taylor_coefficients)

contour, grid = build_unit_circle(256)
rng = np.random.default_rng(0)
targets = (1.1 + 3.0 * rng.random(50)) * np.exp(2j * np.pi * rng.random(50))

print("=== direct problem: exterior annihilation for every prescription ===")
catalog = {
    "simple pole at 2": SingularityPrescription("pole", 2.0 + 0.0j),
    "double pole at -1.5+1.5i": SingularityPrescription("pole", -1.5 + 1.5j,
                                                        order=2),
    "sqrt branch, cut [2, inf)": SingularityPrescription("algebraic-branch",
                                                         2.0 + 0.0j),
    "log branch, cut [3, inf)": SingularityPrescription("log-branch",
                                                        3.0 + 0.0j),
    "constant (Liouville edge)": SingularityPrescription("constant",
                                                         strength=1.0),
}
for name, pres in catalog.items():
    worst = exterior_annihilation_check(pres, contour, grid, targets,
                                        orders=(0, 1, 2))
    f = catalog_function(pres)
    z_in = 0.4 + 0.3j
    err_in = abs(cauchy_functional(f, contour, grid, z_in).value
                 - f(np.array([z_in]))[0])
    print(f"  {name:>26}:  max |J_n| outside = {worst:.1e}   "
          f"|J[f] - f| inside = {err_in:.1e}")

print()
print("=== Taylor coefficients see the nearest singularity ===")
for radius in (1.6, 2.0, 2.4):
    pres = SingularityPrescription("pole", radius * np.exp(0.8j))
    samples = catalog_function(pres)(contour.z(grid.nodes))
    coeffs = taylor_coefficients(samples, 45)
    n = np.arange(10, 41)
    slope = np.polyfit(n, np.log(np.abs(coeffs[10:41])), 1)[0]
    print(f"  pole radius {radius}: coefficient decay rate "
          f"{np.exp(-slope):.6f}")

print()
print("=== inverse probe on meromorphic boundary data ===")
f = catalog_function(catalog["simple pole at 2"])
samples = f(contour.z(grid.nodes))
report = pade_pole_probe(taylor_coefficients(samples, 63),
                         boundary_samples=samples)
print(f"  single pole: locations {[f'{z:.6f}' for z in report.locations]}, "
      f"strengths {[f'{s:.6f}' for s in report.strengths]}")
print(f"  degrees {report.degrees}, residual {report.residual:.1e} "
      f"on {report.residual_kind}, asserted = {report.poles_asserted}")

two = lambda t: 1.0 / (t - 2.0) + 0.5 / (t + 2.5)
samples2 = two(contour.z(grid.nodes))
report2 = pade_pole_probe(taylor_coefficients(samples2, 63),
                          boundary_samples=samples2)
print(f"  two poles:   locations {[f'{z:.6f}' for z in report2.locations]}, "
      f"strengths {[f'{s:.4f}' for s in report2.strengths]}")

print()
print("=== the probe declines to assert poles for branch data ===")
fb = catalog_function(catalog["sqrt branch, cut [2, inf)"])
samples_b = fb(contour.z(grid.nodes))
report_b = pade_pole_probe(taylor_coefficients(samples_b, 63),
                           boundary_samples=samples_b)
print(f"  poles_asserted = {report_b.poles_asserted}")
print(f"  root cluster along the cut: "
      f"{[f'{z:.3f}' for z in sorted(report_b.unfiltered_roots, key=abs)[:5]]}")
for note in report_b.notes:
    print(f"  note: {note}")
print()
print("  (existence of a general inverse solution is an open conjecture;")
print("   the probe reports one candidate and never claims uniqueness)")
