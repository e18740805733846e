"""Cauchy functionals, boundary relations, and integral-theorem checks.

The central objects are the order-n functionals

    J_n[f](z)     = (n!/2*pi*i) contour-int f(t)/(t-z)^(n+1) dt
    J_(n,m)[f](z) = ((n-m)!/2*pi*i) contour-int f^(m)(t)/(t-z)^(n-m+1) dt
    K_n[f](t0)    = (1/pi*i) P.V. contour-int f^(n)(t)/(t-t0) dt

which reproduce f^(n) inside the contour, annihilate outside, and reproduce
f^(n) on the contour, together with the mirrored complement functionals for
densities regular outside the contour and decaying at infinity.
"""

import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import CapabilityError, ContractError, OnContourError
from .geometry import (ClosedContour, PointClassification, QuadratureGrid,
                       classify_point, near_zone_width, pv_from_samples,
                       spectral_derivative, trig_interp)


@dataclass(frozen=True)
class BoundaryFunction:
    """Complex density on (a neighborhood of) a contour or arc.

    ``func`` must accept ndarray arguments.  ``derivs`` optionally supplies
    analytic derivative evaluators (derivs[0] is f', derivs[1] is f'', ...);
    when absent, derivative samples on a periodic grid are produced by
    differentiating the trigonometric interpolant of the boundary samples in
    the contour parameter and dividing by z'(s).  ``smoothness`` declares the
    continuous-differentiability order n (None means unlimited), ``decay``
    the exponent m in O(|z|^-m) at infinity for complement densities.
    """

    func: Callable
    derivs: tuple = ()
    smoothness: Optional[int] = None
    decay: Optional[float] = None

    def __call__(self, t):
        return self.func(np.asarray(t, dtype=complex))

    def derivative_callable(self, m: int):
        """Analytic m-th derivative evaluator, or None if not supplied."""
        if m == 0:
            return self.func
        if m <= len(self.derivs):
            return self.derivs[m - 1]
        return None

    def require_order(self, m: int):
        if self.smoothness is not None and m > self.smoothness:
            raise CapabilityError(
                f"density declares smoothness C^{self.smoothness}, "
                f"order {m} requested")

    def samples(self, contour: ClosedContour, grid: QuadratureGrid,
                m: int = 0) -> np.ndarray:
        """Samples of f^(m) at the grid nodes (spectral fallback)."""
        self.require_order(m)
        zs = contour.z(grid.nodes)
        dc = self.derivative_callable(m)
        if dc is not None:
            return np.asarray(dc(zs), dtype=complex)
        vals = np.asarray(self.func(zs), dtype=complex)
        dzs = contour.dz(grid.nodes)
        for _ in range(m):
            vals = spectral_derivative(vals) / dzs
        return vals

    def value_on(self, contour: ClosedContour, s0: float, m: int = 0,
                 grid: Optional[QuadratureGrid] = None) -> complex:
        """f^(m) at the on-contour point z(s0)."""
        t0 = contour.z(np.array([s0]))[0]
        dc = self.derivative_callable(m)
        if dc is not None:
            return complex(np.asarray(dc(np.array([t0])))[0])
        if grid is None:
            raise CapabilityError("need a grid to interpolate derivative samples")
        return complex(trig_interp(self.samples(contour, grid, m), s0)[0])


def validate_derivatives(f: BoundaryFunction, contour: ClosedContour,
                         grid: QuadratureGrid, rtol: float = 1e-6,
                         rng=None) -> float:
    """Max relative mismatch between supplied derivatives and spectral ones."""
    if not f.derivs:
        return 0.0
    rng = np.random.default_rng(rng)
    idx = rng.choice(grid.n, size=min(8, grid.n), replace=False)
    dzs = contour.dz(grid.nodes)
    worst = 0.0
    vals = np.asarray(f.func(contour.z(grid.nodes)), dtype=complex)
    for m in range(1, len(f.derivs) + 1):
        supplied = np.asarray(f.derivs[m - 1](contour.z(grid.nodes)))
        vals = spectral_derivative(vals) / dzs
        scale = np.max(np.abs(supplied)) + 1e-300
        worst = max(worst, float(np.max(np.abs((supplied - vals)[idx])) / scale))
    if worst > rtol:
        raise ContractError(
            f"supplied derivatives disagree with spectral estimates "
            f"({worst:.2e} relative)")
    return worst


@dataclass(frozen=True)
class FunctionalValue:
    """Value of a Cauchy-type functional with its evaluation context."""

    value: complex
    target: complex
    classification: PointClassification
    order: tuple = (0, 0)
    near_zone: bool = False


def _classify_off_contour(contour, grid, z):
    cl = classify_point(contour, grid, z)
    if cl.on_contour:
        raise OnContourError(
            "target lies on the contour; use boundary_value / one_sided_limit")
    return cl


def cauchy_functional(f: BoundaryFunction, contour: ClosedContour,
                      grid: QuadratureGrid, z: complex,
                      n: int = 0) -> FunctionalValue:
    """J_n[f](z): equals f^(n)(z) inside the contour and 0 outside.

    Targets in the near zone with n >= 1 are rerouted through the
    integrated-by-parts form with the first-order kernel, which stays well
    conditioned where the high-power kernel does not.
    """
    f.require_order(n)
    cl = _classify_off_contour(contour, grid, z)
    near = cl.distance < near_zone_width(contour, grid)
    if near and n >= 1:
        deriv = f.samples(contour, grid, n)
        value = _kernel_integral(deriv, contour, grid, z, 1) / (2j * np.pi)
    else:
        vals = f.samples(contour, grid, 0)
        value = _kernel_integral(vals, contour, grid, z, n + 1) \
            * float(math.factorial(n)) / (2j * np.pi)
    return FunctionalValue(value, complex(z), cl, (n, 0), near)


def _kernel_integral(samples, contour, grid, z, power):
    zs = contour.z(grid.nodes)
    dzs = contour.dz(grid.nodes)
    return complex(np.sum(samples * dzs * grid.weights / (zs - z) ** power))


def generalized_functional(f: BoundaryFunction, contour: ClosedContour,
                           grid: QuadratureGrid, z: complex, n: int,
                           m: int) -> FunctionalValue:
    """J_(n,m)[f](z), the m-times integrated-by-parts form of J_n.

    All m in 0..n are equivalent formulas for f^(n)(z) inside (and for 0
    outside); the first-order kernel at m = n is the best conditioned.
    """
    if not 0 <= m <= n:
        raise CapabilityError(f"need 0 <= m <= n, got (n, m) = ({n}, {m})")
    f.require_order(max(n, m))
    cl = _classify_off_contour(contour, grid, z)
    deriv = f.samples(contour, grid, m)
    value = _kernel_integral(deriv, contour, grid, z, n - m + 1) \
        * float(math.factorial(n - m)) / (2j * np.pi)
    near = cl.distance < near_zone_width(contour, grid)
    return FunctionalValue(value, complex(z), cl, (n, m), near)


def _locate_on(contour, grid, t0):
    s0, dist = contour.locate(t0)
    delta = contour.delta()
    if dist > delta:
        raise OnContourError(
            f"t0 is {dist:.3g} from the contour (delta={delta:.3g})")
    return s0


def boundary_value(f: BoundaryFunction, contour: ClosedContour,
                   grid: QuadratureGrid, t0: complex, n: int = 0) -> complex:
    """K_n[f](t0) = (1/pi*i) P.V. of f^(n)(t)/(t - t0) dt; equals f^(n)(t0)."""
    s0 = _locate_on(contour, grid, t0)
    samples = f.samples(contour, grid, n)
    at_t0 = f.value_on(contour, s0, n, grid)
    pv = pv_from_samples(samples, at_t0, contour, grid, s0)
    return pv / (1j * np.pi)


def one_sided_limit(f: BoundaryFunction, contour: ClosedContour,
                    grid: QuadratureGrid, t0: complex,
                    side: str = "interior") -> complex:
    """Limit of J[f](z) as z -> t0 from the chosen side of the contour.

    The interior limit reproduces f(t0) (relation I); the exterior limit
    is 0.
    """
    if side not in ("interior", "exterior"):
        raise ValueError("side must be 'interior' or 'exterior'")
    s0 = _locate_on(contour, grid, t0)
    samples = f.samples(contour, grid, 0)
    at_t0 = f.value_on(contour, s0, 0, grid)
    pv = pv_from_samples(samples, at_t0, contour, grid, s0)
    sign = 1.0 if side == "interior" else -1.0
    return sign * 0.5 * at_t0 + pv / (2j * np.pi)


def complement_functional(F: BoundaryFunction, contour: ClosedContour,
                          grid: QuadratureGrid, z: complex,
                          n: int = 0) -> FunctionalValue:
    """J-_n[F](z) = (-1/2*pi*i) int F^(n)(t)/(t-z) dt.

    Equals F^(n)(z) outside the contour, 0 inside, for F regular outside
    with declared decay O(|z|^-m), m >= 2.
    """
    if F.decay is None or F.decay < 2:
        raise ContractError("complement density must declare decay >= 2")
    F.require_order(n)
    cl = _classify_off_contour(contour, grid, z)
    deriv = F.samples(contour, grid, n)
    value = -_kernel_integral(deriv, contour, grid, z, 1) / (2j * np.pi)
    near = cl.distance < near_zone_width(contour, grid)
    return FunctionalValue(value, complex(z), cl, (n, n), near)


def complement_boundary_value(F: BoundaryFunction, contour: ClosedContour,
                              grid: QuadratureGrid, t0: complex,
                              n: int = 0) -> complex:
    """K-_n[F](t0) = (-1/pi*i) P.V. of F^(n)(t)/(t-t0) dt; equals F^(n)(t0)."""
    s0 = _locate_on(contour, grid, t0)
    samples = F.samples(contour, grid, n)
    at_t0 = F.value_on(contour, s0, n, grid)
    pv = pv_from_samples(samples, at_t0, contour, grid, s0)
    return -pv / (1j * np.pi)


@dataclass(frozen=True)
class ResidualReport:
    """Uniform-convergence residuals over a family of target points."""

    max_inside: float           # max |J_n[f](z) - f^(n)(z)| over D+ and C
    max_outside: float          # max |J_n[f](z)| over D- and C
    residuals: np.ndarray
    verdicts: tuple = field(default=())


def uniform_convergence_residuals(f: BoundaryFunction, contour: ClosedContour,
                                  grid: QuadratureGrid,
                                  targets: Sequence[complex],
                                  n: int = 0) -> ResidualReport:
    """Residuals g_n = J_n[f] - f^(n) on the closed interior and G_n = J_n[f]
    on the closed exterior; on the contour both reduce to the principal-value
    combination -f^(n)/2 + K_n/2, which vanishes identically.
    """
    res, verdicts = [], []
    max_in, max_out = 0.0, 0.0
    for z in targets:
        cl = classify_point(contour, grid, z)
        if cl.on_contour:
            s0 = _locate_on(contour, grid, z)
            samples = f.samples(contour, grid, n)
            at = f.value_on(contour, s0, n, grid)
            pv = pv_from_samples(samples, at, contour, grid, s0)
            g = abs(-0.5 * at + pv / (2j * np.pi))
            max_in = max(max_in, g)
            max_out = max(max_out, g)
        elif cl.inside:
            dc = f.derivative_callable(n)
            if dc is None and n > 0:
                raise CapabilityError(
                    "interior residuals at n > 0 need an analytic derivative")
            expected = complex(np.asarray(dc(np.array([z])))[0]) if n else \
                complex(np.asarray(f.func(np.array([z])))[0])
            g = abs(cauchy_functional(f, contour, grid, z, n).value - expected)
            max_in = max(max_in, g)
        else:
            g = abs(cauchy_functional(f, contour, grid, z, n).value)
            max_out = max(max_out, g)
        res.append(g)
        verdicts.append(cl.verdict)
    return ResidualReport(max_in, max_out, np.asarray(res), tuple(verdicts))


def vanishing_contour_integral(f: BoundaryFunction, contour: ClosedContour,
                               grid: QuadratureGrid, n: int = 0,
                               complement: bool = False) -> complex:
    """Contour integral of the on-contour functional K_n[f] (or K-_n[F]).

    Each integrand value is itself a principal-value integral; the result
    vanishes for admissible densities.
    """
    samples = f.samples(contour, grid, n)
    from .geometry import pv_at_all_nodes
    k_vals = pv_at_all_nodes(samples, contour, grid) / (1j * np.pi)
    if complement:
        if f.decay is None or f.decay < 2:
            raise ContractError("complement density must declare decay >= 2")
        k_vals = -k_vals
    dzs = contour.dz(grid.nodes)
    return complex(np.sum(k_vals * dzs * grid.weights))


def mean_value_check(f: BoundaryFunction, center: complex, radius: float,
                     grid: QuadratureGrid, n: int = 0):
    """Mean-value identity on a circle: f^(n)(center) vs the angular mean.

    Returns (lhs, rhs, gap).
    """
    dc = f.derivative_callable(n)
    if dc is None:
        raise CapabilityError("mean-value check needs f^(n) analytically")
    ring = center + radius * np.exp(1j * grid.nodes)
    rhs = complex(np.sum(np.asarray(dc(ring)) * grid.weights) / (2.0 * np.pi))
    lhs = complex(np.asarray(dc(np.array([center])))[0])
    return lhs, rhs, abs(lhs - rhs)


def derivative_bound_check(f: BoundaryFunction, z: complex, R: float, n: int,
                           m: int = 0, n_nodes: int = 512):
    """Cauchy-inequality bound (n-m)! R^-(n-m) max|f^(m)| against |f^(n)(z)|.

    Returns (bound, actual, satisfied).
    """
    if not 0 <= m <= n:
        raise CapabilityError("need 0 <= m <= n")
    ring = z + R * np.exp(2j * np.pi * np.arange(n_nodes) / n_nodes)
    dm = f.derivative_callable(m)
    if dm is not None:
        mvals = np.abs(np.asarray(dm(ring)))
    else:
        from .geometry import circle, periodic_trapezoid_grid
        c = circle(z, R)
        g = periodic_trapezoid_grid(n_nodes)
        mvals = np.abs(f.samples(c, g, m))
    bound = float(math.factorial(n - m)) * R ** (-(n - m)) * float(mvals.max())
    dn = f.derivative_callable(n)
    if dn is not None:
        actual = abs(complex(np.asarray(dn(np.array([z])))[0]))
    else:
        from .geometry import circle, periodic_trapezoid_grid
        c = circle(z, R)
        g = periodic_trapezoid_grid(n_nodes)
        actual = abs(cauchy_functional(f, c, g, z, n).value)
    return bound, actual, actual <= bound * (1.0 + 1e-12)
