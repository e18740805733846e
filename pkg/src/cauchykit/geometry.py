"""Contours, arcs, quadrature grids, point classification, and contour
integration primitives (plain and principal-value).

Closed contours are parameterized over [0, 2*pi) and integrated with the
periodic trapezoid rule, which is spectrally accurate for analytic
integrands.  Open arcs are parameterized over [0, 1] and integrated with
composite Gauss-Legendre panels.  Principal values are never computed by
grid-level indentation: the singularity is subtracted analytically and the
smooth remainder is integrated at full rule accuracy.
"""

import warnings
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

import numpy as np

from .errors import DomainError, InvalidGridError, NonFiniteError

TWO_PI = 2.0 * np.pi

# On-contour tolerance delta, as a fraction of contour length.
DELTA_FRACTION = 1e-8

# Near-zone width, in multiples of (contour length / node count).  Targets
# closer to the contour than this are resolvable only with a conditioning
# caveat: the kernel peaks faster than the grid.
NEAR_ZONE_FACTOR = 10.0

# Analytic principal value of the bare Cauchy kernel integrated over any
# smooth closed contour against dz/(t0 - z), for t0 on the contour.
PV_SINGULAR_WEIGHT = -1j * np.pi


# ---------------------------------------------------------------------------
# quadrature grids


@dataclass(frozen=True)
class QuadratureGrid:
    """Nodes and weights of a fixed quadrature rule on a parameter interval."""

    nodes: np.ndarray
    weights: np.ndarray
    kind: str

    @property
    def n(self):
        return self.nodes.size


def periodic_trapezoid_grid(n: int) -> QuadratureGrid:
    """Equispaced trapezoid rule on [0, 2*pi); n must be even and >= 8."""
    if n < 8 or n % 2:
        raise InvalidGridError(f"periodic trapezoid grid needs even n >= 8, got {n}")
    s = TWO_PI * np.arange(n) / n
    w = np.full(n, TWO_PI / n)
    return QuadratureGrid(s, w, "periodic-trapezoid")


@lru_cache(maxsize=64)
def _leggauss(order):
    return np.polynomial.legendre.leggauss(order)


def panels_from_breakpoints(breaks, order: int = 12) -> QuadratureGrid:
    """Composite Gauss-Legendre rule over consecutive [breaks] intervals."""
    breaks = np.asarray(breaks, dtype=float)
    if breaks.size < 2 or np.any(np.diff(breaks) <= 0):
        raise InvalidGridError("breakpoints must be strictly increasing")
    x0, w0 = _leggauss(order)
    nodes, weights = [], []
    for lo, hi in zip(breaks[:-1], breaks[1:]):
        h = 0.5 * (hi - lo)
        nodes.append(lo + h * (x0 + 1.0))
        weights.append(h * w0)
    return QuadratureGrid(np.concatenate(nodes), np.concatenate(weights),
                          "gauss-legendre-panels")


def gauss_panel_grid(n_panels: int = 24, order: int = 12, grade: int = 0,
                     a: float = 0.0, b: float = 1.0) -> QuadratureGrid:
    """Composite Gauss-Legendre panels on [a, b].

    ``grade`` dyadically subdivides the first and last panel that many times,
    clustering nodes toward the endpoints (used for densities or induced
    integrands with integrable endpoint singularities).
    """
    if n_panels < 1 or order < 2:
        raise InvalidGridError("need at least one panel and order >= 2")
    edges = np.linspace(a, b, n_panels + 1)
    breaks = list(edges)
    if grade > 0:
        w0 = edges[1] - edges[0]
        left = [a + w0 * 2.0 ** (-j) for j in range(grade, 0, -1)]
        wn = edges[-1] - edges[-2]
        right = [b - wn * 2.0 ** (-j) for j in range(1, grade + 1)]
        breaks = [a] + left + list(edges[1:-1]) + right + [b]
    return panels_from_breakpoints(breaks, order)


# ---------------------------------------------------------------------------
# contours and arcs


@dataclass(frozen=True)
class ClosedContour:
    """Counterclockwise simple closed curve z(s), s in [0, 2*pi).

    ``z`` and ``dz`` must accept ndarray arguments.  ``kind`` of "circle"
    enables exact point location; generic smooth contours are located by a
    sampled search refined with Newton steps.
    """

    z: Callable
    dz: Callable
    d2z: Optional[Callable] = None
    kind: str = "generic"
    center: complex = 0.0 + 0.0j
    radius: float = 0.0

    def length(self, n: int = 1024) -> float:
        s = TWO_PI * np.arange(n) / n
        return float(np.sum(np.abs(self.dz(s))) * TWO_PI / n)

    def locate(self, point: complex, n: int = 2048):
        """Parameter s0 of the closest curve point and the distance to it."""
        if not np.isfinite(point):
            raise DomainError("cannot locate a non-finite point")
        if self.kind == "circle":
            rel = point - self.center
            s0 = float(np.angle(rel)) % TWO_PI
            return s0, abs(abs(rel) - self.radius)
        s = TWO_PI * np.arange(n) / n
        d2 = np.abs(self.z(s) - point) ** 2
        s0 = float(s[int(np.argmin(d2))])
        h = 1e-6
        for _ in range(8):
            zz = self.z(np.array([s0]))[0] - point
            dz = self.dz(np.array([s0]))[0]
            if self.d2z is not None:
                ddz = self.d2z(np.array([s0]))[0]
            else:
                ddz = (self.dz(np.array([s0 + h]))[0]
                       - self.dz(np.array([s0 - h]))[0]) / (2 * h)
            g = 2.0 * np.real(np.conj(zz) * dz)
            gg = 2.0 * (np.abs(dz) ** 2 + np.real(np.conj(zz) * ddz))
            if gg <= 0:
                break
            step = g / gg
            s0 = (s0 - step) % TWO_PI
            if abs(step) < 1e-15:
                break
        return s0, float(np.abs(self.z(np.array([s0]))[0] - point))

    def delta(self, frac: float = DELTA_FRACTION) -> float:
        """Default on-contour tolerance band."""
        return frac * self.length()

    def reversed(self):
        """Same curve traversed clockwise (the complement orientation)."""
        z, dz, d2z = self.z, self.dz, self.d2z
        return ClosedContour(
            z=lambda s: z(TWO_PI - np.asarray(s)),
            dz=lambda s: -dz(TWO_PI - np.asarray(s)),
            d2z=None if d2z is None else (lambda s: d2z(TWO_PI - np.asarray(s))),
            kind="generic", center=self.center, radius=self.radius)


def circle(center: complex = 0.0 + 0.0j, radius: float = 1.0) -> ClosedContour:
    if radius <= 0:
        raise DomainError("circle radius must be positive")
    c, r = complex(center), float(radius)
    return ClosedContour(
        z=lambda s: c + r * np.exp(1j * np.asarray(s, dtype=float)),
        dz=lambda s: 1j * r * np.exp(1j * np.asarray(s, dtype=float)),
        d2z=lambda s: -r * np.exp(1j * np.asarray(s, dtype=float)),
        kind="circle", center=c, radius=r)


def ellipse(a: float, b: float) -> ClosedContour:
    """Counterclockwise ellipse with semi-axes a (real) and b (imaginary)."""
    if a <= 0 or b <= 0:
        raise DomainError("ellipse semi-axes must be positive")
    return ClosedContour(
        z=lambda s: a * np.cos(np.asarray(s, dtype=float))
        + 1j * b * np.sin(np.asarray(s, dtype=float)),
        dz=lambda s: -a * np.sin(np.asarray(s, dtype=float))
        + 1j * b * np.cos(np.asarray(s, dtype=float)),
        d2z=lambda s: -a * np.cos(np.asarray(s, dtype=float))
        - 1j * b * np.sin(np.asarray(s, dtype=float)),
        kind="generic")


def build_unit_circle(n: int):
    """Unit circle z(s) = exp(i s) with an n-node periodic trapezoid grid."""
    return circle(0.0, 1.0), periodic_trapezoid_grid(n)


def validate_contour(contour: ClosedContour, grid: QuadratureGrid):
    """Check simplicity, regularity and orientation at grid resolution."""
    zs = contour.z(grid.nodes)
    dzs = contour.dz(grid.nodes)
    if np.min(np.abs(dzs)) <= 0:
        raise DomainError("contour derivative vanishes at a node")
    # pairwise node separation: simple at sample resolution
    diff = np.abs(zs[:, None] - zs[None, :])
    np.fill_diagonal(diff, np.inf)
    min_gap = diff.min()
    mean_gap = contour.length() / grid.n
    if min_gap < 0.1 * mean_gap:
        raise DomainError("contour self-intersects at sample resolution")
    inside = np.mean(zs)
    wind = np.sum(dzs * grid.weights / (zs - inside)) / (2j * np.pi)
    if abs(wind - 1.0) > 1e-6:
        raise DomainError("contour winding about an interior point is not +1")


@dataclass(frozen=True)
class JordanArc:
    """Open regular path z(s), s in [0, 1], endpoints a = z(0), b = z(1)."""

    z: Callable
    dz: Callable
    d2z: Optional[Callable] = None
    infinite: bool = False
    decay: Optional[float] = None

    @property
    def a(self) -> complex:
        return complex(self.z(np.array([0.0]))[0])

    @property
    def b(self) -> complex:
        return complex(self.z(np.array([1.0]))[0])

    def length(self, n: int = 1024) -> float:
        s = (np.arange(n) + 0.5) / n
        return float(np.mean(np.abs(self.dz(s))))

    def locate(self, point: complex, n: int = 2048):
        s = (np.arange(n) + 0.5) / n
        d2 = np.abs(self.z(s) - point) ** 2
        s0 = float(s[int(np.argmin(d2))])
        h = 1e-7
        for _ in range(8):
            zz = self.z(np.array([s0]))[0] - point
            dz = self.dz(np.array([s0]))[0]
            if self.d2z is not None:
                ddz = self.d2z(np.array([s0]))[0]
            else:
                ddz = (self.dz(np.array([min(s0 + h, 1.0)]))[0]
                       - self.dz(np.array([max(s0 - h, 0.0)]))[0]) / (2 * h)
            g = 2.0 * np.real(np.conj(zz) * dz)
            gg = 2.0 * (np.abs(dz) ** 2 + np.real(np.conj(zz) * ddz))
            if gg <= 0:
                break
            s0 = min(max(s0 - g / gg, 0.0), 1.0)
        return s0, float(np.abs(self.z(np.array([s0]))[0] - point))


def segment(a: complex, b: complex) -> JordanArc:
    """Straight arc from a to b."""
    if a == b:
        raise DomainError("arc endpoints must differ")
    a, b = complex(a), complex(b)
    return JordanArc(
        z=lambda s: a + (b - a) * np.asarray(s, dtype=float),
        dz=lambda s: np.full(np.shape(np.asarray(s)), b - a, dtype=complex),
        d2z=lambda s: np.zeros(np.shape(np.asarray(s)), dtype=complex))


# ---------------------------------------------------------------------------
# point classification


@dataclass(frozen=True)
class PointClassification:
    """Inside / on-contour / outside verdict with its supporting numbers."""

    verdict: str                # "inside" | "on-contour" | "outside"
    winding: int
    winding_estimate: complex
    distance: float
    delta: float
    ill_conditioned: bool = False

    @property
    def inside(self):
        return self.verdict == "inside"

    @property
    def outside(self):
        return self.verdict == "outside"

    @property
    def on_contour(self):
        return self.verdict == "on-contour"


def classify_point(contour: ClosedContour, grid: QuadratureGrid, z: complex,
                   delta: Optional[float] = None) -> PointClassification:
    """Classify z against the contour by winding number and node distance."""
    if not np.isfinite(z):
        raise DomainError("cannot classify a non-finite point")
    if delta is None:
        delta = contour.delta()
    if delta <= 0:
        raise DomainError("tolerance band delta must be positive")
    zs = contour.z(grid.nodes)
    dzs = contour.dz(grid.nodes)
    dist = float(np.min(np.abs(zs - z)))
    if contour.kind == "circle":
        dist = min(dist, abs(abs(z - contour.center) - contour.radius))
    wind = complex(np.sum(dzs * grid.weights / (zs - z)) / (2j * np.pi)) \
        if dist > 0 else complex(np.nan)
    rounded = int(np.round(np.real(wind))) if np.isfinite(wind) else 0
    converged = np.isfinite(wind) and abs(wind - rounded) < 0.25
    if dist < delta:
        return PointClassification("on-contour", rounded, wind, dist, delta,
                                   ill_conditioned=not converged)
    verdict = "inside" if rounded >= 1 else "outside"
    return PointClassification(verdict, rounded, wind, dist, delta,
                               ill_conditioned=not converged)


def near_zone_width(contour: ClosedContour, grid: QuadratureGrid) -> float:
    return NEAR_ZONE_FACTOR * contour.length() / grid.n


# ---------------------------------------------------------------------------
# contour integration


def contour_integral(f, contour: ClosedContour, grid: QuadratureGrid) -> complex:
    """Plain contour integral: sum of f(z(s_j)) z'(s_j) w_j.

    Vanishes to rule accuracy for f regular inside and on the contour.
    """
    vals = np.asarray(f(contour.z(grid.nodes)), dtype=complex)
    if not np.all(np.isfinite(vals)):
        raise NonFiniteError("integrand is non-finite at a quadrature node")
    return complex(np.sum(vals * contour.dz(grid.nodes) * grid.weights))


def pv_singular_weight(contour: ClosedContour, t0: complex,
                       delta: Optional[float] = None) -> complex:
    """Principal value of the bare kernel, P.V. of dz/(t0 - z) over the contour.

    Equal to -i*pi for every smooth closed contour and every on-contour t0
    (equivalently +i*pi for the kernel dz/(z - t0)).
    """
    if delta is None:
        delta = contour.delta()
    _, dist = contour.locate(t0)
    if dist > delta:
        raise DomainError(f"t0 is {dist:.3g} from the contour (delta={delta:.3g})")
    return PV_SINGULAR_WEIGHT


def spectral_derivative(samples: np.ndarray) -> np.ndarray:
    """Derivative of 2*pi-periodic samples via the trigonometric interpolant."""
    samples = np.asarray(samples, dtype=complex)
    n = samples.size
    k = np.fft.fftfreq(n, 1.0 / n)
    return np.fft.ifft(1j * k * np.fft.fft(samples))


def trig_interp(samples: np.ndarray, s) -> np.ndarray:
    """Evaluate the trigonometric interpolant of periodic samples at s."""
    samples = np.asarray(samples, dtype=complex)
    n = samples.size
    coef = np.fft.fft(samples) / n
    k = np.fft.fftfreq(n, 1.0 / n)
    s = np.atleast_1d(np.asarray(s, dtype=float))
    out = np.exp(1j * np.outer(s, k)) @ coef
    return out


def _wrapped_param_dist(s, s0):
    return np.abs((s - s0 + np.pi) % TWO_PI - np.pi)


def pv_from_samples(samples: np.ndarray, value_at_t0: complex,
                    contour: ClosedContour, grid: QuadratureGrid,
                    s0: float) -> complex:
    """P.V. of g(t)/(t - t0) dt over the contour, g given by grid samples.

    t0 = z(s0) lies on the contour.  The difference quotient
    (g(t) - g(t0))/(t - t0) is smooth, so the trapezoid rule applies at full
    accuracy; the subtracted pole contributes the analytic constant
    +i*pi*g(t0).  When s0 coincides with a grid node the removable value is
    the parameter derivative of the samples there, taken spectrally.
    """
    samples = np.asarray(samples, dtype=complex)
    s = grid.nodes
    zs = contour.z(s)
    dzs = contour.dz(s)
    t0 = contour.z(np.array([s0]))[0]
    d = _wrapped_param_dist(s, s0)
    j0 = int(np.argmin(d))
    with np.errstate(divide="ignore", invalid="ignore"):
        quotient = (samples - value_at_t0) * dzs / (zs - t0)
    if d[j0] < 1e-9:
        quotient[j0] = spectral_derivative(samples)[j0]
    smooth = complex(np.sum(quotient * grid.weights))
    return smooth + value_at_t0 * (1j * np.pi)


def pv_contour_integral(f, contour: ClosedContour, grid: QuadratureGrid,
                        t0: complex, delta: Optional[float] = None) -> complex:
    """Principal value of f(t)/(t - t0) dt over the contour, t0 on it.

    Satisfies the boundary relation P.V. of f/(t - t0) = i*pi*f(t0) for f
    regular inside and on the contour; the location-independent constant for
    the reversed kernel is available as :func:`pv_singular_weight`.
    """
    if delta is None:
        delta = contour.delta()
    s0, dist = contour.locate(t0)
    if dist > delta:
        raise DomainError(f"t0 is {dist:.3g} from the contour (delta={delta:.3g})")
    samples = np.asarray(f(contour.z(grid.nodes)), dtype=complex)
    if not np.all(np.isfinite(samples)):
        raise NonFiniteError("density is non-finite at a quadrature node")
    f_t0 = complex(np.asarray(f(contour.z(np.array([s0]))))[0])
    _warn_if_rough(samples, grid, s0)
    return pv_from_samples(samples, f_t0, contour, grid, s0)


def _warn_if_rough(samples, grid, s0):
    # crude smoothness probe: spectral vs low-order difference of the samples
    d = _wrapped_param_dist(grid.nodes, s0)
    j0 = int(np.argmin(d))
    if d[j0] > 1e-9:
        return
    n = samples.size
    h = TWO_PI / n
    fd = (samples[(j0 + 1) % n] - samples[(j0 - 1) % n]) / (2 * h)
    sp = spectral_derivative(samples)[j0]
    scale = np.max(np.abs(samples)) / h + 1e-300
    if abs(fd - sp) > 0.2 * scale:
        warnings.warn("density looks non-smooth near t0; principal value "
                      "accuracy is degraded", RuntimeWarning, stacklevel=3)


def pv_at_all_nodes(samples: np.ndarray, contour: ClosedContour,
                    grid: QuadratureGrid) -> np.ndarray:
    """P.V. of g(t)/(t - t0) dt for t0 at every grid node simultaneously."""
    samples = np.asarray(samples, dtype=complex)
    zs = contour.z(grid.nodes)
    dzs = contour.dz(grid.nodes)
    with np.errstate(divide="ignore", invalid="ignore"):
        quot = (samples[None, :] - samples[:, None]) * dzs[None, :] \
            / (zs[None, :] - zs[:, None])
    idx = np.arange(grid.n)
    quot[idx, idx] = spectral_derivative(samples)
    return quot @ grid.weights + samples * (1j * np.pi)
