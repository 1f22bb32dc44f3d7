"""Complex contour quadrature and half-line grids.

Two contour families cover every integral in the package: vertical lines
(Gaussian-damped integrands, truncated Gauss-Legendre panels) and circles
(analytic integrands, equispaced trapezoid with spectral accuracy).  All
contour routines return the integral already divided by 2*pi*i per
integration sign, so residue-theorem answers come out as plain residues.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import ContourCollisionError, NumericalGuardError

_PANEL_ORDER = 16
_PANEL_X, _PANEL_W = np.polynomial.legendre.leggauss(_PANEL_ORDER)

#: T = 12/sqrt(kappa) puts the Gaussian factor below e^-144 at the cut.
_GAUSSIAN_TAIL = 12.0

#: max radians of phase per quadrature panel for oscillatory factors
_RAD_PER_PANEL = 3.0

_MAX_NODES = 200_000


def gauss_legendre(order: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes and weights on [-1, 1]."""
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    return np.polynomial.legendre.leggauss(order)


@dataclass(frozen=True)
class ContourSpec:
    """A vertical line Gamma_c or a circle, plus its discretization size.

    Vertical lines carry ``truncation_halfwidth`` (no radius); circles carry
    ``radius`` (no truncation).  ``node_count`` >= 4 always.
    """

    kind: str
    anchor: complex
    radius: float | None = None
    truncation_halfwidth: float | None = None
    node_count: int = 256

    def __post_init__(self):
        if self.kind not in ("vertical_line", "circle"):
            raise ValueError(f"unknown contour kind {self.kind!r}")
        if self.node_count < 4:
            raise ValueError("node_count must be >= 4")
        if self.kind == "circle":
            if self.radius is None or self.radius <= 0:
                raise ValueError("circle needs a positive radius")
            if self.truncation_halfwidth is not None:
                raise ValueError("circle takes no truncation_halfwidth")
        else:
            if self.truncation_halfwidth is None or self.truncation_halfwidth <= 0:
                raise ValueError("vertical line needs a positive truncation_halfwidth")
            if self.radius is not None:
                raise ValueError("vertical line takes no radius")

    @staticmethod
    def vertical(c: complex, halfwidth: float, node_count: int = 256) -> "ContourSpec":
        return ContourSpec("vertical_line", complex(c), None, float(halfwidth), node_count)

    @staticmethod
    def circle(center: complex, radius: float, node_count: int = 256) -> "ContourSpec":
        return ContourSpec("circle", complex(center), float(radius), None, node_count)


def contour_nodes(spec: ContourSpec) -> tuple[np.ndarray, np.ndarray]:
    """Quadrature nodes z and complex weights c with (1/2 pi i) int f ~ sum c*f(z)."""
    if spec.kind == "circle":
        n = spec.node_count
        theta = 2.0 * np.pi * np.arange(n) / n
        unit = np.exp(1j * theta)
        z = spec.anchor + spec.radius * unit
        w = spec.radius * unit / n
        return z, w
    # vertical line: 16-point Gauss-Legendre panels on [-T, T], oriented upward
    T = spec.truncation_halfwidth
    n_panels = max(1, int(np.ceil(spec.node_count / _PANEL_ORDER)))
    edges = np.linspace(-T, T, n_panels + 1)
    mid = 0.5 * (edges[1:] + edges[:-1])
    half = 0.5 * (edges[1:] - edges[:-1])
    y = (mid[:, None] + half[:, None] * _PANEL_X[None, :]).ravel()
    wy = (half[:, None] * _PANEL_W[None, :]).ravel()
    z = spec.anchor + 1j * y
    w = wy / (2.0 * np.pi)  # i dy / (2 pi i)
    return z, w + 0j


def gaussian_truncation(kappa: float) -> float:
    """Half-width for Gamma_c when the integrand carries exp(-kappa y^2)."""
    if kappa <= 0:
        raise NumericalGuardError(
            f"vertical-line integrand must decay Gaussianly (kappa={kappa:g} <= 0)"
        )
    return _GAUSSIAN_TAIL / np.sqrt(kappa)


def vertical_for_gaussian(c: complex, kappa: float, freq: float = 0.0,
                          min_nodes: int = 256) -> ContourSpec:
    """Gamma_c spec sized for exp(-kappa*y^2) decay and |freq| rad/unit phase."""
    T = gaussian_truncation(kappa)
    panel = min(T / 8.0, _RAD_PER_PANEL / max(abs(freq), 1e-30))
    n_panels = int(np.ceil(2.0 * T / panel))
    nodes = _PANEL_ORDER * n_panels
    nodes = max(nodes, min_nodes)
    if nodes > _MAX_NODES:
        raise NumericalGuardError(
            f"vertical contour needs {nodes} nodes (kappa={kappa:g}, freq={freq:g})"
        )
    return ContourSpec.vertical(c, T, nodes)


def circle_enclosing(points: Sequence[complex], node_count: int = 256,
                     expand: float = 1.5) -> ContourSpec:
    """Circle around ``points``, kept strictly inside their open half plane.

    Center is the mean of the points, radius ``expand`` times the largest
    distance to them (with a floor for coincident points), clamped so the
    circle does not reach the imaginary axis.
    """
    pts = np.asarray(points, dtype=complex)
    if pts.size == 0:
        raise ValueError("need at least one point to enclose")
    re = pts.real
    if not (np.all(re < 0) or np.all(re > 0)):
        raise ValueError("points must lie in one open half plane")
    center = complex(pts.mean())
    margin = abs(center.real)
    dist = float(np.max(np.abs(pts - center)))
    radius = max(expand * dist, 0.35 * margin)
    if radius >= 0.95 * margin:
        radius = 0.5 * (dist + margin)
    if radius <= dist or radius >= margin:
        raise NumericalGuardError(
            f"cannot enclose {pts} in a half-plane circle (spread {dist:g}, margin {margin:g})"
        )
    return ContourSpec.circle(center, radius, node_count)


def _check_values(vals: np.ndarray, z: np.ndarray, what: str) -> None:
    bad = ~np.isfinite(vals)
    if np.any(bad):
        idx = int(np.argmax(bad.ravel()))
        raise NumericalGuardError(
            f"{what}: non-finite integrand value at node z={z.ravel()[idx]}"
        )


def integrate_contour(f: Callable, spec: ContourSpec) -> complex:
    """(1/2 pi i) * integral of f along the contour.

    ``f`` must accept a complex ndarray and evaluate elementwise.
    """
    z, w = contour_nodes(spec)
    vals = np.asarray(f(z), dtype=complex)
    _check_values(vals, z, "integrate_contour")
    return complex(np.sum(w * vals))


def integrate_double(f: Callable, spec1: ContourSpec, spec2: ContourSpec) -> complex:
    """(1/2 pi i)^2 * double integral of f(z1, z2); equals the iterated integral.

    ``f`` must broadcast over two complex ndarrays.
    """
    z1, w1 = contour_nodes(spec1)
    z2, w2 = contour_nodes(spec2)
    sep = np.min(np.abs(z1[:, None] - z2[None, :]))
    scale = max(np.max(np.abs(z1)), np.max(np.abs(z2)), 1.0)
    if sep < 1e-12 * scale:
        raise ContourCollisionError(
            "contours collide at quadrature nodes; change a radius or truncation"
        )
    vals = np.asarray(f(z1[:, None], z2[None, :]), dtype=complex)
    _check_values(vals, z1[:, None] + 0 * z2[None, :], "integrate_double")
    return complex(w1 @ vals @ w2)


@dataclass(frozen=True)
class HalfLineGrid:
    """Quadrature nodes/weights for integrals over [left_endpoint, infinity).

    Built from the exponential map x = left - log(1-u)/decay, which is exact
    for integrands decaying like exp(-decay*(x-left)) and conservative for
    anything decaying faster.
    """

    left_endpoint: float
    decay_rate: float
    nodes: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        if self.decay_rate <= 0:
            raise ValueError("decay rate must be positive")
        if len(self.nodes) != len(self.weights):
            raise ValueError("nodes/weights length mismatch")
        if np.any(np.diff(self.nodes) <= 0) or self.nodes[0] < self.left_endpoint:
            raise ValueError("nodes must increase and start at left_endpoint")

    @property
    def size(self) -> int:
        return len(self.nodes)


def halfline_grid(left: float, decay: float, n_nodes: int) -> HalfLineGrid:
    """Exponential-map Gauss-Legendre grid on [left, infinity)."""
    if decay <= 0:
        raise ValueError(f"decay must be positive, got {decay}")
    if n_nodes < 8:
        raise ValueError("n_nodes must be >= 8")
    x01, w01 = np.polynomial.legendre.leggauss(n_nodes)
    u = 0.5 * (x01 + 1.0)
    wu = 0.5 * w01
    nodes = left - np.log1p(-u) / decay
    weights = wu / (decay * (1.0 - u))
    return HalfLineGrid(left, decay, nodes, weights)


def integrate_halfline(f: Callable, grid: HalfLineGrid) -> float:
    """Integral of f over [left, infinity) on the given grid."""
    vals = np.asarray(f(grid.nodes), dtype=float)
    return float(np.dot(grid.weights, vals))
