"""Airy function and overflow-safe orthonormal Hermite/Laguerre evaluation.

No external special-function library is used.  Ai is computed from its
Maclaurin series on [-4.5, 4.5], from the exact saddle-point integral
representation for x > 4.5, and by re-centered Taylor stepping of the Airy
ODE for x < -4.5 (classical oscillatory asymptotics beyond -120).

The orthonormal polynomials are evaluated together with their natural
weights, h_n(x)e^{-x^2/2} and l_n^1(x)e^{-x/2}, carried as (sign, log
magnitude) pairs so that degrees in the hundreds or thousands never
overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import quadrature as quad

# ---------------------------------------------------------------------------
# scaled values
# ---------------------------------------------------------------------------

_NEG_INF = float("-inf")


@dataclass(frozen=True)
class ScaledValue:
    """A real number stored as sign * exp(log_magnitude)."""

    sign: int
    log_magnitude: float

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError("sign must be -1, 0 or +1")
        if self.sign == 0 and self.log_magnitude != _NEG_INF:
            raise ValueError("zero value must carry log_magnitude = -inf")

    @property
    def value(self) -> float:
        if self.sign == 0:
            return 0.0
        return self.sign * math.exp(self.log_magnitude)

    def __float__(self) -> float:
        return self.value

    @staticmethod
    def from_float(x: float) -> "ScaledValue":
        if x == 0.0:
            return ScaledValue(0, _NEG_INF)
        return ScaledValue(1 if x > 0 else -1, math.log(abs(x)))


# ---------------------------------------------------------------------------
# Airy function
# ---------------------------------------------------------------------------

_AI0 = 0.3550280538878172   # 3^(-2/3)/Gamma(2/3)
_AIP0 = -0.2588194037928068  # -3^(-1/3)/Gamma(1/3)

_SERIES_CUT = 4.5
_SERIES_TERMS = 42

_SADDLE_NODES, _SADDLE_WEIGHTS = (lambda nw: (
    0.5 * 6.5 * (nw[0] + 1.0), 0.5 * 6.5 * nw[1]))(
        np.polynomial.legendre.leggauss(220))

_ANCHOR_LO = -120.0


def _airy_series(x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Maclaurin evaluation of (Ai, Ai') for |x| <= ~5."""
    x = np.asarray(x, dtype=float)
    # ODE series solutions y1 = 1 + x^3/6 + ..., y2 = x + x^4/12 + ...
    t1 = np.ones_like(x)
    t2 = x.copy()
    y1 = t1.copy()
    y2 = t2.copy()
    y1p = np.zeros_like(x)
    y2p = np.ones_like(x)
    x3 = x ** 3
    for k in range(_SERIES_TERMS):
        t1 = t1 * x3 / ((3 * k + 2) * (3 * k + 3))
        t2 = t2 * x3 / ((3 * k + 3) * (3 * k + 4))
        y1 += t1
        y2 += t2
        with np.errstate(divide="ignore", invalid="ignore"):
            y1p += t1 * (3 * k + 3) / np.where(x != 0, x, 1.0)
        y2p += t2 * (3 * k + 4) / np.where(x != 0, x, 1.0) * x / np.where(x != 0, x, 1.0)
    # derivative series computed directly to avoid the x=0 division above
    y1p = np.zeros_like(x)
    y2p = np.ones_like(x)
    t1 = np.ones_like(x)
    t2 = x.copy()
    for k in range(_SERIES_TERMS):
        t1 = t1 * x3 / ((3 * k + 2) * (3 * k + 3))
        t2 = t2 * x3 / ((3 * k + 3) * (3 * k + 4))
        y1p += t1 * (3 * k + 3) / np.where(x != 0, x, 1.0)
        y2p += t2 * (3 * k + 4) / np.where(x != 0, x, 1.0)
    y2p = np.where(x == 0, 1.0, y2p)
    y1p = np.where(x == 0, 0.0, y1p)
    ai = _AI0 * y1 + _AIP0 * y2
    aip = _AI0 * y1p + _AIP0 * y2p
    return ai, aip


def _airy_saddle(x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Exact saddle-point integral for x > 0 (used beyond the series cut).

    Ai(x)  = e^{-xi} x^{-1/4}/pi * C,      C = int_0^inf e^{-v^2} cos(mu v^3) dv
    Ai'(x) = -e^{-xi}/pi * (x^{1/4} C + x^{-1/2} S1),
    with mu = 1/(3 x^{3/4}), xi = (2/3) x^{3/2}.
    """
    x = np.asarray(x, dtype=float)
    v = _SADDLE_NODES
    w = _SADDLE_WEIGHTS
    mu = 1.0 / (3.0 * x ** 0.75)
    phase = mu[..., None] * v ** 3
    gauss = np.exp(-v ** 2)
    C = np.sum(w * gauss * np.cos(phase), axis=-1)
    S1 = np.sum(w * gauss * v * np.sin(phase), axis=-1)
    xi = (2.0 / 3.0) * x ** 1.5
    damp = np.exp(-xi)
    ai = damp * C / (np.pi * x ** 0.25)
    aip = -damp / np.pi * (x ** 0.25 * C + S1 / np.sqrt(x))
    return ai, aip


def _taylor_step(x0: float, y: float, yp: float, h: float, terms: int = 40):
    """Advance (Ai, Ai') from x0 to x0+h with the Airy-ODE Taylor recurrence."""
    a = [y, yp]
    for k in range(terms - 2):
        prev = a[k - 1] if k >= 1 else 0.0
        a.append((x0 * a[k] + prev) / ((k + 1) * (k + 2)))
    val = 0.0
    dval = 0.0
    for k in range(len(a) - 1, -1, -1):
        val = val * h + a[k]
    for k in range(len(a) - 1, 0, -1):
        dval = dval * h + k * a[k]
    return val, dval


def _build_anchors():
    xs = [-_SERIES_CUT]
    ai, aip = _airy_series(np.array(-_SERIES_CUT))
    vals = [(float(ai), float(aip))]
    x, y, yp = -_SERIES_CUT, float(ai), float(aip)
    while x > _ANCHOR_LO:
        y, yp = _taylor_step(x, y, yp, -1.0)
        x -= 1.0
        xs.append(x)
        vals.append((y, yp))
    return np.array(xs), np.array(vals)


_ANCHOR_X, _ANCHOR_V = _build_anchors()


def _airy_anchored(x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    x = np.asarray(x, dtype=float)
    idx = np.clip(np.round(-_SERIES_CUT - x).astype(int), 0, len(_ANCHOR_X) - 1)
    ai = np.empty_like(x)
    aip = np.empty_like(x)
    flat_x = x.ravel()
    flat_i = idx.ravel()
    out_a = ai.ravel()
    out_p = aip.ravel()
    for j in range(flat_x.size):
        i = flat_i[j]
        v, dv = _taylor_step(_ANCHOR_X[i], _ANCHOR_V[i, 0], _ANCHOR_V[i, 1],
                             flat_x[j] - _ANCHOR_X[i], terms=34)
        out_a[j] = v
        out_p[j] = dv
    return ai, aip


def _airy_osc_asym(x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Oscillatory asymptotics for very negative x (|error| ~ c_8/xi^8)."""
    z = -np.asarray(x, dtype=float)
    xi = (2.0 / 3.0) * z ** 1.5
    c = [1.0]
    for k in range(1, 9):
        c.append(c[-1] * (6 * k - 1) * (6 * k - 3) * (6 * k - 5) / (216.0 * k * (2 * k - 1)))
    d = [1.0] + [-(6 * k + 1) / (6.0 * k - 1) * c[k] for k in range(1, 9)]
    ang = xi + np.pi / 4.0
    even_c = sum((-1) ** j * c[2 * j] * xi ** (-2 * j) for j in range(4))
    odd_c = sum((-1) ** j * c[2 * j + 1] * xi ** (-2 * j - 1) for j in range(4))
    even_d = sum((-1) ** j * d[2 * j] * xi ** (-2 * j) for j in range(4))
    odd_d = sum((-1) ** j * d[2 * j + 1] * xi ** (-2 * j - 1) for j in range(4))
    ai = (np.sin(ang) * even_c - np.cos(ang) * odd_c) / (np.sqrt(np.pi) * z ** 0.25)
    aip = -(np.cos(ang) * even_d + np.sin(ang) * odd_d) * z ** 0.25 / np.sqrt(np.pi)
    return ai, aip


def _airy_both(x) -> tuple[np.ndarray, np.ndarray]:
    x = np.asarray(x, dtype=float)
    ai = np.empty_like(x)
    aip = np.empty_like(x)
    m_ser = np.abs(x) <= _SERIES_CUT
    m_pos = x > _SERIES_CUT
    m_mid = (x < -_SERIES_CUT) & (x >= _ANCHOR_LO)
    m_far = x < _ANCHOR_LO
    if np.any(m_ser):
        ai[m_ser], aip[m_ser] = _airy_series(x[m_ser])
    if np.any(m_pos):
        ai[m_pos], aip[m_pos] = _airy_saddle(x[m_pos])
    if np.any(m_mid):
        ai[m_mid], aip[m_mid] = _airy_anchored(x[m_mid])
    if np.any(m_far):
        ai[m_far], aip[m_far] = _airy_osc_asym(x[m_far])
    return ai, aip


def airy_ai(x):
    """Airy function Ai(x); accepts scalars or arrays."""
    ai, _ = _airy_both(x)
    return float(ai) if np.isscalar(x) or np.ndim(x) == 0 else ai


def airy_ai_prime(x):
    """Derivative Ai'(x); accepts scalars or arrays."""
    _, aip = _airy_both(x)
    return float(aip) if np.isscalar(x) or np.ndim(x) == 0 else aip


# ---------------------------------------------------------------------------
# weighted orthonormal Hermite / Laguerre
# ---------------------------------------------------------------------------

_RESCALE_AT = 1e150
_LOG_RESCALE = math.log(_RESCALE_AT)

_H0 = math.pi ** -0.25


def _hermite_weighted_arr(n: int, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(sign, log|.|) arrays of h_n(x) e^{-x^2/2}, h_n orthonormal wrt e^{-x^2}."""
    x = np.asarray(x, dtype=float)
    logscale = -0.5 * x * x + math.log(_H0)
    prev = np.zeros_like(x)
    cur = np.ones_like(x)
    for k in range(n):
        nxt = x * math.sqrt(2.0 / (k + 1)) * cur - math.sqrt(k / (k + 1.0)) * prev
        prev, cur = cur, nxt
        big = np.abs(cur) > _RESCALE_AT
        if np.any(big):
            cur = np.where(big, cur / _RESCALE_AT, cur)
            prev = np.where(big, prev / _RESCALE_AT, prev)
            logscale = np.where(big, logscale + _LOG_RESCALE, logscale)
    sign = np.sign(cur).astype(int)
    with np.errstate(divide="ignore"):
        logmag = np.where(cur != 0.0, np.log(np.abs(np.where(cur != 0, cur, 1.0))) + logscale,
                          _NEG_INF)
    return sign, logmag


def _laguerre1_weighted_arr(n: int, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(sign, log|.|) arrays of l_n^1(x) e^{-x/2}.

    l_n^1 is orthonormal for the weight x e^{-x} on [0, inf) with positive
    leading coefficient, i.e. (-1)^n L_n^(1)/sqrt(n+1) in classical notation.
    """
    x = np.asarray(x, dtype=float)
    if np.any(x < 0):
        raise ValueError("laguerre1_weighted requires x >= 0")
    logscale = -0.5 * x
    prev = np.zeros_like(x)
    cur = np.ones_like(x)
    for k in range(n):
        nxt = ((x - 2.0 * k - 2.0) / math.sqrt((k + 1.0) * (k + 2.0))) * cur \
            - math.sqrt(k / (k + 2.0)) * prev
        prev, cur = cur, nxt
        big = np.abs(cur) > _RESCALE_AT
        if np.any(big):
            cur = np.where(big, cur / _RESCALE_AT, cur)
            prev = np.where(big, prev / _RESCALE_AT, prev)
            logscale = np.where(big, logscale + _LOG_RESCALE, logscale)
    sign = np.sign(cur).astype(int)
    with np.errstate(divide="ignore"):
        logmag = np.where(cur != 0.0, np.log(np.abs(np.where(cur != 0, cur, 1.0))) + logscale,
                          _NEG_INF)
    return sign, logmag


def _as_scaled(sign: np.ndarray, logmag: np.ndarray) -> ScaledValue:
    s = int(sign)
    return ScaledValue(s, float(logmag) if s != 0 else _NEG_INF)


def hermite_weighted(n: int, x: float) -> ScaledValue:
    """h_n(x) e^{-x^2/2} as a ScaledValue; n up to ~10^6."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    s, lm = _hermite_weighted_arr(n, np.asarray(float(x)))
    return _as_scaled(s, lm)


def laguerre1_weighted(n: int, x: float) -> ScaledValue:
    """l_n^1(x) e^{-x/2} as a ScaledValue; x >= 0, n up to ~10^6."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    if x < 0:
        raise ValueError("x must be >= 0")
    s, lm = _laguerre1_weighted_arr(n, np.asarray(float(x)))
    return _as_scaled(s, lm)


# ---------------------------------------------------------------------------
# contour-integral representations
# ---------------------------------------------------------------------------

def _gamma0_spec(A: float, n: int, B: float) -> quad.ContourSpec:
    # truncation must absorb the polynomial growth (1+y^2)^(n/2)
    T = quad.gaussian_truncation(A)
    for _ in range(4):
        T = math.sqrt((144.0 + 0.5 * n * math.log1p(T * T)) / A)
    freq = 2.0 * abs(B) + n
    panel = min(T / 8.0, 3.0 / max(freq, 1e-30))
    nodes = max(256, 16 * int(np.ceil(2.0 * T / panel)))
    return quad.ContourSpec.vertical(0.0, T, nodes)


def hermite_from_contour(n: int, A: float, B: float) -> tuple[float, float]:
    """Both sides of the Gamma_0 Hermite integral representation.

    lhs = (1/2 pi i) int (w+1)^n exp(A w^2 - 2 B w) dw over the imaginary axis,
    rhs = sqrt(n!)/(pi^{1/4} sqrt2) exp(-B^2/A) (2A)^{-(n+1)/2} h_n(B/sqrt A + sqrt A).
    """
    if A <= 0:
        raise ValueError("A must be positive for Gaussian decay")
    spec = _gamma0_spec(A, n, B)
    lhs = quad.integrate_contour(lambda w: (w + 1.0) ** n * np.exp(A * w * w - 2.0 * B * w),
                                 spec)
    X = B / math.sqrt(A) + math.sqrt(A)
    hw = hermite_weighted(n, X)
    # e^{-B^2/A} h_n(X) = exp(-B^2/2A + B + A/2) * (h_n e^{-X^2/2})(X)
    log_pref = 0.5 * math.lgamma(n + 1) - 0.25 * math.log(math.pi) - 0.5 * math.log(2.0) \
        - 0.5 * (n + 1) * math.log(2.0 * A) + (-B * B / (2.0 * A) + B + A / 2.0)
    rhs = hw.sign * math.exp(log_pref + hw.log_magnitude) if hw.sign else 0.0
    return float(lhs.real), rhs


def hermite_from_contour_pole(n: int, A: float, B: float) -> tuple[float, float]:
    """Both sides of the D_{-1} pole representation (degree n >= 1).

    lhs = (1/2 pi i) int exp(-A z^2 + 2 B z)/(z+1)^n dz around z = -1,
    rhs = pi^{1/4} (2A)^{(n-1)/2}/sqrt((n-1)!) exp(-A-2B) h_{n-1}(B/sqrt A + sqrt A).
    """
    if n < 1:
        raise ValueError("pole representation needs n >= 1")
    spec = quad.ContourSpec.circle(-1.0, 0.5, max(256, 16 * n))
    lhs = quad.integrate_contour(
        lambda z: np.exp(-A * z * z + 2.0 * B * z) / (z + 1.0) ** n, spec)
    X = B / math.sqrt(A) + math.sqrt(A)
    hw = hermite_weighted(n - 1, X)
    # e^{-A-2B} h_{n-1}(X) = exp(B^2/2A - B - A/2) * (h_{n-1} e^{-X^2/2})(X)
    log_pref = 0.25 * math.log(math.pi) + 0.5 * (n - 1) * math.log(2.0 * A) \
        - 0.5 * math.lgamma(n) + (B * B / (2.0 * A) - B - A / 2.0)
    rhs = hw.sign * math.exp(log_pref + hw.log_magnitude) if hw.sign else 0.0
    return float(lhs.real), rhs


def laguerre_from_contour(n: int, x: float) -> tuple[float, float]:
    """Both sides of the D_1 Laguerre representation (n >= 1).

    lhs = (1/2 pi i) int exp(-x zeta/2) ((1+zeta)/(1-zeta))^n dzeta around 1,
    rhs = -2 sqrt(n) e^{-x/2} l_{n-1}^1(x).
    """
    if n < 1:
        raise ValueError("representation needs n >= 1 (rhs index n-1)")
    if x < 0:
        raise ValueError("x must be >= 0")
    spec = quad.ContourSpec.circle(1.0, 0.5, max(256, 16 * n))
    lhs = quad.integrate_contour(
        lambda z: np.exp(-x * z / 2.0) * ((1.0 + z) / (1.0 - z)) ** n, spec)
    lw = laguerre1_weighted(n - 1, x)
    rhs = -2.0 * math.sqrt(n) * lw.value
    return float(lhs.real), rhs


# ---------------------------------------------------------------------------
# edge-scaled variants (Plancherel-Rotach regime)
# ---------------------------------------------------------------------------

def hermite_edge_scaled(n: int, xi: float) -> float:
    """n^{1/12} h_n(sqrt(2n)(1+xi n^{-2/3})) e^{-n(1+xi n^{-2/3})^2} -> 2^{1/4} Ai(2 xi)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    X = math.sqrt(2.0 * n) * (1.0 + xi * n ** (-2.0 / 3.0))
    hw = hermite_weighted(n, X)
    if hw.sign == 0:
        return 0.0
    return hw.sign * math.exp(hw.log_magnitude + math.log(n) / 12.0)


def laguerre_edge_scaled(n: int, xi: float) -> float:
    """n^{5/6} l_n^1(4n(1+xi n^{-2/3})) e^{-2n(1+xi n^{-2/3})} -> 2^{-4/3} Ai(2^{2/3} xi)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    W = 4.0 * n * (1.0 + xi * n ** (-2.0 / 3.0))
    if W < 0:
        return 0.0
    lw = laguerre1_weighted(n, W)
    if lw.sign == 0:
        return 0.0
    return lw.sign * math.exp(lw.log_magnitude + (5.0 / 6.0) * math.log(n))
