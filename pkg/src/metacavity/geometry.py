"""Smooth closed boundary curves, spectral machinery on periodic grids, and
permittivity boundary traces.

Every boundary quantity lives on one shared equispaced arclength grid so that
repeated s-derivatives (needed by the asymptotic hierarchy) stay spectrally
accurate.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

log = logging.getLogger(__name__)

__all__ = [
    "BoundaryCurve",
    "BoundaryTrace",
    "PermittivityProfile",
    "boundary_mean",
    "build_curve",
    "circle",
    "parametric",
    "peanut",
    "permittivity_trace",
    "polar",
    "fourier_derivative",
    "fourier_antiderivative",
]


# ---------------------------------------------------------------------------
# spectral helpers on periodic grids
# ---------------------------------------------------------------------------

def _wavenumbers(n: int, period: float) -> np.ndarray:
    return 2.0 * np.pi * np.fft.fftfreq(n, d=period / n)


def fourier_derivative(values: np.ndarray, period: float, order: int = 1) -> np.ndarray:
    """Spectral derivative of a periodic grid function sampled at n equispaced
    nodes over one period."""
    values = np.asarray(values)
    n = values.shape[-1]
    k = _wavenumbers(n, period)
    mult = (1j * k) ** order
    if order % 2 == 1 and n % 2 == 0:
        # odd derivatives kill the unmatched Nyquist mode
        mult[n // 2] = 0.0
    out = np.fft.ifft(np.fft.fft(values, axis=-1) * mult, axis=-1)
    if np.isrealobj(values):
        return out.real
    return out


def fourier_antiderivative(values: np.ndarray, period: float) -> np.ndarray:
    """Periodic antiderivative: returns F with F' = values - <values> and
    F(0) = 0.  The mean must be handled separately by the caller."""
    values = np.asarray(values)
    n = values.shape[-1]
    k = _wavenumbers(n, period)
    coef = np.fft.fft(values, axis=-1)
    coef[..., 0] = 0.0
    with np.errstate(divide="ignore", invalid="ignore"):
        div = np.where(k == 0.0, 1.0, 1j * k)
    out = np.fft.ifft(coef / div, axis=-1)
    out = out - out[..., :1]
    if np.isrealobj(values):
        return out.real
    return out


def _trig_eval(coef: np.ndarray, t: np.ndarray) -> np.ndarray:
    """Evaluate the trigonometric interpolant with FFT coefficients `coef`
    (length n, unnormalized numpy convention) at arbitrary points t."""
    n = coef.shape[0]
    k = np.fft.fftfreq(n, d=1.0 / n)
    c = coef.copy()
    if n % 2 == 0:
        # split the Nyquist mode symmetrically so the interpolant is real
        c[n // 2] *= 0.5
        k = np.concatenate([k, [n / 2.0]])
        c = np.concatenate([c, [c[n // 2]]])
    phases = np.exp(1j * np.outer(t, k))
    return phases @ c / n


# ---------------------------------------------------------------------------
# curve descriptors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class _CurveSpec:
    kind: str
    params: dict


def circle(radius: float = 1.0) -> _CurveSpec:
    return _CurveSpec("circle", {"radius": float(radius)})


def peanut() -> _CurveSpec:
    """Two-lobed cavity r(t) = (1 - 0.3 cos 2t), rescaled to total length 2*pi."""
    return _CurveSpec("peanut", {})


def polar(cos_coeffs, sin_coeffs=(), constant: float = 1.0) -> _CurveSpec:
    """Radial curve r(t) = constant + sum_j cos_coeffs[j] cos((j+1) t)
    + sum_j sin_coeffs[j] sin((j+1) t)."""
    return _CurveSpec(
        "polar",
        {
            "constant": float(constant),
            "cos": tuple(float(c) for c in cos_coeffs),
            "sin": tuple(float(c) for c in sin_coeffs),
        },
    )


def parametric(x_cos, x_sin, y_cos, y_sin, x0: float = 0.0, y0: float = 0.0) -> _CurveSpec:
    """Curve (x(t), y(t)) given by truncated Fourier series in t."""
    return _CurveSpec(
        "parametric",
        {
            "x0": float(x0),
            "y0": float(y0),
            "x_cos": tuple(map(float, x_cos)),
            "x_sin": tuple(map(float, x_sin)),
            "y_cos": tuple(map(float, y_cos)),
            "y_sin": tuple(map(float, y_sin)),
        },
    )


def _xy_functions(spec: _CurveSpec) -> tuple[Callable, Callable]:
    if spec.kind == "circle":
        r = spec.params["radius"]
        return (lambda t: r * np.cos(t), lambda t: r * np.sin(t))
    if spec.kind in ("peanut", "polar"):
        if spec.kind == "peanut":
            const, cos_c, sin_c = 1.0, (0.0, -0.3), ()
        else:
            const = spec.params["constant"]
            cos_c, sin_c = spec.params["cos"], spec.params["sin"]

        def radius(t):
            r = const * np.ones_like(t)
            for j, c in enumerate(cos_c, start=1):
                r = r + c * np.cos(j * t)
            for j, c in enumerate(sin_c, start=1):
                r = r + c * np.sin(j * t)
            return r

        return (lambda t: radius(t) * np.cos(t), lambda t: radius(t) * np.sin(t))
    if spec.kind == "parametric":
        p = spec.params

        def series(c0, cos_c, sin_c):
            def f(t):
                v = c0 * np.ones_like(t)
                for j, c in enumerate(cos_c, start=1):
                    v = v + c * np.cos(j * t)
                for j, c in enumerate(sin_c, start=1):
                    v = v + c * np.sin(j * t)
                return v

            return f

        return (
            series(p["x0"], p["x_cos"], p["x_sin"]),
            series(p["y0"], p["y_cos"], p["y_sin"]),
        )
    raise ValueError(f"unknown curve kind {spec.kind!r}")


# ---------------------------------------------------------------------------
# BoundaryCurve
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundaryCurve:
    """Closed smooth curve sampled at equispaced arclength nodes s_j = j L / n.

    nodes      (n, 2) positions gamma(s_j)
    tangent    (n, 2) unit tangents gamma'(s_j)
    normal     (n, 2) exterior unit normals (gamma2', -gamma1')
    curvature  (n,) signed curvature, positive for a counterclockwise circle
    length     total length L
    delta      tubular half-width, < 1/max|kappa|
    """

    nodes: np.ndarray
    tangent: np.ndarray
    normal: np.ndarray
    curvature: np.ndarray
    length: float
    delta: float
    spec: _CurveSpec = field(repr=False, default=None)

    @property
    def grid_size(self) -> int:
        return self.nodes.shape[0]

    @property
    def arclength_grid(self) -> np.ndarray:
        n = self.grid_size
        return self.length * np.arange(n) / n

    def points_at_offset(self, xi) -> np.ndarray:
        """Tubular points gamma(s_j) + xi * n(s_j); xi scalar or shape (n,)."""
        xi = np.asarray(xi, dtype=float)
        return self.nodes + xi[..., None] * self.normal


def boundary_mean(values: np.ndarray, curve: BoundaryCurve):
    """Mean (1/L) * integral over the curve of a grid function, by the
    trapezoid rule (spectrally accurate for smooth periodic data)."""
    values = np.asarray(values)
    if values.shape[-1] != curve.grid_size:
        raise ValueError(
            f"grid size mismatch: {values.shape[-1]} values on a "
            f"{curve.grid_size}-node curve"
        )
    return values.mean(axis=-1)


def _check_self_intersection(points: np.ndarray) -> bool:
    """Crude O(n^2) segment intersection test on the polygonal approximation."""
    n = points.shape[0]
    seg_a = points
    seg_b = np.roll(points, -1, axis=0)
    d = seg_b - seg_a
    for i in range(n):
        # skip the two neighbours sharing an endpoint
        js = np.arange(i + 2, n if i > 0 else n - 1)
        if js.size == 0:
            continue
        r = d[i]
        q = seg_a[js]
        s = d[js]
        qp = q - seg_a[i]
        denom = r[0] * s[:, 1] - r[1] * s[:, 0]
        with np.errstate(divide="ignore", invalid="ignore"):
            t = (qp[:, 0] * s[:, 1] - qp[:, 1] * s[:, 0]) / denom
            u = (qp[:, 0] * r[1] - qp[:, 1] * r[0]) / (-denom)
        hit = (np.abs(denom) > 1e-14) & (t > 1e-12) & (t < 1 - 1e-12) & (u > 1e-12) & (u < 1 - 1e-12)
        if np.any(hit):
            return True
    return False


def build_curve(spec: _CurveSpec, grid_size: int = 256) -> BoundaryCurve:
    """Build a curve on an equispaced arclength grid.

    Arclength is computed spectrally from |gamma'|, the map t -> s is inverted
    by Newton iteration, and curvature is evaluated at the pre-images.  The
    peanut shape is rescaled so the total length is exactly 2*pi.
    """
    if grid_size < 64 or grid_size & (grid_size - 1):
        raise ValueError("grid_size must be a power of two >= 64")
    n = int(grid_size)
    t = 2.0 * np.pi * np.arange(n) / n
    fx, fy = _xy_functions(spec)
    x, y = np.asarray(fx(t), dtype=float), np.asarray(fy(t), dtype=float)

    def fft_pack(xv, yv):
        xc, yc = np.fft.fft(xv), np.fft.fft(yv)
        kk = np.fft.fftfreq(n, d=1.0 / n)
        if n % 2 == 0:
            kk = kk.copy()
            kk[n // 2] = 0.0
        return xc, yc, 1j * kk * xc, 1j * kk * yc, (1j * kk) ** 2 * xc, (1j * kk) ** 2 * yc

    xc, yc, dxc, dyc, d2xc, d2yc = fft_pack(x, y)
    xp, yp = np.fft.ifft(dxc).real, np.fft.ifft(dyc).real
    speed = np.hypot(xp, yp)
    if speed.min() < 1e-8 * speed.max():
        raise ValueError("curve is not an immersion: |gamma'| vanishes")

    # orientation: signed area via the shoelace integral (1/2) int x y' - y x'
    area = 0.5 * np.mean(x * yp - y * xp) * 2.0 * np.pi
    if area < 0:
        log.warning("curve was clockwise; orientation reversed to counterclockwise")
        idx = (-np.arange(n)) % n  # grid image of t -> -t
        x, y = x[idx], y[idx]
        xc, yc, dxc, dyc, d2xc, d2yc = fft_pack(x, y)
        xp, yp = np.fft.ifft(dxc).real, np.fft.ifft(dyc).real
        speed = np.hypot(xp, yp)

    def sample(tq):
        return (
            _trig_eval(xc, tq).real,
            _trig_eval(yc, tq).real,
            _trig_eval(dxc, tq).real,
            _trig_eval(dyc, tq).real,
            _trig_eval(d2xc, tq).real,
            _trig_eval(d2yc, tq).real,
        )

    # s(t) = L t / (2 pi) + periodic part, from the FFT of |gamma'|
    length = float(speed.mean() * 2.0 * np.pi)
    scale = 1.0
    if spec.kind == "peanut":
        scale = 2.0 * np.pi / length
        length = 2.0 * np.pi
    s_periodic = fourier_antiderivative(speed * scale, 2.0 * np.pi)
    s_periodic_c = np.fft.fft(s_periodic)
    speed_c = np.fft.fft(speed)
    mean_speed = scale * speed.mean()

    def s_of_t(tq):
        return mean_speed * tq + _trig_eval(s_periodic_c, tq).real

    def speed_of_t(tq):
        return scale * _trig_eval(speed_c, tq).real

    # invert s(t) = s_j by Newton (s' = |gamma'| > 0)
    s_targets = length * np.arange(n) / n
    t_nodes = s_targets / mean_speed
    for _ in range(60):
        resid = s_of_t(t_nodes) - s_targets
        t_nodes = t_nodes - resid / speed_of_t(t_nodes)
        if np.max(np.abs(resid)) < 1e-14 * length:
            break

    X, Y, XP, YP, XPP, YPP = sample(t_nodes)
    sp = np.hypot(XP, YP)
    tangent = np.stack([XP / sp, YP / sp], axis=1)
    normal = np.stack([tangent[:, 1], -tangent[:, 0]], axis=1)
    kappa = (XP * YPP - YP * XPP) / sp**3 / scale

    nodes = np.stack([X, Y], axis=1) * scale
    if _check_self_intersection(nodes):
        raise ValueError("curve is self-intersecting")

    delta = 0.5 / np.max(np.abs(kappa))
    return BoundaryCurve(
        nodes=nodes,
        tangent=tangent,
        normal=normal,
        curvature=kappa,
        length=length,
        delta=float(delta),
        spec=spec,
    )


# ---------------------------------------------------------------------------
# permittivity profiles and boundary traces
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PermittivityProfile:
    """Cavity permittivity eps_c(x) < 0 with an analytic or numeric gradient.

    kind is one of 'constant', 'linear_x', 'user_field'.
    """

    kind: str
    value: Callable[[np.ndarray], np.ndarray]
    gradient: Callable[[np.ndarray], np.ndarray]
    params: dict = field(default_factory=dict)

    @staticmethod
    def constant(eps: float) -> "PermittivityProfile":
        eps = float(eps)
        if eps >= 0:
            raise ValueError("cavity permittivity must be negative")
        return PermittivityProfile(
            "constant",
            lambda x: np.full(np.asarray(x).shape[:-1], eps),
            lambda x: np.zeros(np.asarray(x).shape),
            {"eps": eps},
        )

    @staticmethod
    def linear_x(eps_min: float, eps_max: float) -> "PermittivityProfile":
        """eps(x, y) = (eps_min + eps_max)/2 + (eps_max - eps_min)/2 * x."""
        a = 0.5 * (eps_min + eps_max)
        b = 0.5 * (eps_max - eps_min)

        def val(x):
            x = np.asarray(x, dtype=float)
            return a + b * x[..., 0]

        def grad(x):
            x = np.asarray(x, dtype=float)
            g = np.zeros(x.shape)
            g[..., 0] = b
            return g

        return PermittivityProfile("linear_x", val, grad, {"eps_min": eps_min, "eps_max": eps_max})

    @staticmethod
    def user_field(value, gradient=None) -> "PermittivityProfile":
        if gradient is None:
            def gradient(x, _v=value, h=1e-7):
                x = np.asarray(x, dtype=float)
                g = np.zeros(x.shape)
                for i in range(2):
                    dx = np.zeros(2)
                    dx[i] = h
                    g[..., i] = (_v(x + dx) - _v(x - dx)) / (2 * h)
                return g

        return PermittivityProfile("user_field", value, gradient)


@dataclass(frozen=True)
class BoundaryTrace:
    """Normal Taylor traces of eta = sqrt(-eps_c) at the interface.

    eta[k] is the grid function d^k/dxi^k eta(s, xi) at xi = 0, where xi is the
    signed normal offset (cavity side xi < 0).
    """

    curve: BoundaryCurve
    eta: tuple  # tuple of (n,) arrays, index = derivative order

    @property
    def order(self) -> int:
        return len(self.eta) - 1

    @property
    def eta0(self) -> np.ndarray:
        return self.eta[0]

    @property
    def eta1(self) -> np.ndarray:
        return self.eta[1]


def permittivity_trace(profile: PermittivityProfile, curve: BoundaryCurve, order: int = 2) -> BoundaryTrace:
    """Boundary traces eta_n(s) = d^n_xi sqrt(-eps_c(gamma(s) + xi n(s)))|_0.

    Analytic for constant and linear profiles; high-order central finite
    differences along the normal otherwise.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    n = curve.grid_size
    if profile.kind == "constant":
        eta0 = math.sqrt(-profile.params["eps"]) * np.ones(n)
        etas = [eta0] + [np.zeros(n) for _ in range(order)]
    elif profile.kind == "linear_x":
        # eta(s, xi) = sqrt(c(s) + d(s) xi) with c = -eps on the boundary and
        # d = -grad(eps).n, differentiated exactly
        c = -profile.value(curve.nodes)
        d = -np.einsum("ij,ij->i", profile.gradient(curve.nodes), curve.normal)
        etas = []
        fall = 1.0
        for k in range(order + 1):
            etas.append(fall * d**k * c ** (0.5 - k))
            fall *= 0.5 - k
    else:
        h = 1e-5 * curve.length
        offsets = np.arange(-4, 5)
        samples = np.empty((9, n))
        for i, j in enumerate(offsets):
            pts = curve.points_at_offset(np.full(n, j * h))
            samples[i] = np.sqrt(-profile.value(pts))
        # 9-point central difference tables, orders 0..4
        stencils = {
            0: np.array([0, 0, 0, 0, 1, 0, 0, 0, 0], dtype=float),
            1: np.array([3, -32, 168, -672, 0, 672, -168, 32, -3], dtype=float) / 840,
            2: np.array([-9, 128, -1008, 8064, -14350, 8064, -1008, 128, -9], dtype=float) / 5040,
            3: np.array([-7, 72, -338, 488, 0, -488, 338, -72, 7], dtype=float) / 240,
            4: np.array([7, -96, 676, -1952, 2730, -1952, 676, -96, 7], dtype=float) / 240,
        }
        if order > 4:
            raise ValueError("user_field traces supported up to order 4")
        etas = [stencils[k] @ samples / h**k for k in range(order + 1)]

    eta0 = etas[0]
    if np.any(~np.isfinite(eta0)) or np.any(eta0 <= 0):
        raise ValueError("eps_c must be negative on the boundary")
    if np.any(np.abs(eta0 - 1.0) < 1e-8):
        raise ValueError(
            "critical coefficient: eta = 1 (eps_c = -1) on the boundary; "
            "the transmission problem degenerates there"
        )
    return BoundaryTrace(curve=curve, eta=tuple(etas))
