"""Harmonic measures of ``C \\ ([-1, a] u [b, 1])`` and the node system built from them.

With ``H(x) = (x^2 - 1)(x - a)(x - b)`` the harmonic measure with pole at
infinity has density ``|x - c| / (pi sqrt|H(x)|)`` on the bands, where the
center ``c`` in the gap makes the gap integral of ``(x - c)/sqrt(H)`` vanish.
A real pole ``alpha`` outside ``[-1, 1]`` gives the density
``|x - c(alpha)| sqrt|H(alpha)| / (pi sqrt|H(x)| |x - alpha| |alpha - c(alpha)|)``.

All integrals are done in the angle variable ``x = m - h cos(phi)`` of the band
or gap they live on, which absorbs both inverse square root endpoint factors:
``dx / sqrt((x - lo)(hi - x)) = dphi``. Partial arcs ``[lo, t]`` are just
partial ranges ``[0, phi(t)]`` of the same smooth integrand.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from scipy.optimize import brentq

from .errors import AlphaOnGap, DeltaNotInBand, DomainError, MultipleSolutions, NoSolution
from .intervals import NodeSystem, two_bands, validate_node_system
from .quadrature import DEFAULT_QUAD, QuadratureSpec, integrate


def h_eval(a: float, b: float, x):
    return (x * x - 1.0) * (x - a) * (x - b)


def _check_ab(a: float, b: float) -> None:
    if not -1.0 < a < b < 1.0:
        raise DomainError(f"need -1 < a < b < 1, got a={a}, b={b}")


class _Arc:
    """A band or the gap in angle coordinates, with the leftover smooth factor of ``1/sqrt|H|``."""

    def __init__(self, a: float, b: float, which: str):
        self.which = which
        self.lo, self.hi = {"left": (-1.0, a), "gap": (a, b), "right": (b, 1.0)}[which]
        self.mid = 0.5 * (self.lo + self.hi)
        self.half = 0.5 * (self.hi - self.lo)
        self.a, self.b = a, b

    def x(self, phi):
        return self.mid - self.half * np.cos(phi)

    def phi(self, x: float) -> float:
        # half-angle form; acos((mid - x) / half) loses sqrt(eps) near the ends
        x = min(self.hi, max(self.lo, x))
        return 2.0 * math.atan2(math.sqrt(x - self.lo), math.sqrt(self.hi - x))

    def smooth(self, x):
        """``sqrt((x - lo)(hi - x)) / sqrt|H(x)|``."""
        a, b = self.a, self.b
        if self.which == "left":
            return 1.0 / np.sqrt((1.0 - x) * (b - x))
        if self.which == "right":
            return 1.0 / np.sqrt((1.0 + x) * (x - a))
        return 1.0 / np.sqrt(1.0 - x * x)

    def integral(self, g, lo: float | None = None, hi: float | None = None, quad: QuadratureSpec = DEFAULT_QUAD) -> float:
        """``int g(x) dx / sqrt|H(x)|`` over ``[lo, hi]`` (default: the whole arc)."""
        p0 = 0.0 if lo is None else self.phi(lo)
        p1 = math.pi if hi is None else self.phi(hi)
        return self.angle_integral(g, p0, p1, quad)

    def angle_integral(self, g, p0: float, p1: float, quad: QuadratureSpec = DEFAULT_QUAD) -> float:
        def f(phi):
            x = self.x(phi)
            return g(x) * self.smooth(x)

        return integrate(f, p0, p1, quad)


def compute_c(a: float, b: float, quad: QuadratureSpec = DEFAULT_QUAD) -> float:
    """Center of the gap weighted by ``1/sqrt(H)``."""
    _check_ab(a, b)
    gap = _Arc(a, b, "gap")
    return gap.integral(lambda x: x, quad=quad) / gap.integral(np.ones_like, quad=quad)


def compute_c_alpha(a: float, b: float, alpha: float, quad: QuadratureSpec = DEFAULT_QUAD) -> float:
    """Center of the gap weighted by ``1/(sqrt(H) |x - alpha|)``."""
    _check_ab(a, b)
    if a <= alpha <= b:
        raise AlphaOnGap(f"alpha = {alpha} lies in the closed gap [{a}, {b}]")
    gap = _Arc(a, b, "gap")
    weight = lambda x: 1.0 / np.abs(x - alpha)
    return gap.integral(lambda x: x * weight(x), quad=quad) / gap.integral(weight, quad=quad)


@dataclass(frozen=True)
class EllipticConfig:
    a: float
    b: float
    quad: QuadratureSpec = DEFAULT_QUAD
    c: float = field(init=False)

    def __post_init__(self):
        _check_ab(self.a, self.b)
        object.__setattr__(self, "c", compute_c(self.a, self.b, self.quad))

    @cached_property
    def arcs(self) -> dict[str, _Arc]:
        return {w: _Arc(self.a, self.b, w) for w in ("left", "gap", "right")}

    @property
    def bands(self) -> tuple[tuple[float, float], tuple[float, float]]:
        return (-1.0, self.a), (self.b, 1.0)

    def band_arc(self, delta: tuple[float, float]) -> _Arc:
        s, t = delta
        if not s <= t:
            raise DeltaNotInBand(f"empty or reversed arc {delta}")
        for name, (lo, hi) in zip(("left", "right"), self.bands):
            if lo <= s and t <= hi:
                return self.arcs[name]
        raise DeltaNotInBand(f"{delta} is not inside [-1, {self.a}] or [{self.b}, 1]")


def density_inf(cfg: EllipticConfig):
    """``g`` with ``omega(inf, delta) = (1/pi) int_delta g(x) dx / sqrt|H(x)|``."""
    c = cfg.c
    return lambda x: np.abs(x - c) / math.pi


def density_pole(cfg: EllipticConfig, alpha: float):
    if abs(alpha) <= 1.0:
        if cfg.a <= alpha <= cfg.b:
            raise AlphaOnGap(f"alpha = {alpha} lies in the closed gap")
        raise DomainError(f"pole alpha = {alpha} must lie outside [-1, 1]")
    ca = compute_c_alpha(cfg.a, cfg.b, alpha, cfg.quad)
    scale = math.sqrt(abs(h_eval(cfg.a, cfg.b, alpha))) / (abs(alpha - ca) * math.pi)
    return lambda x: scale * np.abs(x - ca) / np.abs(x - alpha)


def harmonic_measure_inf(cfg: EllipticConfig, delta: tuple[float, float]) -> float:
    arc = cfg.band_arc(delta)
    return arc.integral(density_inf(cfg), delta[0], delta[1], cfg.quad)


def harmonic_measure_pole(cfg: EllipticConfig, alpha: float, delta: tuple[float, float]) -> float:
    arc = cfg.band_arc(delta)
    return arc.integral(density_pole(cfg, alpha), delta[0], delta[1], cfg.quad)


def alpha_target(cfg: EllipticConfig, n: int) -> tuple[float, float]:
    """``(mu, m*)``: harmonic measure of ``[b, 1]`` at infinity and the pole measure
    the equation asks for, ``m* = 1 + floor(n mu) - (n - 1) mu``."""
    mu = harmonic_measure_inf(cfg, (cfg.b, 1.0))
    return mu, 1.0 + math.floor(n * mu) - (n - 1) * mu


def alpha_equation_residual(cfg: EllipticConfig, n: int, alpha: float) -> float:
    mu = harmonic_measure_inf(cfg, (cfg.b, 1.0))
    lhs = (n - 1) * mu + harmonic_measure_pole(cfg, alpha, (cfg.b, 1.0))
    return lhs - (1.0 + math.floor(n * mu))


def solve_alpha_n(cfg: EllipticConfig, n: int, scan_steps: int = 34) -> float:
    """The pole ``alpha > 1`` making ``[b, 1]`` carry the right share of ``n`` nodes.

    Brackets are located by sign-scanning ``alpha = 1 + 2^j 1e-4``; no
    monotonicity in ``alpha`` is assumed, and more than one bracket is an error.
    """
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    mu, target = alpha_target(cfg, n)
    if not 0.0 < target < 1.0:
        raise NoSolution(f"required pole measure m* = {target!r} is outside (0, 1) (mu = {mu!r})")
    right = (cfg.b, 1.0)
    gap_fn = lambda al: harmonic_measure_pole(cfg, al, right) - target
    grid = [1.0 + 2.0**j * 1e-4 for j in range(scan_steps)]
    vals = [gap_fn(al) for al in grid]
    roots = []
    for (x0, f0), (x1, f1) in zip(zip(grid, vals), zip(grid[1:], vals[1:])):
        if f0 == 0.0:
            roots.append(x0)
        elif f0 * f1 < 0:
            roots.append(brentq(gap_fn, x0, x1, xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=200))
    if not roots:
        raise NoSolution(
            f"m* = {target!r} not attained for alpha in [{grid[0]}, {grid[-1]:.3g}] "
            f"(m ranges {min(vals) + target:.6g} .. {max(vals) + target:.6g})"
        )
    if len(roots) > 1:
        raise MultipleSolutions(f"several solutions alpha = {roots}")
    return roots[0]


def _band_mass(cfg: EllipticConfig, g, name: str, upto: float | None = None) -> float:
    arc = cfg.arcs[name]
    return arc.integral(g, None, upto, cfg.quad)


def cumulative_g(cfg: EllipticConfig, n: int, alpha_n: float, x: float) -> float:
    """``G(x) = pi [(n - 1) omega(inf, [-1, x] n E) + omega(alpha_n, [-1, x] n E)]``."""
    g = _combined_density(cfg, n, alpha_n)
    return math.pi * _cumulative(cfg, g, x)


def _combined_density(cfg: EllipticConfig, n: int, alpha_n: float):
    d_inf, d_pole = density_inf(cfg), density_pole(cfg, alpha_n)
    return lambda x: (n - 1) * d_inf(x) + d_pole(x)


def _cumulative(cfg: EllipticConfig, g, x: float) -> float:
    a, b = cfg.a, cfg.b
    if x <= -1.0:
        return 0.0
    if x <= a:
        return _band_mass(cfg, g, "left", x)
    left = _band_mass(cfg, g, "left")
    if x < b:
        return left
    return left + _band_mass(cfg, g, "right", min(x, 1.0))


def elliptic_nodes(cfg: EllipticConfig, n: int, alpha_n: float, plateau_tol: float = 1e-9) -> NodeSystem:
    """Nodes with ``G(x_k) = k pi - pi/2``, ``k = 1..n``.

    ``G`` is flat across the gap. A target equal to the plateau value has a
    whole interval of solutions; the node is then put at ``a`` and the
    scheme tag carries a ``TargetOnPlateau`` warning.
    """
    g = _combined_density(cfg, n, alpha_n)
    arcs = cfg.arcs
    left_mass = _band_mass(cfg, g, "left")
    nodes, warnings = [], []
    for k in range(1, n + 1):
        target = k - 0.5
        if abs(target - left_mass) <= plateau_tol:
            nodes.append(cfg.a)
            warnings.append(f"TargetOnPlateau(k={k})")
            continue
        name, goal = ("left", target) if target < left_mass else ("right", target - left_mass)
        arc = arcs[name]

        def resid(phi, arc=arc, goal=goal):
            return arc.angle_integral(g, 0.0, phi, cfg.quad) - goal

        phi = brentq(resid, 0.0, math.pi, xtol=1e-14, rtol=4 * np.finfo(float).eps, maxiter=200)
        nodes.append(float(arc.x(phi)))
    tag = f"elliptic(a={cfg.a!r},b={cfg.b!r},n={n})"
    if warnings:
        tag += " [warn: " + ", ".join(warnings) + "]"
    meta = {"a": cfg.a, "b": cfg.b, "c": cfg.c, "alpha_n": alpha_n}
    return validate_node_system(two_bands(cfg.a, cfg.b), nodes, tag, meta)
