"""Chebyshev polynomials, Lagrange fundamental functions and Lebesgue constants.

Fundamental functions are evaluated in the second barycentric form, with the
weights kept in log scale so that a few hundred nodes neither overflow nor
underflow. The Lebesgue constant is the supremum over the host set; it is
found segment by segment (between consecutive breakpoints, i.e. nodes and band
endpoints) because the Lebesgue function is a polynomial on each such segment
with a single hump.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy.special import logsumexp

from .errors import DegenerateInput, PoleOnSet
from .intervals import IntervalUnion, NodeSystem, full_interval, validate_node_system

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def chebyshev_eval(n: int, t):
    """``T_n(t)`` by the three-term recurrence; accepts scalars or arrays."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    t = np.asarray(t, dtype=float)
    prev, cur = np.ones_like(t), t.copy()
    if n == 0:
        out = prev
    else:
        for _ in range(n - 1):
            prev, cur = cur, 2.0 * t * cur - prev
        out = cur
    return float(out) if out.ndim == 0 else out


def chebyshev_nodes(n: int) -> np.ndarray:
    """Zeros of ``T_n`` in ascending order.

    Written as ``sin`` of a symmetric argument so the set is exactly
    antisymmetric and the middle node of an odd set is exactly zero.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    j = np.arange(n)
    return np.sin(np.pi * (2 * j + 1 - n) / (2 * n))


def chebyshev_system(n: int) -> NodeSystem:
    return validate_node_system(full_interval(), chebyshev_nodes(n), f"chebyshev(n={n})")


def log_barycentric_weights(nodes: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """``(log|w_k|, sign w_k)`` for ``w_k = 1 / prod_{j != k} (x_k - x_j)``.

    ``nodes`` must be sorted ascending; the sign then follows from counting
    the larger nodes.
    """
    x = np.asarray(nodes, dtype=float)
    n = x.size
    diff = np.abs(x[:, None] - x[None, :])
    np.fill_diagonal(diff, 1.0)
    logw = -np.log(diff).sum(axis=1)
    sign = np.where((n - 1 - np.arange(n)) % 2 == 0, 1.0, -1.0)
    return logw, sign


def barycentric_weights(nodes: np.ndarray) -> np.ndarray:
    """Barycentric weights rescaled to max modulus 1."""
    logw, sign = log_barycentric_weights(nodes)
    return sign * np.exp(logw - logw.max())


def _log_denominator(poles: np.ndarray, x: np.ndarray) -> np.ndarray:
    """``log |prod_k (1 - a_k x)|`` for each entry of ``x``."""
    if poles.size == 0:
        return np.zeros_like(x)
    return np.log(np.abs(1.0 - np.outer(x, poles))).sum(axis=1)


class _Evaluator:
    """Vectorized Lebesgue function for a fixed node set and optional poles.

    The sum of ``|l_k(x)|`` is formed in the first (product) form in log
    scale: ``|omega(x)| sum_k |w_k| / |x - x_k|``, every term positive. The
    second barycentric form divides by ``|sum_k w_k / (x - x_k)|``, which
    cancels to zero once the Lebesgue function passes ~1e16, and with poles
    the polynomial factor alone can be that large while the rational
    Lebesgue function stays moderate.
    """

    def __init__(self, nodes: NodeSystem, pole_inverses: Sequence[float] | None = None):
        self.x = nodes.array()
        self.logw, sign = log_barycentric_weights(self.x)
        self.w = sign * np.exp(self.logw - self.logw.max())
        poles = np.asarray([] if pole_inverses is None else pole_inverses, dtype=float)
        if poles.size > self.x.size:
            raise ValueError(f"{poles.size} poles for {self.x.size} nodes")
        self.poles = poles[poles != 0.0]
        for p in self.poles:
            if nodes.host.band_index(1.0 / p) is not None:
                raise PoleOnSet(f"1 - {p} x vanishes at x = {1.0 / p}, inside the host set")
        self.log_scale = self.logw + _log_denominator(self.poles, self.x)

    def fundamental(self, t) -> np.ndarray:
        """Signed polynomial ``l_k(t)`` in the second barycentric form, one row per ``t``.

        Rows sum to 1 up to rounding of order ``eps * lambda(t)``.
        """
        t = np.atleast_1d(np.asarray(t, dtype=float))
        d = t[:, None] - self.x[None, :]
        hit = d == 0.0
        d[hit] = 1.0
        terms = self.w / d
        out = terms / terms.sum(axis=1, keepdims=True)
        rows = hit.any(axis=1)
        out[rows] = hit[rows].astype(float)
        return out

    def _chunk(self, tt: np.ndarray) -> np.ndarray:
        d = np.abs(tt[:, None] - self.x[None, :])
        exact = (d == 0.0).any(axis=1)
        with np.errstate(divide="ignore"):
            logd = np.log(d)
        logd[exact] = 0.0
        log_omega = logd.sum(axis=1)
        if self.poles.size:
            xd = _log_denominator(self.poles, tt)
            if not np.all(np.isfinite(xd)):
                raise PoleOnSet("evaluation point is a pole")
            log_omega = log_omega - xd
        vals = np.exp(logsumexp(log_omega[:, None] + self.log_scale[None, :] - logd, axis=1))
        vals[exact] = 1.0
        return vals

    def __call__(self, t: np.ndarray, chunk: int = 2048) -> np.ndarray:
        t = np.atleast_1d(np.asarray(t, dtype=float))
        return np.concatenate([self._chunk(t[i : i + chunk]) for i in range(0, t.size, chunk)])


def fundamental_values(nodes: NodeSystem, x) -> np.ndarray:
    """``l_k(x)`` for every node in ascending node order; a matrix for array ``x``."""
    vals = _Evaluator(nodes).fundamental(x)
    return vals[0] if np.ndim(x) == 0 else vals


def lebesgue_function(nodes: NodeSystem, x):
    vals = _Evaluator(nodes)(x)
    return float(vals[0]) if np.ndim(x) == 0 else vals


def rational_lebesgue_function(nodes: NodeSystem, pole_inverses: Sequence[float], x):
    """Lebesgue function of ``omega(x) / prod_k (1 - a_k x)``.

    With ``D(x) = prod (1 - a_k x)`` the fundamental functions are
    ``l_k(x) D(x_k) / D(x)``, which is what the logarithmic derivative of the
    product form gives for ``omega~'(x_k)``. Missing poles are zeros.
    """
    vals = _Evaluator(nodes, pole_inverses)(x)
    return float(vals[0]) if np.ndim(x) == 0 else vals


def segments(host: IntervalUnion, nodes: np.ndarray) -> list[tuple[float, float]]:
    """Breakpoint segments: every band cut at the nodes it contains."""
    out = []
    for lo, hi in host.intervals:
        inside = nodes[(nodes >= lo) & (nodes <= hi)]
        pts = np.unique(np.concatenate(([lo], inside, [hi])))
        out.extend(zip(pts[:-1], pts[1:]))
    return [(float(l), float(r)) for l, r in out if r > l]


def maximize_on_segments(
    f: Callable[[np.ndarray], np.ndarray],
    segs: Sequence[tuple[float, float]],
    grid: int = 64,
    xtol: float = 1e-12,
    max_iter: int = 200,
) -> tuple[float, float, np.ndarray, np.ndarray]:
    """Maximize a vectorized ``f`` that is unimodal on each segment.

    A ``grid + 1``-point seed per segment picks a three-point bracket, then a
    golden-section search runs on all brackets at once. Returns
    ``(value, argmax, seed_x, seed_f)``; ties go to the smallest ``x``.
    """
    lo = np.array([s[0] for s in segs])
    hi = np.array([s[1] for s in segs])
    frac = np.linspace(0.0, 1.0, grid + 1)
    seed_x = lo[:, None] + (hi - lo)[:, None] * frac[None, :]
    seed_f = f(seed_x.ravel()).reshape(seed_x.shape)
    best = seed_f.argmax(axis=1)
    rows = np.arange(len(segs))
    left = seed_x[rows, np.maximum(best - 1, 0)]
    right = seed_x[rows, np.minimum(best + 1, grid)]

    c = right - _GOLDEN * (right - left)
    d = left + _GOLDEN * (right - left)
    fc, fd = f(c), f(d)
    for _ in range(max_iter):
        if np.all(right - left < xtol):
            break
        move_right = fc < fd
        left = np.where(move_right, c, left)
        right = np.where(move_right, right, d)
        new_c = np.where(move_right, d, right - _GOLDEN * (right - left))
        new_d = np.where(move_right, left + _GOLDEN * (right - left), c)
        fresh = np.where(move_right, new_d, new_c)
        ff = f(fresh)
        fc, fd = np.where(move_right, fd, ff), np.where(move_right, ff, fc)
        c, d = new_c, new_d

    cand_x = np.concatenate([seed_x, c[:, None], d[:, None]], axis=1)
    cand_f = np.concatenate([seed_f, fc[:, None], fd[:, None]], axis=1)
    order = np.argsort(cand_x.ravel(), kind="stable")
    flat_x, flat_f = cand_x.ravel()[order], cand_f.ravel()[order]
    # Ties within rounding go to the smallest x.
    top = flat_f.max()
    k = int(np.argmax(flat_f >= top - 1e-13 * abs(top)))
    return float(top), float(flat_x[k]), seed_x.ravel(), seed_f.ravel()


@dataclass
class LebesgueReport:
    constant: float
    argmax: float
    n: int
    samples: list[tuple[float, float]] | None = field(default=None, repr=False)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["x", "lambda"])
        for x, lam in self.samples or []:
            writer.writerow([f"{x:.15e}", f"{lam:.15e}"])
        return buf.getvalue()


def lebesgue_constant(
    nodes: NodeSystem,
    pole_inverses: Sequence[float] | None = None,
    grid: int = 64,
    xtol: float = 1e-12,
    keep_samples: bool = False,
) -> LebesgueReport:
    """Supremum of the (rational, if poles are given) Lebesgue function on the host."""
    ev = _Evaluator(nodes, pole_inverses)
    if nodes.n == 1 and ev.poles.size == 0:
        return LebesgueReport(1.0, nodes.nodes[0], 1, [(nodes.nodes[0], 1.0)] if keep_samples else None)
    value, arg, sx, sf = maximize_on_segments(ev, segments(nodes.host, ev.x), grid, xtol)
    samples = None
    if keep_samples:
        order = np.argsort(sx, kind="stable")
        samples = list(zip(sx[order].tolist(), sf[order].tolist()))
    return LebesgueReport(max(value, 1.0), arg, nodes.n, samples)


@dataclass
class GrowthFit:
    slope: float
    intercept: float
    residual_rms: float
    points: list[tuple[int, float]]

    def predict(self, n: float) -> float:
        return self.slope * math.log(n) + self.intercept


def growth_fit(points: Sequence[tuple[float, float]]) -> GrowthFit:
    """Least-squares fit ``lambda = slope * ln(n) + intercept``."""
    pts = [(n, float(lam)) for n, lam in points]
    ns = np.array([p[0] for p in pts], dtype=float)
    if len(pts) < 2 or np.all(ns == ns[0]):
        raise DegenerateInput("growth fit needs at least two distinct n")
    lam = np.array([p[1] for p in pts])
    A = np.column_stack([np.log(ns), np.ones_like(ns)])
    (slope, intercept), *_ = np.linalg.lstsq(A, lam, rcond=None)
    resid = lam - A @ np.array([slope, intercept])
    return GrowthFit(float(slope), float(intercept), float(np.sqrt(np.mean(resid**2))), pts)
