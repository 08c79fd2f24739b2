"""Explicit cubic inverse image for two nonsymmetric bands ``[-1, a] u [b, 1]``.

Given ``a`` in ``(-1, 1/2)`` the cubic ``p`` takes the values ``-1, 1, -1, 1``
at ``-1, z, a, 1``, has a double point at its local maximum ``z`` and returns to
``-1`` at ``b``. Hence ``p^{-1}([-1, 1]) = [-1, a] u [b, 1]`` and the zeros of
``T_n(p(x))`` give ``3n`` nodes, ``n`` on each monotone branch.

Also here: the quadratic-over-linear map for rational interpolation on the
same kind of set, and its ``2n``-node system.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as P

from .errors import ConsistencyError, DomainError, NonMonotoneMap, PoleHit
from .intervals import IntervalUnion, NodeSystem, two_bands, validate_node_system
from .lebesgue import chebyshev_nodes


def z_cubic(a: float, z):
    return z**3 + (3 - 2 * a) * z**2 + (a * a - 2) * z - a * a + 2 * a - 2


def _check_a(a: float) -> None:
    if not -1.0 < a < 0.5:
        raise DomainError(f"a must lie in (-1, 1/2), got {a}")


def solve_z(a: float) -> float:
    """The root of ``z_cubic(a, .)`` inside ``(-1, a)``.

    ``z_cubic(a, -1) = 2(1 - a^2) > 0`` and ``z_cubic(a, a) = -2(1 - a^2) < 0``.
    """
    _check_a(a)
    lo, hi = -1.0, a
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if z_cubic(a, mid) > 0:
            lo = mid
        else:
            hi = mid
    z = 0.5 * (lo + hi)
    for _ in range(2):
        dq = 3 * z * z + 2 * (3 - 2 * a) * z + (a * a - 2)
        step = z - z_cubic(a, z) / dq
        if lo <= step <= hi and abs(z_cubic(a, step)) <= abs(z_cubic(a, z)):
            z = step
    return z


def compute_b(a: float, z: float) -> float:
    b = (2 * (1 - a) * (1 + z) + z * (a + z)) / (2 - a + z)
    if abs(b + a) < 1e-14:
        raise ConsistencyError(f"b = -a for a = {a}; the bands would be symmetric")
    if not a < b < 1.0:
        raise ConsistencyError(f"b = {b} outside ({a}, 1)")
    return b


def p_four_term(a: float, z: float, x):
    """The cubic in its original four-term (Lagrange-like) form."""
    return (
        (x - z) * (x - a) * (x - 1) / (2 * (1 + z) * (1 + a))
        - (x * x - 1) * (x - a) / ((1 - z * z) * (z - a))
        - (x * x - 1) * (x - z) / ((1 - a * a) * (z - a))
        + (x + 1) * (x - z) * (x - a) / (2 * (1 - z) * (1 - a))
    )


def _expand(a: float, z: float) -> np.ndarray:
    terms = [
        (1 / (2 * (1 + z) * (1 + a)), (z, a, 1.0)),
        (-1 / ((1 - z * z) * (z - a)), (-1.0, 1.0, a)),
        (-1 / ((1 - a * a) * (z - a)), (-1.0, 1.0, z)),
        (1 / (2 * (1 - z) * (1 - a)), (-1.0, z, a)),
    ]
    return sum(scale * P.polyfromroots(roots) for scale, roots in terms)


@dataclass(frozen=True)
class CubicConstruction:
    a: float
    z: float
    b: float
    coeffs: tuple[float, float, float, float]  # ascending degree

    @property
    def host(self) -> IntervalUnion:
        return two_bands(self.a, self.b)

    def p(self, x):
        return P.polyval(x, self.coeffs)

    def dp(self, x):
        return P.polyval(x, P.polyder(self.coeffs))

    def residuals(self) -> dict[str, float]:
        a, z, b = self.a, self.z, self.b
        f = lambda x: p_four_term(a, z, x)
        h = 1e-4
        # five-point stencil on the exact four-term form; O(h^4) error on a cubic is zero
        dpz = (f(z - 2 * h) - 8 * f(z - h) + 8 * f(z + h) - f(z + 2 * h)) / (12 * h)
        return {
            "p(-1)+1": abs(f(-1.0) + 1),
            "p(a)+1": abs(f(a) + 1),
            "p(b)+1": abs(f(b) + 1),
            "p(z)-1": abs(f(z) - 1),
            "p(1)-1": abs(f(1.0) - 1),
            "p'(z)": abs(dpz),
        }

    def branches(self) -> list[tuple[float, float, bool]]:
        """``(lo, hi, increasing)`` for the three monotone pieces."""
        return [(-1.0, self.z, True), (self.z, self.a, False), (self.b, 1.0, True)]


def build_cubic(a: float) -> CubicConstruction:
    _check_a(a)
    z = solve_z(a)
    b = compute_b(a, z)
    cons = CubicConstruction(a, z, b, tuple(float(c) for c in _expand(a, z)))
    res = cons.residuals()
    bad = {k: v for k, v in res.items() if not v < 1e-10}
    if bad or abs(z_cubic(a, z)) >= 1e-12:
        raise ConsistencyError(f"alternation failed for a = {a}: {bad}")
    return cons


def invert_monotone(f, targets, lo: float, hi: float, increasing: bool, df=None, xtol: float = 1e-15) -> np.ndarray:
    """Solve ``f(x) = t`` on ``[lo, hi]`` for every target, all brackets at once.

    Bisection to ``xtol`` then at most two guarded Newton steps when ``df`` is
    given.
    """
    t = np.asarray(targets, dtype=float)
    left = np.full(t.shape, lo)
    right = np.full(t.shape, hi)
    sgn = 1.0 if increasing else -1.0
    for _ in range(200):
        mid = 0.5 * (left + right)
        below = sgn * (f(mid) - t) < 0
        left = np.where(below, mid, left)
        right = np.where(below, right, mid)
        if np.all(right - left <= xtol):
            break
    x = 0.5 * (left + right)
    if df is not None:
        for _ in range(2):
            slope = df(x)
            ok = np.abs(slope) > 1e-8
            step = np.where(ok, x - (f(x) - t) / np.where(ok, slope, 1.0), x)
            better = (step >= lo) & (step <= hi) & (np.abs(f(step) - t) <= np.abs(f(x) - t))
            x = np.where(better, step, x)
    return x


def nonsym_nodes(a: float, n: int, cons: CubicConstruction | None = None) -> NodeSystem:
    """Zeros of ``T_n(p(x))``: ``n`` per monotone branch, ``3n`` in total."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    cons = cons or build_cubic(a)
    y = chebyshev_nodes(n)
    parts = [invert_monotone(cons.p, y, lo, hi, inc, cons.dp) for lo, hi, inc in cons.branches()]
    meta = {"a": cons.a, "z": cons.z, "b": cons.b}
    return validate_node_system(cons.host, np.concatenate(parts), f"nonsym(a={a!r},n={n})", meta)


def _check_ab(a: float, b: float) -> None:
    if not -1.0 < a < b < 1.0:
        raise DomainError(f"need -1 < a < b < 1, got a={a}, b={b}")
    if a + b == 0.0:
        raise DomainError("a + b must be nonzero")


def rational_pole(a: float, b: float) -> float:
    return (1 + a * b) / (a + b)


def rational_map_nonsym(a: float, b: float, x):
    """``(2x^2 - (a+b)x - 1 + ab) / ((a+b)x - 1 - ab)``; maps each band onto ``[-1, 1]``."""
    if a + b == 0.0:
        raise DomainError("a + b must be nonzero")
    x = np.asarray(x, dtype=float)
    den = (a + b) * x - 1 - a * b
    if np.any(den == 0.0):
        raise PoleHit(f"x = {rational_pole(a, b)} is the pole of the map")
    out = (2 * x * x - (a + b) * x - 1 + a * b) / den
    return float(out) if out.ndim == 0 else out


def rational_pole_inverses(a: float, b: float, n: int) -> list[float]:
    """Pole inverses of ``T_n(y(x))`` written as ``omega(x) / prod (1 - a_k x)``."""
    return [1.0 / rational_pole(a, b)] * n + [0.0] * n


def rational_nodes_nonsym(a: float, b: float, n: int, probes: int = 1000) -> NodeSystem:
    """``2n`` nodes solving ``y(x) = y_k`` on each band."""
    _check_ab(a, b)
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    f = lambda x: rational_map_nonsym(a, b, x)
    parts = []
    for lo, hi in ((-1.0, a), (b, 1.0)):
        vals = f(np.linspace(lo, hi, probes))
        steps = np.diff(vals)
        if not (np.all(steps > 0) or np.all(steps < 0)):
            raise NonMonotoneMap(f"map is not strictly monotone on [{lo}, {hi}]")
        parts.append(invert_monotone(f, chebyshev_nodes(n), lo, hi, bool(steps[0] > 0)))
    meta = {"a": a, "b": b, "pole_inverses": rational_pole_inverses(a, b, n)}
    return validate_node_system(two_bands(a, b), np.concatenate(parts), f"rational_nonsym(a={a!r},b={b!r},n={n})", meta)
