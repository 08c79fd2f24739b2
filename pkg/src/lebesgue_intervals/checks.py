"""Self-check suites run by ``lebesgue-intervals verify``.

Each suite returns a list of :class:`Check` records with the measured values
in ``detail``; they are lighter versions of the acceptance tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import cubic, elliptic, intervals, lebesgue, symmetric
from .errors import NoSolution
from .quadrature import DEFAULT_QUAD, QuadratureSpec


@dataclass
class Check:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}: {self.detail}"


def random_union(rng: np.random.Generator, max_bands: int = 3) -> intervals.IntervalUnion:
    bands = int(rng.integers(1, max_bands + 1))
    inner = np.sort(rng.uniform(-0.95, 0.95, 2 * bands - 2))
    while inner.size and np.min(np.diff(np.concatenate(([-1.0], inner, [1.0])))) < 0.05:
        inner = np.sort(rng.uniform(-0.95, 0.95, 2 * bands - 2))
    return intervals.make_interval_union(np.concatenate(([-1.0], inner, [1.0])))


def random_nodes(rng: np.random.Generator, host: intervals.IntervalUnion, n: int, candidates: int = 20_000) -> intervals.NodeSystem:
    """Randomized Leja sequence on ``host``.

    Uniformly random nodes have Lebesgue constants far beyond 1e12, where no
    floating-point sum of fundamental functions is accurate to 1e-12. A Leja
    sequence (each new node maximizes ``prod |x - x_j|`` over a jittered
    candidate grid) from a random start stays well conditioned on any union.
    """
    grid = dense_grid(host, candidates)
    grid = np.clip(grid + rng.uniform(-0.25, 0.25, grid.size) * 2.0 / candidates, -1.0, 1.0)
    inside = np.zeros(grid.size, dtype=bool)
    for lo, hi in host.intervals:
        inside |= (grid >= lo) & (grid <= hi)
    grid = np.unique(grid[inside])
    chosen = [int(rng.integers(grid.size))]
    logprod = np.log(np.abs(grid - grid[chosen[0]]) + 1e-300)
    for _ in range(n - 1):
        logprod[chosen] = -np.inf
        k = int(np.argmax(logprod))
        chosen.append(k)
        logprod += np.log(np.abs(grid - grid[k]) + 1e-300)
    return intervals.validate_node_system(host, grid[chosen], "random-leja")


def dense_grid(host: intervals.IntervalUnion, points: int = 100_000) -> np.ndarray:
    total = intervals.total_length(host)
    parts = [np.linspace(lo, hi, max(2, int(round(points * (hi - lo) / total)))) for lo, hi in host.intervals]
    return np.concatenate(parts)


def core_suite() -> list[Check]:
    out = []
    E = intervals.make_interval_union([-1, -0.9, 0.8, 1])
    out.append(Check("total_length([-1,-0.9]u[0.8,1])", abs(intervals.total_length(E) - 0.3) < 1e-15,
                     f"{intervals.total_length(E):.15g}"))
    rt = intervals.make_interval_union(E.endpoints) == E
    out.append(Check("interval union round-trip", rt, str(rt)))

    rng = np.random.default_rng(7)
    worst_sum, worst_floor, worst_node = 0.0, 0.0, 0.0
    for _ in range(5):
        host = random_union(rng)
        ns = random_nodes(rng, host, int(rng.integers(2, 30)))
        ts = dense_grid(host, 2000)
        sums = lebesgue.fundamental_values(ns, ts).sum(axis=1)
        worst_sum = max(worst_sum, float(np.max(np.abs(sums - 1))))
        worst_floor = max(worst_floor, float(np.max(1 - lebesgue.lebesgue_function(ns, ts))))
        worst_node = max(worst_node, float(np.max(np.abs(lebesgue.lebesgue_function(ns, ns.array()) - 1))))
    out.append(Check("partition of unity |sum l_k - 1|", worst_sum < 1e-12, f"{worst_sum:.3e}"))
    out.append(Check("lambda(x) >= 1", worst_floor < 1e-12, f"max deficit {worst_floor:.3e}"))
    out.append(Check("lambda(x_k) = 1", worst_node < 1e-12, f"{worst_node:.3e}"))

    lam2 = lebesgue.lebesgue_constant(lebesgue.chebyshev_system(2)).constant
    out.append(Check("Lambda_2 = sqrt(2)", abs(lam2 - math.sqrt(2)) < 1e-12, f"{lam2:.15g}"))
    pts = [(n, lebesgue.lebesgue_constant(lebesgue.chebyshev_system(n)).constant) for n in (16, 32, 64, 128, 256, 512)]
    fit = lebesgue.growth_fit(pts)
    out.append(Check("Chebyshev growth slope ~ 2/pi", abs(fit.slope - 2 / math.pi) < 0.05,
                     f"slope {fit.slope:.6f} vs {2 / math.pi:.6f}"))

    worst = 0.0
    for _ in range(3):
        host = random_union(rng)
        ns = random_nodes(rng, host, int(rng.integers(3, 12)))
        seg = lebesgue.lebesgue_constant(ns).constant
        grid = float(lebesgue.lebesgue_function(ns, dense_grid(host)).max())
        worst = max(worst, abs(seg - grid) / seg)
    out.append(Check("segment maximum vs 1e5-point grid", worst < 1e-6, f"max rel diff {worst:.3e}"))
    return out


def symmetric_suite() -> list[Check]:
    out = []
    for a in (0.2, 0.5, 0.8):
        for n in (2, 8, 32):
            big = lebesgue.lebesgue_constant(lebesgue.chebyshev_system(n)).constant
            lam = lebesgue.lebesgue_constant(symmetric.symmetric_nodes(symmetric.SymmetricPairConfig(a, n))).constant
            bound = symmetric.pair_bound(a, big)
            out.append(Check(f"a={a} n={n}: lambda_2n <= Lambda_n/a + (1-a^2)/(8a^2)", lam <= bound + 1e-8,
                             f"{lam:.10f} <= {bound:.10f}"))
    for n in (2, 8, 32):
        base = lebesgue.chebyshev_system(n)
        for mode, label in (("plus_one", "lambda_{n+1} <= 3lambda_n+1"), ("both", "lambda_{n+2} <= 5lambda_n+1")):
            r = symmetric.extension_check(base, mode)
            out.append(Check(f"Chebyshev n={n}: {label}", r.premise_holds and r.satisfied,
                             f"premise={r.premise_holds} {r.extended_lambda:.10f} <= {r.bound:.10f}"))
    cfg = symmetric.SymmetricPairConfig(0.4, 7)
    grid = dense_grid(symmetric.symmetric_bands(0.4), 10_000)
    norm = float(np.max(np.abs(symmetric.symmetric_omega(cfg, grid))))
    out.append(Check("||T_n(y(x))|| on E(a) = 1", 1 - 1e-9 <= norm <= 1 + 1e-12, f"{norm:.15g}"))
    return out


def nonsym_suite() -> list[Check]:
    out = []
    for a in (-0.5, 0.0, 0.3, 0.45):
        cons = cubic.build_cubic(a)
        worst = max(cons.residuals().values())
        out.append(Check(f"a={a}: alternation residuals", worst < 1e-10, f"max {worst:.3e} (z={cons.z:.12f}, b={cons.b:.12f})"))
        out.append(Check(f"a={a}: a < b < 1 and b > -a", a < cons.b < 1 and cons.b > -a, f"b={cons.b:.12f}"))
    pts = [(3 * n, lebesgue.lebesgue_constant(cubic.nonsym_nodes(0.0, n)).constant) for n in (4, 8, 16, 32, 64)]
    fit = lebesgue.growth_fit(pts)
    mean = float(np.mean([p[1] for p in pts]))
    out.append(Check("a=0: lambda_3n ~ c ln(3n) + d", fit.residual_rms < 0.05 * mean and fit.slope > 0,
                     f"slope {fit.slope:.6f}, rms/mean {fit.residual_rms / mean:.3e}"))
    a, b = -0.2, 0.5
    vals = cubic.rational_map_nonsym(a, b, np.array([-1.0, a, b, 1.0]))
    err = float(np.max(np.abs(vals - np.array([-1, 1, 1, -1]))))
    out.append(Check("rational map y(-1)=y(1)=-1, y(a)=y(b)=1", err < 1e-12, f"max err {err:.3e}"))
    return out


def elliptic_suite(quad: QuadratureSpec = DEFAULT_QUAD) -> list[Check]:
    out = []
    cfg = elliptic.EllipticConfig(-0.3, 0.5, quad)
    left, right = cfg.bands
    s = elliptic.harmonic_measure_inf(cfg, left) + elliptic.harmonic_measure_inf(cfg, right)
    out.append(Check("(a,b)=(-0.3,0.5): band measure sum at infinity = 1", abs(s - 1) < 1e-8, f"{s:.15g}"))
    for alpha in (1.5, 2.0, 10.0):
        s = elliptic.harmonic_measure_pole(cfg, alpha, left) + elliptic.harmonic_measure_pole(cfg, alpha, right)
        out.append(Check(f"band measure sum at alpha={alpha} = 1", abs(s - 1) < 1e-8, f"{s:.15g}"))
    sym = elliptic.EllipticConfig(-0.5, 0.5, quad)
    mu = elliptic.harmonic_measure_inf(sym, (0.5, 1.0))
    out.append(Check("symmetric c = 0", abs(sym.c) < 1e-10, f"{sym.c:.3e}"))
    out.append(Check("symmetric band measure = 1/2", abs(mu - 0.5) < 1e-8, f"{mu:.15g}"))
    n = 8
    alpha = elliptic.solve_alpha_n(cfg, n)
    res = elliptic.alpha_equation_residual(cfg, n, alpha)
    out.append(Check(f"n={n}: alpha_n equation residual", abs(res) < 1e-8, f"alpha_n={alpha:.12f}, residual {res:.3e}"))
    ns = elliptic.elliptic_nodes(cfg, n, alpha)
    worst = max(abs(elliptic.cumulative_g(cfg, n, alpha, x) - (k - 0.5) * math.pi) for k, x in enumerate(ns.nodes, 1))
    out.append(Check(f"n={n}: node equations G(x_k) = k pi - pi/2", worst < 1e-6, f"max residual {worst:.3e}"))
    try:
        elliptic.solve_alpha_n(sym, 4)
        out.append(Check("symmetric n=4 has no alpha_n", False, "a solution was returned"))
    except NoSolution as exc:
        out.append(Check("symmetric n=4 has no alpha_n", True, str(exc)))
    return out


SUITES = {
    "core": core_suite,
    "symmetric": symmetric_suite,
    "nonsym": nonsym_suite,
    "elliptic": elliptic_suite,
}
