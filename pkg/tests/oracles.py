"""Independent reference computations: literal formulas, no barycentric tricks."""

import numpy as np


def literal_fundamentals(nodes, x):
    """``l_k(x) = prod_{j != k} (x - x_j) / (x_k - x_j)``, straight from the definition."""
    nodes = np.asarray(nodes, dtype=float)
    x = np.atleast_1d(x)[:, None]
    out = np.ones((x.shape[0], nodes.size))
    for k in range(nodes.size):
        for j in range(nodes.size):
            if j != k:
                out[:, k] *= (x[:, 0] - nodes[j]) / (nodes[k] - nodes[j])
    return out


def literal_lebesgue(nodes, x):
    return np.abs(literal_fundamentals(nodes, x)).sum(axis=1)


def product_form_rational(nodes, poles, x, h=1e-6):
    """Rational Lebesgue function from ``omega(x) / prod(1 - a x)`` with a finite-difference derivative."""
    nodes = np.asarray(nodes)

    def wt(t):
        return np.prod(t - nodes) / np.prod(1 - np.asarray(poles) * t)

    total = 0.0
    for xk in nodes:
        deriv = (wt(xk + h) - wt(xk - h)) / (2 * h)
        total += abs(wt(x) / (deriv * (x - xk)))
    return total


def grid_lebesgue_max(nodes, host, points=100_000, chunk=5000):
    """Maximum of the literal Lebesgue function over a dense grid of the host set."""
    total = sum(hi - lo for lo, hi in host.intervals)
    grid = np.concatenate(
        [np.linspace(lo, hi, max(2, int(round(points * (hi - lo) / total)))) for lo, hi in host.intervals]
    )
    return max(literal_lebesgue(nodes, grid[i : i + chunk]).max() for i in range(0, grid.size, chunk))
