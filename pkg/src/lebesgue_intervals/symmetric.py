"""Two symmetric bands ``E(a) = [-1, -a] u [a, 1]``.

The node polynomial is ``T_n(y(x))`` with ``y(x) = (2x^2 - 1 - a^2) / (1 - a^2)``,
which maps each band onto ``[-1, 1]``. Odd node counts are handled by adding
endpoints, which at most triples the Lebesgue constant (plus one).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import DomainError, EndpointAlreadyNode, EndpointOutsideHost
from .intervals import NodeSystem, contains, symmetric_bands, validate_node_system
from .lebesgue import chebyshev_eval, chebyshev_nodes, lebesgue_constant, maximize_on_segments, segments

Mode = Literal["plus_one", "both"]


@dataclass(frozen=True)
class SymmetricPairConfig:
    a: float
    n: int

    def __post_init__(self):
        if not 0.0 < self.a < 1.0:
            raise DomainError(f"a must lie in (0, 1), got {self.a}")
        if self.n < 1:
            raise DomainError(f"n must be >= 1, got {self.n}")


def quadratic_map(a: float, x):
    return (2.0 * np.square(x) - 1.0 - a * a) / (1.0 - a * a)


def symmetric_nodes(cfg: SymmetricPairConfig) -> NodeSystem:
    a = cfg.a
    y = chebyshev_nodes(cfg.n)
    right = np.sqrt(0.5 * (1.0 - a * a) * y + 0.5 * (1.0 + a * a))
    # clamp rounding at the band edges
    right = np.clip(right, a, 1.0)
    nodes = np.concatenate([-right[::-1], right])
    return validate_node_system(symmetric_bands(a), nodes, f"symmetric(a={a!r},n={cfg.n})")


def symmetric_omega(cfg: SymmetricPairConfig, x):
    return chebyshev_eval(cfg.n, quadratic_map(cfg.a, x))


def pair_bound(a: float, capital_lambda_n: float) -> float:
    """``Lambda_n / a + (1 - a^2) / (8 a^2)``."""
    return capital_lambda_n / a + (1.0 - a * a) / (8.0 * a * a)


def sharper_bound(a: float, capital_lambda_n: float) -> float:
    """The tighter ``Lambda_n + (1 - a^2) / (8 a^2)`` form; observational only."""
    return capital_lambda_n + (1.0 - a * a) / (8.0 * a * a)


def extend_with_endpoints(nodes: NodeSystem, mode: Mode, endpoint: float = -1.0) -> NodeSystem:
    """Append one endpoint (``plus_one``; ``-1`` by default, i.e. ``(1 + x) omega``)
    or both ``+-1`` (``both``, i.e. ``(1 - x^2) omega``)."""
    if mode == "plus_one":
        added = [float(endpoint)]
        if abs(added[0]) != 1.0:
            raise ValueError("endpoint must be -1 or 1")
    elif mode == "both":
        added = [-1.0, 1.0]
    else:
        raise ValueError(f"unknown mode {mode!r}")
    for e in added:
        if e in nodes.nodes:
            raise EndpointAlreadyNode(f"{e} is already a node")
        if not contains(nodes.host, e):
            raise EndpointOutsideHost(f"{e} is not in the host set")
    tag = f"{nodes.scheme}+{'both' if mode == 'both' else f'{added[0]:+g}'}"
    return validate_node_system(nodes.host, list(nodes.nodes) + added, tag, nodes.meta)


def omega_sup_ratio(nodes: NodeSystem, endpoint: float) -> float:
    """``||omega||_E / |omega(endpoint)|`` for the monic node polynomial."""
    x = nodes.array()
    ref = np.log(np.abs(endpoint - x)).sum()

    def ratio(t):
        t = np.asarray(t, dtype=float)
        with np.errstate(divide="ignore"):
            return np.exp(np.log(np.abs(t[:, None] - x[None, :])).sum(axis=1) - ref)

    top, *_ = maximize_on_segments(ratio, segments(nodes.host, x))
    return top


@dataclass
class ExtensionResult:
    premise_holds: bool
    base_lambda: float
    extended_lambda: float
    bound: float
    satisfied: bool
    mode: str


def extension_check(nodes: NodeSystem, mode: Mode, endpoint: float = -1.0, premise_rtol: float = 1e-9) -> ExtensionResult:
    """Compare the Lebesgue constant after adding endpoints with ``3 lambda + 1`` / ``5 lambda + 1``.

    The premise ``|omega(e)| = ||omega||_E`` is checked at each added endpoint
    ``e``; ``satisfied`` is only meaningful when it holds.
    """
    extended = extend_with_endpoints(nodes, mode, endpoint)
    added = [endpoint] if mode == "plus_one" else [-1.0, 1.0]
    premise = all(omega_sup_ratio(nodes, e) * (1.0 - premise_rtol) <= 1.0 for e in added)
    base = lebesgue_constant(nodes).constant
    ext = lebesgue_constant(extended).constant
    bound = (3.0 if mode == "plus_one" else 5.0) * base + 1.0
    return ExtensionResult(premise, base, ext, bound, ext <= bound + 1e-8, mode)


def any_count_nodes(a: float, m: int) -> NodeSystem:
    """``m`` nodes on ``E(a)``: the symmetric set for even ``m``, plus the point 1 for odd ``m``."""
    if m < 2:
        raise DomainError(f"m must be >= 2, got {m}")
    base = symmetric_nodes(SymmetricPairConfig(a, m // 2))
    if m % 2 == 0:
        return base
    return extend_with_endpoints(base, "plus_one", endpoint=1.0)


# interface names used by external callers
theorem3_bound = pair_bound
lemma1_check = extension_check
corollary1_nodes = any_count_nodes
