"""Unions of closed subintervals of [-1, 1] and node systems living on them."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import BadBoundary, DuplicateNode, NodeOutsideSet, NotIncreasing


@dataclass(frozen=True)
class IntervalUnion:
    """Ordered, pairwise disjoint closed intervals ``[l_0, r_0] u ... u [l_s, r_s]``.

    Always spans -1 to 1: ``l_0 = -1`` and ``r_s = 1``. The gaps ``(r_i, l_{i+1})``
    are nonempty. Build through :func:`make_interval_union` so the invariants
    are checked.
    """

    intervals: tuple[tuple[float, float], ...]

    @property
    def endpoints(self) -> list[float]:
        return [v for pair in self.intervals for v in pair]

    @property
    def s(self) -> int:
        """Number of gaps; the union has ``s + 1`` bands."""
        return len(self.intervals) - 1

    def band_index(self, x: float) -> int | None:
        for i, (lo, hi) in enumerate(self.intervals):
            if lo <= x <= hi:
                return i
        return None

    def to_dict(self) -> dict:
        return {"intervals": [list(pair) for pair in self.intervals]}

    @classmethod
    def from_dict(cls, data: dict) -> "IntervalUnion":
        return make_interval_union([v for pair in data["intervals"] for v in pair])


def make_interval_union(endpoints: Sequence[float]) -> IntervalUnion:
    """Build ``E`` from the flat list ``[-1, b_0, a_1, b_1, ..., a_s, 1]``."""
    pts = [float(v) for v in endpoints]
    if len(pts) < 2 or len(pts) % 2:
        raise NotIncreasing(f"need an even number >= 2 of endpoints, got {len(pts)}")
    if pts[0] != -1.0 or pts[-1] != 1.0:
        raise BadBoundary(f"endpoints must start at -1 and end at 1, got {pts[0]} .. {pts[-1]}")
    for left, right in zip(pts, pts[1:]):
        if not left < right:
            raise NotIncreasing(f"endpoints not strictly increasing at {left} >= {right}")
    return IntervalUnion(tuple((pts[i], pts[i + 1]) for i in range(0, len(pts), 2)))


def contains(E: IntervalUnion, x: float) -> bool:
    return any(lo <= x <= hi for lo, hi in E.intervals)


def total_length(E: IntervalUnion) -> float:
    return sum(hi - lo for lo, hi in E.intervals)


# Canonical sets used throughout.
def full_interval() -> IntervalUnion:
    return make_interval_union([-1.0, 1.0])


def two_bands(a: float, b: float) -> IntervalUnion:
    """``[-1, a] u [b, 1]``."""
    return make_interval_union([-1.0, a, b, 1.0])


def symmetric_bands(a: float) -> IntervalUnion:
    """``[-1, -a] u [a, 1]``."""
    return two_bands(-a, a)


@dataclass(frozen=True)
class NodeSystem:
    """Interpolation nodes stored in ascending order.

    The usual convention indexes nodes downward (``x_n < ... < x_1``); here
    ``nodes[j]`` corresponds to the descending index ``k = n - j`` (0-based
    ``j``), i.e. ``k -> n + 1 - k`` in 1-based terms.
    """

    nodes: tuple[float, ...]
    host: IntervalUnion
    scheme: str = "custom"
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def n(self) -> int:
        return len(self.nodes)

    def array(self) -> np.ndarray:
        return np.asarray(self.nodes, dtype=float)

    def to_dict(self) -> dict:
        out = {"host": self.host.to_dict(), "nodes": list(self.nodes), "scheme": self.scheme}
        if self.meta:
            out["meta"] = self.meta
        return out

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: dict) -> "NodeSystem":
        host = IntervalUnion.from_dict(data["host"])
        return validate_node_system(host, data["nodes"], data.get("scheme", "custom"), data.get("meta"))


def validate_node_system(
    E: IntervalUnion, xs: Iterable[float], tag: str = "custom", meta: dict | None = None
) -> NodeSystem:
    nodes = sorted(float(x) for x in xs)
    for left, right in zip(nodes, nodes[1:]):
        if left == right:
            raise DuplicateNode(f"node {left} appears more than once")
    outside = [x for x in nodes if not contains(E, x)]
    if outside:
        raise NodeOutsideSet(f"nodes outside the set: {outside[:5]}")
    return NodeSystem(tuple(nodes), E, tag, dict(meta or {}))
