"""Lagrange interpolation nodes on unions of intervals and their Lebesgue constants."""

from .errors import LebesgueError
from .intervals import (
    IntervalUnion,
    NodeSystem,
    contains,
    make_interval_union,
    total_length,
    validate_node_system,
)
from .lebesgue import (
    GrowthFit,
    LebesgueReport,
    chebyshev_eval,
    chebyshev_nodes,
    fundamental_values,
    growth_fit,
    lebesgue_constant,
    lebesgue_function,
    rational_lebesgue_function,
)

__all__ = [
    "GrowthFit",
    "IntervalUnion",
    "LebesgueError",
    "LebesgueReport",
    "NodeSystem",
    "chebyshev_eval",
    "chebyshev_nodes",
    "contains",
    "fundamental_values",
    "growth_fit",
    "lebesgue_constant",
    "lebesgue_function",
    "make_interval_union",
    "rational_lebesgue_function",
    "total_length",
    "validate_node_system",
]
