import math

import numpy as np
import pytest

from lebesgue_intervals.checks import dense_grid
from lebesgue_intervals.errors import DomainError, EndpointAlreadyNode, EndpointOutsideHost
from lebesgue_intervals.intervals import full_interval, symmetric_bands, validate_node_system
from lebesgue_intervals.lebesgue import chebyshev_nodes, chebyshev_system, lebesgue_constant
from lebesgue_intervals.symmetric import (
    SymmetricPairConfig,
    any_count_nodes,
    extend_with_endpoints,
    extension_check,
    symmetric_nodes,
    symmetric_omega,
    pair_bound,
)

from .oracles import literal_lebesgue


def test_config_domain():
    with pytest.raises(DomainError):
        SymmetricPairConfig(0.0, 3)
    with pytest.raises(DomainError):
        SymmetricPairConfig(1.0, 3)


def test_single_pair():
    ns = symmetric_nodes(SymmetricPairConfig(0.6, 1))
    np.testing.assert_allclose(ns.nodes, [-math.sqrt(0.68), math.sqrt(0.68)], atol=1e-15)


@pytest.mark.parametrize("a", [0.05, 0.3, 0.9])
@pytest.mark.parametrize("n", [1, 6, 33])
def test_nodes_structure(a, n):
    x = symmetric_nodes(SymmetricPairConfig(a, n)).array()
    assert x.size == 2 * n
    assert np.all((np.abs(x) >= a) & (np.abs(x) <= 1))
    assert np.sum(x > 0) == n
    np.testing.assert_array_equal(-x[::-1], x)
    assert np.max(np.abs(symmetric_omega(SymmetricPairConfig(a, n), x))) < 1e-10


def test_small_gap_limit_is_chebyshev():
    x = symmetric_nodes(SymmetricPairConfig(1e-6, 2)).array()
    np.testing.assert_allclose(x, chebyshev_nodes(4), atol=1e-5)


def test_omega_values():
    for n in (1, 4, 7):
        cfg = SymmetricPairConfig(0.35, n)
        assert symmetric_omega(cfg, 1.0) == pytest.approx(1.0, abs=1e-14)
        assert symmetric_omega(cfg, 0.35) == pytest.approx((-1) ** n, abs=1e-12)


def test_omega_norm():
    cfg = SymmetricPairConfig(0.45, 11)
    norm = np.max(np.abs(symmetric_omega(cfg, dense_grid(symmetric_bands(0.45), 10_000))))
    assert 1 - 1e-9 <= norm <= 1 + 1e-12


def test_pair_bound_arithmetic():
    assert pair_bound(0.5, 2.0) == pytest.approx(4.375, abs=1e-15)
    assert pair_bound(1 - 1e-12, 1.0) == pytest.approx(1.0, abs=1e-10)


def test_pair_bound_a02():
    big = lebesgue_constant(chebyshev_system(8)).constant
    lam = lebesgue_constant(symmetric_nodes(SymmetricPairConfig(0.2, 8))).constant
    assert lam <= pair_bound(0.2, big)


def test_extend():
    both = extend_with_endpoints(chebyshev_system(3), "both")
    np.testing.assert_allclose(both.nodes, [-1, -math.sqrt(3) / 2, 0, math.sqrt(3) / 2, 1], atol=1e-15)
    one = extend_with_endpoints(chebyshev_system(2), "plus_one")
    assert one.n == 3 and one.nodes[0] == -1.0
    right = extend_with_endpoints(chebyshev_system(2), "plus_one", endpoint=1.0)
    assert right.nodes[-1] == 1.0
    with pytest.raises(EndpointAlreadyNode):
        extend_with_endpoints(validate_node_system(full_interval(), [-0.2, 1.0]), "both")


def test_extend_outside_host():
    from lebesgue_intervals.intervals import IntervalUnion

    # hosts always span [-1, 1]; an out-of-host endpoint needs a hand-built union
    odd = IntervalUnion(((-0.9, 0.9),))
    with pytest.raises(EndpointOutsideHost):
        extend_with_endpoints(validate_node_system(odd, [0.0]), "plus_one")


def test_extension_chebyshev_2_both():
    r = extension_check(chebyshev_system(2), "both")
    assert r.premise_holds
    assert r.bound == pytest.approx(5 * math.sqrt(2) + 1, abs=1e-12)
    # oracle: nodes {-1, +-sqrt(2)/2, 1}; dense grid maximum of the literal Lebesgue function
    grid = literal_lebesgue([-1, -math.sqrt(0.5), math.sqrt(0.5), 1], np.linspace(-1, 1, 100_001)).max()
    assert r.extended_lambda == pytest.approx(grid, abs=1e-6)
    assert r.satisfied


def test_extension_single_node():
    r = extension_check(validate_node_system(full_interval(), [0.0]), "plus_one")
    assert r.premise_holds and r.base_lambda == 1.0 and r.bound == 4.0
    # nodes {-1, 0}: linear interpolation, Lebesgue function |x| + |1 + x| peaks at x = 1 with value 3
    assert r.extended_lambda == pytest.approx(3.0, abs=1e-12)
    assert r.satisfied


def test_extension_premise_fails():
    ns = validate_node_system(full_interval(), [0.5, 0.9])
    # omega = (x - 0.5)(x - 0.9): |omega(-1)| = 2.85 is the norm, |omega(1)| = 0.05 is not
    r = extension_check(ns, "plus_one")
    r_right = extension_check(ns, "plus_one", endpoint=1.0)
    assert r.premise_holds
    assert not r_right.premise_holds


def test_any_count_nodes():
    even = any_count_nodes(0.5, 4)
    assert even.n == 4 and np.allclose(even.nodes, symmetric_nodes(SymmetricPairConfig(0.5, 2)).nodes)
    odd = any_count_nodes(0.5, 5)
    assert odd.n == 5 and odd.nodes[-1] == 1.0
    base = lebesgue_constant(any_count_nodes(0.3, 6)).constant
    lam7 = lebesgue_constant(any_count_nodes(0.3, 7)).constant
    assert lam7 <= 3 * base + 1
