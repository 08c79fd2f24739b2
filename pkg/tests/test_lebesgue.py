import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lebesgue_intervals.checks import dense_grid, random_nodes, random_union
from lebesgue_intervals.errors import DegenerateInput, PoleOnSet
from lebesgue_intervals.intervals import full_interval, make_interval_union, validate_node_system
from lebesgue_intervals.lebesgue import (
    chebyshev_eval,
    chebyshev_nodes,
    chebyshev_system,
    fundamental_values,
    growth_fit,
    lebesgue_constant,
    lebesgue_function,
    rational_lebesgue_function,
)

from .oracles import literal_fundamentals, literal_lebesgue, product_form_rational

E0 = full_interval()


def test_chebyshev_eval_examples():
    assert chebyshev_eval(0, 0.3) == 1
    assert chebyshev_eval(3, 0.5) == pytest.approx(-1, abs=1e-15)
    assert chebyshev_eval(5, 1.0) == 1


@given(st.integers(1, 200), st.floats(-2, 2))
def test_chebyshev_recurrence(n, t):
    lhs = chebyshev_eval(n + 1, t)
    rhs = 2 * t * chebyshev_eval(n, t) - chebyshev_eval(n - 1, t)
    assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(lhs))


@given(st.integers(0, 60), st.floats(0, math.pi))
def test_chebyshev_trig_form(n, theta):
    assert chebyshev_eval(n, math.cos(theta)) == pytest.approx(math.cos(n * theta), abs=1e-11)


@pytest.mark.parametrize(
    "n, expected",
    [(1, [0.0]), (2, [-math.sqrt(2) / 2, math.sqrt(2) / 2]), (3, [-math.sqrt(3) / 2, 0.0, math.sqrt(3) / 2])],
)
def test_chebyshev_nodes(n, expected):
    np.testing.assert_allclose(chebyshev_nodes(n), expected, atol=1e-15)


def test_chebyshev_nodes_are_zeros():
    for n in (7, 40):
        assert np.max(np.abs(chebyshev_eval(n, chebyshev_nodes(n)))) < 1e-13


def test_fundamental_kronecker_and_linear():
    ns = chebyshev_system(5)
    for j, xj in enumerate(ns.nodes):
        np.testing.assert_array_equal(fundamental_values(ns, xj), np.eye(5)[j])
    two = validate_node_system(E0, [0.0, 1.0])
    np.testing.assert_allclose(fundamental_values(two, 0.5), [0.5, 0.5], atol=1e-15)


def test_fundamental_matches_literal(rng):
    host = random_union(rng)
    ns = random_nodes(rng, host, 9)
    xs = rng.uniform(-1, 1, 50)
    np.testing.assert_allclose(fundamental_values(ns, xs), literal_fundamentals(ns.nodes, xs), atol=1e-11)


def test_lebesgue_function_examples():
    ns = chebyshev_system(2)
    # oracle: |l_1(1)| + |l_2(1)| with nodes +-sqrt(2)/2 is (1 + sqrt 2)/2 + (sqrt 2 - 1)/2
    assert literal_lebesgue(ns.nodes, 1.0)[0] == pytest.approx(math.sqrt(2), abs=1e-15)
    assert lebesgue_function(ns, 1.0) == pytest.approx(math.sqrt(2), abs=1e-14)
    one = validate_node_system(E0, [0.2])
    assert lebesgue_function(one, -0.7) == 1.0
    for x in ns.nodes:
        assert lebesgue_function(ns, x) == 1.0


def test_lebesgue_constant_small_cases():
    assert lebesgue_constant(validate_node_system(E0, [0.1])).constant == 1.0
    rep = lebesgue_constant(chebyshev_system(2), keep_samples=True)
    grid = np.linspace(-1, 1, 100_001)
    assert rep.constant == pytest.approx(literal_lebesgue(chebyshev_system(2).nodes, grid).max(), abs=1e-12)
    assert rep.argmax == -1.0  # +-1 tie goes to the smaller x
    assert rep.constant == pytest.approx(max(lam for _, lam in rep.samples), abs=1e-9)
    # Lambda_3 = 5/3 exactly; frozen from the dense-grid oracle (1.6666666666...)
    assert lebesgue_constant(chebyshev_system(3)).constant == pytest.approx(5 / 3, abs=1e-12)


def test_lebesgue_constant_chebyshev_10():
    rep = lebesgue_constant(chebyshev_system(10))
    grid = literal_lebesgue(chebyshev_system(10).nodes, np.linspace(-1, 1, 100_001)).max()
    assert abs(rep.constant - grid) < 1e-6
    assert abs(rep.constant - (2 / math.pi * math.log(10) + 0.9625)) < 0.05


def test_constant_dominates_probes(rng):
    host = make_interval_union([-1, -0.2, 0.3, 1])
    ns = random_nodes(rng, host, 14)
    rep = lebesgue_constant(ns)
    probes = dense_grid(host, 5000)
    assert np.all(lebesgue_function(ns, probes) <= rep.constant * (1 + 1e-14))
    assert host.band_index(rep.argmax) is not None


def test_samples_csv():
    rep = lebesgue_constant(chebyshev_system(2), grid=4, keep_samples=True)
    lines = rep.to_csv().splitlines()
    assert lines[0] == "x,lambda"
    assert len(lines) == 1 + len(rep.samples)
    x, lam = map(float, lines[1].split(","))
    assert x == -1.0 and lam == pytest.approx(math.sqrt(2), rel=1e-14)


def test_rational_matches_product_form():
    ns = chebyshev_system(4)
    value = rational_lebesgue_function(ns, [0.5], 0.9)
    assert value == pytest.approx(product_form_rational(ns.nodes, [0.5], 0.9), rel=1e-8)


def test_rational_zero_poles_reduce(rng):
    ns = random_nodes(rng, make_interval_union([-1, 0.1, 0.4, 1]), 12)
    xs = np.concatenate([rng.uniform(-1, 0.1, 50), rng.uniform(0.4, 1, 50)])
    np.testing.assert_allclose(
        rational_lebesgue_function(ns, [0.0] * 12, xs), lebesgue_function(ns, xs), rtol=1e-12, atol=0
    )


def test_rational_interpolation_property():
    ns = chebyshev_system(6)
    for x in ns.nodes:
        assert rational_lebesgue_function(ns, [0.4, -0.3], x) == 1.0


def test_pole_on_set():
    with pytest.raises(PoleOnSet):
        rational_lebesgue_function(chebyshev_system(3), [2.0], 0.1)
    host = make_interval_union([-1, -0.5, 0.8, 1])
    # 1/a = 0.6 lies in the gap: fine
    ns = validate_node_system(host, [-0.9, -0.6, 0.9])
    assert rational_lebesgue_function(ns, [1 / 0.6], -0.75) > 0


def test_growth_fit_exact():
    pts = [(n, 2 * math.log(n) + 1) for n in (4, 8, 16)]
    fit = growth_fit(pts)
    assert fit.slope == pytest.approx(2, abs=1e-12)
    assert fit.intercept == pytest.approx(1, abs=1e-12)
    assert fit.residual_rms < 1e-12
    two = growth_fit([(3, 1.0), (9, 5.0)])
    assert two.residual_rms < 1e-12 and two.predict(9) == pytest.approx(5.0)


def test_growth_fit_degenerate():
    with pytest.raises(DegenerateInput):
        growth_fit([(8, 1.0), (8, 2.0)])
    with pytest.raises(DegenerateInput):
        growth_fit([(8, 1.0)])


def test_chebyshev_growth_slope():
    pts = [(n, lebesgue_constant(chebyshev_system(n)).constant) for n in (16, 32, 64, 128, 256, 512)]
    assert abs(growth_fit(pts).slope - 2 / math.pi) < 0.05


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(2, 40))
def test_lebesgue_floor_and_unity(seed, n):
    gen = np.random.default_rng(seed)
    host = random_union(gen)
    ns = random_nodes(gen, host, n, candidates=4000)
    xs = dense_grid(host, 500)
    assert np.all(lebesgue_function(ns, xs) >= 1 - 1e-12)
    assert np.max(np.abs(fundamental_values(ns, xs).sum(axis=1) - 1)) < 1e-12
    np.testing.assert_array_equal(lebesgue_function(ns, ns.array()), 1.0)
