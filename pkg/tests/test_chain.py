"""Transition structure, simulators, and sufficient statistics."""

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from copulachain.chain import (
    BinaryPath,
    ModelParams,
    PathOrigin,
    Regime,
    TransitionCounts,
    lambda2,
    n_step_matrix,
    simulate_bernoulli_chain,
    simulate_uniform_chain,
    stationary_distribution,
    transition_counts,
    transition_matrix,
)
from copulachain.errors import DomainError

from oracles import simulate_reference

params_st = st.tuples(
    st.floats(0.01, 0.99, allow_nan=False),
    st.floats(0.01, 0.99, allow_nan=False),
).map(lambda t: ModelParams(*t))


def test_matrix_at_half_half():
    m = transition_matrix(ModelParams(0.5, 0.5)).entries
    assert np.allclose(m, [[0.5, 0.5], [0.5, 0.5]], atol=1e-15)


def test_matrix_below_half():
    m = transition_matrix(ModelParams(0.5, 0.25)).entries
    assert np.allclose(m, [[5.0 / 6.0, 1.0 / 6.0], [0.5, 0.5]], atol=1e-15)


def test_matrix_above_half_independence_point():
    # a = 1 - p makes every row the stationary law
    m = transition_matrix(ModelParams(0.3, 0.7)).entries
    assert np.allclose(m, [[0.3, 0.7], [0.3, 0.7]], atol=1e-15)


@given(params_st)
def test_matrix_is_stochastic(params):
    m = transition_matrix(params).entries
    assert np.all(m >= -1e-15)
    assert np.allclose(m.sum(axis=1), 1.0, atol=1e-12)


@given(params_st)
def test_stationarity(params):
    m = transition_matrix(params).entries
    pi = np.array(stationary_distribution(params))
    assert np.allclose(pi, (1.0 - params.p, params.p), atol=1e-15)
    assert np.allclose(pi @ m, pi, atol=1e-12)


@given(params_st)
def test_lambda2_is_second_eigenvalue(params):
    m = transition_matrix(params).entries
    eig = sorted(np.linalg.eigvals(m).real)
    lam = lambda2(params)
    assert abs(lam) <= 1.0 + 1e-12
    assert math.isclose(eig[0], lam, abs_tol=1e-10)
    assert math.isclose(eig[1], 1.0, abs_tol=1e-10)


def test_regime_split():
    assert Regime.from_p(0.3) is Regime.LESS_HALF
    assert Regime.from_p(0.5) is Regime.HALF
    assert Regime.from_p(0.7) is Regime.GEQ_HALF
    assert ModelParams(0.2, 0.3).regime is Regime.LESS_HALF


@pytest.mark.parametrize("a,p", [(0.0, 0.3), (1.0, 0.3), (0.4, 0.0), (0.4, 1.0), (-0.1, 0.5)])
def test_params_rejected(a, p):
    with pytest.raises(DomainError):
        ModelParams(a, p)


def test_n_step_identity_and_single():
    params = ModelParams(0.4, 0.3)
    assert np.allclose(n_step_matrix(params, 0).entries, np.eye(2), atol=1e-15)
    assert np.allclose(n_step_matrix(params, 1).entries, transition_matrix(params).entries, atol=1e-15)


@given(params_st, st.integers(0, 6), st.integers(0, 6))
def test_chapman_kolmogorov(params, m, k):
    lhs = n_step_matrix(params, m + k).entries
    rhs = n_step_matrix(params, m).entries @ n_step_matrix(params, k).entries
    assert np.allclose(lhs, rhs, atol=1e-10)


def test_n_step_matches_matrix_power():
    params = ModelParams(0.7, 0.6)
    cube = np.linalg.matrix_power(transition_matrix(params).entries, 3)
    assert np.allclose(n_step_matrix(params, 3).entries, cube, atol=1e-12)


def test_branch_continuity_at_half():
    below = transition_matrix(ModelParams(0.3, 0.5 - 1e-12)).entries
    above = transition_matrix(ModelParams(0.3, 0.5 + 1e-12)).entries
    assert np.allclose(below, above, atol=1e-9)


@given(st.floats(0.01, 0.99))
def test_independence_degeneracy(p):
    a = p if p < 0.5 else 1.0 - p
    m = transition_matrix(ModelParams(a, p)).entries
    pi = np.array([1.0 - p, p])
    assert np.allclose(m[0], pi, atol=1e-12)
    assert np.allclose(m[1], pi, atol=1e-12)


# -- simulation ---------------------------------------------------------


def test_simulation_is_deterministic():
    params = ModelParams(0.6, 0.4)
    one = simulate_bernoulli_chain(params, 500, 42)
    two = simulate_bernoulli_chain(params, 500, 42)
    other = simulate_bernoulli_chain(params, 500, 43)
    assert np.array_equal(one.states, two.states)
    assert not np.array_equal(one.states, other.states)
    assert one.n == 500 and one.states.size == 501
    assert one.origin == PathOrigin(kind="simulated", seed=42, a=0.6, p=0.4)


@pytest.mark.parametrize("seed", range(6))
@pytest.mark.parametrize("a,p", [(0.3, 0.2), (0.8, 0.7), (0.5, 0.5), (0.05, 0.95)])
def test_simulation_matches_sequential_reference(a, p, seed):
    params = ModelParams(a, p)
    lib = simulate_bernoulli_chain(params, 400, seed)
    assert np.array_equal(lib.states, simulate_reference(params, 400, seed))


@pytest.mark.parametrize("a,p", [(0.2, 0.3), (0.5, 0.5), (0.7, 0.8), (0.9, 0.1)])
def test_simulated_marginal_mean(a, p):
    path = simulate_bernoulli_chain(ModelParams(a, p), 200_000, 7)
    assert abs(path.states.mean() - p) < 0.01


def test_simulated_transition_frequencies():
    params = ModelParams(0.6, 0.3)
    m = transition_matrix(params).entries
    s = simulate_bernoulli_chain(params, 100_000, 11).states
    for i in (0, 1):
        mask = s[:-1] == i
        freq = s[1:][mask].mean()
        assert abs(freq - m[i, 1]) < 0.02


def test_simulation_rejects_short():
    with pytest.raises(DomainError):
        simulate_bernoulli_chain(ModelParams(0.5, 0.5), 0, 1)


def test_uniform_chain_shape_and_values():
    path = simulate_uniform_chain(0.7, 1000, 3)
    assert path.states.size == 1001
    assert np.all((path.states >= 0.0) & (path.states <= 1.0))
    # reflection never leaves {x0, 1 - x0}
    assert len(np.unique(path.states)) <= 2
    assert math.isclose(path.states.min() + path.states.max(), 1.0, abs_tol=0.0)


def test_uniform_chain_repeat_fraction():
    sticky = simulate_uniform_chain(0.999, 20_000, 5).states
    frac = np.mean(sticky[1:] == sticky[:-1])
    assert frac >= 0.99
    fair = simulate_uniform_chain(0.5, 200_000, 5).states
    assert abs(np.mean(fair[1:] == fair[:-1]) - 0.5) < 0.01


@pytest.mark.parametrize("a", [0.0, 1.0, 1.5])
def test_uniform_chain_rejects_bad_weight(a):
    with pytest.raises(DomainError):
        simulate_uniform_chain(a, 10, 0)


# -- transition counts --------------------------------------------------


def _path(values):
    return BinaryPath(
        states=np.array(values, dtype=np.int8),
        origin=PathOrigin(kind="loaded", seed=None, a=None, p=None),
    )


def test_counts_all_zero_path():
    c = transition_counts(_path([0, 0, 0, 0]))
    assert c == TransitionCounts(x0=0, n00=3, n01=0, n10=0, n11=0)
    assert c.n == 3 and c.ones == 0


def test_counts_alternating_path():
    c = transition_counts(_path([1, 0, 1, 0, 1]))
    assert c == TransitionCounts(x0=1, n00=0, n01=2, n10=2, n11=0)
    assert c.ones == 3


@given(st.lists(st.integers(0, 1), min_size=2, max_size=200))
def test_counts_identities(values):
    c = transition_counts(_path(values))
    assert c.n == len(values) - 1
    assert c.n00 + c.n01 + c.n10 + c.n11 == c.n
    assert c.ones == sum(values)
    assert c.x0 == values[0]


@given(st.lists(st.integers(0, 1), min_size=2, max_size=100))
def test_counts_flip_involution(values):
    c = transition_counts(_path(values))
    f = c.flipped()
    assert f.flipped() == c
    assert f == transition_counts(_path([1 - v for v in values]))


@pytest.mark.parametrize(
    "kw",
    [
        dict(x0=0, n00=5, n01=0, n10=0, n11=3),  # 1-block unreachable
        dict(x0=0, n00=2, n01=3, n10=1, n11=0),  # two more exits than entries
        dict(x0=1, n00=2, n01=2, n10=1, n11=0),  # crossing parity wrong for x0 = 1
        dict(x0=0, n00=0, n01=0, n10=0, n11=0),
        dict(x0=2, n00=1, n01=0, n10=0, n11=0),
    ],
)
def test_unrealizable_counts_rejected(kw):
    with pytest.raises(DomainError):
        TransitionCounts(**kw)


def test_path_validation():
    with pytest.raises(DomainError):
        _path([0, 2, 1])
    with pytest.raises(DomainError):
        _path([1])
