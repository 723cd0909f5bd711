"""Likelihood machinery, closed-form variances, and the point estimators."""

import math

import numpy as np
import pytest
import sympy as sp
from hypothesis import assume, given, strategies as st

from copulachain.chain import (
    BinaryPath,
    ModelParams,
    PathOrigin,
    Regime,
    RealPath,
    TransitionCounts,
    simulate_bernoulli_chain,
    simulate_uniform_chain,
    transition_counts,
)
from copulachain.errors import DegenerateData, DomainError
from copulachain.estimation import (
    RobustConfig,
    asymptotic_cov,
    chisq1_quantile,
    clt_variance,
    fit_mle,
    indicator_estimate,
    loglik,
    mean_estimate,
    mle,
    mle_ci,
    mle_half,
    normal_quantile,
    profile_a,
    quartic_coefficients,
    robust_estimate,
    score,
    var_sample_mean,
)

from oracles import exact_var_scaled_mean, grid_mle, quantile_bisect, runs_count

interior_params = st.tuples(st.floats(0.05, 0.95), st.floats(0.05, 0.95)).map(
    lambda t: ModelParams(*t)
)


def _simulated_counts(a, p, n, seed):
    return transition_counts(simulate_bernoulli_chain(ModelParams(a, p), n, seed))


# -- quantiles -----------------------------------------------------------


def test_normal_quantile_frozen():
    assert normal_quantile(0.5) == 0.0
    assert math.isclose(normal_quantile(0.975), 1.959963984540054, abs_tol=1e-9)


@pytest.mark.parametrize("q", [1e-8, 0.001, 0.025, 0.31, 0.5, 0.77, 0.975, 0.999, 1 - 1e-8])
def test_normal_quantile_against_bisection(q):
    assert math.isclose(normal_quantile(q), quantile_bisect(q), abs_tol=1e-8)


@given(st.floats(0.01, 0.99))
def test_normal_quantile_antisymmetric(q):
    assert math.isclose(normal_quantile(q), -normal_quantile(1.0 - q), abs_tol=1e-12)


@pytest.mark.parametrize("q", [0.0, 1.0, -0.5, 2.0])
def test_normal_quantile_domain(q):
    with pytest.raises(DomainError):
        normal_quantile(q)


def test_chisq_quantile():
    assert math.isclose(chisq1_quantile(0.05), 3.841458821, abs_tol=1e-3)
    assert math.isclose(chisq1_quantile(0.3173), 1.0, abs_tol=1e-3)
    # one degree of freedom: the threshold is a squared normal quantile
    for alpha in (0.01, 0.05, 0.2, 0.6):
        assert math.isclose(chisq1_quantile(alpha), normal_quantile(1 - alpha / 2) ** 2, rel_tol=1e-12)
    assert chisq1_quantile(0.01) > chisq1_quantile(0.05) > chisq1_quantile(0.5)


# -- log-likelihood and score -------------------------------------------


def test_loglik_frozen_value():
    c = TransitionCounts(x0=0, n00=3, n01=0, n10=0, n11=0)
    expected = math.log(0.75) + 3.0 * math.log(0.625 / 0.75)
    assert math.isclose(loglik(c, ModelParams(0.5, 0.25)), expected, abs_tol=1e-14)


@given(interior_params, st.integers(0, 10_000))
def test_loglik_collapses_to_binomial_at_independence(params, seed):
    p = params.p
    a = p if p < 0.5 else 1.0 - p
    c = _simulated_counts(params.a, params.p, 60, seed)
    got = loglik(c, ModelParams(a, p))
    iid = c.ones * math.log(p) + (c.n + 1 - c.ones) * math.log(1.0 - p)
    assert math.isclose(got, iid, rel_tol=1e-12, abs_tol=1e-12)


@given(interior_params, st.integers(0, 10_000))
def test_loglik_flip_invariance(params, seed):
    c = _simulated_counts(0.5, 0.4, 80, seed)
    mirrored = ModelParams(params.a, 1.0 - params.p)
    assert math.isclose(loglik(c, params), loglik(c.flipped(), mirrored), abs_tol=1e-9)


def test_score_zero_at_matching_independence_counts():
    # 16 states, a quarter of them ones, transitions split i.i.d.-style
    c = TransitionCounts(x0=0, n00=9, n01=3, n10=3, n11=1)
    s_a, s_p = score(c, ModelParams(0.25, 0.25))
    assert s_a == 0.0
    assert math.isclose(s_p, -4.0 / 3.0, abs_tol=1e-12)


def test_score_sign_reacts_to_persistence():
    base = TransitionCounts(x0=0, n00=9, n01=3, n10=3, n11=1)
    sticky = TransitionCounts(x0=0, n00=12, n01=3, n10=3, n11=1)
    assert score(base, ModelParams(0.25, 0.25))[0] == 0.0
    assert score(sticky, ModelParams(0.25, 0.25))[0] > 0.0


@pytest.mark.parametrize(
    "a,p",
    [(0.3, 0.2), (0.7, 0.4), (0.2, 0.8), (0.9, 0.6)],
)
def test_score_matches_finite_differences(a, p):
    c = _simulated_counts(0.5, 0.45, 300, 12)
    h = 1e-6
    s_a, s_p = score(c, ModelParams(a, p))
    fd_a = (loglik(c, ModelParams(a + h, p)) - loglik(c, ModelParams(a - h, p))) / (2 * h)
    fd_p = (loglik(c, ModelParams(a, p + h)) - loglik(c, ModelParams(a, p - h))) / (2 * h)
    assert math.isclose(s_a, fd_a, rel_tol=1e-5, abs_tol=1e-4)
    assert math.isclose(s_p, fd_p, rel_tol=1e-5, abs_tol=1e-4)


def test_score_mirrors_under_relabeling():
    c = _simulated_counts(0.6, 0.3, 200, 5)
    s_a, s_p = score(c, ModelParams(0.4, 0.3))
    f_a, f_p = score(c.flipped(), ModelParams(0.4, 0.7))
    assert math.isclose(s_a, f_a, rel_tol=1e-9)
    assert math.isclose(s_p, -f_p, rel_tol=1e-9)


def test_score_undefined_on_the_ridge():
    c = _simulated_counts(0.5, 0.5, 50, 1)
    with pytest.raises(DomainError):
        score(c, ModelParams(0.3, 0.5))


# -- profile and quartic -------------------------------------------------


def test_profile_frozen_value():
    c = TransitionCounts(x0=0, n00=8, n01=1, n10=1, n11=0)
    assert math.isclose(profile_a(c, 0.1), 0.08 / 0.89, abs_tol=1e-15)


@pytest.mark.parametrize("p", [0.0, 0.5, 0.7, 1.0, -0.1])
def test_profile_domain(p):
    c = TransitionCounts(x0=0, n00=8, n01=1, n10=1, n11=0)
    with pytest.raises(DomainError):
        profile_a(c, p)


@given(st.floats(0.02, 0.48), st.integers(0, 10_000))
def test_profile_zeroes_the_p_score(p, seed):
    c = _simulated_counts(0.5, 0.3, 150, seed)
    a = profile_a(c, p)
    assume(0.001 < a < 0.999)
    _, s_p = score(c, ModelParams(a, p))
    assert abs(s_p) < 1e-7 * (c.n + 1)


def test_profile_matches_workspace_terms():
    c = _simulated_counts(0.4, 0.25, 120, 8)
    ws = quartic_coefficients(c)
    for p in (0.1, 0.22, 0.37, 0.49):
        num = p * (ws.lam1 - 2.0 * p) - ws.lam2
        den = p * (ws.lam3 - p)
        assert math.isclose(profile_a(c, p), num / den, rel_tol=1e-15)


def test_workspace_frozen_example():
    ws = quartic_coefficients(TransitionCounts(x0=0, n00=3, n01=0, n10=0, n11=0))
    assert (ws.lam1, ws.lam2, ws.lam3, ws.lam4, ws.lam5) == (4, 0, 3, 3, 0)
    assert ws.coeffs == (6, -18, 12, 0, 0)


@pytest.mark.parametrize("seed", [2, 17, 41])
def test_quartic_rederivation(seed):
    """Re-derive the profile equation symbolically and compare coefficients.

    Starting from the transition log-likelihood on the p < 1/2 branch, the
    cleared score equations factor into a quadratic in a and a bilinear
    equation whose solution is the profile; substituting the profile into
    the quadratic and clearing denominators must reproduce the implemented
    integer coefficients exactly.
    """
    c = _simulated_counts(0.6, 0.35, 40, seed)
    a, p = sp.symbols("a p", positive=True)
    p00 = (a * p + 1 - 2 * p) / (1 - p)
    p11 = a
    ll = (
        c.x0 * sp.log(p)
        + (1 - c.x0) * sp.log(1 - p)
        + c.n00 * sp.log(p00)
        + c.n01 * sp.log(1 - p00)
        + c.n10 * sp.log(1 - p11)
        + c.n11 * sp.log(p11)
    )
    s_a = sp.diff(ll, a)
    s_p = sp.diff(ll, p)

    n = c.n
    lam1 = 2 * c.x0 + 1 + c.n00 + 2 * c.n01
    lam2 = c.x0 + c.n01
    lam3 = c.x0 + c.n00 + c.n01
    lam4 = 2 * n - c.n00 + c.n11
    lam5 = n - c.n00

    quad_a = n * p * a**2 - (lam4 * p - lam5) * a + c.n11 * (2 * p - 1)
    cleared_sa = sp.expand(sp.cancel(s_a * a * (1 - a) * (a * p + 1 - 2 * p)))
    assert sp.simplify(cleared_sa + quad_a) == 0

    num = p * (lam1 - 2 * p) - lam2
    den = p * (lam3 - p)
    bilinear = a * p * (lam3 - p) - num
    cleared_sp = sp.expand(sp.cancel(s_p * p * (1 - p) * (a * p + 1 - 2 * p)))
    assert sp.simplify(cleared_sp - (-bilinear)) == 0 or sp.simplify(cleared_sp - bilinear) == 0

    profile = num / den
    quartic = sp.expand(
        n * num**2 - (lam4 * p - lam5) * num * (lam3 - p) + c.n11 * (2 * p - 1) * p * (lam3 - p) ** 2
    )
    # the quadratic score equation vanishes along the profile iff the quartic does
    assert sp.simplify(sp.cancel(quad_a.subs(a, profile) * den**2) - p * quartic) == 0

    got = quartic_coefficients(c).coeffs
    want = sp.Poly(quartic, p).all_coeffs()
    want = [0] * (5 - len(want)) + [int(w) for w in want]
    assert list(got) == want


def test_interior_fit_is_a_quartic_root():
    c = _simulated_counts(0.6, 0.3, 800, 21)
    fit = fit_mle(c)
    assert fit.params.regime is Regime.LESS_HALF
    ws = quartic_coefficients(c)
    residual = np.polyval(ws.coeffs, fit.params.p)
    assert abs(residual) < 1e-7 * max(abs(x) for x in ws.coeffs)


# -- asymptotic covariance and variances ---------------------------------


def test_cov_frozen_below_half():
    cov = asymptotic_cov(ModelParams(0.5, 0.25))
    assert np.allclose(cov.entries, [[1.0, 0.375], [0.375, 0.375]], atol=1e-15)


def test_cov_frozen_above_half():
    cov = asymptotic_cov(ModelParams(0.5, 0.75))
    assert np.allclose(cov.entries, [[1.0, -0.375], [-0.375, 0.375]], atol=1e-15)


@given(interior_params)
def test_cov_mirror_under_relabeling(params):
    assume(params.p != 0.5)
    here = asymptotic_cov(params)
    there = asymptotic_cov(ModelParams(params.a, 1.0 - params.p))
    assert math.isclose(here[0, 0], there[0, 0], rel_tol=1e-12)
    assert math.isclose(here[1, 1], there[1, 1], rel_tol=1e-12)
    assert math.isclose(here[0, 1], -there[0, 1], rel_tol=1e-12)


@given(interior_params)
def test_cov_positive_semidefinite(params):
    assume(params.p != 0.5)
    cov = asymptotic_cov(params)
    assert cov[0, 1] == cov[1, 0]
    assert np.linalg.eigvalsh(cov.entries).min() > -1e-12


def test_cov_undefined_on_the_ridge():
    with pytest.raises(DomainError):
        asymptotic_cov(ModelParams(0.3, 0.5))


def test_clt_variance_frozen():
    assert clt_variance(ModelParams(0.5, 0.3)) == 0.378


@given(interior_params)
def test_clt_variance_equals_cov_diagonal(params):
    assume(params.p != 0.5)
    assert math.isclose(clt_variance(params), asymptotic_cov(params)[1, 1], rel_tol=1e-12)


@given(st.floats(0.05, 0.95))
def test_clt_variance_collapses_at_independence(p):
    a = p if p < 0.5 else 1.0 - p
    assert math.isclose(clt_variance(ModelParams(a, p)), p * (1.0 - p), rel_tol=1e-9)


@given(st.floats(0.02, 0.98), st.floats(0.02, 0.98))
def test_clt_variance_exactly_symmetric(a, p):
    assert clt_variance(ModelParams(a, p)) == clt_variance(ModelParams(a, 1.0 - p))


@pytest.mark.parametrize("a,p", [(0.5, 0.3), (0.2, 0.7), (0.8, 0.45), (0.35, 0.5)])
def test_clt_variance_against_exact_sum(a, p):
    limit = clt_variance(ModelParams(a, p))
    assert math.isclose(exact_var_scaled_mean(a, p, 10**6), limit, rel_tol=1e-3)


def test_var_sample_mean_scaling():
    params = ModelParams(0.5, 0.3)
    assert var_sample_mean(params, 999) * 1000 == clt_variance(params)
    with pytest.raises(DomainError):
        var_sample_mean(params, 0)


# -- maximum likelihood --------------------------------------------------

GRID_CASES = [
    (0.3, 0.2, 400, 0),
    (0.3, 0.2, 1500, 1),
    (0.6, 0.3, 700, 2),
    (0.6, 0.7, 700, 3),
    (0.9, 0.45, 900, 4),
    (0.9, 0.55, 900, 5),
    (0.15, 0.85, 1200, 6),
    (0.5, 0.25, 250, 7),
    (0.45, 0.5, 600, 8),
    (0.8, 0.9, 2000, 9),
    (0.05, 0.35, 1000, 10),
    (0.7, 0.6, 350, 11),
]


@pytest.mark.parametrize("a,p,n,seed", GRID_CASES)
def test_mle_agrees_with_grid_search(a, p, n, seed):
    c = _simulated_counts(a, p, n, seed)
    fit = fit_mle(c)
    ga, gp, gll = grid_mle(c)
    assert fit.loglik >= gll - 1e-6
    if fit.params.p != 0.5:
        assert abs(fit.params.a - ga) < 2e-3
        assert abs(fit.params.p - gp) < 2e-3


@pytest.mark.parametrize("a,p,n,seed", GRID_CASES)
def test_mle_score_vanishes_at_interior_fits(a, p, n, seed):
    c = _simulated_counts(a, p, n, seed)
    fit = fit_mle(c)
    if fit.params.p == 0.5:
        return
    s_a, s_p = score(c, fit.params)
    assert max(abs(s_a), abs(s_p)) < 1e-6 * (c.n + 1)


@pytest.mark.parametrize("a,p", [(0.3, 0.2), (0.7, 0.8), (0.5, 0.4)])
def test_mle_consistency_at_large_n(a, p):
    n = 40_000
    c = _simulated_counts(a, p, n, 99)
    params, cov = mle(c)
    assert cov is not None
    assert abs(params.a - a) < 4.0 * math.sqrt(cov[0, 0] / (n + 1))
    assert abs(params.p - p) < 4.0 * math.sqrt(cov[1, 1] / (n + 1))


@pytest.mark.parametrize("seed", range(10))
def test_mle_flip_equivariance_is_exact(seed):
    c = _simulated_counts(0.6, 0.35, 500, seed)
    fit = fit_mle(c)
    mirrored = fit_mle(c.flipped())
    assert mirrored.params.a == fit.params.a
    assert mirrored.params.p == 1.0 - fit.params.p


def test_mle_constant_path_is_degenerate():
    with pytest.raises(DegenerateData) as exc:
        fit_mle(TransitionCounts(x0=0, n00=3, n01=0, n10=0, n11=0))
    # boundary report: the walk never moved and never visited 1
    assert exc.value.a == 1.0 and exc.value.p == 0.0


def test_mle_alternating_path_is_degenerate():
    with pytest.raises(DegenerateData):
        fit_mle(TransitionCounts(x0=1, n00=0, n01=2, n10=2, n11=0))


def test_mle_edge_attracted_counts_are_degenerate():
    # the supremum sits at a -> 0 here; no interior maximum exists
    with pytest.raises(DegenerateData) as exc:
        fit_mle(TransitionCounts(x0=1, n00=0, n01=3, n10=3, n11=4))
    assert exc.value.a == 0.0
    assert math.isclose(exc.value.p, 0.7122144564, abs_tol=1e-6)


def test_mle_edge_fit_never_beaten_by_grid():
    ga, gp, gll = grid_mle(TransitionCounts(x0=1, n00=0, n01=3, n10=3, n11=4))
    assert ga < 1e-3  # the brute grid pins the optimum to the a edge too


def test_mle_ridge_winner_frozen():
    c = TransitionCounts(x0=1, n00=9, n01=1, n10=1, n11=3)
    fit = fit_mle(c)
    assert fit.params.p == 0.5
    assert math.isclose(fit.params.a, 12.0 / 14.0, abs_tol=1e-15)
    assert fit.cov is None
    _, _, gll = grid_mle(c)
    assert fit.loglik >= gll - 1e-5


def test_mle_ci_half_width_identity():
    c = _simulated_counts(0.5, 0.3, 2000, 3)
    fit = fit_mle(c)
    est_a, est_p = mle_ci(c, alpha=0.1)
    z = normal_quantile(0.95)
    for k, est in ((0, est_a), (1, est_p)):
        half = z * math.sqrt(fit.cov[k, k] / (c.n + 1))
        assert math.isclose(est.ci_high - est.point, half, rel_tol=1e-12)
        assert math.isclose(est.point - est.ci_low, half, rel_tol=1e-12)
    assert est_a.method == est_p.method == "mle"
    assert est_a.n == est_p.n == c.n


def test_mle_ci_requires_off_ridge_fit():
    c = TransitionCounts(x0=1, n00=9, n01=1, n10=1, n11=3)
    with pytest.raises(DomainError):
        mle_ci(c)


def test_mle_ci_width_shrinks_with_n():
    wide = mle_ci(_simulated_counts(0.5, 0.3, 499, 2))[1].length
    narrow = mle_ci(_simulated_counts(0.5, 0.3, 4999, 2))[1].length
    assert narrow < wide


def test_mle_half_frozen():
    est = mle_half(TransitionCounts(x0=1, n00=9, n01=1, n10=1, n11=3))
    assert est.method == "mle-half"
    assert math.isclose(est.point, 12.0 / 14.0, abs_tol=1e-15)
    assert est.regime is Regime.HALF
    assert est.ci_low < est.point < est.ci_high


def test_mle_half_coverage():
    hits = 0
    for seed in range(200):
        c = _simulated_counts(0.8, 0.5, 9999, seed)
        hits += mle_half(c).covers(0.8)
    assert 0.90 <= hits / 200 <= 0.99


def test_mle_half_degenerate():
    with pytest.raises(DegenerateData):
        mle_half(TransitionCounts(x0=1, n00=0, n01=2, n10=2, n11=0))


# -- mean, robust, indicator ---------------------------------------------


def test_mean_estimate_point_and_plugin():
    path = simulate_bernoulli_chain(ModelParams(0.5, 0.3), 999, 3)
    est = mean_estimate(path)
    assert est.method == "mean"
    assert est.point == path.states.mean()
    fit = fit_mle(transition_counts(path))
    plug = ModelParams(fit.params.a, float(path.states.mean()))
    assert math.isclose(est.stderr, math.sqrt(var_sample_mean(plug, path.n)), rel_tol=1e-12)


def test_mean_estimate_with_fixed_weight():
    path = simulate_bernoulli_chain(ModelParams(0.5, 0.3), 999, 3)
    est = mean_estimate(path, a_hat=0.5)
    assert est.point == path.states.mean()
    assert math.isclose(
        est.stderr,
        math.sqrt(var_sample_mean(ModelParams(0.5, float(path.states.mean())), path.n)),
        rel_tol=1e-12,
    )


def test_mean_estimate_degenerate_on_constant_path():
    path = BinaryPath(
        states=np.zeros(12, dtype=np.int8),
        origin=PathOrigin(kind="loaded", seed=None, a=None, p=None),
    )
    with pytest.raises(DegenerateData):
        mean_estimate(path)


def test_robust_config():
    cfg = RobustConfig(n_states=1000, noise_seed=0)
    assert math.isclose(cfg.bandwidth, (1.0 / (1000.0 * math.sqrt(2.0))) ** 0.2, abs_tol=1e-15)
    with pytest.raises(DomainError):
        RobustConfig(n_states=1, noise_seed=0)


def test_robust_estimate_deterministic():
    path = simulate_bernoulli_chain(ModelParams(0.5, 0.3), 999, 3)
    one = robust_estimate(path, noise_seed=5)
    two = robust_estimate(path, noise_seed=5)
    other = robust_estimate(path, noise_seed=6)
    assert one == two
    assert one.point != other.point
    assert one.method == "robust"


def test_robust_estimate_center_identity():
    path = simulate_bernoulli_chain(ModelParams(0.4, 0.6), 1999, 11)
    est = robust_estimate(path, noise_seed=2)
    h = RobustConfig(n_states=2000, noise_seed=2).bandwidth
    center = est.point * math.sqrt(1.0 + h * h)
    assert math.isclose(0.5 * (est.ci_low + est.ci_high), center, rel_tol=1e-12)


def test_robust_estimate_zero_path():
    path = BinaryPath(
        states=np.zeros(50, dtype=np.int8),
        origin=PathOrigin(kind="loaded", seed=None, a=None, p=None),
    )
    est = robust_estimate(path)
    assert est.point == 0.0 and est.stderr == 0.0
    assert est.ci_low == est.ci_high == 0.0


def test_robust_estimate_tracks_the_mean():
    path = simulate_bernoulli_chain(ModelParams(0.5, 0.3), 9999, 17)
    est = robust_estimate(path, noise_seed=17)
    assert abs(est.point - 0.3) < 0.15
    assert est.covers(0.3)


def test_indicator_estimate_accuracy():
    path = simulate_uniform_chain(0.73, 100_000, 13)
    est = indicator_estimate(path)
    assert est.method == "indicator"
    assert abs(est.point - 0.73) < 0.02
    agree = (path.states[:-1] == path.states[1:]).mean()
    assert est.point == agree
    assert math.isclose(est.stderr, math.sqrt(agree * (1 - agree) / path.n), rel_tol=1e-12)


def test_indicator_agreements_look_independent():
    # repeat indicators of the uniform chain are i.i.d.; a runs test on
    # them should stay inside +-2.58 sigma most of the time
    ok = 0
    for seed in range(50):
        s = simulate_uniform_chain(0.5, 2000, seed).states
        agree = (s[:-1] == s[1:]).astype(int)
        n1, n0 = agree.sum(), (1 - agree).sum()
        mu = 2.0 * n1 * n0 / (n1 + n0) + 1.0
        var = (mu - 1.0) * (mu - 2.0) / (n1 + n0 - 1.0)
        z = (runs_count(agree) - mu) / math.sqrt(var)
        ok += abs(z) < 2.576
    assert ok >= 45


def test_indicator_estimate_degenerate():
    path = RealPath(
        states=np.full(11, 0.25),
        origin=PathOrigin(kind="loaded", seed=None, a=None, p=None),
    )
    with pytest.raises(DegenerateData) as exc:
        indicator_estimate(path)
    assert exc.value.point == 1.0
