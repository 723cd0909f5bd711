"""Estimation of (a, p) from one realized path of the copula chain.

The likelihood factors over transitions, so the transition counts plus the
initial state are sufficient.  For p < 1/2, profiling a out of the score
system leaves a quartic in p whose real roots inside (0, 1/2) are the only
interior critical points; the p >= 1/2 side is handled by relabeling the
states, which swaps p with 1 - p and leaves a untouched.  Alongside the
MLE the module provides the sample-mean estimator of p with its Markov
correction, a kernel-weighted estimator that stays usable under weaker
assumptions, and the pair-agreement estimator of a for uniform marginals.
"""

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import ndtri

from .chain import (
    BinaryPath,
    ModelParams,
    RealPath,
    Regime,
    TransitionCounts,
    transition_counts,
    transition_matrix,
)
from .errors import DegenerateData, DomainError, EvalError
from .rng import make_generator

_IMAG_TOL = 1e-6
_BRANCH_TIE_TOL = 1e-12
_EDGE_TOL = 1e-9
_FALLBACK_LO = 1e-6


def normal_quantile(q: float) -> float:
    """Quantile of the standard normal law, q in (0, 1)."""
    if not 0.0 < q < 1.0:
        raise DomainError(f"quantile level must be in (0, 1), got {q!r}")
    return float(ndtri(q))


def chisq1_quantile(alpha: float) -> float:
    """Upper-alpha critical value of chi-squared with one degree of freedom.

    A chi-squared(1) variable is a squared standard normal, so the critical
    value is the squared two-sided normal quantile.
    """
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"level alpha must be in (0, 1), got {alpha!r}")
    return normal_quantile(1.0 - alpha / 2.0) ** 2


@dataclass(frozen=True)
class Estimate:
    """A point estimate with a two-sided normal confidence interval."""

    method: str
    point: float
    stderr: float
    ci_low: float
    ci_high: float
    alpha: float
    n: int
    regime: Regime | None = None

    def covers(self, value: float) -> bool:
        return self.ci_low <= value <= self.ci_high

    @property
    def length(self) -> float:
        return self.ci_high - self.ci_low


def _check_alpha(alpha: float) -> float:
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"level alpha must be in (0, 1), got {alpha!r}")
    return normal_quantile(1.0 - alpha / 2.0)


def loglik(counts: TransitionCounts, params: ModelParams) -> float:
    """Log-likelihood of the path summarized by ``counts`` under ``params``.

    The initial state contributes its stationary term; every transition
    contributes the log of the matching matrix entry.
    """
    m = transition_matrix(params).entries
    p = params.p
    ll = counts.x0 * math.log(p) + (1 - counts.x0) * math.log(1.0 - p)
    ll += counts.n00 * math.log(m[0, 0]) + counts.n01 * math.log(m[0, 1])
    ll += counts.n10 * math.log(m[1, 0]) + counts.n11 * math.log(m[1, 1])
    return ll


def _score_less(counts: TransitionCounts, a: float, p: float) -> tuple[float, float]:
    # gradient of loglik on the p < 1/2 branch; D is the p00 numerator
    d = a * p + 1.0 - 2.0 * p
    s_a = counts.n00 * p / d - (counts.n01 + counts.n10) / (1.0 - a) + counts.n11 / a
    s_p = (
        counts.x0 / p
        - (1 - counts.x0) / (1.0 - p)
        + counts.n00 * (a - 2.0) / d
        + counts.n00 / (1.0 - p)
        + counts.n01 / p
        + counts.n01 / (1.0 - p)
    )
    return s_a, s_p


def score(counts: TransitionCounts, params: ModelParams) -> tuple[float, float]:
    """Gradient of the log-likelihood in (a, p).

    The p > 1/2 branch is evaluated through the state relabeling, which
    negates the p component.  At p = 1/2 the two branches meet with
    different one-sided slopes, so no gradient is defined there.
    """
    if params.regime is Regime.HALF:
        raise DomainError("the log-likelihood is not differentiable in p at p = 1/2")
    if params.regime is Regime.LESS_HALF:
        return _score_less(counts, params.a, params.p)
    s_a, s_p = _score_less(counts.flipped(), params.a, 1.0 - params.p)
    return s_a, -s_p


@dataclass(frozen=True)
class MleWorkspace:
    """Count aggregates and profile-quartic coefficients, all exact integers.

    The aggregates are
        lam1 = 2 x0 + 1 + n00 + 2 n01      lam2 = x0 + n01
        lam3 = x0 + n00 + n01              lam4 = 2 n - n00 + n11
        lam5 = n - n00
    and ``coeffs`` holds the quartic c4 p^4 + ... + c0 whose real roots in
    (0, 1/2) are the interior critical points of the profile likelihood.
    """

    lam1: int
    lam2: int
    lam3: int
    lam4: int
    lam5: int
    coeffs: tuple[int, int, int, int, int]


def quartic_coefficients(counts: TransitionCounts) -> MleWorkspace:
    """Profile-quartic coefficients for the p < 1/2 branch."""
    x0, n00, n01, n11 = counts.x0, counts.n00, counts.n01, counts.n11
    n = counts.n
    l1 = 2 * x0 + 1 + n00 + 2 * n01
    l2 = x0 + n01
    l3 = x0 + n00 + n01
    l4 = 2 * n - n00 + n11
    l5 = n - n00
    c4 = 4 * n - 2 * l4 + 2 * n11
    c3 = 2 * l3 * l4 - 4 * n * l1 + l1 * l4 + 2 * l5 - n11 - 4 * n11 * l3
    c2 = (
        n * l1 * l1
        + 4 * n * l2
        - l1 * l3 * l4
        - l2 * l4
        - 2 * l3 * l5
        - l1 * l5
        + 2 * n11 * l3
        + 2 * n11 * l3 * l3
    )
    c1 = l1 * l3 * l5 - 2 * n * l1 * l2 + l2 * l3 * l4 + l2 * l5 - n11 * l3 * l3
    c0 = n * l2 * l2 - l2 * l3 * l5
    return MleWorkspace(lam1=l1, lam2=l2, lam3=l3, lam4=l4, lam5=l5, coeffs=(c4, c3, c2, c1, c0))


def _profile_from_workspace(ws: MleWorkspace, p: float) -> float:
    return (p * (ws.lam1 - 2.0 * p) - ws.lam2) / (p * (ws.lam3 - p))


def profile_a(counts: TransitionCounts, p: float) -> float:
    """The a that zeroes the p component of the score, at fixed p < 1/2."""
    if not 0.0 < p < 0.5:
        raise DomainError(f"profile is defined for p in (0, 1/2), got {p!r}")
    return _profile_from_workspace(quartic_coefficients(counts), p)


def _loglik_less(counts: TransitionCounts, a: float, p: float) -> float:
    # float-only likelihood on the p <= 1/2 branch for the fit inner loop;
    # evaluating it on flipped counts covers the other branch, because
    # relabeling the states leaves the path probability unchanged
    d = a * p + 1.0 - 2.0 * p
    q = 1.0 - p
    return (
        counts.x0 * math.log(p)
        + (1 - counts.x0) * math.log(q)
        + counts.n00 * math.log(d / q)
        + counts.n01 * math.log(p * (1.0 - a) / q)
        + counts.n10 * math.log(1.0 - a)
        + counts.n11 * math.log(a)
    )


@dataclass(frozen=True)
class CovMatrix:
    """Asymptotic covariance of sqrt(n+1) (theta_hat - theta), 2x2."""

    entries: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.entries, dtype=float)
        if m.shape != (2, 2):
            raise DomainError(f"covariance must be 2x2, got shape {m.shape}")
        if abs(m[0, 1] - m[1, 0]) > 1e-12:
            raise DomainError("covariance must be symmetric")
        if m[0, 0] <= 0.0 or m[1, 1] <= 0.0:
            raise DomainError("covariance diagonal must be positive")
        if np.linalg.eigvalsh(m).min() < -1e-10:
            raise DomainError("covariance must be positive semidefinite")
        m.setflags(write=False)
        object.__setattr__(self, "entries", m)

    def __getitem__(self, idx):
        return self.entries[idx]


def asymptotic_cov(params: ModelParams) -> CovMatrix:
    """Closed-form asymptotic covariance of the MLE of (a, p).

    Defined on the open branches only; at p = 1/2 the a estimate has its
    own limit law and mle_half handles it.
    """
    a, p = params.a, params.p
    if params.regime is Regime.LESS_HALF:
        m = np.array(
            [
                [a * (1.0 - a) / p, a * (1.0 - p)],
                [a * (1.0 - p), p * (1.0 - p) * (a + 1.0 - 2.0 * p) / (1.0 - a)],
            ]
        )
    elif params.regime is Regime.GEQ_HALF:
        m = np.array(
            [
                [a * (1.0 - a) / (1.0 - p), -a * p],
                [-a * p, p * (1.0 - p) * (2.0 * p - 1.0 + a) / (1.0 - a)],
            ]
        )
    else:
        raise DomainError("no joint asymptotic covariance at p = 1/2; use mle_half")
    return CovMatrix(m)


def clt_variance(params: ModelParams) -> float:
    """Asymptotic variance of sqrt(n+1) (sample mean - p).

    Equals p(1-p)(1 + a - 2p)/(1-a) for p < 1/2 and
    p(1-p)(a + 2p - 1)/(1-a) for p >= 1/2; both branches agree at 1/2.
    Evaluated from the canonical representative q = min(p, 1-p), rounded
    through its own complement, so the value is bit-identical at p and
    1 - p; the two printed forms map onto each other under that swap.
    """
    a, p = params.a, params.p
    q = p if p < 0.5 else 1.0 - p
    q = 1.0 - (1.0 - q)
    return q * (1.0 - q) * (a + 1.0 - 2.0 * q) / (1.0 - a)


def var_sample_mean(params: ModelParams, n: int) -> float:
    """Leading-order variance of the sample mean over n + 1 observations."""
    if n < 1:
        raise DomainError(f"need at least one transition, got n={n!r}")
    return clt_variance(params) / (n + 1)


@dataclass(frozen=True)
class MleFit:
    """Winning likelihood maximum: parameters, covariance, attained value.

    ``cov`` is None exactly when the fit lands on p = 1/2, where the joint
    covariance is undefined.
    """

    params: ModelParams
    cov: CovMatrix | None
    loglik: float


def _real_roots(coeffs: tuple[int, ...]) -> list[float]:
    # trim leading zeros; np.roots rejects a zero leading coefficient
    c = [float(v) for v in coeffs]
    while c and c[0] == 0.0:
        c.pop(0)
    if len(c) < 2:
        return []
    roots = np.roots(c)
    out = []
    for r in roots:
        if abs(r.imag) < _IMAG_TOL:
            out.append(float(r.real))
    return out


def _polish_root(coeffs, r: float) -> float:
    c = np.array([float(v) for v in coeffs])
    dc = np.polyder(c)
    best, best_val = r, abs(np.polyval(c, r))
    for _ in range(3):
        slope = np.polyval(dc, best)
        if slope == 0.0:
            break
        cand = best - np.polyval(c, best) / slope
        if not 0.0 < cand < 0.5:
            break
        val = abs(np.polyval(c, cand))
        if val >= best_val:
            break
        best, best_val = cand, val
    return best


def _snap(p: float) -> float:
    # force p and 1 - p to be exact floating complements, so the relabeled
    # branch reports the mirror image bit for bit
    return 1.0 - (1.0 - p)


def _branch_candidates(counts: TransitionCounts, ws: MleWorkspace) -> list[tuple[float, float, float]]:
    """Interior critical points (loglik, a, p) with p < 1/2 for these counts."""
    cands = []
    seen = []
    for r in _real_roots(ws.coeffs):
        if not 0.0 < r < 0.5:
            continue
        r = _snap(_polish_root(ws.coeffs, r))
        if not 0.0 < r < 0.5:
            continue
        if any(abs(r - s) < 1e-12 for s in seen):
            continue
        seen.append(r)
        a = _profile_from_workspace(ws, r)
        if not 0.0 < a < 1.0:
            continue
        cands.append((_loglik_less(counts, a, r), a, r))
    return cands


def _golden_candidate(counts: TransitionCounts, ws: MleWorkspace) -> tuple[float, float, float] | None:
    """Profile-likelihood search fallback when no quartic root is usable.

    Scans p on a grid, golden-sections around the best admissible point,
    and only accepts the result if the full score very nearly vanishes;
    otherwise the maximum sits on the boundary and the data are degenerate.
    """

    def g(p):
        a = _profile_from_workspace(ws, p)
        if not 0.0 < a < 1.0:
            return -math.inf, None
        return _loglik_less(counts, a, p), a

    grid = np.linspace(_FALLBACK_LO, 0.5 - _FALLBACK_LO, 2001)
    vals = [g(p)[0] for p in grid]
    k = int(np.argmax(vals))
    if not math.isfinite(vals[k]):
        return None
    lo = grid[max(k - 1, 0)]
    hi = grid[min(k + 1, len(grid) - 1)]
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    x1 = hi - invphi * (hi - lo)
    x2 = lo + invphi * (hi - lo)
    f1, f2 = g(x1)[0], g(x2)[0]
    for _ in range(120):
        if f1 < f2:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + invphi * (hi - lo)
            f2 = g(x2)[0]
        else:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - invphi * (hi - lo)
            f1 = g(x1)[0]
    p = _snap(0.5 * (lo + hi))
    ll, a = g(p)
    if a is None:
        return None
    s_a, s_p = _score_less(counts, a, p)
    if max(abs(s_a), abs(s_p)) > 1e-5 * (counts.n + 1):
        return None
    return (ll, a, p)


def _loglik_edge_a0(counts: TransitionCounts, p: float) -> float:
    # likelihood along a -> 0 with p < 1/2; finite only when n11 = 0,
    # since the 1->1 transition has probability a there
    q = 1.0 - p
    ll = counts.x0 * math.log(p) + (1 - counts.x0) * math.log(q)
    if counts.n00:
        ll += counts.n00 * math.log((1.0 - 2.0 * p) / q)
    if counts.n01:
        ll += counts.n01 * math.log(p / q)
    return ll


def _edge_candidate(counts: TransitionCounts) -> tuple[float, float] | None:
    """Supremum (loglik, p) of the likelihood on the a = 0 edge.

    The edge repels (log a terms) unless n11 = 0 on the p < 1/2 side or
    n00 = 0 on the relabeled side, so at most two one-dimensional searches
    run, and only for data that can be boundary-attracted.
    """
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    out = None
    for target, flip in ((counts, False), (counts.flipped(), True)):
        if target.n11 != 0:
            continue
        grid = np.linspace(_FALLBACK_LO, 0.5 - _FALLBACK_LO, 2001)
        vals = (target.x0 + target.n01) * np.log(grid) + target.n00 * np.log(1.0 - 2.0 * grid)
        vals += (1 - target.x0 - target.n00 - target.n01) * np.log(1.0 - grid)
        k = int(np.argmax(vals))
        lo, hi = grid[max(k - 1, 0)], grid[min(k + 1, len(grid) - 1)]
        x1 = hi - invphi * (hi - lo)
        x2 = lo + invphi * (hi - lo)
        f1, f2 = _loglik_edge_a0(target, x1), _loglik_edge_a0(target, x2)
        for _ in range(80):
            if f1 < f2:
                lo, x1, f1 = x1, x2, f2
                x2 = lo + invphi * (hi - lo)
                f2 = _loglik_edge_a0(target, x2)
            else:
                hi, x2, f2 = x2, x1, f1
                x1 = hi - invphi * (hi - lo)
                f1 = _loglik_edge_a0(target, x1)
        p = _snap(0.5 * (lo + hi))
        ll = _loglik_edge_a0(target, p)
        if out is None or ll > out[0]:
            out = (ll, 1.0 - p if flip else p)
    return out


def fit_mle(counts: TransitionCounts) -> MleFit:
    """Maximize the likelihood over both branches and the p = 1/2 ridge.

    Candidates come from the profile quartic on each branch (the p >= 1/2
    branch through state relabeling) plus the closed-form p = 1/2 solution.
    If the two branch maxima agree to within 1e-12 the fit is reported at
    p = 1/2, where the tied maxima meet.

    Raises DegenerateData, carrying the boundary values, when the data pin
    the maximum to the edge of the parameter space. Besides constant paths
    and empty transition rows this covers counts whose likelihood climbs
    all the way to a = 0, which happens only when n00 or n11 vanishes.
    """
    n = counts.n
    a_edge = (counts.n00 + counts.n11) / n
    p_edge = counts.ones / (n + 1)

    def degenerate(msg):
        return DegenerateData(msg, a=a_edge, p=p_edge, method="mle")

    if counts.n00 + counts.n01 == 0 or counts.n10 + counts.n11 == 0:
        raise degenerate("one state was never left; the likelihood peaks on the boundary")

    flipped = counts.flipped()
    ws_less = quartic_coefficients(counts)
    ws_geq = quartic_coefficients(flipped)
    cands_less = _branch_candidates(counts, ws_less)
    cands_geq = _branch_candidates(flipped, ws_geq)
    if not cands_less and not cands_geq:
        for target, ws, sink in ((counts, ws_less, cands_less), (flipped, ws_geq, cands_geq)):
            found = _golden_candidate(target, ws)
            if found is not None:
                sink.append(found)

    best_less = max(cands_less, key=lambda c: c[0]) if cands_less else None
    best_geq = None
    if cands_geq:
        ll_f, a_f, p_f = max(cands_geq, key=lambda c: c[0])
        best_geq = (ll_f, a_f, 1.0 - p_f)

    half = None
    if 0.0 < a_edge < 1.0:
        half = (_loglik_less(counts, a_edge, 0.5), a_edge, 0.5)

    interior = None
    if best_less is not None and best_geq is not None and abs(best_less[0] - best_geq[0]) <= _BRANCH_TIE_TOL:
        if half is None:
            raise degenerate("tied branch maxima with a boundary p = 1/2 solution")
    else:
        options = [c for c in (best_less, best_geq) if c is not None]
        if options:
            interior = max(options, key=lambda c: c[0])

    winner = None
    if interior is not None and (half is None or interior[0] > half[0]):
        winner = interior
    elif half is not None:
        winner = half

    if counts.n00 == 0 or counts.n11 == 0:
        edge = _edge_candidate(counts)
        if edge is not None and (winner is None or edge[0] > winner[0] + _EDGE_TOL):
            raise DegenerateData(
                "the likelihood climbs to the a = 0 edge; no interior maximum",
                a=0.0,
                p=edge[1],
                method="mle",
            )

    if winner is None:
        raise degenerate("no interior likelihood maximum exists for these counts")
    _, a, p = winner
    params = ModelParams(a, p)
    if p == 0.5:
        return MleFit(params=params, cov=None, loglik=loglik(counts, params))
    return MleFit(params=params, cov=asymptotic_cov(params), loglik=loglik(counts, params))


def mle(counts: TransitionCounts) -> tuple[ModelParams, CovMatrix | None]:
    """Maximum-likelihood estimate of (a, p) with its asymptotic covariance."""
    fit = fit_mle(counts)
    return fit.params, fit.cov


def mle_ci(counts: TransitionCounts, alpha: float = 0.05) -> tuple[Estimate, Estimate]:
    """Normal confidence intervals for a and p at the MLE.

    Half-widths are z * sqrt(cov_kk / (n + 1)) with the covariance
    evaluated at the fitted point.
    """
    z = _check_alpha(alpha)
    fit = fit_mle(counts)
    if fit.cov is None:
        raise DomainError("the fit landed exactly on p = 1/2; use mle_half for a")
    n1 = counts.n + 1
    out = []
    for k, point in ((0, fit.params.a), (1, fit.params.p)):
        se = math.sqrt(fit.cov[k, k] / n1)
        out.append(
            Estimate(
                method="mle",
                point=point,
                stderr=se,
                ci_low=point - z * se,
                ci_high=point + z * se,
                alpha=alpha,
                n=counts.n,
                regime=fit.params.regime,
            )
        )
    return out[0], out[1]


def mle_half(counts: TransitionCounts, alpha: float = 0.05) -> Estimate:
    """Estimate of a when p = 1/2 is known: the fraction of repeats.

    The repeat indicators are i.i.d. Bernoulli(a) in this case, so the
    interval is the usual binomial one with n + 1 in the denominator.
    """
    z = _check_alpha(alpha)
    a_hat = (counts.n00 + counts.n11) / counts.n
    if not 0.0 < a_hat < 1.0:
        raise DegenerateData(
            "every transition repeated, or none did; a sits on the boundary",
            a=a_hat,
            p=0.5,
            point=a_hat,
            method="mle-half",
        )
    se = math.sqrt(a_hat * (1.0 - a_hat) / (counts.n + 1))
    return Estimate(
        method="mle-half",
        point=a_hat,
        stderr=se,
        ci_low=a_hat - z * se,
        ci_high=a_hat + z * se,
        alpha=alpha,
        n=counts.n,
        regime=Regime.HALF,
    )


def mean_estimate(path: BinaryPath, alpha: float = 0.05, a_hat: float | None = None) -> Estimate:
    """Sample mean of the path as an estimate of p, with Markov-corrected CI.

    The interval width needs the dependence strength, so a plug-in a is
    required; by default it comes from the MLE on the same path.
    """
    z = _check_alpha(alpha)
    p_bar = float(path.states.mean())
    n1 = path.states.size
    if not 0.0 < p_bar < 1.0:
        raise DegenerateData(
            "the path is constant; the mean sits on the boundary",
            p=p_bar,
            point=p_bar,
            method="mean",
        )
    if a_hat is None:
        a_hat = fit_mle(transition_counts(path)).params.a
    plug = ModelParams(a_hat, p_bar)
    se = math.sqrt(clt_variance(plug) / n1)
    return Estimate(
        method="mean",
        point=p_bar,
        stderr=se,
        ci_low=p_bar - z * se,
        ci_high=p_bar + z * se,
        alpha=alpha,
        n=path.n,
        regime=plug.regime,
    )


@dataclass(frozen=True)
class RobustConfig:
    """Bandwidth and noise stream for the kernel-weighted mean estimator."""

    n_states: int
    noise_seed: int
    bandwidth: float = field(init=False)

    def __post_init__(self):
        if self.n_states < 2:
            raise DomainError("need at least two observations")
        h = (1.0 / (self.n_states * math.sqrt(2.0))) ** 0.2
        object.__setattr__(self, "bandwidth", h)

    def noise(self) -> np.ndarray:
        return make_generator(self.noise_seed).standard_normal(self.n_states)


def robust_estimate(path: BinaryPath, alpha: float = 0.05, noise_seed: int = 0) -> Estimate:
    """Kernel-weighted mean of the path with externally injected noise.

    Each observation is weighted by a Gaussian kernel of an independent
    standard normal draw at bandwidth h = (1/((n+1) sqrt 2))^(1/5):

        p_tilde = (1/((n+1) h)) sum X_t exp(-Y_t^2 / (2 h^2)).

    The interval is centered at p_tilde * sqrt(1 + h^2) with half-width
    z * sqrt(mean(X^2) / ((n+1) sqrt(2) h)); it does not lean on the
    dependence structure of the path, only on the marginal second moment.
    """
    z = _check_alpha(alpha)
    cfg = RobustConfig(n_states=path.states.size, noise_seed=noise_seed)
    h = cfg.bandwidth
    x = path.states.astype(float)
    y = cfg.noise()
    p_tilde = float(np.mean(x * np.exp(-0.5 * (y / h) ** 2))) / h
    x2_bar = float(np.mean(x * x))
    se = math.sqrt(x2_bar / (cfg.n_states * math.sqrt(2.0) * h))
    center = p_tilde * math.sqrt(1.0 + h * h)
    return Estimate(
        method="robust",
        point=p_tilde,
        stderr=se,
        ci_low=center - z * se,
        ci_high=center + z * se,
        alpha=alpha,
        n=path.n,
        regime=None,
    )


def indicator_estimate(path: RealPath, alpha: float = 0.05) -> Estimate:
    """Estimate a from a uniform-marginal path via repeat indicators.

    Consecutive equal states happen exactly when the copula kept the state,
    so the indicators 1{X_t = X_{t+1}} are i.i.d. Bernoulli(a).
    """
    z = _check_alpha(alpha)
    s = path.states
    agree = s[:-1] == s[1:]
    a_hat = float(agree.mean())
    n = path.n
    if not 0.0 < a_hat < 1.0:
        raise DegenerateData(
            "all steps repeated, or none did; a sits on the boundary",
            a=a_hat,
            point=a_hat,
            method="indicator",
        )
    se = math.sqrt(a_hat * (1.0 - a_hat) / n)
    return Estimate(
        method="indicator",
        point=a_hat,
        stderr=se,
        ci_low=a_hat - z * se,
        ci_high=a_hat + z * se,
        alpha=alpha,
        n=n,
        regime=None,
    )
