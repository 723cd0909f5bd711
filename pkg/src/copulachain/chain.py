"""Two-state Markov chains generated by the copula C = a*M + (1-a)*W.

M and W are the upper and lower Frechet-Hoeffding bounds, so a step of the
chain repeats the current state with probability a and reflects it with
probability 1 - a.  With Bernoulli(p) marginals the induced transition
matrix takes one of two algebraic forms depending on whether p is below or
above 1/2; both reduce to the same symmetric matrix at p = 1/2.
"""

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import DomainError
from .rng import make_generator

_ROW_TOL = 1e-12


class Regime(Enum):
    """Which algebraic branch of the transition matrix applies."""

    LESS_HALF = "less_half"
    HALF = "half"
    GEQ_HALF = "geq_half"

    @staticmethod
    def from_p(p: float) -> "Regime":
        if p < 0.5:
            return Regime.LESS_HALF
        if p == 0.5:
            return Regime.HALF
        return Regime.GEQ_HALF


@dataclass(frozen=True)
class ModelParams:
    """Copula weight ``a`` and marginal success probability ``p``.

    Both must lie strictly inside (0, 1); the boundary cases collapse the
    chain to a deterministic or i.i.d. sequence and are rejected here.
    """

    a: float
    p: float
    regime: Regime = field(init=False)

    def __post_init__(self):
        a, p = float(self.a), float(self.p)
        if not (np.isfinite(a) and 0.0 < a < 1.0):
            raise DomainError(f"copula weight a must be in (0, 1), got {self.a!r}")
        if not (np.isfinite(p) and 0.0 < p < 1.0):
            raise DomainError(f"marginal probability p must be in (0, 1), got {self.p!r}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "regime", Regime.from_p(p))


@dataclass(frozen=True)
class TransitionMatrix:
    """Row-stochastic 2x2 matrix over states {0, 1}."""

    entries: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.entries, dtype=float)
        if m.shape != (2, 2):
            raise DomainError(f"transition matrix must be 2x2, got shape {m.shape}")
        if np.any(m < -_ROW_TOL) or np.any(m > 1.0 + _ROW_TOL):
            raise DomainError("transition probabilities must lie in [0, 1]")
        if np.any(np.abs(m.sum(axis=1) - 1.0) > _ROW_TOL):
            raise DomainError("transition matrix rows must sum to 1")
        m = np.clip(m, 0.0, 1.0)
        m.setflags(write=False)
        object.__setattr__(self, "entries", m)

    def __getitem__(self, idx):
        return self.entries[idx]

    def as_dict(self) -> dict:
        m = self.entries
        return {"p00": m[0, 0], "p01": m[0, 1], "p10": m[1, 0], "p11": m[1, 1]}


def transition_matrix(params: ModelParams) -> TransitionMatrix:
    """One-step transition matrix of the stationary chain.

    For p < 1/2 the matrix is
        [[(a p + 1 - 2p)/(1 - p), p (1 - a)/(1 - p)],
         [1 - a,                  a                ]]
    and for p >= 1/2
        [[a,                      1 - a                    ],
         [(1 - p)(1 - a)/p,       (a (1 - p) + 2p - 1)/p   ]].
    """
    a, p = params.a, params.p
    if params.regime is Regime.LESS_HALF:
        m = np.array(
            [
                [(a * p + 1.0 - 2.0 * p) / (1.0 - p), p * (1.0 - a) / (1.0 - p)],
                [1.0 - a, a],
            ]
        )
    else:
        m = np.array(
            [
                [a, 1.0 - a],
                [(1.0 - p) * (1.0 - a) / p, (a * (1.0 - p) + 2.0 * p - 1.0) / p],
            ]
        )
    return TransitionMatrix(m)


def lambda2(params: ModelParams) -> float:
    """Second eigenvalue of the transition matrix; |lambda2| < 1 on the interior."""
    a, p = params.a, params.p
    if params.regime is Regime.LESS_HALF:
        return (a - p) / (1.0 - p)
    return (a + p - 1.0) / p


def stationary_distribution(params: ModelParams) -> tuple[float, float]:
    """Stationary law (P(X=0), P(X=1)) = (1 - p, p)."""
    return (1.0 - params.p, params.p)


def n_step_matrix(params: ModelParams, n: int) -> TransitionMatrix:
    """n-step transition matrix in closed form.

    Spectral decomposition gives
        A^n = [[1 - p + p L^n,        p - p L^n        ],
               [1 - p - (1 - p) L^n,  p + (1 - p) L^n  ]]
    with L the second eigenvalue; n = 0 yields the identity.
    """
    if n < 0 or n != int(n):
        raise DomainError(f"step count must be a nonnegative integer, got {n!r}")
    p = params.p
    ln = lambda2(params) ** int(n)
    m = np.array(
        [
            [1.0 - p + p * ln, p - p * ln],
            [1.0 - p - (1.0 - p) * ln, p + (1.0 - p) * ln],
        ]
    )
    return TransitionMatrix(m)


@dataclass(frozen=True)
class PathOrigin:
    """Provenance of a path: simulated with known settings, or external."""

    kind: str
    seed: int | None = None
    a: float | None = None
    p: float | None = None


@dataclass(frozen=True)
class BinaryPath:
    """A realized trajectory with states in {0, 1}, length n + 1 >= 2."""

    states: np.ndarray
    origin: PathOrigin = PathOrigin(kind="external")

    def __post_init__(self):
        s = np.asarray(self.states)
        if s.ndim != 1 or s.size < 2:
            raise DomainError("a path needs at least two observations")
        if not np.isin(s, (0, 1)).all():
            raise DomainError("binary path states must be 0 or 1")
        s = s.astype(np.int8)
        s.setflags(write=False)
        object.__setattr__(self, "states", s)

    @property
    def n(self) -> int:
        """Number of transitions (one less than the number of states)."""
        return self.states.size - 1


@dataclass(frozen=True)
class RealPath:
    """A realized trajectory with states in [0, 1], length >= 2."""

    states: np.ndarray
    origin: PathOrigin = PathOrigin(kind="external")

    def __post_init__(self):
        s = np.asarray(self.states, dtype=np.float64)
        if s.ndim != 1 or s.size < 2:
            raise DomainError("a path needs at least two observations")
        if np.any(~np.isfinite(s)) or np.any(s < 0.0) or np.any(s > 1.0):
            raise DomainError("real path states must lie in [0, 1]")
        s.setflags(write=False)
        object.__setattr__(self, "states", s)

    @property
    def n(self) -> int:
        return self.states.size - 1


def simulate_bernoulli_chain(params: ModelParams, n: int, seed: int) -> BinaryPath:
    """Simulate X_0, ..., X_n from the stationary chain with Bernoulli(p) marginals.

    Draw convention: with one uniform U_t per step, X_0 = 1{U_0 < p} and
    X_{t+1} = 1{U_{t+1} < P(next = 1 | X_t)}.

    The scan is vectorized: each step's uniform classifies the update map
    as constant (both rows agree), identity, or flip.  The state at t is
    then the value installed by the most recent constant step, toggled by
    the number of flips since; before any constant step, X_0 plays that
    role.  This reproduces the sequential recursion exactly.

    Parameters
    ----------
    params : ModelParams
    n : number of transitions; the path has n + 1 states.
    seed : 64-bit stream seed.
    """
    if n < 1:
        raise DomainError(f"need at least one transition, got n={n!r}")
    mat = transition_matrix(params).entries
    q0, q1 = mat[0, 1], mat[1, 1]
    u = make_generator(seed).random(n + 1)
    x0 = bool(u[0] < params.p)

    b0 = u[1:] < q0
    b1 = u[1:] < q1
    flip = b0 & ~b1
    const = b0 == b1
    nflips = np.cumsum(flip)

    # last constant step at or before t; position 0 is a sentinel carrying X_0
    last_const = np.maximum.accumulate(np.arange(1, n + 1) * const)
    values = np.concatenate(([x0], b0))
    flips_before = np.concatenate(([0], nflips))
    rest = values[last_const] ^ ((nflips - flips_before[last_const]) & 1).astype(bool)

    states = np.concatenate(([x0], rest)).astype(np.int8)
    origin = PathOrigin(kind="simulated", seed=int(seed), a=params.a, p=params.p)
    return BinaryPath(states=states, origin=origin)


def simulate_uniform_chain(a: float, n: int, seed: int) -> RealPath:
    """Simulate the chain with Uniform(0, 1) marginals.

    A step keeps the state with probability a and reflects it to 1 - X_t
    otherwise.  Only two values ever occur, X_0 and 1 - X_0; both are exact
    doubles (53-bit uniforms have exactly representable complements), so a
    kept step is a bit-exact copy and X_t == X_{t+1} detects it reliably.
    """
    if not (np.isfinite(a) and 0.0 < a < 1.0):
        raise DomainError(f"copula weight a must be in (0, 1), got {a!r}")
    if n < 1:
        raise DomainError(f"need at least one transition, got n={n!r}")
    u = make_generator(seed).random(n + 1)
    x0 = u[0]
    reflected = np.cumsum(u[1:] >= a) & 1
    states = np.concatenate(([x0], np.where(reflected, 1.0 - x0, x0)))
    origin = PathOrigin(kind="simulated", seed=int(seed), a=float(a), p=None)
    return RealPath(states=states, origin=origin)


@dataclass(frozen=True)
class TransitionCounts:
    """Sufficient statistics of a binary path.

    x0 is the initial state, n_ij counts i -> j transitions, n = sum of the
    n_ij, and ones = x0 + n01 + n11 is the total number of 1-states in the
    path (the identity holds because each 1 after time zero is entered
    either from 0 or from 1).
    """

    x0: int
    n00: int
    n01: int
    n10: int
    n11: int

    def __post_init__(self):
        for name in ("x0", "n00", "n01", "n10", "n11"):
            v = getattr(self, name)
            if v != int(v) or v < 0:
                raise DomainError(f"count {name} must be a nonnegative integer, got {v!r}")
            object.__setattr__(self, name, int(v))
        if self.x0 not in (0, 1):
            raise DomainError(f"x0 must be 0 or 1, got {self.x0!r}")
        if self.n < 1:
            raise DomainError("counts must describe at least one transition")
        # entries into state 1 and exits from it can differ by at most one,
        # with the sign of the surplus pinned by the starting state; a state
        # can only host transitions if the walk can reach it at all
        diff = self.n01 - self.n10
        allowed = (0, 1) if self.x0 == 0 else (-1, 0)
        reachable = (
            self.n01 > 0 or self.n10 + self.n11 == 0
            if self.x0 == 0
            else self.n10 > 0 or self.n00 + self.n01 == 0
        )
        if diff not in allowed or not reachable:
            raise DomainError("counts are not realizable by any binary walk")

    @property
    def n(self) -> int:
        return self.n00 + self.n01 + self.n10 + self.n11

    @property
    def ones(self) -> int:
        return self.x0 + self.n01 + self.n11

    def flipped(self) -> "TransitionCounts":
        """Counts of the same path with state labels 0 and 1 exchanged."""
        return TransitionCounts(
            x0=1 - self.x0, n00=self.n11, n01=self.n10, n10=self.n01, n11=self.n00
        )


def transition_counts(path: BinaryPath) -> TransitionCounts:
    """Tally the transition counts of a binary path."""
    s = path.states
    prev, cur = s[:-1], s[1:]
    return TransitionCounts(
        x0=int(s[0]),
        n00=int(np.count_nonzero((prev == 0) & (cur == 0))),
        n01=int(np.count_nonzero((prev == 0) & (cur == 1))),
        n10=int(np.count_nonzero((prev == 1) & (cur == 0))),
        n11=int(np.count_nonzero((prev == 1) & (cur == 1))),
    )
