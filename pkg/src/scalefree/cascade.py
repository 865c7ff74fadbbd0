"""Evolution of an infinitesimal: golden-mean cascade and stochastic growth.

Two engines live here.

* The deterministic cascade iterates ``eta -> 1 / (1 + eta)``.  From
  ``eta = 1`` the iterates are the continued-fraction approximants
  ``F_n / F_{n+1}`` of the golden mean ``(sqrt(5) - 1) / 2``.
* The stochastic engine grows a small ``eta`` by random inversion-scalings
  ``t_- -> t_-**-alpha`` and scalings ``t_+ -> t_+**alpha`` until it is
  macroscopic, then translates it linearly up to 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Union

import numpy as np

from .errors import ConvergenceError, DomainError
from .streams import stream

GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass
class CascadeState:
    """Current magnitude, its history and (for stochastic runs) a random stream.

    ``eta`` may be a ``fractions.Fraction``; the golden step then stays exact.
    """

    eta: object
    step_count: int = 0
    history: list = field(default_factory=list)
    rng: Optional[np.random.Generator] = None

    def __post_init__(self):
        if not self.history:
            self.history.append(self.eta)


def golden_step(state):
    """Advance ``state`` in place by ``eta -> 1 / (1 + eta)`` and return it."""
    if not state.eta > 0:
        raise DomainError(f"golden step needs eta > 0, got {state.eta!r}")
    state.eta = 1 / (1 + state.eta)
    state.history.append(state.eta)
    state.step_count += 1
    return state


def run_to_convergence(eta0, tol=5e-8, max_steps=1000):
    """Iterate the golden step until ``|eta - GOLDEN| < tol``.

    Returns ``(value, steps)``; raises :class:`ConvergenceError` carrying the
    last state when ``max_steps`` is exhausted.
    """
    if not eta0 > 0:
        raise DomainError(f"eta0 must be positive, got {eta0!r}")
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol!r}")
    state = CascadeState(eta0)
    while abs(state.eta - GOLDEN) >= tol:
        if state.step_count >= max_steps:
            raise ConvergenceError(
                f"no convergence to within {tol} after {max_steps} steps", state
            )
        golden_step(state)
    return state.eta, state.step_count


def fibonacci(n):
    """``F_n`` with ``F_0 = 0, F_1 = 1``."""
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


# -- scale distributions -------------------------------------------------------


@dataclass(frozen=True)
class Uniform:
    lo: float
    hi: float

    def __post_init__(self):
        if not (0 <= self.lo < self.hi and math.isfinite(self.hi)):
            raise ValueError(f"need 0 <= lo < hi, got ({self.lo!r}, {self.hi!r})")

    def sample(self, rng):
        k = rng.uniform(self.lo, self.hi)
        while k <= 0.0:
            k = rng.uniform(self.lo, self.hi)
        return k

    @property
    def mean_log(self):
        a, b = self.lo, self.hi
        xlogx = lambda x: x * math.log(x) - x if x > 0 else 0.0
        return (xlogx(b) - xlogx(a)) / (b - a)


@dataclass(frozen=True)
class GammaLike:
    shape: float
    scale: float

    def __post_init__(self):
        if not (self.shape > 0 and self.scale > 0):
            raise ValueError(f"shape and scale must be positive, got ({self.shape!r}, {self.scale!r})")

    def sample(self, rng):
        k = rng.gamma(self.shape, self.scale)
        while k <= 0.0:
            k = rng.gamma(self.shape, self.scale)
        return k


@dataclass(frozen=True)
class Fixed:
    """Degenerate distribution, handy for deterministic runs."""

    value: float

    def __post_init__(self):
        if not self.value > 0:
            raise ValueError(f"value must be positive, got {self.value!r}")

    def sample(self, rng):
        return self.value


ScaleDistribution = Union[Uniform, GammaLike, Fixed]

DEFAULT_ALPHA = Uniform(0.9, 1.5)


def sample_scale(dist, rng):
    """Draw one positive scale factor from ``dist`` using ``rng``."""
    return float(dist.sample(rng))


# -- stochastic growth -----------------------------------------------------------


class Move(NamedTuple):
    step: int
    eta: float
    side: int  # -1: t = 1 - eta, +1: t = 1 + eta
    kind: str


START, INVERSION_SCALING, SCALING, FLUCTUATION, TRANSLATION, REINVERSION = (
    "start",
    "inversion_scaling",
    "scaling",
    "fluctuation",
    "translation",
    "ready_for_reinversion",
)


def evolve_infinitesimal(
    eta0,
    alpha_dist=DEFAULT_ALPHA,
    seed=0,
    max_steps=200_000,
    threshold=1e-2,
    step_size=1e-3,
    side=-1,
    flip_prob=0.0,
    trial=0,
    stop_at_threshold=False,
):
    """Simulate the directed growth of an infinitesimal ``eta``.

    Below ``threshold`` each step draws ``alpha`` from ``alpha_dist``.  A point
    below 1 is inverted and scaled, ``1 - eta -> 1 + alpha*eta``; a point above
    1 is scaled, ``1 + eta -> 1 + alpha*eta``.  With ``flip_prob > 0`` a step
    may instead be a symmetric fluctuation that only flips the side.  Once
    ``eta >= threshold`` it grows linearly by ``threshold * step_size`` per
    step until it reaches 1, where the run ends with a
    ``ready_for_reinversion`` record.

    Returns the list of :class:`Move` records, starting with step 0.
    """
    if not 0.0 < eta0 < 0.5:
        raise DomainError(f"eta0 must lie in (0, 0.5), got {eta0!r}")
    if side not in (-1, 1):
        raise ValueError("side must be -1 or +1")
    if not 0.0 <= flip_prob <= 1.0:
        raise ValueError("flip_prob must lie in [0, 1]")
    rng = stream(seed, trial)
    eta = float(eta0)
    moves = [Move(0, eta, side, START)]
    for step in range(1, max_steps + 1):
        if eta >= threshold:
            if stop_at_threshold:
                break
            eta = min(1.0, eta + threshold * step_size)
            kind = TRANSLATION
        elif flip_prob and rng.random() < flip_prob:
            side = -side
            kind = FLUCTUATION
        else:
            alpha = sample_scale(alpha_dist, rng)
            eta = alpha * eta
            kind = INVERSION_SCALING if side < 0 else SCALING
            side = 1
        moves.append(Move(step, eta, side, kind))
        if eta >= 1.0:
            moves.append(Move(step, eta, side, REINVERSION))
            break
    return moves


def first_crossing(moves, threshold=1e-2):
    """Step at which ``eta`` first reached ``threshold``, or ``None``."""
    for m in moves:
        if m.eta >= threshold:
            return m.step
    return None


def threshold_fraction(trials, eta0=1e-6, alpha_dist=DEFAULT_ALPHA, seed=0, max_steps=10_000, threshold=1e-2):
    """Fraction of independent trials whose ``eta`` reaches ``threshold`` within ``max_steps``."""
    hits = 0
    for i in range(trials):
        moves = evolve_infinitesimal(
            eta0, alpha_dist, seed, max_steps, threshold, trial=i, stop_at_threshold=True
        )
        hits += moves[-1].eta >= threshold
    return hits / trials
