"""Replication and annihilation of fat units ``1_f = 1 +- eta``.

Each cell carries an intrinsic clock ``t`` and scale ``k`` with ``eta = k t``.
When the clock reaches ``1/k`` the cell matures with ``eta = 1 +- eta'``: on
``+`` it divides into two daughters ``1 + eta'/2``, on ``-`` it is annihilated.
Maturity is treated as one discrete generation, which makes the line of
descent a Galton-Watson process with offspring 0 or 2.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import List, Optional

import numpy as np

from .streams import stream

DEFAULT_SCALE = 1e-3

# Stream lanes per trial: signs and residuals are drawn from separate
# streams so the population counts do not depend on residual bookkeeping.
_SIGN_LANE, _RESIDUAL_LANE = 0, 1


@dataclass(frozen=True)
class Cell:
    clock: float
    scale: float
    eps: float
    generation: int = 0
    # eta' of the mother at division; NaN for founders
    birth_residual: float = math.nan

    def __post_init__(self):
        if not self.scale > 0:
            raise ValueError(f"scale must be positive, got {self.scale!r}")
        if self.clock < 0 or self.eps < 0:
            raise ValueError("clock and eps must be non-negative")


def founder(scale=DEFAULT_SCALE, eps=0.0):
    return Cell(clock=eps / scale, scale=scale, eps=eps)


@dataclass
class Population:
    cells: List[Cell]
    generation: int = 0
    rng: Optional[np.random.Generator] = None
    residual_rng: Optional[np.random.Generator] = None

    def __len__(self):
        return len(self.cells)

    @property
    def extinct(self):
        return not self.cells


def new_population(n=1, scale=DEFAULT_SCALE, seed=0, trial=0):
    """``n`` founder cells with the random streams of ``(seed, trial)``."""
    return Population(
        cells=[founder(scale) for _ in range(n)],
        rng=stream(seed, trial, _SIGN_LANE),
        residual_rng=stream(seed, trial, _RESIDUAL_LANE),
    )


def _check_p(p_split):
    if not 0.0 <= p_split <= 1.0:
        raise ValueError(f"p_split must lie in [0, 1], got {p_split!r}")


def advance_generation(pop, p_split=0.5, scale_dist=None):
    """Mature every cell once and apply the random sign.

    ``+`` (probability ``p_split``) replaces the cell by two daughters with
    ``eps = eta'/2`` where ``eta' ~ Uniform(0, 1)``; ``-`` removes it.  Daughters
    inherit the mother's scale unless ``scale_dist`` is given, in which case
    each redraws it.  An extinct population is returned unchanged.
    """
    _check_p(p_split)
    if pop.extinct:
        return pop
    splits = pop.rng.random(len(pop.cells)) < p_split
    daughters = []
    for cell, split in zip(pop.cells, splits):
        if not split:
            continue
        residual = float(pop.residual_rng.random())
        for _ in range(2):
            scale = cell.scale if scale_dist is None else float(scale_dist.sample(pop.residual_rng))
            eps = residual / 2
            daughters.append(
                Cell(eps / scale, scale, eps, cell.generation + 1, birth_residual=residual)
            )
    return replace(pop, cells=daughters, generation=pop.generation + 1)


def extinction_oracle(p_split, generations):
    """``q_g``: probability a single line is extinct by generation ``g``.

    ``q_0 = 0`` and ``q_{g+1} = (1 - p) + p q_g**2``.
    """
    _check_p(p_split)
    if generations < 0:
        raise ValueError("generations must be non-negative")
    q = 0.0
    for _ in range(generations):
        q = (1.0 - p_split) + p_split * q * q
    return q


def population_sizes(p_split, generations, seed, trial, founders=1):
    """Sizes ``Z_0..Z_G`` of one trial, drawing signs exactly as :func:`advance_generation`."""
    rng = stream(seed, trial, _SIGN_LANE)
    sizes = [founders]
    n = founders
    for _ in range(generations):
        if n:
            n = 2 * int(np.count_nonzero(rng.random(n) < p_split))
        sizes.append(n)
    return sizes


def _tally(args):
    p_split, generations, seed, start, stop, founders = args
    G = generations + 1
    total = [0] * G
    total_sq = [0] * G
    alive = [0] * G
    halted = [0] * G
    for trial in range(start, stop):
        sizes = population_sizes(p_split, generations, seed, trial, founders)
        for g, z in enumerate(sizes):
            total[g] += z
            total_sq[g] += z * z
            alive[g] += z > 0
        if sizes[-1] == 0:
            halted[sizes.index(0)] += 1
    return total, total_sq, alive, halted


@dataclass(frozen=True)
class TrialStats:
    p_split: float
    trials: int
    mean_population: np.ndarray
    mean_se: np.ndarray
    survival: np.ndarray
    survival_se: np.ndarray
    # halting_counts[g]: trials that went extinct exactly at generation g
    halting_counts: np.ndarray
    oracle_extinction: np.ndarray = field(repr=False)

    @property
    def generations(self):
        return np.arange(len(self.mean_population))

    @property
    def still_alive(self):
        return self.trials - int(self.halting_counts.sum())


def run_trials(p_split=0.5, generations=10, trials=10_000, master_seed=0, workers=1, founders=1):
    """Monte Carlo over independent lines of descent.

    Trial ``i`` uses the stream derived from ``(master_seed, i)``, and
    per-trial tallies are summed as exact integers, so the result does not
    depend on ``workers``.
    """
    _check_p(p_split)
    if trials < 1:
        raise ValueError("trials must be at least 1")
    workers = max(1, int(workers))
    bounds = np.linspace(0, trials, min(workers, trials) + 1).astype(int)
    jobs = [(p_split, generations, master_seed, a, b, founders) for a, b in zip(bounds[:-1], bounds[1:])]
    if len(jobs) == 1:
        parts = [_tally(jobs[0])]
    else:
        with ProcessPoolExecutor(max_workers=len(jobs)) as pool:
            parts = list(pool.map(_tally, jobs))

    G = generations + 1
    total, total_sq, alive, halted = ([sum(part[i][g] for part in parts) for g in range(G)] for i in range(4))
    n = trials
    mean = np.array([t / n for t in total])
    second = np.array([s / n for s in total_sq])
    var = np.maximum(second - mean**2, 0.0) * (n / (n - 1) if n > 1 else 0.0)
    surv = np.array([a / n for a in alive])
    return TrialStats(
        p_split=p_split,
        trials=n,
        mean_population=mean,
        mean_se=np.sqrt(var / n),
        survival=surv,
        survival_se=np.sqrt(surv * (1 - surv) / n),
        halting_counts=np.array(halted),
        oracle_extinction=np.array([extinction_oracle(p_split, g) for g in range(G)]),
    )
