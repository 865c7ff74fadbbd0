"""Counter-based, splittable random streams.

Every stochastic routine takes a ``master_seed`` and derives one independent
stream per trial from ``(master_seed, trial_index, *lane)``.  The stream for a
given key never depends on which other trials ran, or in what order, so
serial and parallel drivers produce identical numbers.
"""

import numpy as np

MAX_SEED = 2**64 - 1


def check_seed(seed):
    seed = int(seed)
    if not 0 <= seed <= MAX_SEED:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
    return seed


def stream(master_seed, *key):
    """Return a Philox-backed generator for ``(master_seed, *key)``."""
    seq = np.random.SeedSequence(check_seed(master_seed), spawn_key=tuple(int(k) for k in key))
    return np.random.Generator(np.random.Philox(seq))
