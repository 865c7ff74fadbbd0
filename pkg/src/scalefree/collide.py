"""Two particles on a line: a head-on collision versus an η-flip swap.

A starts at x = 0 and B at x = 2, both at unit speed towards each other:
``x_A = t`` and ``x_B = 2 - t``.  Classically they meet at ``t = x = 1``.  In
scale-free mode, once ``x_A = 1 - eta`` is within ``eta_threshold`` of 1, the
sign of ``eta`` is flipped.  The clock jumps from ``t_- = 1 - eta`` to
``t_+ = 1 + eta``, which exchanges the positions of A and B.  A then carries on
towards x = 2 and B towards x = 0 without ever occupying the same point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

CLASSICAL, SCALE_FREE = "classical", "scale_free"
COLLISION, SWAP = "collision", "swap"


@dataclass(frozen=True)
class CollisionOutcome:
    mode: str
    event: Optional[str]
    event_time: Optional[float]
    event_position: Optional[float]
    final_position_A: float
    final_position_B: float
    trajectory: List[Tuple[float, float, float]]


def _positions(t):
    return t, 2.0 - t


def _in_window(x_a, eta_threshold):
    # boundary counts as inside up to roundoff, so dt == eta_threshold never
    # steps over the window onto x_A == 1
    gap = abs(1.0 - x_a)
    return gap < eta_threshold or math.isclose(gap, eta_threshold, rel_tol=1e-9)


def simulate(mode=SCALE_FREE, eta_threshold=1e-3, dt=1e-3, t_end=2.0):
    """Step the two linear laws from ``t = 0`` to ``t_end`` with step ``dt``.

    Classical mode stops at the first step where ``x_A >= x_B`` and reports
    the linearly interpolated crossing.  Scale-free mode performs exactly one
    swap on entering the window ``|x_A - 1| < eta_threshold``; ``event`` is
    ``None`` if the run ends before that.
    """
    if mode not in (CLASSICAL, SCALE_FREE):
        raise ValueError(f"unknown mode {mode!r}")
    if not (0 < dt <= eta_threshold):
        raise ValueError(f"need 0 < dt <= eta_threshold, got dt={dt!r}, threshold={eta_threshold!r}")
    if not t_end > 0:
        raise ValueError(f"t_end must be positive, got {t_end!r}")

    trajectory = [(0.0, *_positions(0.0))]
    event = event_time = event_position = None
    base, k, clock = 0.0, 0, 0.0
    while clock < t_end:
        t_prev = clock
        k += 1
        clock = min(base + k * dt, t_end)
        x_a, x_b = _positions(clock)
        if mode == CLASSICAL and x_a >= x_b:
            _, a_prev, b_prev = trajectory[-1]
            gap_prev, gap = b_prev - a_prev, x_b - x_a
            frac = gap_prev / (gap_prev - gap)
            event, event_time = COLLISION, t_prev + frac * (clock - t_prev)
            event_position = a_prev + frac * (x_a - a_prev)
            trajectory.append((event_time, event_position, event_position))
            return CollisionOutcome(
                mode, event, event_time, event_position, event_position, event_position, trajectory
            )
        if mode == SCALE_FREE and event is None and _in_window(x_a, eta_threshold):
            eta = 1.0 - x_a
            event, event_time, event_position = SWAP, clock, x_a
            # t_- -> t_+: the clock jumps by 2*eta, so x_A and x_B trade places.
            # The jump is instantaneous and is never cut short by t_end.
            base, k = clock + 2.0 * eta, 0
            clock = base
            x_a, x_b = _positions(clock)
        trajectory.append((clock, x_a, x_b))

    _, x_a, x_b = trajectory[-1]
    return CollisionOutcome(mode, event, event_time, event_position, x_a, x_b, trajectory)
