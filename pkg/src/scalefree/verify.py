"""Finite-difference smoothness checks at junction points and ODE residuals.

The object under test is non-smoothness itself, so everything here is purely
numerical: fixed stencils, no automatic differentiation, no adaptive steps.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .solutions import eval_generalized_T

DEFAULT_STEP = 1e-4
JUMP_FACTOR = 10.0
_MACHINE_EPS = sys.float_info.epsilon

# Second-order stencils: offsets in units of h and their weights.
_STENCILS = {
    (1, "central"): ((-1, 1), (-0.5, 0.5)),
    (1, "right"): ((0, 1, 2), (-1.5, 2.0, -0.5)),
    (1, "left"): ((0, -1, -2), (1.5, -2.0, 0.5)),
    (2, "central"): ((-1, 0, 1), (1.0, -2.0, 1.0)),
    (2, "right"): ((0, 1, 2, 3), (2.0, -5.0, 4.0, -1.0)),
    (2, "left"): ((0, -1, -2, -3), (2.0, -5.0, 4.0, -1.0)),
}

CLASSES = ("C0-discontinuous", "C0", "C1", "C2-or-smoother")


def numeric_derivative(f, t0, order=1, h=DEFAULT_STEP, side="central"):
    """First or second derivative of ``f`` at ``t0`` by a second-order stencil.

    One-sided stencils (``side="left"`` or ``"right"``) only sample ``t0`` and
    points on that side of it.
    """
    if not h > 0:
        raise ValueError(f"step must be positive, got {h!r}")
    try:
        offsets, weights = _STENCILS[(order, side)]
    except KeyError:
        raise ValueError(f"unsupported order/side: {order!r}/{side!r}") from None
    total = sum(w * f(t0 + k * h) for k, w in zip(offsets, weights))
    return total / h**order


def _one_sided_weights(direction, points=4):
    # Cubic through t0 + direction*k*h, k = 1..points: value, d1, d2 at t0.
    k = direction * np.arange(1, points + 1, dtype=float)
    vander = np.vander(k, points, increasing=True).T
    weights = []
    for order, fact in ((0, 1.0), (1, 1.0), (2, 2.0)):
        rhs = np.zeros(points)
        rhs[order] = fact
        weights.append(np.linalg.solve(vander, rhs))
    return k, weights


_LEFT = _one_sided_weights(-1)
_RIGHT = _one_sided_weights(+1)


def one_sided_limits(f, t0, h, side):
    """One-sided limits ``(value, d1, d2)`` of ``f`` at ``t0``.

    Only points strictly on ``side`` are sampled, so ``f(t0)`` itself, which
    belongs to one branch or the other, never enters.  Also returns the
    roundoff scale of each estimate.
    """
    offsets, weights = _LEFT if side == "left" else _RIGHT
    samples = np.array([f(t0 + k * h) for k in offsets])
    fmax = float(np.max(np.abs(samples)))
    estimates, roundoff = [], []
    for order, w in enumerate(weights):
        estimates.append(float(w @ samples) / h**order)
        roundoff.append(4 * _MACHINE_EPS * fmax * float(np.abs(w).sum()) / h**order)
    return estimates, roundoff


@dataclass(frozen=True)
class JunctionReport:
    value_left: float
    value_right: float
    value_jump: float
    d1_left: float
    d1_right: float
    d1_jump: float
    d2_left: float
    d2_right: float
    d2_jump: float
    classification: str
    # estimated error of (value, d1, d2), from step halving plus roundoff
    noise_floor: tuple

    def jump_present(self, order):
        jump = (self.value_jump, self.d1_jump, self.d2_jump)[order]
        return abs(jump) > JUMP_FACTOR * self.noise_floor[order]


def _richardson(coarse, fine, p):
    return fine + (fine - coarse) / (2**p - 1)


def classify_junction(f, t0=1.0, h=DEFAULT_STEP):
    """Measure value, slope and curvature jumps of ``f`` across ``t0``.

    Each one-sided quantity is estimated with step ``h`` and ``h/2``; the
    reported value is the Richardson combination and the noise floor is the
    disagreement between the two steps plus a roundoff bound.  A jump counts
    as present when it exceeds ``JUMP_FACTOR`` times its floor.
    """
    sides = {}
    for side in ("left", "right"):
        coarse, _ = one_sided_limits(f, t0, h, side)
        fine, roundoff = one_sided_limits(f, t0, h / 2, side)
        # value is O(h^4), d1 O(h^3), d2 O(h^2)
        best = [_richardson(c, g, p) for c, g, p in zip(coarse, fine, (4, 3, 2))]
        spread = [abs(c - g) + r for c, g, r in zip(coarse, fine, roundoff)]
        sides[side] = (best, spread)

    (left, left_err), (right, right_err) = sides["left"], sides["right"]
    floor = tuple(a + b for a, b in zip(left_err, right_err))
    jumps = [l - r for l, r in zip(left, right)]
    present = [abs(j) > JUMP_FACTOR * e for j, e in zip(jumps, floor)]
    if present[0]:
        cls = "C0-discontinuous"
    elif present[1]:
        cls = "C0"
    elif present[2]:
        cls = "C1"
    else:
        cls = "C2-or-smoother"
    return JunctionReport(
        value_left=left[0],
        value_right=right[0],
        value_jump=jumps[0],
        d1_left=left[1],
        d1_right=right[1],
        d1_jump=jumps[1],
        d2_left=left[2],
        d2_right=right[2],
        d2_jump=jumps[2],
        classification=cls,
        noise_floor=floor,
    )


def _side_for(t, h, junction):
    if junction is None or abs(t - junction) > h:
        return "central"
    return "left" if t < junction else "right"


def ode_residual(f, t, h=1e-5, side=None, junction=1.0):
    """``|t f'(t) - f(t)|`` with ``f'`` from :func:`numeric_derivative`.

    When ``side`` is not given, a central stencil is used unless it would
    straddle ``junction``, in which case the stencil stays on ``t``'s side.
    """
    if side is None:
        side = _side_for(t, 2 * h, junction)
    return abs(t * numeric_derivative(f, t, 1, h, side) - f(t))


def residual_noise_floor(f, t, h=1e-5, side=None, junction=1.0):
    """Discretisation noise of :func:`ode_residual`: step-halving spread plus roundoff."""
    if side is None:
        side = _side_for(t, 2 * h, junction)
    d_coarse = numeric_derivative(f, t, 1, h, side)
    d_fine = numeric_derivative(f, t, 1, h / 2, side)
    roundoff = 4 * _MACHINE_EPS * abs(t) * max(abs(f(t)), 1.0) / (h / 2)
    return abs(t) * abs(d_coarse - d_fine) + roundoff


def phi_residual(p, t, h=1e-5):
    """``|t * d/dt (ln T(t) - t)|``: how far ``k*phi`` is from a true constant."""
    if not t > 0:
        raise DomainError(f"phi residual needs t > 0, got {t!r}")

    def halo(x):
        return eval_generalized_T(x, p) - x

    return abs(t * numeric_derivative(halo, t, 1, h, "central"))
