"""Solution families of the scale-free equation ``t * dtau/dt = tau`` near t = 1.

Every family is a small frozen dataclass with two real formulas: ``left(t)``
used for ``t < 1`` and ``right(t)`` used for ``t >= 1``.  Calling a family on a
float evaluates the piecewise function in ordinary floating point, without
first-order truncation, so that finite-difference checks see the true
functions.  On the left ``t = t_- = 1 - eta`` and ``t_+ = 2 - t``; on the right
``t = t_+ = 1 + eta`` and ``t_- = 2 - t``.

    >>> Asymmetric(1.0)(0.99)  # 1 / t_+ with eta = 0.01
    0.9900990099009901
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Union

from .errors import DomainError, SingularityError
from .fatnum import FatReal

MAX_DEPTH = 64


class _Piecewise:
    def left(self, t):
        raise NotImplementedError

    def right(self, t):
        raise NotImplementedError

    def __call__(self, t):
        return self.left(t) if t < 1.0 else self.right(t)


@dataclass(frozen=True)
class Standard(_Piecewise):
    """``tau(t_+-) = t_+-``: the translation solution, smooth and reflection symmetric."""

    def left(self, t):
        return t

    def right(self, t):
        return t


@dataclass(frozen=True)
class Fluctuation(_Piecewise):
    """``tau_- = 1/t_+``, ``tau_+ = 1/t_-``: inversion both ways.

    Both branches reduce to ``1 / (2 - t)``, so the function is analytic on
    ``t < 2``.
    """

    def left(self, t):
        return 1 / (2 - t)

    def right(self, t):
        if t >= 2:
            raise DomainError("fluctuation solution needs t < 2")
        return 1 / (2 - t)


@dataclass(frozen=True)
class Asymmetric(_Piecewise):
    """``tau_-(t_-) = t_+**-alpha``, ``tau_+(t_+) = t_+``.

    ``alpha = 1`` is the one-sided inversion solution, continuous in value and
    slope at t = 1 with a jump of 2 in the second derivative.
    """

    alpha: float = 1.0

    def __post_init__(self):
        if not self.alpha > 0:
            raise ValueError(f"alpha must be positive, got {self.alpha!r}")

    def left(self, t):
        # integer exponents keep Fraction inputs exact
        alpha = int(self.alpha) if float(self.alpha).is_integer() else self.alpha
        return (2 - t) ** -alpha

    def right(self, t):
        return t


@dataclass(frozen=True)
class AsymmetricScaling(_Piecewise):
    """Same-side scaling ``t_1 = t_2**beta`` with ``tau(t_1) = t_2**beta``.

    A point ``t_1 = 1 + eta_1`` is paired with ``t_2 = 1 + eta_1/beta`` and the
    exact power is returned, i.e. ``tau(t) = (1 + (t - 1)/beta)**beta`` on both
    sides.  To first order this is ``t`` itself.
    """

    beta: float = 1.0

    def __post_init__(self):
        if not self.beta > 0:
            raise ValueError(f"beta must be positive, got {self.beta!r}")

    def _tau(self, t):
        base = 1.0 + (t - 1.0) / self.beta
        if base <= 0.0:
            raise DomainError(f"scaling solution undefined at t={t!r} for beta={self.beta!r}")
        return base**self.beta

    def left(self, t):
        return self._tau(t)

    def right(self, t):
        return self._tau(t)


@dataclass(frozen=True)
class ExactProduct(_Piecewise):
    """Left branch ``(1/t_+) * prod_{n=1..depth} (1 + eta**(2**n))**-1``; right ``t_+``.

    As ``depth`` grows the left branch decreases monotonically to ``1 - eta``.
    """

    depth: int = 12

    def __post_init__(self):
        if not (isinstance(self.depth, int) and 1 <= self.depth <= MAX_DEPTH):
            raise ValueError(f"depth must be an integer in [1, {MAX_DEPTH}], got {self.depth!r}")

    def left(self, t):
        eta = 1.0 - t
        if not eta < 1.0:
            raise DomainError("product solution needs t > 0 on the left branch")
        value = 1.0 / (1.0 + eta)
        for n in range(1, self.depth + 1):
            value /= 1.0 + eta ** (2**n)
        return value

    def right(self, t):
        return t


SolutionFamily = Union[Standard, Fluctuation, Asymmetric, AsymmetricScaling, ExactProduct]


@dataclass(frozen=True)
class Parity(_Piecewise):
    """The reflection ``P t_+- = t_-+`` applied to a family.

    Swapping ``t_+`` and ``t_-`` in the defining formulas means the left
    formula now governs ``t >= 1`` and the right formula governs ``t < 1``.
    """

    family: SolutionFamily

    def left(self, t):
        return self.family.right(t)

    def right(self, t):
        return self.family.left(t)


def parity_transform(family):
    """Return the parity-reversed evaluator of ``family``.

    Families whose two formulas coincide (Standard, Fluctuation,
    AsymmetricScaling) are returned unchanged.
    """
    if isinstance(family, (Standard, Fluctuation, AsymmetricScaling)):
        return family
    if isinstance(family, Parity):
        return family.family
    return Parity(family)


def eval_solution(family, t):
    """Evaluate ``family`` at the fat point ``t = 1 +- eta``.

    The result is returned in the same ``1 +- eta`` form; its ``value`` is the
    exact real.
    """
    if t.core != 1.0:
        raise DomainError(f"solutions are defined around t = 1, got core {t.core!r}")
    if not t.eps < 1.0:
        raise DomainError(f"need eps < 1, got {t.eps!r}")
    return FatReal.from_halo(1.0, family(t.value) - 1.0)


@dataclass(frozen=True)
class GeneralizedParams:
    """Parameters of ``ln T(t) = t + r k phi(k0 t)``.

    ``family`` is the scale-free solution used at each self-similar level and
    ``depth`` the number of levels before falling back to ``tau(s) = s``.
    """

    k: float = 1e-3
    k0: float = 1.0
    r: int = 1
    depth: int = 1
    family: SolutionFamily = field(default_factory=Standard)

    def __post_init__(self):
        if not self.k0 > 0:
            raise ValueError(f"k0 must be positive, got {self.k0!r}")
        if self.r not in (-1, 1):
            raise ValueError(f"r must be -1 or +1, got {self.r!r}")
        if not (isinstance(self.depth, int) and 0 <= self.depth <= MAX_DEPTH):
            raise ValueError(f"depth must be an integer in [0, {MAX_DEPTH}], got {self.depth!r}")


def replica_tau(s, family, depth):
    """Self-similar replica ``tau`` truncated after ``depth`` levels.

    ``tau_0(s) = s`` and ``tau_d(s) = family(s) * tau_{d-1}(u) / u`` with
    ``u = 1 + ln s``: each level multiplies the family by the relative
    correction of the level below, evaluated in the logarithmic variable.
    """
    if depth == 0:
        return s
    if depth == 1:
        return family(s)
    if not s > 0:
        raise DomainError(f"replica needs s > 0, got {s!r}")
    u = 1.0 + math.log(s)
    if u == 0.0:
        raise SingularityError("log-scale variable hit zero")
    return family(s) * replica_tau(u, family, depth - 1) / u


def phi(t1, family, depth):
    """Slowly varying generalized constant ``phi(t1) = t1 * tau(1/t1)``."""
    if depth == 0:
        return 1.0
    if t1 == 0.0:
        raise SingularityError("generalized solution is singular at t = 0")
    return t1 * replica_tau(1.0 / t1, family, depth)


def eval_generalized_T(t, p):
    """``ln T(t) = t + r * k * phi(k0 * t)``.

    With ``depth = 0`` (or ``k = 0``) this is the standard ``t + const``.
    """
    if p.k == 0.0:
        return float(t)
    return t + p.r * p.k * phi(p.k0 * t, p.family, p.depth)


def product_factors(eta, depth):
    """``[1 + eta, 1 + eta**2, 1 + eta**4, ..., 1 + eta**(2**(depth-1))]``."""
    if not 0.0 < eta < 1.0:
        raise DomainError(f"eta must lie in (0, 1), got {eta!r}")
    if depth < 1:
        raise ValueError(f"depth must be positive, got {depth!r}")
    return [1.0 + eta ** (2**n) for n in range(depth)]


def partial_product(eta, depth):
    """Product of :func:`product_factors`, telescoping to ``(1 - eta**2**depth)/(1 - eta)``."""
    return math.prod(product_factors(eta, depth))


def self_similar_residual(eta, depth):
    """Residual of the correction factor ``f_-`` in its own scale-free equation.

    ``f_-(eta) = prod_{n=1..depth} (1 + eta**(2**n))**-1`` is viewed as a
    function of the smaller-scale variable ``s = 1 - eta**2``.  Its logarithmic
    derivative is summed factor by factor and the returned value is
    ``|s * f'(s) / f(s) - 1|``, which vanishes for the infinite product.
    """
    if not 0.0 < eta < 0.5:
        raise DomainError(f"eta must lie in (0, 0.5), got {eta!r}")
    if not 1 <= depth <= MAX_DEPTH:
        raise ValueError(f"depth must be in [1, {MAX_DEPTH}], got {depth!r}")
    x = eta * eta
    s = 1.0 - x
    # d/ds ln(1 + x**m)**-1 with x = 1 - s is m x**(m-1) / (1 + x**m)
    terms = []
    for n in range(depth):
        m = 2**n
        xm = x**m
        terms.append(s * m * x ** (m - 1) / (1.0 + xm))
    return abs(math.fsum(terms + [-1.0]))


Evaluator = Callable[[float], float]
