"""Fat real numbers ``t(1 + r*eta)`` with first-order infinitesimal halos.

A :class:`FatReal` is a coarse value ``core`` plus a signed relative halo
``sign * eps``.  Arithmetic keeps only first-order terms: any product of two
halo magnitudes is dropped, so ``(1 + a)(1 + b) = 1 + a + b``.

The container never rejects a large ``eps``.  Statements such as
``(1 + eta)**-1 == 1 - eta`` are only *accurate* as real-number identities when
``eps`` is small; here they hold formally for any magnitude.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class FatReal:
    """The fat real ``core * (1 + sign * eps)``."""

    core: float
    eps: float = 0.0
    sign: int = 1

    def __post_init__(self):
        if not math.isfinite(self.core):
            raise ValueError(f"core must be finite, got {self.core!r}")
        if not (self.eps >= 0.0 and math.isfinite(self.eps)):
            raise ValueError(f"eps must be a finite non-negative magnitude, got {self.eps!r}")
        if self.sign not in (-1, 1):
            raise ValueError(f"sign must be -1 or +1, got {self.sign!r}")

    @classmethod
    def from_halo(cls, core, halo):
        """Build from a signed first-order halo, normalising to ``eps >= 0``."""
        return cls(core, abs(halo), -1 if halo < 0 else 1)

    @property
    def halo(self):
        """Signed relative halo ``sign * eps``."""
        return self.sign * self.eps

    @property
    def value(self):
        """The ordinary real ``core * (1 + sign * eps)``."""
        return self.core * (1.0 + self.halo)

    def flip(self):
        """Same magnitude, opposite side of ``core``."""
        return FatReal(self.core, self.eps, -self.sign)

    def __mul__(self, other):
        if not isinstance(other, FatReal):
            other = FatReal(float(other))
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, FatReal):
            other = FatReal(float(other))
        return mul(self, invert(other))

    def __pow__(self, alpha):
        return power(self, alpha)

    def __str__(self):
        op = "+" if self.sign > 0 else "-"
        return f"{self.core!r}(1 {op} {self.eps!r})"


def make(core, eps, sign=1):
    """The fat real ``core * (1 + sign * eps)``; ``eps`` must be >= 0."""
    return FatReal(float(core), float(eps), int(sign))


def t_plus(eta):
    """``t_+ = 1 + eta``."""
    return FatReal(1.0, float(eta), 1)


def t_minus(eta):
    """``t_- = 1 - eta``."""
    return FatReal(1.0, float(eta), -1)


def mul(a, b):
    """Product with the ``eps_a * eps_b`` cross term dropped."""
    return FatReal.from_halo(a.core * b.core, a.halo + b.halo)


def invert(a):
    """``(t(1 +- eta))**-1 = t**-1 (1 -+ eta)`` to first order."""
    if a.core == 0.0:
        raise ZeroDivisionError("cannot invert a fat real with zero core")
    return FatReal(1.0 / a.core, a.eps, -a.sign)


def power(a, alpha):
    """``(t(1 +- eta))**alpha = t**alpha (1 +- alpha*eta)`` to first order.

    Negative ``alpha`` combines inversion with scaling: ``t_-**-alpha = t_+**alpha``.
    """
    if not a.core > 0.0:
        raise DomainError(f"power needs a positive core, got {a.core!r}")
    return FatReal.from_halo(a.core**alpha, alpha * a.halo)


def expectation(a):
    """Expected value over the random sign: the coarse value ``core``."""
    return a.core
