import math

import pytest
from hypothesis import given, strategies as st

from scalefree.errors import DomainError, SingularityError
from scalefree.fatnum import make, t_minus, t_plus
from scalefree.solutions import (
    Asymmetric,
    AsymmetricScaling,
    ExactProduct,
    Fluctuation,
    GeneralizedParams,
    Parity,
    Standard,
    eval_generalized_T,
    eval_solution,
    parity_transform,
    partial_product,
    phi,
    product_factors,
    self_similar_residual,
)

etas = st.floats(1e-6, 0.999)


def value(family, point):
    return eval_solution(family, point).value


def test_asymmetric_examples():
    assert value(Asymmetric(1), t_minus(0.01)) == pytest.approx(1 / 1.01, rel=1e-15)
    assert value(Asymmetric(1), make(1, 0, 1)) == 1.0
    assert value(Asymmetric(1), t_plus(0.3)) == pytest.approx(1.3, rel=1e-15)


def test_fluctuation_and_standard_examples():
    assert value(Fluctuation(), t_plus(0.25)) == pytest.approx(4 / 3, rel=1e-15)
    assert value(Fluctuation(), t_minus(0.25)) == pytest.approx(1 / 1.25, rel=1e-15)
    assert value(Standard(), t_plus(0.3)) == pytest.approx(1.3, rel=1e-15)


def test_eval_solution_returns_one_plus_minus_form():
    out = eval_solution(Asymmetric(1), t_minus(0.01))
    assert out.core == 1.0 and out.sign == -1
    assert out.eps == pytest.approx(1 - 1 / 1.01, rel=1e-12)


@pytest.mark.parametrize("point", [make(2, 0.1, 1), make(1, 1.0, 1), make(1, 1.5, -1)])
def test_eval_solution_domain(point):
    with pytest.raises(DomainError):
        eval_solution(Standard(), point)


@given(etas)
def test_asymmetric_one_is_the_inversion_solution(eta):
    assert Asymmetric(1.0)(1 - eta) == pytest.approx(1 / (1 + eta), rel=4e-16)
    assert Asymmetric(1.0)(1 + eta) == 1 + eta


@pytest.mark.parametrize("alpha", [0.5, 1.0, 2.0, 3.7])
def test_asymmetric_family(alpha):
    fam = Asymmetric(alpha)
    assert fam(1.0) == 1.0
    assert fam(0.9) == pytest.approx(1.1**-alpha, rel=1e-14)


def test_scaling_family_pairs_same_side_points():
    beta, eta = 0.5, 0.02
    # t1 = 1 + eta1 with eta1 = beta*eta, tau(t1) = t2**beta with t2 = 1 + eta
    t1 = 1 + beta * eta
    assert AsymmetricScaling(beta)(t1) == pytest.approx((1 + eta) ** beta, rel=1e-15)
    assert AsymmetricScaling(beta)(t1) == pytest.approx(t1, abs=eta**2)
    with pytest.raises(DomainError):
        AsymmetricScaling(0.25)(0.5)


@pytest.mark.parametrize("bad", [dict(alpha=0), dict(alpha=-1)])
def test_family_validation(bad):
    with pytest.raises(ValueError):
        Asymmetric(**bad)
    with pytest.raises(ValueError):
        ExactProduct(0)
    with pytest.raises(ValueError):
        AsymmetricScaling(-1.0)


def test_parity_examples():
    p = parity_transform(Asymmetric(1))
    assert value(p, t_minus(0.01)) == pytest.approx(0.99, rel=1e-15)
    assert value(p, t_plus(0.5)) == 2.0
    assert value(p, t_plus(0.999)) == pytest.approx(1000.0, rel=1e-12)


def test_parity_of_symmetric_families_is_identity():
    for fam in (Standard(), Fluctuation(), AsymmetricScaling(0.7)):
        assert parity_transform(fam) is fam
    p = parity_transform(Asymmetric(2.0))
    assert isinstance(p, Parity)
    assert parity_transform(p) == Asymmetric(2.0)


@given(st.floats(1e-6, 0.999))
def test_parity_breaks_asymmetric_but_not_symmetric(eta):
    t = 1 + eta
    asym, rev = Asymmetric(1.0), parity_transform(Asymmetric(1.0))
    assert asym(t) == 1 + eta
    assert rev(t) == pytest.approx(1 / (1 - eta), rel=1e-12)
    assert asym(t) != rev(t)
    for fam in (Standard(), Fluctuation()):
        rev = parity_transform(fam)
        assert rev(t) == fam(t) and rev(2 - t) == fam(2 - t)


@pytest.mark.parametrize("delta", [1e-1, 1e-2, 1e-3, 1e-4])
def test_boundedness_split(delta):
    grid = [i / 1000 * (1 - delta) for i in range(1, 1001)]
    f, fp = Asymmetric(1.0), parity_transform(Asymmetric(1.0))
    assert max(abs(f(1 + e)) for e in grid) <= 2.0
    assert max(abs(f(1 - e)) for e in grid) <= 1.0
    assert fp(1 + (1 - delta)) >= 1 / delta * (1 - 1e-9)


# -- infinite product -----------------------------------------------------------


def test_product_factor_examples():
    assert product_factors(0.5, 3) == [1.5, 1.25, 1.0625]
    assert partial_product(0.5, 3) == 1.9921875
    assert product_factors(0.3, 1) == [1.3]
    assert abs(partial_product(0.5, 5) - 2) / 2 <= 0.5**32
    with pytest.raises(DomainError):
        product_factors(1.0, 3)
    with pytest.raises(DomainError):
        product_factors(0.0, 3)


@given(st.floats(1e-9, 0.9), st.integers(1, 20))
def test_telescoping(eta, depth):
    ref = (1 - eta ** (2**depth)) / (1 - eta)
    assert abs(partial_product(eta, depth) - ref) <= 8 * 2**-52 * ref


@given(st.floats(0.0, 0.999), st.integers(1, 30))
def test_exact_product_left_branch_closed_form(eta, depth):
    closed = (1 - eta) / (1 - eta ** (2 ** (depth + 1)))
    assert ExactProduct(depth)(1 - eta) == pytest.approx(closed, rel=1e-13)


@pytest.mark.parametrize("eta", [0.05, 0.3, 0.7, 0.95])
def test_exact_product_converges_monotonically_to_standard(eta):
    vals = [ExactProduct(d)(1 - eta) for d in range(1, 25)]
    assert all(a >= b for a, b in zip(vals, vals[1:]))
    assert vals[-1] == pytest.approx(1 - eta, rel=1e-12)
    assert ExactProduct(12)(1 + eta) == 1 + eta


def _residual_closed_form(eta, depth):
    # f = (1 - x)/(1 - x**N), x = eta**2, s = 1 - x, N = 2**depth:
    # s f'/f - 1 = -s N x**(N-1) / (1 - x**N)
    x, n = eta * eta, 2**depth
    return (1 - x) * n * x ** (n - 1) / (1 - x**n)


@pytest.mark.parametrize("eta", [0.01, 0.1, 0.3, 0.49])
@pytest.mark.parametrize("depth", [1, 2, 3, 4, 6])
def test_self_similar_residual_matches_telescoped_oracle(eta, depth):
    expected = _residual_closed_form(eta, depth)
    assert self_similar_residual(eta, depth) == pytest.approx(expected, rel=1e-9, abs=1e-15)


def test_self_similar_residual_examples():
    assert self_similar_residual(0.1, 12) < 1e-8
    assert self_similar_residual(1e-6, 1) < 1e-11
    assert self_similar_residual(1e-6, 1) < self_similar_residual(1e-3, 1) < self_similar_residual(0.1, 1)
    with pytest.raises(DomainError):
        self_similar_residual(0.5, 3)


@given(st.floats(1e-4, 0.499), st.integers(1, 30), st.integers(1, 30))
def test_self_similar_residual_monotone_in_depth(eta, d1, d2):
    lo, hi = sorted((d1, d2))
    # below machine epsilon the residual is summation roundoff
    assert self_similar_residual(eta, hi) <= self_similar_residual(eta, lo) + 2**-52


# -- generalized solution ---------------------------------------------------------


def test_generalized_depth_zero_is_standard_with_shifted_constant():
    for r in (-1, 1):
        p = GeneralizedParams(k=0.01, k0=2.0, r=r, depth=0)
        for t in (-3.0, 0.0, 0.5, 2.0):
            assert eval_generalized_T(t, p) == pytest.approx(t + r * 0.01, abs=1e-15)


@pytest.mark.parametrize("family", [Standard(), Fluctuation(), Asymmetric(1.0), ExactProduct(4)])
@pytest.mark.parametrize("depth", [0, 1, 3])
def test_generalized_k_zero_is_identity(family, depth):
    p = GeneralizedParams(k=0.0, depth=depth, family=family)
    for t in (0.7, 1.0, 1.4):
        assert eval_generalized_T(t, p) == t


def test_generalized_one_level_standard():
    p = GeneralizedParams(k=1e-3, k0=1.0, r=1, depth=1, family=Standard())
    assert eval_generalized_T(1.0, p) == 1.001


def test_generalized_standard_family_at_any_depth():
    for depth in range(6):
        p = GeneralizedParams(k=1e-3, depth=depth, r=-1)
        assert eval_generalized_T(1.25, p) == pytest.approx(1.25 - 1e-3, rel=1e-15)


def test_generalized_asymmetric_one_level_closed_form():
    # phi(t1) = t1 * tau(1/t1); for t1 > 1, 1/t1 < 1 so tau = 1/(2 - 1/t1)
    p = GeneralizedParams(k=1e-3, k0=1.0, depth=1, family=Asymmetric(1.0))
    t1 = 1.3
    assert phi(t1, Asymmetric(1.0), 1) == pytest.approx(t1**2 / (2 * t1 - 1), rel=1e-15)
    assert eval_generalized_T(t1, p) == pytest.approx(t1 + 1e-3 * t1**2 / (2 * t1 - 1), rel=1e-15)


def test_generalized_is_singular_at_zero():
    with pytest.raises(SingularityError):
        eval_generalized_T(0.0, GeneralizedParams(depth=1))
    assert eval_generalized_T(0.0, GeneralizedParams(k=1e-3, depth=0)) == 1e-3


def test_generalized_params_validation():
    with pytest.raises(ValueError):
        GeneralizedParams(k0=0.0)
    with pytest.raises(ValueError):
        GeneralizedParams(r=0)
    with pytest.raises(ValueError):
        GeneralizedParams(depth=-1)


def test_rational_inputs_stay_exact():
    from fractions import Fraction

    t = 1 + Fraction(99, 100)
    assert parity_transform(Asymmetric(1))(t) == 100
    assert Fluctuation()(Fraction(5, 4)) == Fraction(4, 3)
    assert Asymmetric(2.0)(Fraction(9, 10)) == Fraction(100, 121)
