"""Canonical rational functions."""
from fractions import Fraction

import pytest
from hypothesis import given

from conftest import ratfuncs
from qzeta.poly import Poly, cyclotomic, poly_gcd
from qzeta.ratfunc import CycloFrac, PoleError, RatFunc, eval_ratfunc, ratfunc_normalize


def test_normalize_cancellation():
    assert ratfunc_normalize(Poly([-1, 0, 1]), Poly([1, 1])) == RatFunc(Poly([-1, 1]))
    assert ratfunc_normalize(Poly([-1, 1]), Poly([-1, 0, 1])) == RatFunc(
        Poly([1]), Poly([1, 1])
    )


def test_normalize_monic_scaling():
    f = ratfunc_normalize(Poly([0, 2]), Poly([2]))
    assert f == RatFunc(Poly([0, 1]))
    assert f.den.is_one()


def test_normalize_idempotent():
    f = ratfunc_normalize(Poly([-1, 0, 1]), Poly([1, 1]))
    g = ratfunc_normalize(f.num, f.den)
    assert g.num == f.num and g.den == f.den


def test_zero_denominator_raises():
    with pytest.raises(ZeroDivisionError):
        RatFunc(Poly([1]), Poly.zero())


def test_eval_matches_bernoulli_oracle():
    # -1/(q+1) at q=1 is -1/2, the first Bernoulli number
    f = RatFunc(Poly([-1]), Poly([1, 1]))
    assert eval_ratfunc(f, 1) == Fraction(-1, 2)


def test_eval_trivial_and_pole():
    assert eval_ratfunc(RatFunc(Poly([0, 1])), 0) == 0
    with pytest.raises(PoleError):
        eval_ratfunc(RatFunc(Poly([1]), Poly([-1, 1])), 1)


def test_pole_distinguished_from_common_zero():
    # (q^2-1)/(q-1) has a removable point at 1: reduced form evaluates fine
    f = RatFunc(Poly([-1, 0, 1]), Poly([-1, 1]))
    assert f(1) == 2


@given(f=ratfuncs(), g=ratfuncs())
def test_add_sub_roundtrip(f, g):
    assert (f + g) - g == f


@given(f=ratfuncs(), g=ratfuncs())
def test_mul_div_roundtrip(f, g):
    if not g.is_zero():
        assert (f * g) / g == f


@given(f=ratfuncs(), g=ratfuncs())
def test_results_are_canonical(f, g):
    for h in (f + g, f * g, f - g):
        if h.is_zero():
            assert h.num.is_zero() and h.den.is_one()
        else:
            assert h.den.is_monic()
            assert poly_gcd(h.num, h.den).degree == 0


@given(f=ratfuncs(), g=ratfuncs())
def test_cross_multiplication_equality_matches_canonical(f, g):
    structurally = f.num == g.num and f.den == g.den
    cross = f.num * g.den == g.num * f.den
    assert (f == g) == cross
    assert structurally == cross  # canonical-form equality coincides


def test_pow_negative():
    f = RatFunc(Poly([0, 1]), Poly([1, 1]))
    assert f**-1 == RatFunc(Poly([1, 1]), Poly([0, 1]))
    assert f**-2 * f**2 == RatFunc.one()


def test_zero_is_zero_over_one():
    f = RatFunc(Poly([0, 1]), Poly([1, 1]))
    z = f - f
    assert z.is_zero() and z.den.is_one()


def test_json():
    f = RatFunc(Poly([0, 1]), Poly([1, 1]))
    assert f.to_json() == {"num": ["0", "1"], "den": ["1", "1"]}


# -- the cyclotomic-denominator helper ---------------------------------------


def test_cyclofrac_geometric_series():
    cf = CycloFrac(Poly([0, 1])).div_one_minus(1)  # q/(1-q)
    assert cf.to_ratfunc() == RatFunc(Poly([0, 1]), Poly([1, -1]))


def test_cyclofrac_reduces_to_canonical():
    # q(1-q)^3 / ((1-q)(1-q^2)(1-q^3)) = q / (Phi_2 Phi_3)
    num = Poly([0, 1]) * Poly([1, -1]) ** 3
    cf = CycloFrac(num).div_one_minus(1).div_one_minus(2).div_one_minus(3)
    assert cf.to_ratfunc() == RatFunc(Poly([0, 1]), cyclotomic(2) * cyclotomic(3))


def test_cyclofrac_addition_takes_lcm():
    a = CycloFrac(Poly([1])).div_one_minus(2)
    b = CycloFrac(Poly([1])).div_one_minus(4)
    c = (a + b).to_ratfunc()
    expect = RatFunc(Poly([1]), Poly([1, 0, -1])) + RatFunc(Poly([1]), Poly([1, 0, 0, 0, -1]))
    assert c == expect
