"""Scalar fields: rationals and cyclotomic elements."""
import random
from fractions import Fraction

import pytest

from qzeta.fields import CycRat, FieldMismatchError, Rat


def test_rat_is_reduced_fraction():
    assert Rat(6, 4) == Fraction(3, 2)
    assert str(Rat(6, 4)) == "3/2"
    assert str(Rat(5)) == "5"
    assert Rat(0, 7) == 0 and Rat(0, 7).denominator == 1


def test_cycrat_basics():
    z = CycRat.zeta_power(4, 1)  # i
    assert z * z == -1
    assert z**4 == 1
    assert CycRat(1, Fraction(2, 3)).rational() == Fraction(2, 3)


def test_inverse_i_is_minus_i():
    z = CycRat.zeta_power(4, 1)
    assert z.inverse() == -z
    assert z * z.inverse() == 1


def test_inverse_one_plus_zeta3():
    e = CycRat(3, [1, 1])
    inv = e.inverse()
    assert inv == -CycRat.zeta_power(3, 1)
    assert e * inv == 1


def test_inverse_rational_embedding():
    e = CycRat(1, Fraction(2, 3))
    assert e.inverse() == Fraction(3, 2)


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        CycRat.zero(5).inverse()


@pytest.mark.parametrize("m", [3, 4, 5, 7, 8, 12])
def test_every_nonzero_element_invertible(m):
    rng = random.Random(m)
    from qzeta.arith import euler_phi

    dim = euler_phi(m)
    for _ in range(25):
        coords = [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(dim)]
        e = CycRat(m, coords)
        if e.is_zero():
            continue
        assert e * e.inverse() == 1


def test_conductor_one_matches_rationals_on_random_expressions():
    # 1000 random arithmetic expressions evaluated both in Q and in Q(zeta_1)
    rng = random.Random(20240817)
    ops = "+-*/"
    for _ in range(1000):
        a = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        b = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        op = ops[rng.randrange(4)]
        if op == "/" and b == 0:
            op = "+"
        ca, cb = CycRat(1, a), CycRat(1, b)
        expect = {"+": a + b, "-": a - b, "*": a * b, "/": a / b if op == "/" else None}[op]
        got = {"+": ca + cb, "-": ca - cb, "*": ca * cb, "/": ca / cb if op == "/" else None}[op]
        assert got == expect


def test_mixed_conductors_reject():
    a = CycRat.zeta_power(4, 1)
    b = CycRat.zeta_power(3, 1)
    with pytest.raises(FieldMismatchError):
        a + b


def test_rational_valued_elements_compare_across_conductors():
    minus_one_in_q_i = CycRat.zeta_power(4, 2)
    assert minus_one_in_q_i == -1
    assert minus_one_in_q_i == CycRat(1, -1)


def test_zeta_power_reduction():
    # zeta_3^2 = -1 - zeta_3 (mod Phi_3)
    z2 = CycRat.zeta_power(3, 2)
    assert z2 == CycRat(3, [-1, -1])


def test_to_complex():
    z = CycRat.zeta_power(4, 1)
    assert abs(z.to_complex() - 1j) < 1e-12


def test_json_value():
    assert CycRat(1, Fraction(3, 2)).json_value() == "3/2"
    assert CycRat.zeta_power(4, 1).json_value() == {
        "conductor": 4,
        "coords": ["0", "1"],
    }
