"""The three exact operator backends, the Euler product, and numeric mode."""
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qzeta.characters import character, characters
from qzeta.operators import (
    ConvergenceError,
    DomainError,
    OperatorSpec,
    apply_delta,
    apply_geometric,
    apply_series,
    check_chi_decomposition,
    check_commute,
    check_distribution,
    euler_product_apply,
    numeric_apply,
)
from qzeta.poly import Poly, cyclotomic
from qzeta.ratfunc import RatFunc
from qzeta.series import TruncSeries, series_from_ratfunc

Q = Poly.variable()


def test_spec_validation():
    with pytest.raises(DomainError):
        OperatorSpec.riemann(1)
    with pytest.raises(DomainError):
        OperatorSpec.hurwitz(0, Fraction(-1, 2))
    assert OperatorSpec.hurwitz(0, Fraction(1, 2)).branch == 2


def test_operand_must_lack_constant_term():
    with pytest.raises(DomainError):
        apply_geometric(OperatorSpec.riemann(0), Poly([1, 1]))


def test_geometric_riemann_s0():
    r = apply_geometric(OperatorSpec.riemann(0), Q)
    assert r.value == RatFunc(Poly([0, 1]), Poly([1, -1]))
    assert r.backend == "geometric" and r.branch == 1


def test_geometric_euler_value():
    # the q-analogue of zeta(-1) data: beta_2 = q / (Phi_2 Phi_3)
    r = apply_geometric(OperatorSpec.riemann(-1), Poly([0, 1, -3]))
    assert r.value == RatFunc(Poly([0, 1]), cyclotomic(2) * cyclotomic(3))


def test_linearity_zero():
    assert apply_geometric(OperatorSpec.riemann(-2), Poly.zero()).value.is_zero()


def test_delta_matches_hand_expansion():
    r = apply_delta(OperatorSpec.riemann(-1), Q)
    assert r.value == RatFunc(Poly([0, 1]), Poly([1, -1]) * Poly([1, 0, -1]))


def test_delta_s0_monomial():
    r = apply_delta(OperatorSpec.riemann(0), Poly([0, 0, 1]))
    assert r.value == RatFunc(Poly([0, 0, 1]), Poly([1, 0, -1]))


def test_delta_cross_backend():
    r = apply_delta(OperatorSpec.riemann(-1), Poly([0, 1, -3]))
    assert r.value == RatFunc(Poly([0, 1]), cyclotomic(2) * cyclotomic(3))


def test_series_examples():
    assert apply_series(OperatorSpec.riemann(0), Q, 5) == TruncSeries([0, 1, 1, 1, 1, 1])
    assert apply_series(OperatorSpec.riemann(-1), Q, 4) == TruncSeries([0, 1, 1, 2, 2])
    s = apply_series(OperatorSpec.hurwitz(0, Fraction(1, 2)), Q, 5)
    assert s.branch == 2
    assert s == TruncSeries([0, 1, 0, 1, 0, 1], branch=2)


@pytest.mark.parametrize("s", [0, -1, -2, -3, -4])
@pytest.mark.parametrize("P", [Poly([0, 1]), Poly([0, 0, 1]), Poly([0, 0, 0, 1])])
def test_backend_agreement(s, P):
    spec = OperatorSpec.riemann(s)
    g = apply_geometric(spec, P).value
    d = apply_delta(spec, P).value
    assert g == d
    assert series_from_ratfunc(g, 60) == apply_series(spec, P, 60)


@pytest.mark.parametrize("kind", ["hurwitz", "dirichlet"])
@pytest.mark.parametrize("s", [0, -1, -2])
def test_backend_agreement_other_kinds(kind, s):
    if kind == "hurwitz":
        spec = OperatorSpec.hurwitz(s, Fraction(1, 3))
    else:
        spec = OperatorSpec.dirichlet_l(s, character(5, 1))
    for P in (Poly([0, 1]), Poly([0, 0, 1])):
        g = apply_geometric(spec, P).value
        d = apply_delta(spec, P).value
        assert g == d
        assert series_from_ratfunc(g, 30, spec.branch) == apply_series(spec, P, 30)


@given(
    a=st.integers(min_value=-4, max_value=4),
    b=st.integers(min_value=-4, max_value=4),
    s=st.integers(min_value=-3, max_value=0),
)
def test_linearity(a, b, s):
    spec = OperatorSpec.riemann(s)
    P, R = Poly([0, 1]), Poly([0, 0, 1])
    combined = apply_geometric(spec, P.scale(a) + R.scale(b)).value
    split = apply_geometric(spec, P).value * a + apply_geometric(spec, R).value * b
    assert combined == split


def test_values_vanish_at_zero_with_circle_poles():
    from qzeta.roots import find_roots

    for s in (0, -1, -2, -3):
        for spec in (
            OperatorSpec.riemann(s),
            OperatorSpec.dirichlet_l(s, character(4, 1)),
        ):
            v = apply_geometric(spec, Q).value
            assert v(0) == 0
            if v.den.degree > 0:
                assert all(
                    abs(abs(z) - 1) <= 1e-8 for z in find_roots(v.den, 1e-10)
                )


# -- Euler product -----------------------------------------------------------


def test_euler_product_empty():
    assert euler_product_apply(0, Q, 1, 5) == TruncSeries([0, 1], 5)


def test_euler_product_3_smooth():
    got = euler_product_apply(0, Q, 3, 10)
    coeffs = [0] * 11
    for n in (1, 2, 3, 4, 6, 8, 9):
        coeffs[n] = 1
    assert got == TruncSeries(coeffs, 10)


def test_euler_product_all_small_indices():
    got = euler_product_apply(0, Q, 7, 7)
    assert got == TruncSeries([0, 1, 1, 1, 1, 1, 1, 1], 7)


@pytest.mark.parametrize("s", [0, -1, -2])
def test_euler_product_equals_series(s):
    assert euler_product_apply(s, Q, 40, 40) == apply_series(
        OperatorSpec.riemann(s), Q, 40
    )


# -- commutation and distribution ---------------------------------------------


def test_commute_identity_operator():
    assert check_commute(1, 1, 0, 2).passed


def test_commute_hand_case():
    assert check_commute(2, 3, -1, 1).passed
    assert check_commute(3, 2, -1, 1).passed


def test_commute_grid():
    for m in range(1, 7):
        for n in range(1, 7):
            for s in (0, -1, -2, -3):
                assert check_commute(m, n, s, 5).passed, (m, n, s)


def test_distribution_trivial_split():
    assert check_distribution(1, Fraction(1), -2, 1).passed


def test_distribution_hand_case():
    assert check_distribution(2, Fraction(1), 0, 1).passed


def test_distribution_branch_six():
    assert check_distribution(3, Fraction(1, 2), -2, 1).passed


@pytest.mark.parametrize("N", [2, 3, 4])
@pytest.mark.parametrize("x", [Fraction(1), Fraction(1, 2), Fraction(1, 3)])
def test_distribution_grid(N, x):
    for s in (0, -1, -2):
        for r in (1, 2):
            assert check_distribution(N, x, s, r).passed, (N, x, s, r)


@pytest.mark.parametrize("N", [3, 4, 5, 8])
def test_chi_decomposition(N):
    for chi in characters(N):
        if chi.is_trivial():
            continue
        for s in (0, -1, -2):
            for r in (1, 2, 3):
                assert check_chi_decomposition(chi, s, r).passed, (N, chi.index, s, r)


# -- numeric mode -------------------------------------------------------------


def test_numeric_geometric_sum():
    assert abs(numeric_apply(0, 0.5, Q, 1e-12) - 1.0) <= 1e-12


def test_numeric_weighted_sum():
    assert abs(numeric_apply(-1, 0.5, Q, 1e-12) - Fraction(4, 3)) <= 1e-12


def test_numeric_matches_exact_backend():
    for q0 in (0.3, 0.5):
        for s in (0, -1, -2):
            for n in (2, 3):
                P = Poly([0, 1, -(n + 1)])
                exact = apply_geometric(OperatorSpec.riemann(s), P).value
                got = numeric_apply(s, q0, P, 1e-12)
                assert abs(got - complex(exact(q0))) <= 1e-10


def test_numeric_domain_checks():
    with pytest.raises(DomainError):
        numeric_apply(0, 1.2, Q, 1e-10)
    with pytest.raises(DomainError):
        numeric_apply(0, 0.5, Poly([1, 1]), 1e-10)
    with pytest.raises(ConvergenceError):
        numeric_apply(0, 0.99999, Q, 1e-14, max_terms=10)


def test_numeric_complex_s_and_character():
    # smoke: complex s on the principal branch, and a character twist
    v = numeric_apply(0.5 + 1j, 0.4, Q, 1e-10)
    assert isinstance(v, complex)
    chi = character(4, 1)
    got = numeric_apply(-1, 0.3, Q, 1e-12, chi=chi)
    exact = apply_geometric(OperatorSpec.dirichlet_l(-1, chi), Q).value
    assert abs(got - complex(exact(0.3))) <= 1e-10


def test_numeric_hurwitz():
    x = Fraction(1, 2)
    got = numeric_apply(-1, 0.25, Q, 1e-12, x=x)
    exact = apply_geometric(OperatorSpec.hurwitz(-1, x), Q).value
    # exact value is in v = q^(1/2): evaluate at sqrt(0.25)
    assert abs(got - complex(exact(0.5))) <= 1e-10
