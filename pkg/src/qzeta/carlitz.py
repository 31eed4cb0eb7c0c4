"""Bernoulli-Carlitz fractions and their Hurwitz / Dirichlet-character
generalizations, with machine verification of the identities relating
them to the q-zeta operators.

The fractions beta_n in Q(q) are defined by Carlitz's recurrence
q(q beta + 1)^n - beta_n = [n = 1] under the symbolic convention
beta^i = beta_i; rearranged, each step is a division by q^(n+1) - 1,
exact in Q(q).  Their value at q = 1 is the classical Bernoulli number
B_n (convention B_1 = -1/2), which serves as an independent oracle.
"""
from __future__ import annotations

import threading
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .arith import divisors, phi_factor_indices
from .characters import DirichletCharacter
from .operators import (
    CheckReport,
    DomainError,
    OperatorSpec,
    apply_delta,
    apply_geometric,
    apply_series,
)
from .poly import Poly, cyclotomic
from .quantum import quantum_value
from .ratfunc import CycloFrac, RatFunc
from .series import series_from_ratfunc

_EXACT_BACKENDS = {"geometric": apply_geometric, "delta": apply_delta}


@dataclass(frozen=True)
class BetaFraction:
    """beta_n as a reduced rational function of q."""

    n: int
    value: RatFunc

    def factored_denominator(self) -> list[tuple[int, int]]:
        """The reduced denominator as cyclotomic factors (index, multiplicity),
        found by trial division by Phi_k for k <= n + 1."""
        den = self.value.den
        out = []
        for k in range(1, self.n + 2):
            mult = 0
            phi_k = cyclotomic(k)
            while True:
                quo, rem = divmod(den, phi_k)
                if not rem.is_zero():
                    break
                den = quo
                mult += 1
            if mult:
                out.append((k, mult))
        if not den.is_one():
            raise ArithmeticError(
                f"denominator of beta_{self.n} has a non-cyclotomic factor {den}"
            )
        return out

    def __str__(self):
        return f"beta_{self.n} = {self.value}"


@dataclass(frozen=True)
class BetaPolynomial:
    """The q-Bernoulli polynomial beta_n(x), a rational function in
    v = q^(1/branch) for x = a/branch."""

    n: int
    x: Fraction
    branch: int
    value: RatFunc

    def __str__(self):
        return f"beta_{self.n}({self.x}) = {self.value}"


@dataclass(frozen=True)
class BetaChi:
    """The character analogue beta_{chi,n}; coefficients lie in Q(zeta_m)
    for m the order of chi, hence in Q for real characters."""

    chi: DirichletCharacter
    n: int
    value: RatFunc

    def __str__(self):
        return f"beta_(chi mod {self.chi.modulus} #{self.chi.index}),{self.n} = {self.value}"


# ---------------------------------------------------------------------------
# the beta table
# ---------------------------------------------------------------------------

_table_lock = threading.Lock()
_beta_cf: list[CycloFrac] = []  # reduced, numerator + cyclotomic denominator
_beta_rf: list[RatFunc] = []


def _extend_beta_table(n: int) -> None:
    with _table_lock:
        if not _beta_cf:
            one = CycloFrac.from_scalar(1)
            _beta_cf.append(one)
            _beta_rf.append(RatFunc.one())
        while len(_beta_cf) <= n:
            k = len(_beta_cf)
            acc = _beta_sum(k, upto=k - 1)
            rhs = -acc.shift(1)  # -q * sum
            if k == 1:
                rhs = rhs + CycloFrac.from_scalar(1)
            bk = rhs.div_pow_one_minus_var_pow(k + 1, 1).reduce()
            _beta_cf.append(bk)
            _beta_rf.append(bk.to_ratfunc())


def _beta_sum(n: int, upto: int) -> CycloFrac:
    """sum_{i <= upto} C(n, i) q^i beta_i over one common cyclotomic denominator."""
    union: Counter = Counter()
    for i in range(upto + 1):
        for d, m in _beta_cf[i].phi.items():
            union[d] = max(union[d], m)
    num = Poly.zero()
    for i in range(upto + 1):
        cf = _beta_cf[i]
        scale = Poly([comb(n, i)])
        missing = union - cf.phi
        for d in sorted(missing):
            scale = scale * cyclotomic(d) ** missing[d]
        num = num + cf.num.shift(i) * scale
    return CycloFrac(num, union)


def beta(n: int) -> BetaFraction:
    """The n-th Bernoulli-Carlitz fraction.

    >>> beta(1).value
    RatFunc('(-1) / (1 + q)')
    """
    if n < 0:
        raise ValueError("beta index must be >= 0")
    _extend_beta_table(n)
    return BetaFraction(n, _beta_rf[n])


_bern_lock = threading.Lock()
_bern: list[Fraction] = [Fraction(1)]


def bernoulli_number(n: int) -> Fraction:
    """Classical Bernoulli number B_n via sum_{i<=n} C(n+1, i) B_i = 0.

    The convention is B_1 = -1/2, matching the value of beta_1 at q = 1.
    This recurrence is independent of the Carlitz recurrence and is used
    as the oracle for the q = 1 specialization.
    """
    if n < 0:
        raise ValueError("Bernoulli index must be >= 0")
    with _bern_lock:
        while len(_bern) <= n:
            k = len(_bern)
            acc = sum(comb(k + 1, i) * _bern[i] for i in range(k))
            _bern.append(Fraction(-acc, k + 1))
    return _bern[n]


# ---------------------------------------------------------------------------
# generating-function functional equation
# ---------------------------------------------------------------------------


def genfun_check(order: int) -> CheckReport:
    """Check B(t) = q e^t B(qt) + 1 - q - t coefficient-wise through t^order.

    Both sides are exponential series (coefficients of t^n / n!); the
    coefficient of t^n/n! on the right is q sum_i C(n,i) q^i beta_i plus
    (1-q) at n = 0 and -1 at n = 1.  All differences must vanish exactly.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    _extend_beta_table(order)
    items = []
    for n in range(order + 1):
        rhs = _beta_sum(n, upto=n).shift(1)  # q * sum_{i<=n} C(n,i) q^i beta_i
        if n == 0:
            rhs = rhs + CycloFrac(Poly([1, -1]))  # + (1 - q)
        if n == 1:
            rhs = rhs + CycloFrac.from_scalar(-1)
        diff = (_beta_cf[n] + (-rhs)).reduce()
        items.append((f"t^{n}", diff.is_zero()))
    passed = all(ok for _, ok in items)
    return CheckReport(f"generating-function equation through t^{order}", passed, items)


# ---------------------------------------------------------------------------
# Theorem: beta_n = zeta_q(1-n) (q - (n+1) q^2)
# ---------------------------------------------------------------------------


def _theorem_operand(n: int) -> Poly:
    return Poly([0, 1, -(n + 1)])


def verify_theorem(n: int, backend: str = "geometric", series_order: int = 60) -> CheckReport:
    """Check beta_n = zeta_q(1-n)(q - (n+1) q^2) for n >= 2 with one backend.

    The exact backends (geometric, delta) compare rational functions;
    the series backend compares expansions through ``series_order``.
    """
    if n < 2:
        raise DomainError("the Euler-type relation is stated for n >= 2")
    P = _theorem_operand(n)
    spec = OperatorSpec.riemann(1 - n)
    lhs = beta(n).value
    if backend in _EXACT_BACKENDS:
        rhs = _EXACT_BACKENDS[backend](spec, P).value
        ok = lhs == rhs
    elif backend == "series":
        rhs_series = apply_series(spec, P, series_order)
        ok = series_from_ratfunc(lhs, series_order) == rhs_series
    else:
        raise ValueError(f"unknown backend {backend!r}")
    return CheckReport(f"beta_{n} = zeta_q({1 - n})(q - {n + 1}q^2) [{backend}]", ok)


# ---------------------------------------------------------------------------
# q-Bernoulli polynomials and the Hurwitz relation
# ---------------------------------------------------------------------------


def _beta_poly_cf(n: int, x: Fraction) -> CycloFrac:
    """(q^x beta + [x])^n = sum_i C(n,i) q^(xi) [x]^(n-i) beta_i, assembled
    over one cyclotomic denominator on branch b = denominator of x."""
    a, b = x.numerator, x.denominator
    _extend_beta_table(n)
    # common denominator: (v^b - 1)^n times every rebased beta_i denominator
    union: Counter = Counter()
    rebased_phi: list[Counter] = []
    for i in range(n + 1):
        cnt: Counter = Counter()
        for d, m in _beta_cf[i].phi.items():
            for dd in phi_factor_indices(d, b):
                cnt[dd] += m
        rebased_phi.append(cnt)
        for d, m in cnt.items():
            union[d] = max(union[d], m)
    for d in divisors(b):
        union[d] += n
    bx_num = Poly([-1] + [0] * (a - 1) + [1], "v" if b > 1 else "q")  # v^a - 1
    var = bx_num.var
    num = Poly.zero(var)
    for i in range(n + 1):
        # C(n,i) * v^(a i) * (v^a - 1)^(n-i) * beta_i(v^b), over the union
        term = Poly(_beta_cf[i].num.scale_exponents(b).coeffs, var).shift(a * i)
        term = term.scale(comb(n, i))
        term = term * bx_num ** (n - i)
        missing = Counter(union)
        for d, m in rebased_phi[i].items():
            missing[d] -= m
        for d in divisors(b):
            missing[d] -= n - i
        for d in sorted(missing):
            if missing[d]:
                term = term * cyclotomic(d, var) ** missing[d]
        num = num + term
    return CycloFrac(num, union)


def beta_poly(n: int, x) -> BetaPolynomial:
    """The q-Bernoulli polynomial beta_n(x) for rational x > 0, exact on
    branch b = denominator of x; at integral arguments it reduces to a
    rational function of q alone.

    >>> beta_poly(0, Fraction(1, 2)).value
    RatFunc('1')
    """
    x = Fraction(x)
    if x <= 0:
        raise DomainError("beta_poly requires x > 0")
    if n < 0:
        raise ValueError("index must be >= 0")
    cf = _beta_poly_cf(n, x)
    return BetaPolynomial(n, x, x.denominator, cf.reduce().to_ratfunc())


def verify_hurwitz(
    n: int, x, backend: str = "geometric", series_order: int = 40
) -> CheckReport:
    """Check q^x beta_n(x) = zeta_q(1-n, x)(q - (n+1) q^2) exactly.

    The relation is stated for n >= 0, but n = 0 needs s = 1 > 0, which has
    no exact rational evaluation; that case is reported as outside exact
    mode rather than silently skipped.
    """
    x = Fraction(x)
    if x <= 0:
        raise DomainError("x must be a positive rational")
    if n < 0:
        raise ValueError("index must be >= 0")
    name = f"q^x beta_{n}({x}) = zeta_q({1 - n}, {x})(q - {n + 1}q^2) [{backend}]"
    if n == 0:
        return CheckReport(
            name, None, note="s = 1 - n = 1 > 0: series/numeric mode only"
        )
    a = x.numerator
    lhs = RatFunc.from_poly(Poly.monomial(a, 1, "v" if x.denominator > 1 else "q")) * beta_poly(n, x).value
    P = _theorem_operand(n)
    spec = OperatorSpec.hurwitz(1 - n, x)
    if backend in _EXACT_BACKENDS:
        rhs = _EXACT_BACKENDS[backend](spec, P).value
        ok = lhs == rhs
    elif backend == "series":
        rhs_series = apply_series(spec, P, series_order)
        ok = series_from_ratfunc(lhs, series_order, x.denominator) == rhs_series
    else:
        raise ValueError(f"unknown backend {backend!r}")
    return CheckReport(name, ok)


# ---------------------------------------------------------------------------
# character analogues
# ---------------------------------------------------------------------------


def beta_chi(chi: DirichletCharacter, n: int) -> BetaChi:
    """beta_{chi,n} = sum_{0<=j<N} chi(j) (F_N/[N]^(1-n)) (q^(j/N) beta_n(j/N)).

    Terms with gcd(j, N) > 1 vanish with chi(j); for the others the inner
    value lives on branch N, F_N turns it into a rational function of q
    (q^(j/N) -> q^j, inner coefficients q -> q^N), and the result is
    weighted by [N]^(n-1) and chi(j).
    """
    if chi.is_trivial():
        raise DomainError("beta_chi assumes a non-trivial character")
    if n < 0:
        raise ValueError("index must be >= 0")
    N = chi.modulus
    bracket_num = quantum_value(N, 1).num  # [N] as a polynomial in q
    total = CycloFrac.zero()
    for j in range(1, N):
        cj = _scalar_value(chi, j)
        if not cj:
            continue
        x = Fraction(j, N)
        cf = _beta_poly_cf(n, x)  # on branch b' = denominator of j/N
        k1 = N // x.denominator
        # rebase to branch N, multiply by q^(j/N) = v^j, then F_N relabels
        # the branch-N representation as a polynomial in q
        num = cf.num.scale_exponents(k1).shift(j) if k1 > 1 else cf.num.shift(j)
        num = Poly(num.coeffs, "q")
        phi: Counter = Counter()
        for d, m in cf.phi.items():
            if k1 > 1:
                for dd in phi_factor_indices(d, k1):
                    phi[dd] += m
            else:
                phi[d] += m
        term = CycloFrac(num.scale(cj), phi)
        if n >= 1:
            term = term.times_poly(bracket_num ** (n - 1))
        else:
            # [N]^(n-1) = 1/[N]; [N] is the product of Phi_d over d | N, d > 1
            for d in divisors(N):
                if d > 1:
                    term.phi[d] += 1
        total = total + term
    return BetaChi(chi, n, total.reduce().to_ratfunc())


def _scalar_value(chi: DirichletCharacter, j: int):
    v = chi(j)
    return v.rational() if chi.is_real() else v


def verify_chi(chi: DirichletCharacter, n: int, backend: str = "geometric") -> CheckReport:
    """Check beta_{chi,n} = L_q(chi, 1-n)(q - (n+1) q^2) exactly (n >= 1).

    Like the Hurwitz relation, n = 0 needs s = 1 and is reported as
    outside exact mode.
    """
    if chi.is_trivial():
        raise DomainError("verify_chi assumes a non-trivial character")
    name = (
        f"beta_(chi mod {chi.modulus} #{chi.index}),{n} = "
        f"L_q(chi, {1 - n})(q - {n + 1}q^2) [{backend}]"
    )
    if n == 0:
        return CheckReport(
            name, None, note="s = 1 - n = 1 > 0: series/numeric mode only"
        )
    lhs = beta_chi(chi, n).value
    P = _theorem_operand(n)
    spec = OperatorSpec.dirichlet_l(1 - n, chi)
    if backend in _EXACT_BACKENDS:
        rhs = _EXACT_BACKENDS[backend](spec, P).value
        ok = lhs == rhs
    elif backend == "series":
        rhs_series = apply_series(spec, P, 40)
        ok = series_from_ratfunc(lhs, 40) == rhs_series
    else:
        raise ValueError(f"unknown backend {backend!r}")
    return CheckReport(name, ok)
