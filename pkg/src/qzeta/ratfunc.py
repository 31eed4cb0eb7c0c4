"""Normalized rational functions over an exact coefficient field.

The canonical form is coprime numerator/denominator with a monic
denominator, which makes equality a structural comparison.  Equality is
nevertheless decided by cross-multiplication (num1*den2 == num2*den1): the
two notions coincide on canonical values, and cross-multiplication stays
robust for values assembled through the factored-denominator fast path.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction

from .arith import divisors
from .fields import CycRat
from .poly import Poly, cyclotomic, poly_gcd


class PoleError(ZeroDivisionError):
    """Evaluation at a genuine pole of the reduced form."""


class RatFunc:
    """num / den with gcd(num, den) = 1 and den monic; zero is 0/1."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, _canonical: bool = False):
        if not isinstance(num, Poly):
            num = Poly([num]) if not isinstance(num, (list, tuple)) else Poly(num)
        if den is None:
            den = Poly.one(num.var)
        elif not isinstance(den, Poly):
            den = Poly([den]) if not isinstance(den, (list, tuple)) else Poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not _canonical:
            if num.is_zero():
                den = Poly.one(num.var)
            else:
                g = poly_gcd(num, den)
                if g.degree > 0:
                    num = num.exact_div(g)
                    den = den.exact_div(g)
                if not den.is_monic():
                    from .poly import _coeff_inv

                    inv = _coeff_inv(den.leading())
                    num = num.scale(inv)
                    den = den.scale(inv)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, var: str = "q") -> "RatFunc":
        return cls(Poly.zero(var), Poly.one(var), _canonical=True)

    @classmethod
    def one(cls, var: str = "q") -> "RatFunc":
        return cls(Poly.one(var), Poly.one(var), _canonical=True)

    @classmethod
    def constant(cls, c, var: str = "q") -> "RatFunc":
        return cls(Poly([c], var), Poly.one(var), _canonical=True)

    @classmethod
    def from_poly(cls, p: Poly) -> "RatFunc":
        return cls(p, Poly.one(p.var), _canonical=True)

    @classmethod
    def variable(cls, var: str = "q") -> "RatFunc":
        return cls(Poly.variable(var), Poly.one(var), _canonical=True)

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    @property
    def var(self) -> str:
        return self.num.var

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc.from_poly(other)
        if isinstance(other, (int, Fraction, CycRat)):
            return RatFunc.constant(other, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        # common factor of the denominators; any common factor of the
        # resulting numerator and denominator must divide it
        g = poly_gcd(self.den, other.den)
        if g.degree == 0:
            num = self.num * other.den + other.num * self.den
            if num.is_zero():
                return RatFunc.zero(self.var)
            return RatFunc(num, self.den * other.den, _canonical=True)
        da = self.den.exact_div(g)
        db = other.den.exact_div(g)
        num = self.num * db + other.num * da
        if num.is_zero():
            return RatFunc.zero(self.var)
        den = self.den * db
        h = poly_gcd(num, g)
        if h.degree > 0:
            num = num.exact_div(h)
            den = den.exact_div(h)
        return RatFunc(num, den, _canonical=True)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RatFunc.zero(self.var)
        # cancel across the fraction before multiplying out
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        n1 = self.num if g1.degree == 0 else self.num.exact_div(g1)
        d2 = other.den if g1.degree == 0 else other.den.exact_div(g1)
        n2 = other.num if g2.degree == 0 else other.num.exact_div(g2)
        d1 = self.den if g2.degree == 0 else self.den.exact_div(g2)
        num = n1 * n2
        den = d1 * d2
        if not den.is_monic():
            from .poly import _coeff_inv

            inv = _coeff_inv(den.leading())
            num = num.scale(inv)
            den = den.scale(inv)
        return RatFunc(num, den, _canonical=True)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int) -> "RatFunc":
        if n < 0:
            return self.inverse() ** (-n)
        result = RatFunc.one(self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __bool__(self):
        return not self.is_zero()

    # -- evaluation -----------------------------------------------------------

    def __call__(self, p):
        """Evaluate at a point of the coefficient field (or complex/mpc).

        Raises PoleError when the reduced denominator vanishes at p: on the
        canonical form this is a genuine pole, not an unreduced common zero.
        """
        dv = self.den(p)
        if _value_is_zero(dv):
            raise PoleError(f"pole at {p}")
        nv = self.num(p)
        if isinstance(nv, int):
            nv = Fraction(nv)
        if isinstance(dv, int):
            dv = Fraction(dv)
        return nv / dv

    # -- comparisons and rendering ---------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.num == other.num and self.den == other.den:
            return True
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFunc('{self}')"

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def to_json(self) -> dict:
        return {"num": self.num.json_coeffs(), "den": self.den.json_coeffs()}


def _value_is_zero(v) -> bool:
    if isinstance(v, (int, Fraction)):
        return v == 0
    if isinstance(v, (float, complex)):
        return v == 0
    return not v


def ratfunc_normalize(num: Poly, den: Poly) -> RatFunc:
    """Canonical reduced form of num/den; idempotent on canonical input."""
    return RatFunc(num, den)


def eval_ratfunc(f: RatFunc, p):
    """Evaluate the reduced form of f at p; PoleError at a true pole."""
    return f(p)


class CycloFrac:
    """Fraction whose denominator is a product of cyclotomic polynomials.

    Internal workhorse for the operator and Bernoulli-fraction pipelines,
    where every denominator that ever appears is a product of factors
    (v^e - 1) = prod_{d | e} Phi_d(v).  Keeping the denominator as a
    multiset of cyclotomic indices makes common denominators and final
    reduction (trial division by each Phi_d) cheap, with no general gcd in
    the hot path.  Mutable and not thread-shared; converted to RatFunc at
    the end of a computation.
    """

    __slots__ = ("num", "phi")

    def __init__(self, num: Poly, phi: Counter | None = None):
        self.num = num if isinstance(num, Poly) else Poly([num])
        self.phi = Counter(phi) if phi else Counter()

    @classmethod
    def zero(cls, var: str = "q") -> "CycloFrac":
        return cls(Poly.zero(var))

    @classmethod
    def from_scalar(cls, c, var: str = "q") -> "CycloFrac":
        return cls(Poly([c], var))

    def copy(self) -> "CycloFrac":
        return CycloFrac(self.num, Counter(self.phi))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def times_poly(self, p: Poly) -> "CycloFrac":
        return CycloFrac(self.num * p, Counter(self.phi))

    def times_scalar(self, c) -> "CycloFrac":
        return CycloFrac(self.num.scale(c), Counter(self.phi))

    def shift(self, k: int) -> "CycloFrac":
        return CycloFrac(self.num.shift(k), Counter(self.phi))

    def div_one_minus(self, e: int) -> "CycloFrac":
        """Divide by (1 - v^e) = -prod_{d | e} Phi_d(v)."""
        phi = Counter(self.phi)
        for d in divisors(e):
            phi[d] += 1
        return CycloFrac(-self.num, phi)

    def div_pow_one_minus_var_pow(self, b: int, m: int) -> "CycloFrac":
        """Divide by (v^b - 1)^m."""
        if m == 0:
            return self.copy()
        phi = Counter(self.phi)
        for d in divisors(b):
            phi[d] += m
        return CycloFrac(self.num, phi)

    def __add__(self, other: "CycloFrac") -> "CycloFrac":
        if not isinstance(other, CycloFrac):
            return NotImplemented
        if self.is_zero():
            return other.copy()
        if other.is_zero():
            return self.copy()
        union = Counter(self.phi)
        for d, m in other.phi.items():
            union[d] = max(union[d], m)
        a = self.num * _phi_product(union - self.phi, self.num.var)
        b = other.num * _phi_product(union - other.phi, other.num.var)
        return CycloFrac(a + b, union)

    def __neg__(self) -> "CycloFrac":
        return CycloFrac(-self.num, Counter(self.phi))

    def __sub__(self, other: "CycloFrac") -> "CycloFrac":
        return self + (-other)

    def reduce(self) -> "CycloFrac":
        """Cancel every cyclotomic factor that divides the numerator."""
        if self.num.is_zero():
            return CycloFrac(self.num)
        num = self.num
        phi = Counter()
        for d in sorted(self.phi):
            mult = self.phi[d]
            phi_d = cyclotomic(d, num.var)
            while mult > 0:
                quo, rem = divmod(num, phi_d)
                if not rem.is_zero():
                    break
                num = quo
                mult -= 1
            if mult:
                phi[d] = mult
        return CycloFrac(num, phi)

    def to_ratfunc(self) -> RatFunc:
        red = self.reduce()
        den = _phi_product(red.phi, red.num.var)
        # cyclotomic products are monic; over Q the trial division above is
        # a complete gcd, so the pair is canonical as constructed
        return RatFunc(red.num, den, _canonical=red.num.field_key() == "rat")

    def __repr__(self):
        return f"CycloFrac({self.num!r}, {dict(self.phi)})"


def _phi_product(phi: Counter, var: str) -> Poly:
    out = Poly.one(var)
    for d in sorted(phi):
        m = phi[d]
        if m > 0:
            out = out * cyclotomic(d, var) ** m
    return out
