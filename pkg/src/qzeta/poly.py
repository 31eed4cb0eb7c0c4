"""Dense univariate polynomials over an exact coefficient field.

Coefficients may be Python ints / Fractions (the rational field), CycRat
values, or RatFunc values (used for the two-variable layer).  All
polynomials arising here are dense in practice, so a plain coefficient
list, lowest degree first, is the representation of choice.  The variable
tag is symbolic only: it names the indeterminate for rendering and never
affects arithmetic.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from math import gcd as int_gcd

from .arith import cyclotomic_int_coeffs
from .fields import CycRat, FieldMismatchError


def _is_rational_coeff(c) -> bool:
    return isinstance(c, (int, Fraction))


def _field_key(c):
    """Classify a coefficient: 'rat', ('cyc', m) or 'ratfunc'."""
    if _is_rational_coeff(c):
        return "rat"
    if isinstance(c, CycRat):
        return "rat" if c.m == 1 else ("cyc", c.m)
    from .ratfunc import RatFunc

    if isinstance(c, RatFunc):
        return "ratfunc"
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


class Poly:
    """Immutable dense polynomial; trailing zeros are trimmed on construction.

    >>> Poly([0, 1, -3])           # q - 3q^2
    Poly('q - 3*q^2')
    >>> Poly([1, 1]) * Poly([-1, 1])
    Poly('-1 + q^2')
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs, var: str = "q"):
        if isinstance(coeffs, Poly):
            cs = list(coeffs.coeffs)
            var = coeffs.var
        else:
            cs = list(coeffs)
        for c in cs:
            if isinstance(c, float):
                raise TypeError("float coefficients are not exact; use Fraction")
        while cs and _is_zero_coeff(cs[-1]):
            cs.pop()
        cs = _unify_coeffs(cs)
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, var: str = "q") -> "Poly":
        return cls([], var)

    @classmethod
    def one(cls, var: str = "q") -> "Poly":
        return cls([1], var)

    @classmethod
    def variable(cls, var: str = "q") -> "Poly":
        return cls([0, 1], var)

    @classmethod
    def monomial(cls, k: int, c=1, var: str = "q") -> "Poly":
        if k < 0:
            raise ValueError("monomial exponent must be >= 0")
        return cls([0] * k + [c], var)

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and _coeff_eq_one(self.coeffs[0])

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def constant_term(self):
        return self.coeffs[0] if self.coeffs else 0

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def is_monic(self) -> bool:
        return bool(self.coeffs) and _coeff_eq_one(self.coeffs[-1])

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            if isinstance(other, (int, Fraction, CycRat)) or _is_scalar_like(other):
                return self.scale(other)
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(self.var)
        if all(_is_rational_coeff(c) for c in a) and all(
            _is_rational_coeff(c) for c in b
        ):
            return Poly(_mul_rational(a, b), self.var)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if _is_zero_coeff(x):
                continue
            for j, y in enumerate(b):
                if not _is_zero_coeff(y):
                    out[i + j] = out[i + j] + x * y
        return Poly(out, self.var)

    __rmul__ = __mul__

    def scale(self, c) -> "Poly":
        if _is_zero_coeff(c):
            return Poly.zero(self.var)
        return Poly([c * x for x in self.coeffs], self.var)

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative powers leave the polynomial ring")
        result = Poly.one(self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __divmod__(self, other: "Poly"):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dn = other.degree
        den = other.coeffs
        lead = den[-1]
        lead_is_one = _coeff_eq_one(lead)
        quo = [0] * max(len(rem) - dn, 0)
        top = len(rem) - 1
        while top >= dn:
            c = rem[top] if lead_is_one else _coeff_div(rem[top], lead)
            if not _is_zero_coeff(c):
                k = top - dn
                quo[k] = c
                for j, d in enumerate(den):
                    if not _is_zero_coeff(d):
                        rem[k + j] = rem[k + j] - c * d
            top -= 1
        while rem and _is_zero_coeff(rem[-1]):
            rem.pop()
        return Poly(quo, self.var), Poly(rem, self.var)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "Poly") -> bool:
        if self.is_zero():
            return other.is_zero()
        return divmod(other, self)[1].is_zero()

    def exact_div(self, other: "Poly") -> "Poly":
        quo, rem = divmod(self, other)
        if not rem.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return quo

    # -- transformations ---------------------------------------------------

    def monic(self) -> "Poly":
        """Scale so the leading coefficient is one; monic(0) = 0."""
        if self.is_zero() or self.is_monic():
            return self
        inv = _coeff_inv(self.leading())
        return Poly([c * inv for c in self.coeffs], self.var)

    def map_coeffs(self, f) -> "Poly":
        return Poly([f(c) for c in self.coeffs], self.var)

    def scale_exponents(self, k: int) -> "Poly":
        """Substitute var -> var^k for a positive integer k."""
        if k < 1:
            raise ValueError("exponent scale must be a positive integer")
        if k == 1 or self.is_zero():
            return self
        out = [0] * (self.degree * k + 1)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return Poly(out, self.var)

    def shift(self, k: int) -> "Poly":
        """Multiply by var^k."""
        if k == 0 or self.is_zero():
            return self
        return Poly([0] * k + list(self.coeffs), self.var)

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:], self.var)

    def __call__(self, x):
        """Evaluate by Horner's rule; x may be any ring element, complex, or mpc."""
        result = None
        for c in reversed(self.coeffs):
            result = c if result is None else result * x + c
        if result is None:
            return 0 * x if not isinstance(x, (int, float, complex)) else 0
        return result

    # -- comparisons and rendering ------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            if len(self.coeffs) != len(other.coeffs):
                return False
            return all(a == b for a, b in zip(self.coeffs, other.coeffs))
        if isinstance(other, (int, Fraction, CycRat)):
            if _is_zero_coeff(other):
                return self.is_zero()
            return len(self.coeffs) == 1 and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Poly('{self}')"

    def __str__(self):
        if not self.coeffs:
            return "0"
        return _render_terms(self.coeffs, self.var)

    def json_coeffs(self) -> list:
        """Coefficient array, lowest degree first, values as "p/q" strings."""
        out = []
        for c in self.coeffs:
            if isinstance(c, CycRat):
                out.append(c.json_value())
            else:
                out.append(str(Fraction(c)))
        return out

    # -- internals -----------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction, CycRat)) or _is_scalar_like(other):
            return Poly([other], self.var)
        return NotImplemented

    def field_key(self):
        for c in self.coeffs:
            key = _field_key(c)
            if key != "rat":
                return key
        return "rat"


def _render_terms(coeffs, var: str) -> str:
    parts = []
    for i, c in enumerate(coeffs):
        if _is_zero_coeff(c):
            continue
        term = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        cs = str(c)
        if " " in cs:
            cs = f"({cs})"
        if term and cs == "1":
            cs = ""
        elif term and cs == "-1":
            cs = "-"
        piece = cs + "*" + term if (cs not in ("", "-") and term) else cs + term
        if parts and not piece.startswith("-"):
            parts.append("+ " + piece)
        elif parts:
            parts.append("- " + piece[1:])
        else:
            parts.append(piece)
    return " ".join(parts) if parts else "0"


def _is_scalar_like(c) -> bool:
    from .ratfunc import RatFunc

    return isinstance(c, RatFunc)


def _is_zero_coeff(c) -> bool:
    if isinstance(c, (int, Fraction)):
        return c == 0
    return not c


def _coeff_eq_one(c) -> bool:
    if isinstance(c, (int, Fraction)):
        return c == 1
    if isinstance(c, CycRat):
        return c.is_rational() and c.coords[0] == 1
    return c == 1


def _coeff_inv(c):
    if isinstance(c, int):
        return Fraction(1, c)
    if isinstance(c, Fraction):
        return 1 / c
    if isinstance(c, CycRat):
        return c.inverse()
    return 1 / c


def _coeff_div(a, b):
    if isinstance(b, int):
        b = Fraction(b)
    if isinstance(a, int):
        a = Fraction(a)
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return a / b
    return a * _coeff_inv(b)


def _unify_coeffs(cs: list) -> list:
    """Promote mixed rational/CycRat/RatFunc coefficient lists to one field."""
    target = None
    for c in cs:
        key = _field_key(c)
        if key == "rat":
            continue
        if target is None:
            target = key
        elif target != key:
            raise FieldMismatchError(f"mixed coefficient fields {target} and {key}")
    if target is None:
        return cs
    if target == "ratfunc":
        from .ratfunc import RatFunc

        return [c if isinstance(c, RatFunc) else RatFunc.constant(c) for c in cs]
    m = target[1]
    return [
        c if isinstance(c, CycRat) and c.m == m else CycRat(m, _to_fraction(c))
        for c in cs
    ]


def _to_fraction(c) -> Fraction:
    if isinstance(c, CycRat):
        return c.rational()
    return Fraction(c)


def _mul_rational(a, b):
    """Convolution over Q through cleared integer lists (fast path)."""
    da = 1
    for c in a:
        if isinstance(c, Fraction):
            da = da * c.denominator // int_gcd(da, c.denominator)
    db = 1
    for c in b:
        if isinstance(c, Fraction):
            db = db * c.denominator // int_gcd(db, c.denominator)
    ia = [int(c * da) for c in a]
    ib = [int(c * db) for c in b]
    out = [0] * (len(ia) + len(ib) - 1)
    for i, x in enumerate(ia):
        if x:
            for j, y in enumerate(ib):
                if y:
                    out[i + j] += x * y
    d = da * db
    if d == 1:
        return out
    return [Fraction(c, d) for c in out]


# -- gcd -------------------------------------------------------------------


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor; gcd(0, 0) = 0.

    Over Q the computation runs on primitive integer coefficient lists with
    pseudo-remainders, stripping integer content at every step, which keeps
    coefficient growth flat where naive fraction-field Euclid explodes.
    Other coefficient fields fall back to monic Euclid.
    """
    if not isinstance(a, Poly) or not isinstance(b, Poly):
        raise TypeError("poly_gcd expects Poly arguments")
    ka, kb = a.field_key(), b.field_key()
    if ka != "rat" and kb != "rat" and ka != kb:
        raise FieldMismatchError(f"mixed coefficient fields {ka} and {kb}")
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    if ka == "rat" and kb == "rat":
        return Poly(_gcd_rational(a.coeffs, b.coeffs), a.var)
    # monic Euclid over the field
    f, g = a, b
    while not g.is_zero():
        f, g = g, (f % g)
        if not g.is_zero():
            g = g.monic()
    return f.monic()


def _int_content(cs: list[int]) -> int:
    c = 0
    for x in cs:
        c = int_gcd(c, x)
        if c == 1:
            return 1
    return c or 1


def _to_primitive_int(coeffs) -> list[int]:
    den = 1
    for c in coeffs:
        if isinstance(c, Fraction):
            den = den * c.denominator // int_gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    content = _int_content(ints)
    return [c // content for c in ints]


def _gcd_rational(a, b):
    fa, fb = _to_primitive_int(a), _to_primitive_int(b)
    if len(fa) < len(fb):
        fa, fb = fb, fa
    while fb:
        # pseudo-remainder: lc(fb)^(deg gap + 1) * fa mod fb
        rem = list(fa)
        lead = fb[-1]
        dn = len(fb) - 1
        while len(rem) - 1 >= dn and rem:
            c = rem[-1]
            k = len(rem) - 1 - dn
            rem = [x * lead for x in rem]
            for j, d in enumerate(fb):
                rem[k + j] -= c * d
            while rem and rem[-1] == 0:
                rem.pop()
        content = _int_content(rem)
        fa, fb = fb, [c // content for c in rem]
    lead = fa[-1]
    if lead < 0:
        fa = [-c for c in fa]
        lead = -lead
    if lead == 1:
        return fa
    return [Fraction(c, lead) for c in fa]


# -- cyclotomic polynomials --------------------------------------------------

_cyclo_poly_cache: dict[tuple[int, str], Poly] = {}
_cyclo_poly_lock = threading.Lock()


def cyclotomic(n: int, var: str = "q") -> Poly:
    """The n-th cyclotomic polynomial Phi_n over Q.

    >>> cyclotomic(6)
    Poly('1 - q + q^2')
    """
    if n < 1:
        raise ValueError("cyclotomic index must be a positive integer")
    key = (n, var)
    p = _cyclo_poly_cache.get(key)
    if p is None:
        p = Poly(cyclotomic_int_coeffs(n), var)
        with _cyclo_poly_lock:
            _cyclo_poly_cache.setdefault(key, p)
    return _cyclo_poly_cache[key]
