"""Quantum integers, formal Frobenius substitutions, and the q-difference
operator Delta.

The quantum integer [y] = (q^y - 1)/(q - 1) is kept as a reduced rational
function in v = q^(1/b), so rational indices stay exact.  Delta acts on
rational functions of q and q^r through a two-variable representation:
the outer variable w stands for q^(r/b), and the shift r -> r+1 is the
exact monomial map w^k -> v^k w^k, making Delta closed on a decidable
representation.  It satisfies Delta(q^{nr}) = [n] q^{nr}.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .poly import Poly, _coeff_inv, poly_gcd
from .ratfunc import PoleError, RatFunc
from .series import TruncSeries


def quantum_value(c: int, b: int, var: str = "q") -> RatFunc:
    """(v^c - 1)/(v^b - 1) in lowest terms, i.e. [c/b] on branch b."""
    if c < 1 or b < 1:
        raise ValueError("quantum integer requires positive exponents")
    g = gcd(c, b)
    num = Poly([1 if i % g == 0 else 0 for i in range(c - g + 1)], var)
    if b == g:
        return RatFunc.from_poly(num)
    den = Poly([1 if i % g == 0 else 0 for i in range(b - g + 1)], var)
    return RatFunc(num, den, _canonical=True)


@dataclass(frozen=True)
class QuantumInt:
    """A quantum integer [index] represented on an explicit branch."""

    index: Fraction
    branch: int
    value: RatFunc

    def __str__(self):
        return f"[{self.index}] = {self.value}"


def quantum_int(index, branch: int | None = None) -> QuantumInt:
    """The quantum integer [index] = (q^index - 1)/(q - 1), reduced.

    For a rational index a/b the value lives on branch b (or any given
    multiple): [a/b] = (v^(a*branch/b) - 1)/(v^branch - 1) in v = q^(1/branch).

    >>> quantum_int(3).value
    RatFunc('1 + q + q^2')
    >>> quantum_int(Fraction(1, 2)).value
    RatFunc('(1) / (1 + v)')
    """
    index = Fraction(index)
    if index <= 0:
        raise ValueError("quantum integer index must be positive")
    if branch is None:
        branch = index.denominator
    if branch < 1 or (branch * index).denominator != 1:
        raise ValueError(f"index {index} is not representable on branch {branch}")
    c = int(branch * index)
    var = "q" if branch == 1 else "v"
    return QuantumInt(index, branch, quantum_value(c, branch, var))


def frobenius(f, n):
    """Formal Frobenius F_n: substitute q -> q^n; n a positive rational.

    Acts on Poly, RatFunc and TruncSeries.  On Poly/RatFunc the exponents
    are scaled by n in the representation at hand, which must stay
    integral (re-express the input on a finer branch first if not);
    TruncSeries enlarges its branch automatically.
    """
    n = Fraction(n)
    if n <= 0:
        raise ValueError("Frobenius index must be positive")
    if isinstance(f, TruncSeries):
        return f.frobenius(n)
    if isinstance(f, RatFunc):
        return RatFunc(
            _scale_poly_exponents(f.num, n),
            _scale_poly_exponents(f.den, n),
            _canonical=True,
        )
    if isinstance(f, Poly):
        return _scale_poly_exponents(f, n)
    raise TypeError(f"cannot apply Frobenius to {type(f).__name__}")


def _scale_poly_exponents(p: Poly, n: Fraction) -> Poly:
    if n.denominator == 1:
        return p.scale_exponents(n.numerator)
    if p.is_zero():
        return p
    out = {}
    for i, c in enumerate(p.coeffs):
        if c == 0 or not c:
            continue
        e = n * i
        if e.denominator != 1:
            raise ValueError(
                f"exponent {i} * {n} leaves the current branch; rebase first"
            )
        out[int(e)] = c
    top = max(out)
    coeffs = [0] * (top + 1)
    for e, c in out.items():
        coeffs[e] = c
    return Poly(coeffs, p.var)


class BiRatFunc:
    """Rational function in an outer variable w over the field of rational
    functions in v, with q = v^branch and w standing for q^(r/branch).

    Canonical form: outer numerator and denominator coprime over the
    coefficient field, outer denominator monic.
    """

    __slots__ = ("num", "den", "branch")

    def __init__(self, num: Poly, den: Poly | None = None, branch: int = 1, *, _canonical=False):
        num = _as_outer_poly(num)
        den = Poly.one("w") if den is None else _as_outer_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("outer denominator is zero")
        if not _canonical:
            if num.is_zero():
                den = Poly.one("w")
            else:
                g = poly_gcd(num, den)
                if g.degree > 0:
                    num = num.exact_div(g)
                    den = den.exact_div(g)
                if not den.is_monic():
                    inv = _coeff_inv(den.leading())
                    num = num.scale(inv)
                    den = den.scale(inv)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "branch", branch)

    def __setattr__(self, name, value):
        raise AttributeError("BiRatFunc is immutable")

    @classmethod
    def monomial(cls, k: int, branch: int = 1) -> "BiRatFunc":
        """w^k, i.e. the function q^(kr/branch) of r."""
        return cls(Poly.monomial(k, RatFunc.one("v"), "w"), branch=branch, _canonical=True)

    @classmethod
    def geometric(cls, a: int, M: int, branch: int = 1) -> "BiRatFunc":
        """w^a / (1 - w^M): the sum of q^((kM+a) r / branch) over k >= 0."""
        return cls(
            Poly.monomial(a, RatFunc.one("v"), "w"),
            Poly.one("w") - Poly.monomial(M, RatFunc.one("v"), "w"),
            branch,
        )

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def shift_r(self) -> "BiRatFunc":
        """Substitute r -> r + 1, i.e. the exponent-wise map w^k -> v^k w^k."""
        return BiRatFunc(
            _shift_outer(self.num), _shift_outer(self.den), self.branch
        )

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, BiRatFunc):
            if other.branch != self.branch:
                raise ValueError("BiRatFunc branches differ")
            return other
        if isinstance(other, (int, Fraction, RatFunc)):
            c = other if isinstance(other, RatFunc) else RatFunc.constant(other, "v")
            return BiRatFunc(Poly([c], "w"), branch=self.branch, _canonical=True)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        num = self.num * other.den + other.num * self.den
        return BiRatFunc(num, self.den * other.den, self.branch)

    __radd__ = __add__

    def __neg__(self):
        return BiRatFunc(-self.num, self.den, self.branch, _canonical=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return BiRatFunc(self.num * other.num, self.den * other.den, self.branch)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero BiRatFunc")
        return BiRatFunc(self.num * other.den, self.den * other.num, self.branch)

    def __eq__(self, other):
        if not isinstance(other, BiRatFunc):
            return NotImplemented
        if other.branch != self.branch:
            return False
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def __repr__(self):
        return f"BiRatFunc(num={self.num!r}, den={self.den!r}, branch={self.branch})"

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num}) / ({self.den})"


def _as_outer_poly(p) -> Poly:
    if isinstance(p, Poly):
        if p.field_key() != "ratfunc":
            return Poly([RatFunc.constant(c, "v") for c in p.coeffs], "w")
        return p
    raise TypeError("expected an outer polynomial in w")


def _shift_outer(p: Poly) -> Poly:
    v = RatFunc.variable("v")
    return Poly(
        [c * v**k for k, c in enumerate(p.coeffs)],
        p.var,
    )


def delta(f: BiRatFunc) -> BiRatFunc:
    """The q-difference Delta(f) = (f(r+1) - f(r)) / (q - 1).

    Satisfies the eigen-relation Delta(q^{nr}) = [n] q^{nr}:

    >>> w = BiRatFunc.monomial(1)
    >>> delta(w) == w
    True
    """
    b = f.branch
    qm1 = RatFunc.from_poly(Poly([-1] + [0] * (b - 1) + [1], "v"))
    shifted = f.shift_r()
    num = shifted.num * f.den - f.num * shifted.den
    den = f.den * shifted.den * Poly([qm1], "w")
    return BiRatFunc(num, den, b)


def bi_eval(f: BiRatFunc, r: int) -> RatFunc:
    """Evaluate at integer r >= 1 by substituting w = q^(r/branch) = v^r."""
    if r < 1:
        raise ValueError("evaluation point r must be a positive integer")
    point = RatFunc.from_poly(Poly.monomial(r, 1, "v"))
    den_val = f.den(point)
    if not den_val:
        raise PoleError(f"outer pole at w = v^{r}")
    num_val = f.num(point)
    if isinstance(num_val, (int, Fraction)):
        num_val = RatFunc.constant(num_val, "v")
    return num_val / den_val
