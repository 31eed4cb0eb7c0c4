"""Truncated Puiseux series in v = q^(1/b).

A series carries its branch b and an inclusive truncation order (in v);
binary operations rebase both operands to the lcm of the branches and
propagate the smaller valid order, so results are never silently compared
beyond their precision.  The operator domain consists of series without a
constant term; the series type itself allows one, and the operator entry
points reject it.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm

from .fields import CycRat
from .poly import Poly, _is_zero_coeff
from .ratfunc import RatFunc


class TruncSeries:
    __slots__ = ("branch", "order", "coeffs")

    def __init__(self, coeffs, order: int | None = None, branch: int = 1):
        if branch < 1:
            raise ValueError("branch must be a positive integer")
        cs = list(coeffs)
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be >= 0")
        cs = cs[: order + 1]
        cs += [0] * (order + 1 - len(cs))
        object.__setattr__(self, "branch", branch)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("TruncSeries is immutable")

    @classmethod
    def zero(cls, order: int, branch: int = 1) -> "TruncSeries":
        return cls([], order, branch)

    @classmethod
    def from_poly(cls, p: Poly, order: int, branch: int = 1) -> "TruncSeries":
        return cls(list(p.coeffs), order, branch)

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return all(_is_zero_coeff(c) for c in self.coeffs)

    def constant_term(self):
        return self.coeffs[0]

    def has_constant_term(self) -> bool:
        return not _is_zero_coeff(self.coeffs[0])

    def valuation(self) -> int | None:
        """Exponent of the first nonzero coefficient, None for zero (to order)."""
        for i, c in enumerate(self.coeffs):
            if not _is_zero_coeff(c):
                return i
        return None

    def coeff(self, k: int):
        if k < 0 or k > self.order:
            raise IndexError(f"coefficient {k} beyond truncation order {self.order}")
        return self.coeffs[k]

    # -- branch bookkeeping ---------------------------------------------------

    def rebase(self, branch: int) -> "TruncSeries":
        """Re-express on a finer branch (a multiple of the current one)."""
        if branch == self.branch:
            return self
        if branch % self.branch:
            raise ValueError(f"cannot rebase branch {self.branch} to {branch}")
        k = branch // self.branch
        out = [0] * (self.order * k + 1)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return TruncSeries(out, self.order * k, branch)

    def _align(self, other: "TruncSeries"):
        b = lcm(self.branch, other.branch)
        a = self.rebase(b)
        c = other.rebase(b)
        order = min(a.order, c.order)
        return a, c, order

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction, CycRat)):
            cs = list(self.coeffs)
            cs[0] = cs[0] + other
            return TruncSeries(cs, self.order, self.branch)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        a, b, order = self._align(other)
        return TruncSeries(
            [x + y for x, y in zip(a.coeffs, b.coeffs)], order, a.branch
        )

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries([-c for c in self.coeffs], self.order, self.branch)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, CycRat)):
            return self + (-other)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycRat)):
            return TruncSeries(
                [c * other for c in self.coeffs], self.order, self.branch
            )
        if not isinstance(other, TruncSeries):
            return NotImplemented
        a, b, order = self._align(other)
        out = [0] * (order + 1)
        for i, x in enumerate(a.coeffs[: order + 1]):
            if _is_zero_coeff(x):
                continue
            for j in range(min(order - i, b.order) + 1):
                y = b.coeffs[j]
                if not _is_zero_coeff(y):
                    out[i + j] = out[i + j] + x * y
        return TruncSeries(out, order, a.branch)

    __rmul__ = __mul__

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncSeries(self.coeffs[: order + 1], order, self.branch)

    def frobenius(self, n) -> "TruncSeries":
        """Substitute q -> q^n for positive rational n = c/d.

        An exponent k on branch b represents q^(k/b) and maps to
        q^(kc/(bd)), i.e. exponent k*c on the enlarged branch b*d.  The
        result's order is the largest safe truncation, the input order
        scaled by c.
        """
        n = Fraction(n)
        if n <= 0:
            raise ValueError("Frobenius index must be positive")
        c, d = n.numerator, n.denominator
        out = [0] * (self.order * c + 1)
        for i, x in enumerate(self.coeffs):
            out[i * c] = x
        return TruncSeries(out, self.order * c, self.branch * d)

    # -- comparisons and rendering ---------------------------------------------

    def __eq__(self, other):
        """Mathematical equality through the smaller valid order."""
        if isinstance(other, TruncSeries):
            a, b, order = self._align(other)
            return all(
                a.coeffs[i] == b.coeffs[i] for i in range(order + 1)
            )
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        return f"TruncSeries({list(self.coeffs)}, order={self.order}, branch={self.branch})"

    def __str__(self):
        from .poly import _render_terms

        var = "q" if self.branch == 1 else "v"
        body = _render_terms(self.coeffs, var)
        return f"{body} + O({var}^{self.order + 1})"

    def to_json(self) -> dict:
        out = []
        for c in self.coeffs:
            if isinstance(c, CycRat):
                out.append(c.json_value())
            else:
                out.append(str(Fraction(c)))
        return {"branch": self.branch, "order": self.order, "coeffs": out}


def series_from_ratfunc(f: RatFunc, order: int, branch: int = 1) -> TruncSeries:
    """Power-series expansion of f through the given order, exactly.

    Coefficients are produced by recursive division, which requires the
    reduced denominator not to vanish at 0.  A vanishing denominator means
    the value has a pole at the origin and signals a computation bug in the
    operator pipelines, whose values are all zero at the origin.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    den0 = f.den.coeff(0)
    if _is_zero_coeff(den0):
        raise ZeroDivisionError("denominator vanishes at 0; no power series there")
    num = f.num
    den = f.den
    inv0 = _invert_scalar(den0)
    out = []
    for k in range(order + 1):
        acc = num.coeff(k)
        for i in range(1, min(k, den.degree) + 1):
            di = den.coeff(i)
            if not _is_zero_coeff(di):
                acc = acc - di * out[k - i]
        out.append(acc * inv0)
    return TruncSeries(out, order, branch)


def _invert_scalar(c):
    if isinstance(c, int):
        return Fraction(1, c)
    if isinstance(c, Fraction):
        return 1 / c
    return c.inverse() if hasattr(c, "inverse") else 1 / c
