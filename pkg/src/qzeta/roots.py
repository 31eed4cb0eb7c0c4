"""Numerical root finding and classification for Bernoulli-Carlitz
numerators.

The solver is a simultaneous Aberth-Ehrlich iteration run in extended
precision (mpmath, well beyond 80 effective bits), warm-started from a
double-precision sweep of the same iteration.  Exact preprocessing strips
the monomial root at 0 and known cyclotomic content before anything
floating-point happens, so exactly-known unit-circle roots never burden
the solve.  Everything is deterministic given (polynomial, tol).
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, pi

import mpmath as mp
import numpy as np

from .poly import Poly, cyclotomic
from .ratfunc import RatFunc


class RootFindingError(ArithmeticError):
    """Aberth iteration failed to converge; carries partial diagnostics."""

    def __init__(self, message: str, roots=None, max_update=None):
        super().__init__(message)
        self.roots = roots or []
        self.max_update = max_update


@dataclass
class RootReport:
    """Roots of one beta numerator with residuals and a circle/real census."""

    n: int
    degree: int
    roots: list[complex]
    residuals: list[float]
    counts: dict[str, int]
    tol_circle: float
    tol_real: float
    cyclotomic_factors: list[tuple[int, int]] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "degree": self.degree,
            "counts": self.counts,
            "tol_circle": self.tol_circle,
            "tol_real": self.tol_real,
            "cyclotomic_factors": [list(f) for f in self.cyclotomic_factors],
            "roots": [
                {
                    "re": z.real,
                    "im": z.imag,
                    "abs": abs(z),
                    "class": _classify_one(z, self.tol_circle, self.tol_real),
                    "residual": r,
                }
                for z, r in zip(self.roots, self.residuals)
            ],
        }


def _int_coeffs(p: Poly) -> list[int]:
    den = 1
    for c in p.coeffs:
        c = Fraction(c)
        den = den * c.denominator // gcd(den, c.denominator)
    return [int(Fraction(c) * den) for c in p.coeffs]


def find_roots(p: Poly, tol: float = 1e-12, max_iter: int = 400) -> list[complex]:
    """All complex roots of a rational-coefficient polynomial.

    Roots at 0 are stripped exactly and reported exactly; the rest come
    from the Aberth iteration, converged when the largest update drops
    below tol.  Raises RootFindingError (with partial roots) if the
    iteration does not settle within max_iter sweeps.
    """
    if not isinstance(p, Poly) or p.is_zero():
        raise ValueError("find_roots needs a nonzero polynomial")
    if p.degree < 1:
        return []
    coeffs = _int_coeffs(p)
    nzeros = 0
    while coeffs[0] == 0:
        coeffs.pop(0)
        nzeros += 1
    roots: list[complex] = [0j] * nzeros
    deg = len(coeffs) - 1
    if deg == 0:
        return roots
    if deg == 1:
        roots.append(complex(Fraction(-coeffs[0], coeffs[1])))
        return roots
    dps = max(40, int(-mp.log10(tol)) + 25)
    with mp.workdps(dps):
        start = _warm_start(coeffs)
        mp_roots = _aberth_mp(coeffs, start, tol, max_iter)
    roots.extend(complex(z) for z in mp_roots)
    return roots


_GOLDEN = 0.6180339887498949


def _circle_starts(deg: int, r0: float) -> np.ndarray:
    ks = np.arange(deg)
    angles = 2 * np.pi * (ks + 0.35) / deg
    wobble = 1.0 + 0.02 * (((ks * 37) % 11) - 5) / 11.0
    return r0 * wobble * np.exp(1j * angles)


def _warm_start(coeffs: list[int]) -> list[complex]:
    """Double-precision Aberth sweep from perturbed-circle starts.

    Diverging iterates are reset deterministically; if the sweep stalls,
    companion-matrix eigenvalues reseed it.  The result only seeds the
    extended-precision stage, which owns convergence.
    """
    deg = len(coeffs) - 1
    scale = max(abs(c) for c in coeffs)
    cs_desc = np.array([c / scale for c in reversed(coeffs)], dtype=np.float64)
    a0 = abs(coeffs[0] / scale)
    r0 = a0 ** (1.0 / deg) if a0 > 0 else 1.0
    z = _circle_starts(deg, r0)
    dcs = np.polyder(cs_desc)
    reseeded = False
    resets = 0
    with np.errstate(all="ignore"):
        for it in range(600):
            pz = np.polyval(cs_desc, z)
            dz = np.polyval(dcs, z)
            w = pz / np.where(np.abs(dz) < 1e-300, 1.0, dz)
            diffs = z[:, None] - z[None, :]
            np.fill_diagonal(diffs, np.inf)
            S = (1.0 / diffs).sum(axis=1)
            corr = w / (1.0 - w * S)
            corr = np.where(np.isfinite(corr), corr, w)
            corr = np.where(np.isfinite(corr), corr, 0.0)
            z = z - corr
            bad = ~np.isfinite(z) | (np.abs(z) > 1e9)
            if bad.any():
                for i in np.nonzero(bad)[0]:
                    resets += 1
                    z[i] = 1.5 * r0 * np.exp(2j * np.pi * _GOLDEN * resets)
                continue
            if np.max(np.abs(corr)) < 1e-13 * max(1.0, np.max(np.abs(z))):
                break
            if it == 120 and not reseeded:
                # slow progress: reseed from companion-matrix eigenvalues
                reseeded = True
                try:
                    ev = np.roots(cs_desc)
                    if np.all(np.isfinite(ev)) and len(ev) == deg:
                        z = ev.astype(np.complex128)
                except Exception:
                    pass
    z = np.where(np.isfinite(z), z, 0)
    return list(z)


def _aberth_mp(coeffs: list[int], start, tol: float, max_iter: int):
    deg = len(coeffs) - 1
    cs = [mp.mpf(c) for c in coeffs]
    dcs = [i * c for i, c in enumerate(cs)][1:]
    z = [mp.mpc(w) for w in start]
    tol_mp = mp.mpf(tol)
    freeze = tol_mp / 8  # roots this settled stop moving but keep repelling
    done = [False] * deg
    last_update = None
    for _ in range(max_iter):
        max_update = mp.mpf(0)
        new_z = list(z)
        for i in range(deg):
            if done[i]:
                continue
            zi = z[i]
            pz = _horner(cs, zi)
            dz = _horner(dcs, zi)
            if dz == 0:
                dz = mp.mpf(1)
            w = pz / dz
            s = mp.mpc(0)
            for j in range(deg):
                if j != i:
                    d = zi - z[j]
                    if d != 0:
                        s += 1 / d
            denom = 1 - w * s
            corr = w / denom if denom != 0 else w
            new_z[i] = zi - corr
            au = abs(corr)
            if au < freeze:
                done[i] = True
            max_update = max(max_update, au)
        z = new_z
        last_update = max_update
        if max_update < tol_mp:
            return z
    raise RootFindingError(
        f"Aberth iteration did not converge below {tol} in {max_iter} sweeps "
        f"(last update {float(last_update):.3e})",
        roots=[complex(w) for w in z],
        max_update=float(last_update),
    )


def _horner(cs, x):
    acc = mp.mpc(0)
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def _classify_one(z: complex, tol_circle: float, tol_real: float) -> str:
    if abs(abs(z) - 1) <= tol_circle:
        return "on_unit_circle"
    if abs(z.imag) <= tol_real:
        return "real_positive" if z.real > 0 else "other_real"
    return "complex_pairs_off_circle"


def classify_roots(
    roots, tol_circle: float = 1e-6, tol_real: float = 1e-6
) -> dict[str, int]:
    """Census of a root list: the circle test wins over the realness test
    (so -1 counts as on_unit_circle), and off-circle complex roots are
    counted individually, conjugate pairs contributing two."""
    counts = {
        "real_positive": 0,
        "on_unit_circle": 0,
        "complex_pairs_off_circle": 0,
        "other_real": 0,
    }
    for z in roots:
        counts[_classify_one(complex(z), tol_circle, tol_real)] += 1
    return counts


def _strip_cyclotomic(num: Poly, max_index: int) -> tuple[Poly, list[tuple[int, int]]]:
    factors = []
    for d in range(1, max_index + 1):
        phi_d = cyclotomic(d)
        mult = 0
        while True:
            quo, rem = divmod(num, phi_d)
            if not rem.is_zero():
                break
            num = quo
            mult += 1
        if mult:
            factors.append((d, mult))
    return num, factors


def _residuals(coeffs: list[int], roots: list[complex]) -> list[float]:
    """|p(z)| normalized by max|coeff| * max(1, |z|)^deg, in high precision."""
    deg = len(coeffs) - 1
    scale = max(abs(c) for c in coeffs)
    out = []
    with mp.workdps(40):
        cs = [mp.mpf(c) for c in coeffs]
        for z in roots:
            val = abs(_horner(cs, mp.mpc(z)))
            norm = mp.mpf(scale) * mp.mpf(max(1.0, abs(z))) ** deg
            out.append(float(val / norm))
    return out


def beta_root_survey(
    n_max: int,
    tol: float = 1e-12,
    chi=None,
    tol_circle: float = 1e-6,
    tol_real: float = 1e-6,
) -> list[RootReport]:
    """Root census of the numerators of beta_n (or beta_{chi,n} for a real
    character chi) for 2 <= n <= n_max.

    Known content is removed exactly before the numerical solve: the
    monomial q^k, then cyclotomic factors by trial division (their roots
    re-enter the report as exact roots of unity).  Reported degree is the
    numerator degree after stripping the monomial only.
    """
    if n_max < 2:
        raise ValueError("survey needs n_max >= 2")
    from .carlitz import beta, beta_chi

    if chi is not None and not chi.is_real():
        raise ValueError("surveys of beta_{chi,n} support real characters only")
    reports = []
    for n in range(2, n_max + 1):
        value: RatFunc = (beta_chi(chi, n) if chi is not None else beta(n)).value
        num = value.num
        if num.field_key() != "rat":
            num = num.map_coeffs(lambda c: c.rational())
        coeffs = _int_coeffs(num)
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
        stripped = Poly(coeffs)
        degree = stripped.degree
        if degree < 1:
            reports.append(
                RootReport(n, max(degree, 0), [], [], classify_roots([]), tol_circle, tol_real)
            )
            continue
        residual_poly, cyclo_factors = _strip_cyclotomic(stripped, n + 1)
        roots: list[complex] = []
        for d, mult in cyclo_factors:
            unity = [
                cmath.exp(2j * pi * k / d) for k in range(d) if gcd(k, d) == 1
            ] if d > 1 else [1 + 0j]
            roots.extend(unity * mult)
        if residual_poly.degree >= 1:
            roots.extend(find_roots(residual_poly, tol))
        residuals = _residuals(coeffs, roots)
        reports.append(
            RootReport(
                n,
                degree,
                roots,
                residuals,
                classify_roots(roots, tol_circle, tol_real),
                tol_circle,
                tol_real,
                cyclo_factors,
            )
        )
    return reports
