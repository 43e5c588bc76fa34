"""Coloured invariants of torus knots.

Two formulas are implemented.  The plethysm form sums quantum dimensions of
the constituents of psi_p(ch L(lam)) weighted by ribbon twists; the lattice
form sums over the weight system and the Weyl group and then divides by the
product prod_{alpha > 0} (1 - q^{(alpha, rho)}).  Both give the same
un-normalized, framing-dependent Laurent polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from .errors import NoTheoremApplies, NotCoprime, NotDominantIntegral, PreconditionError
from .multiplicity import MultTable, min_colour_index, weight_system
from .plethysm import plethysm_coeffs_w
from .qlaurent import QSeries, finite_product
from .rootdata import RootDatum, Weight
from .weylgroup import WeylGroup

SIMPLY_LACED = "SimplyLacedThm"
SHORT_ROOT = "ShortRootBoundThm"


@dataclass(frozen=True)
class TorusKnot:
    p: int
    pp: int

    def __post_init__(self):
        if not (isinstance(self.p, int) and isinstance(self.pp, int)) or self.p < 1 or self.pp < 1:
            raise PreconditionError(f"T({self.p},{self.pp}): p and p' must be positive integers")
        if gcd(self.p, self.pp) != 1:
            raise NotCoprime(f"T({self.p},{self.pp}): p and p' must be coprime")

    def swapped(self) -> "TorusKnot":
        return TorusKnot(self.pp, self.p)

    def __str__(self):
        return f"T({self.p},{self.pp})"


def _check_colour(d: RootDatum, lam: Weight):
    if not d.is_dominant_integral(lam):
        raise NotDominantIntegral(f"{lam} is not dominant integral")


def qdim_char(d: RootDatum, mu: Weight) -> QSeries:
    """prod_{alpha > 0} [ (mu + rho, alpha) ] / [ (rho, alpha) ] with [x] = q^{x/2} - q^{-x/2}."""
    _check_colour(d, mu)
    mr = mu + d.rho
    tops = [d.inner(mr, a) for a in d.positive_roots]
    bottoms = [d.inner(d.rho, a) for a in d.positive_roots]
    s = finite_product(tops).shift((sum(bottoms) - sum(tops)) / 2)
    for b in bottoms:
        s = s.div_one_minus(b)
    return s


def ribbon_exponent(d: RootDatum, lam: Weight) -> Fraction:
    return d.inner(lam, lam + d.rho * 2) / 2


def jones_rosso(d: RootDatum, g: WeylGroup, k: TorusKnot, lam: Weight,
                table: MultTable | None = None) -> QSeries:
    _check_colour(d, lam)
    coeffs = plethysm_coeffs_w(d, g, lam, k.p, table)
    out = QSeries()
    ratio = Fraction(k.pp, k.p)
    for w, c in sorted(coeffs.items()):
        mu = d.weight(w)
        out = out + qdim_char(d, mu).shift(ratio * ribbon_exponent(d, mu)) * c
    return out


def _quadratic_exponents(d: RootDatum, V: np.ndarray) -> np.ndarray:
    """K * ||v||^2 for rows v of V (weight coordinates), exactly."""
    _, M = d.scaled_weight_gram
    Mn = np.array(M, dtype=np.int64)
    bound = float(np.abs(V).max(initial=0)) ** 2 * float(np.abs(Mn).sum())
    if bound < 2.0 ** 62:
        return np.einsum("...i,ij,...j->...", V, Mn, V)
    Vo = V.astype(object)
    return np.einsum("...i,ij,...j->...", Vo, Mn.astype(object), Vo)


def _collect(exps: np.ndarray, coeffs: np.ndarray, denom: int, shift: Fraction) -> dict:
    """Sum coefficients over equal integer exponents; returns {shift + e/denom: c}."""
    uniq, inv = np.unique(exps.ravel(), return_inverse=True)
    flat = coeffs.ravel()
    if flat.dtype == object:
        sums = [0] * len(uniq)
        for k, c in zip(inv.tolist(), flat.tolist()):
            sums[k] += c
    else:
        acc = np.zeros(len(uniq), dtype=np.int64)
        np.add.at(acc, inv, flat)
        sums = acc.tolist()
    return {shift + Fraction(int(e), denom): int(c) for e, c in zip(uniq.tolist(), sums) if c}


def positive_root_exponents(d: RootDatum) -> list[Fraction]:
    return [d.inner(a, d.rho) for a in d.positive_roots]


def divide_by_root_product(d: RootDatum, s: QSeries) -> QSeries:
    for e in positive_root_exponents(d):
        s = s.div_one_minus(e)
    return s


def lattice_prefactor_exponent(d: RootDatum, k: TorusKnot) -> Fraction:
    """-(pp'/2)(1/p - 1/p')^2 ||rho||^2."""
    p, pp = k.p, k.pp
    return -Fraction((pp - p) ** 2, 2 * p * pp) * d.norm2(d.rho)


def jones_lattice(d: RootDatum, g: WeylGroup, k: TorusKnot, lam: Weight,
                  table: MultTable | None = None, window=None) -> QSeries:
    """Lattice form of the invariant.

    With ``window`` set, the result is TRUNCATED: exact through the trailing
    exponent plus ``window``.  The trailing monomial is read off the
    numerator, since the denominator product starts with 1.
    """
    _check_colour(d, lam)
    table = table or weight_system(d, lam)
    p, pp = k.p, k.pp
    K, _ = d.scaled_weight_gram
    sup = table.full_support_w()
    S = np.array(list(sup.keys()), dtype=np.int64).reshape(len(sup), d.rank)
    mults = list(sup.values())
    R = g.rho_images()
    # v = pp' mu + p' rho - p w(rho), so that (pp'/2)||mu + rho/p - w rho/p'||^2 = ||v||^2 / (2pp')
    V = p * pp * S[:, None, :] + pp - p * R[None, :, :]
    E = _quadratic_exponents(d, V)
    signs = g.signs.astype(np.int64)
    if max(mults) * len(mults) * len(signs) < 2 ** 62:
        C = np.array(mults, dtype=np.int64)[:, None] * signs[None, :]
    else:
        C = np.array(mults, dtype=object)[:, None] * signs[None, :].astype(object)
    terms = _collect(E, C, 2 * p * pp * K, lattice_prefactor_exponent(d, k))
    num = QSeries(terms)
    if window is not None:
        num = num.truncate(num.min_exponent() + Fraction(window))
    return divide_by_root_product(d, num)


def jones_hat(d: RootDatum, g: WeylGroup, k: TorusKnot, lam: Weight,
              table: MultTable | None = None, window=None) -> QSeries:
    return jones_lattice(d, g, k, lam, table, window).normalize_by_trailing()


# -- trailing monomial ----------------------------------------------------------

def short_root_bound_holds(d: RootDatum, p: int, pp: int) -> bool:
    """1/p + 1/p' < d / (2 ||rho||), decided exactly by squaring."""
    lhs = (Fraction(1, p) + Fraction(1, pp)) ** 2
    return lhs < d.short_len / (4 * d.norm2(d.rho))


@dataclass(frozen=True)
class TrailingPrediction:
    """Predicted trailing monomial sign * m_{n lam}(coeff_weight) * q^exponent of J(n lam).

    Valid for admissible n >= ``min_n``.
    """

    exponent: Fraction
    sign: int
    regime: str
    coeff_weight: Weight
    coeff_descriptor: str
    j: int
    i: int
    min_n: int

    def coefficient(self, d: RootDatum, lam: Weight, n: int = 1) -> int:
        return self.sign * weight_system(d, lam * n).mult(self.coeff_weight)


def predict_trailing(d: RootDatum, g: WeylGroup, k: TorusKnot, lam: Weight) -> TrailingPrediction:
    _check_colour(d, lam)
    p, pp = k.p, k.pp
    if d.simply_laced and min(p, pp) >= d.dual_coxeter and not lam.is_zero():
        j = d.coset_index(lam)
        sig = d.sigma_bar[j]
        i = d.i_of_j[j]
        x = -d.fundamental(i) + d.rho / p - sig.inverse().act(d.rho) / pp
        e = lattice_prefactor_exponent(d, k) + Fraction(p * pp, 2) * d.norm2(x)
        sign = -1 if (2 * d.inner(d.fundamental(j), d.rho)) % 2 else 1
        target = -d.fundamental(i)
        n0 = min_colour_index(d, lam, target)
        desc = f"m_(n*lambda)(-Lambda_{i})" if i else "m_(n*lambda)(0)"
        return TrailingPrediction(e, sign, SIMPLY_LACED, target, desc, j, i, n0)
    if lam.in_root_lattice() and short_root_bound_holds(d, p, pp):
        return TrailingPrediction(Fraction(0), 1, SHORT_ROOT, d.zero, "m_lambda(0)", 0, 0, 1)
    raise NoTheoremApplies(
        f"{d.lie_type}, {k}: neither the simply-laced regime (p, p' >= {d.dual_coxeter}) "
        f"nor the short-root bound applies")
