"""Truncated lattice theta-sums for principal W-algebra characters.

For coprime p, p' and j in J the character (times eta^rank) is

    sign_j * sum_{alpha in Q - Lambda_i, w in W} sign(w) q^{(pp'/2)||alpha + (nu+rho)/p - w(mu+rho)/p'||^2}

and the exponent map is minimized uniquely at alpha = -Lambda_i, w = sigma_j^{-1}.
Points are enumerated in a box that contains the ellipsoid of interest, and
every kept exponent is then computed exactly in integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor, gcd, sqrt

import numpy as np
import sympy

from .errors import (InternalConsistencyError, NotCoprime, PreconditionError, PropositionViolated,
                     ShortRootBoundViolated, UnsupportedType)
from .knotinv import (TorusKnot, _collect, _quadratic_exponents, divide_by_root_product,
                      lattice_prefactor_exponent, short_root_bound_holds)
from .qlaurent import QSeries
from .rootdata import RootDatum, Weight
from .weylgroup import WeylElement, WeylGroup


@dataclass(frozen=True)
class WModuleLabel:
    """Module label: coprime (p, p'), j in J and finite parts nu, mu (weight coordinates)."""

    p: int
    pp: int
    j: int = 0
    nu: tuple[int, ...] | None = None
    mu: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.p < 1 or self.pp < 1:
            raise PreconditionError("p and p' must be positive")
        if gcd(self.p, self.pp) != 1:
            raise NotCoprime(f"({self.p},{self.pp}) are not coprime")

    def nu_w(self, d: RootDatum) -> tuple[int, ...]:
        return tuple(self.nu) if self.nu is not None else (0,) * d.rank

    def mu_w(self, d: RootDatum) -> tuple[int, ...]:
        return tuple(self.mu) if self.mu is not None else (0,) * d.rank

    def validate(self, d: RootDatum):
        if not d.simply_laced:
            raise UnsupportedType(f"{d.lie_type} is not simply laced")
        if self.j not in d.j_set:
            raise PreconditionError(f"j={self.j} is not in J = {list(d.j_set)}")
        if self.p < d.dual_coxeter or self.pp < d.coxeter:
            raise PreconditionError(
                f"({self.p},{self.pp}) is not admissible: need p >= {d.dual_coxeter}, p' >= {d.coxeter}")
        nu, mu = self.nu_w(d), self.mu_w(d)
        if len(nu) != d.rank or len(mu) != d.rank or min(nu) < 0 or min(mu) < 0:
            raise PreconditionError("nu and mu must be dominant integral weights")
        if d.inner(d.weight(nu), d.theta) > self.p - d.dual_coxeter:
            raise PreconditionError(f"nu has level above p - h_dual = {self.p - d.dual_coxeter}")
        if d.inner(d.weight(mu), d.theta) > self.pp - d.coxeter:
            raise PreconditionError(f"mu has level above p' - h = {self.pp - d.coxeter}")


def _sign_j(d: RootDatum, j: int) -> int:
    return -1 if (2 * d.inner(d.fundamental(j), d.rho)) % 2 else 1


@dataclass
class _Setup:
    """Integer data for the exponent map in weight coordinates.

    With v = pp' * alpha + p' (nu + rho) - p w(mu + rho), the exponent is
    K ||v||^2 / (2 pp' K), where K ||.||^2 is the integer form of the datum.
    """

    d: RootDatum
    g: WeylGroup
    p: int
    pp: int
    shift_w: tuple[int, ...]       # weight coords of the lattice coset representative
    a_w: np.ndarray                 # p' (nu + rho)
    b_imgs: np.ndarray              # p w(mu + rho), one row per Weyl element
    signs: np.ndarray
    denom: int = field(init=False)

    def __post_init__(self):
        K, _ = self.d.scaled_weight_gram
        self.denom = 2 * self.p * self.pp * K


def _setup(d, g, p, pp, i, nu_w, mu_w) -> _Setup:
    shift = d.int_weight_coords(-d.fundamental(i))
    a = pp * (np.array(nu_w, dtype=np.int64) + 1)
    mr = np.array(mu_w, dtype=np.int64) + 1
    b = p * np.einsum("kij,j->ki", g.wmats, mr)
    return _Setup(d, g, p, pp, shift, a, b, g.signs.astype(np.int64))


def _inverse_gram_diagonal(d: RootDatum) -> tuple[Fraction, ...]:
    Gi = sympy.Matrix(d.gram).inv()
    return tuple(Fraction(int(sympy.fraction(Gi[k, k])[0]), int(sympy.fraction(Gi[k, k])[1]))
                 for k in range(d.rank))


def _box_points(d: RootDatum, S: _Setup, radius2: Fraction) -> np.ndarray:
    """Root-lattice offsets beta (root coordinates) such that the box around every
    centre -c_w contains all x = beta + c_w with ||x||^2 <= radius2.

    |x_k| <= R sqrt((G^{-1})_{kk}) is the exact extent of the ellipsoid along
    coordinate k; one unit of slack absorbs floating-point rounding.
    """
    diag = _inverse_gram_diagonal(d)
    n = d.rank
    # centres c_w in root coordinates: (shift + (a - b_w)/(pp')) mapped by C^{-1}
    Ci = np.array([[float(x) for x in row] for row in d._cartan_inv])
    centres = (np.array(S.shift_w, dtype=float)[None, :]
               + (S.a_w[None, :] - S.b_imgs).astype(float) / (S.p * S.pp)) @ Ci.T
    lo, hi = [], []
    for k in range(n):
        ext = sqrt(float(radius2 * diag[k])) + 1.0
        lo.append(floor(-float(centres[:, k].max()) - ext))
        hi.append(ceil(-float(centres[:, k].min()) + ext))
    grids = np.meshgrid(*[np.arange(l, h + 1, dtype=np.int64) for l, h in zip(lo, hi)], indexing="ij")
    return np.stack([gr.ravel() for gr in grids], axis=1)


def _exponent_numerators(d: RootDatum, S: _Setup, betas: np.ndarray) -> np.ndarray:
    """Integer numerators (over S.denom) for every (beta, w) pair, shape (len(betas), |W|)."""
    C = np.array(d.cartan, dtype=np.int64)
    alpha_w = np.array(S.shift_w, dtype=np.int64)[None, :] + betas @ C.T
    V = S.p * S.pp * alpha_w[:, None, :] + S.a_w[None, None, :] - S.b_imgs[None, :, :]
    return _quadratic_exponents(d, V)


def _lattice_series(d: RootDatum, S: _Setup, emin: Fraction, N, sign: int,
                    radius_scale: int = 1) -> QSeries:
    N = Fraction(N)
    if N < 0:
        raise PreconditionError("window must be nonnegative")
    top = emin + N
    radius2 = radius_scale ** 2 * 2 * top / (S.p * S.pp)
    betas = _box_points(d, S, radius2)
    E = _exponent_numerators(d, S, betas)
    keep = E <= top * S.denom
    coeffs = np.broadcast_to(S.signs[None, :] * sign, E.shape)
    terms = _collect(E[keep], coeffs[keep], S.denom, Fraction(0))
    return QSeries(terms, top)


def minimum_exponent(d: RootDatum, label: WModuleLabel) -> Fraction:
    """Closed-form minimum of the exponent map, attained at (-Lambda_i, sigma_j^{-1})."""
    i = d.i_of_j[label.j]
    sig_inv = d.sigma_bar[label.j].inverse()
    nu = d.weight(label.nu_w(d))
    mu = d.weight(label.mu_w(d))
    x = -d.fundamental(i) + (nu + d.rho) / label.p - sig_inv.act(mu + d.rho) / label.pp
    return Fraction(label.p * label.pp, 2) * d.norm2(x)


def theta_sum(d: RootDatum, g: WeylGroup, label: WModuleLabel, N) -> QSeries:
    """eta^rank * ch L as a lattice theta-sum, complete through q^{min + N}."""
    if not d.simply_laced:
        raise UnsupportedType(f"{d.lie_type} is not simply laced")
    if label.j not in d.j_set:
        raise PreconditionError(f"j={label.j} is not in J = {list(d.j_set)}")
    i = d.i_of_j[label.j]
    S = _setup(d, g, label.p, label.pp, i, label.nu_w(d), label.mu_w(d))
    emin = minimum_exponent(d, label)
    s = _lattice_series(d, S, emin, N, _sign_j(d, label.j))
    if s.is_zero() or s.trailing() != (emin, 1):
        raise PropositionViolated(f"theta-sum does not start with +q^{emin}")
    return s


@dataclass(frozen=True)
class MinimumReport:
    min_exponent: Fraction
    alpha: Weight
    w: WeylElement
    radius: float
    certified_radius: float
    points_checked: int
    unique: bool


def certified_radius(d: RootDatum, label: WModuleLabel) -> float:
    """||alpha*|| + 2||(nu+rho)/p|| + 2||mu+rho||/p'; no alpha outside this ball can compete."""
    i = d.i_of_j[label.j]
    nu = d.weight(label.nu_w(d))
    mu = d.weight(label.mu_w(d))
    return (sqrt(float(d.norm2(d.fundamental(i))))
            + 2 * sqrt(float(d.norm2(nu + d.rho))) / label.p
            + 2 * sqrt(float(d.norm2(mu + d.rho))) / label.pp)


def verify_unique_minimum(d: RootDatum, g: WeylGroup, label: WModuleLabel,
                          radius: float | None = None) -> MinimumReport:
    """Brute-force check that the exponent map has a unique minimizer at
    (-Lambda_i, sigma_j^{-1}) over every alpha in a box containing the
    certified ball."""
    if not d.simply_laced:
        raise UnsupportedType(f"{d.lie_type} is not simply laced")
    label.validate(d)
    cert = certified_radius(d, label)
    R = cert if radius is None else float(radius)
    if R < cert:
        raise PreconditionError(f"radius {R} is below the certified radius {cert:.6f}")
    i = d.i_of_j[label.j]
    S = _setup(d, g, label.p, label.pp, i, label.nu_w(d), label.mu_w(d))
    diag = _inverse_gram_diagonal(d)
    base = [-float(c) for c in d.fundamental(i).root_coords]
    # alpha = -Lambda_i + beta with ||alpha|| <= R
    ranges = []
    for k in range(d.rank):
        ext = R * sqrt(float(diag[k])) + 1.0
        ranges.append(np.arange(floor(-base[k] - ext), ceil(-base[k] + ext) + 1, dtype=np.int64))
    grids = np.meshgrid(*ranges, indexing="ij")
    betas = np.stack([gr.ravel() for gr in grids], axis=1)
    E = _exponent_numerators(d, S, betas)
    emin_num = E.min()
    hits = np.argwhere(E == emin_num)
    emin = Fraction(int(emin_num), S.denom)
    expected = minimum_exponent(d, label)
    sig_inv = d.sigma_bar[label.j].inverse()
    w_idx = g._index[sig_inv.wmatrix]
    target_beta = np.zeros(d.rank, dtype=np.int64)
    unique = len(hits) == 1
    ok = (unique and emin == expected and int(hits[0][1]) == w_idx
          and np.array_equal(betas[hits[0][0]], target_beta))
    if not ok:
        raise PropositionViolated(
            f"exponent map minimum for {d.lie_type} {label} is not unique at (-Lambda_{i}, sigma^-1): "
            f"{len(hits)} minimizers at {emin}")
    return MinimumReport(emin, -d.fundamental(i), g.elements[w_idx], R, cert, int(E.size), True)


def limit_rhs_simply_laced(d: RootDatum, g: WeylGroup, k: TorusKnot, j: int, N) -> QSeries:
    """q^{-min} * theta_sum / prod(1 - q^{(alpha, rho)}), truncated at q^N."""
    label = WModuleLabel(k.p, k.pp, j)
    if not d.simply_laced:
        raise UnsupportedType(f"{d.lie_type} is not simply laced")
    if min(k.p, k.pp) < d.dual_coxeter:
        raise PreconditionError(f"{k} needs p, p' >= {d.dual_coxeter}")
    label.validate(d)
    emin = minimum_exponent(d, label)
    s = theta_sum(d, g, label, N).shift(-emin)
    s = divide_by_root_product(d, s)
    _check_constant(s)
    return s


def limit_rhs_non_simply_laced(d: RootDatum, g: WeylGroup, k: TorusKnot, N) -> QSeries:
    """Normalized lattice sum over the root lattice, truncated at q^N."""
    if not short_root_bound_holds(d, k.p, k.pp):
        raise ShortRootBoundViolated(f"{d.lie_type}, {k}: the short-root bound fails")
    S = _setup(d, g, k.p, k.pp, 0, (0,) * d.rank, (0,) * d.rank)
    pref = lattice_prefactor_exponent(d, k)
    # minimum at (0, identity): (pp'/2)(1/p - 1/p')^2 ||rho||^2 = -pref
    s = _lattice_series(d, S, -pref, N, 1).shift(pref)
    s = divide_by_root_product(d, s)
    _check_constant(s)
    return s


def _check_constant(s: QSeries):
    if s.is_zero() or s.trailing() != (0, 1):
        raise InternalConsistencyError(f"limit series does not start with 1: {s}")
