"""Empirical harness for the large-colour behaviour of multiplicities and
normalized torus-knot invariants.

Nothing here proves anything: reports carry the label EMPIRICAL and keep
exact rationals so that runs are reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Optional

from .errors import CosetMismatch, InsufficientData, NoTheoremApplies, PreconditionError
from .knotinv import TorusKnot, jones_hat, short_root_bound_holds
from .multiplicity import weight_system
from .parallel import pmap
from .qlaurent import QSeries
from .rootdata import RootDatum, Weight, build_root_datum
from .wcharacter import limit_rhs_non_simply_laced, limit_rhs_simply_laced
from .weylgroup import enumerate_weyl

EMPIRICAL = "EMPIRICAL"


def _check_colour(d: RootDatum, lam: Weight):
    if not d.is_dominant_integral(lam) or lam.is_zero():
        raise PreconditionError(f"{lam} must be a nonzero dominant integral weight")


def admissible_ns(d: RootDatum, lam: Weight, n_max: int) -> list[int]:
    """n <= n_max with n * lam in lam + Q."""
    return list(range(1, n_max + 1, d.coset_order(lam)))


def _mults_job(args):
    lt, lam_w, n, mus_w = args
    d = build_root_datum(lt)
    t = weight_system(d, d.weight(lam_w) * n)
    return [t.mult_w(m) for m in mus_w]


def _mults_along(d: RootDatum, lam: Weight, ns: list[int], mus: list[Weight]) -> dict[int, list[int]]:
    lam_w = d.int_weight_coords(lam)
    mus_w = [d.int_weight_coords(m) for m in mus]
    jobs = [(str(d.lie_type), lam_w, n, mus_w) for n in ns]
    return dict(zip(ns, pmap(_mults_job, jobs)))


# -- ratio tables --------------------------------------------------------------

@dataclass(frozen=True)
class RatioRow:
    n: int
    m1: int
    m2: int
    ratio: Optional[Fraction]  # None when m2 = 0

    @property
    def status(self) -> str:
        if self.m2 == 0:
            return "undefined"
        if self.m1 == 0:
            return "zero"
        return "ok"


@dataclass(frozen=True)
class RatioReport:
    lam: Weight
    mu1: Weight
    mu2: Weight
    rows: tuple[RatioRow, ...]
    label: str = EMPIRICAL

    def defined_rows(self) -> list[RatioRow]:
        return [r for r in self.rows if r.status == "ok"]

    @property
    def first_deviation(self) -> Optional[Fraction]:
        rows = self.defined_rows()
        return abs(rows[0].ratio - 1) if rows else None

    @property
    def final_deviation(self) -> Optional[Fraction]:
        rows = self.defined_rows()
        return abs(rows[-1].ratio - 1) if rows else None

    @property
    def approaching(self) -> bool:
        """Final deviation strictly below the first defined one."""
        f, l = self.first_deviation, self.final_deviation
        return f is not None and (l < f or f == 0 == l)

    @property
    def monotone(self) -> bool:
        devs = [abs(r.ratio - 1) for r in self.defined_rows()]
        return all(b <= a for a, b in zip(devs, devs[1:]))

    def to_dict(self, d: RootDatum) -> dict:
        return {
            "label": self.label,
            "lambda": list(d.int_weight_coords(self.lam)),
            "mu1": list(d.int_weight_coords(self.mu1)),
            "mu2": list(d.int_weight_coords(self.mu2)),
            "rows": [{"n": r.n, "m1": str(r.m1), "m2": str(r.m2),
                      "ratio": None if r.ratio is None else str(r.ratio), "status": r.status}
                     for r in self.rows],
            "first_deviation": _opt_str(self.first_deviation),
            "final_deviation": _opt_str(self.final_deviation),
            "approaching": self.approaching,
            "monotone": self.monotone,
        }


def _opt_str(x):
    return None if x is None else str(x)


def ratio_table(d: RootDatum, lam: Weight, mu1: Weight, mu2: Weight, n_max: int) -> RatioReport:
    _check_colour(d, lam)
    for mu in (mu1, mu2):
        if not (mu - lam).in_root_lattice():
            raise CosetMismatch(f"{mu} is not in lambda + Q")
    ns = admissible_ns(d, lam, n_max)
    vals = _mults_along(d, lam, ns, [mu1, mu2])
    rows = []
    for n in ns:
        m1, m2 = vals[n]
        rows.append(RatioRow(n, m1, m2, Fraction(m1, m2) if m2 else None))
    return RatioReport(lam, mu1, mu2, tuple(rows))


# -- stabilization of normalized invariants ----------------------------------------

@dataclass(frozen=True)
class StabilizationReport:
    knot: TorusKnot
    lam: Weight
    window: int
    regime: str
    depths: tuple[tuple[int, Fraction], ...]  # (n, d(n))
    target: QSeries = field(repr=False)
    constant_terms: tuple[tuple[int, object], ...] = ()
    label: str = EMPIRICAL

    @property
    def stabilized_at(self) -> Optional[int]:
        """First n whose agreement depth reaches the full window."""
        for n, dep in self.depths:
            if dep >= self.window:
                return n
        return None

    @property
    def monotone(self) -> bool:
        ds = [dep for _, dep in self.depths]
        return all(b >= a for a, b in zip(ds, ds[1:]))

    def to_dict(self, d: RootDatum) -> dict:
        return {
            "label": self.label,
            "knot": [self.knot.p, self.knot.pp],
            "lambda": list(d.int_weight_coords(self.lam)),
            "window": self.window,
            "regime": self.regime,
            "depths": [[n, str(dep)] for n, dep in self.depths],
            "stabilized_at": self.stabilized_at,
            "monotone": self.monotone,
            "target": self.target.to_dict(),
        }


def _target_for(d: RootDatum, k: TorusKnot, lam: Weight, N) -> tuple[str, QSeries]:
    g = enumerate_weyl(d)
    if d.simply_laced:
        if min(k.p, k.pp) < d.dual_coxeter:
            raise NoTheoremApplies(f"{k}: p, p' must be at least {d.dual_coxeter}")
        return "simply-laced", limit_rhs_simply_laced(d, g, k, d.coset_index(lam), N)
    if not lam.in_root_lattice():
        raise NoTheoremApplies(f"{lam} is not in the root lattice")
    if not short_root_bound_holds(d, k.p, k.pp):
        raise NoTheoremApplies(f"{k}: the short-root bound fails for {d.lie_type}")
    return "short-root", limit_rhs_non_simply_laced(d, g, k, N)


def _jhat_job(args):
    lt, p, pp, lam_w, n, N = args
    d = build_root_datum(lt)
    g = enumerate_weyl(d)
    return jones_hat(d, g, TorusKnot(p, pp), d.weight(lam_w) * n, window=N)


def stabilization(d: RootDatum, k: TorusKnot, lam: Weight, N: int, n_max: int) -> StabilizationReport:
    """Agreement depth of J-hat(n lam) with the predicted limit series, for admissible n <= n_max."""
    _check_colour(d, lam)
    regime, target = _target_for(d, k, lam, N)
    ns = admissible_ns(d, lam, n_max)
    lam_w = d.int_weight_coords(lam)
    series = pmap(_jhat_job, [(str(d.lie_type), k.p, k.pp, lam_w, n, N) for n in ns])
    depths = tuple((n, s.agreement_depth(target, N)) for n, s in zip(ns, series))
    consts = tuple((n, s.coefficient(0)) for n, s in zip(ns, series))
    return StabilizationReport(k, lam, N, regime, depths, target, consts)


# -- leading coefficients ----------------------------------------------------------

@dataclass(frozen=True)
class LeadingFit:
    """Finite-difference estimate of the leading coefficient of n -> m_{n lam}(mu).

    ``stride`` is the spacing of the differenced points (a multiple of the
    admissible step); ``stable`` records whether the estimate was identical
    at every checked endpoint, which happens once the stride is a multiple of
    the quasi-period of the lower-order terms.
    """

    degree: int
    step: int
    stride: int
    stable: bool
    ns: tuple[int, ...]
    values: tuple[int, ...]
    estimate: Fraction
    previous: Optional[Fraction]
    label: str = EMPIRICAL

    def to_dict(self) -> dict:
        return {"label": self.label, "degree": self.degree, "step": self.step,
                "stride": self.stride, "stable": self.stable,
                "n": list(self.ns), "values": [str(v) for v in self.values],
                "estimate": str(self.estimate), "previous": _opt_str(self.previous)}


# endpoints compared when looking for a stride that cancels periodic terms
_CHECKED_ENDPOINTS = 6


def _estimate(f: dict[int, int], end: int, stride: int, degree: int) -> Fraction:
    diff = sum((-1) ** k * comb(degree, k) * f[end - k * stride] for k in range(degree + 1))
    return Fraction(diff, stride ** degree * factorial(degree))


def leading_term_fit(d: RootDatum, lam: Weight, mu: Weight, degree: int, n_max: int,
                     stride: int | None = None) -> LeadingFit:
    """degree-th backward difference of n -> m_{n lam}(mu) along admissible n,
    divided by stride^degree * degree!.

    Multiplicities are quasi-polynomial in n, so differences with spacing equal
    to the admissible step alone oscillate.  Without an explicit ``stride``
    the smallest multiple of the step giving the same estimate at the last
    few admissible endpoints is used; if none does, the step itself is used
    and ``stable`` is False.
    """
    _check_colour(d, lam)
    if degree < 0:
        raise PreconditionError("degree must be nonnegative")
    if not (mu - lam).in_root_lattice():
        raise CosetMismatch(f"{mu} is not in lambda + Q")
    step = d.coset_order(lam)
    ns = admissible_ns(d, lam, n_max)
    if len(ns) < degree + 1:
        raise InsufficientData(f"need {degree + 1} admissible n up to {n_max}, have {len(ns)}")
    if stride is not None and (stride < 1 or stride % step):
        raise PreconditionError(f"stride must be a positive multiple of {step}")
    vals = dict(zip(ns, (v[0] for v in _mults_along(d, lam, ns, [mu]).values())))
    end = ns[-1]

    def endpoints(s):
        return [n for n in reversed(ns) if n - degree * s >= 1][:_CHECKED_ENDPOINTS]

    chosen, stable = step, False
    candidates = [stride] if stride is not None else range(step, end, step)
    for s in candidates:
        ends = endpoints(s)
        if not ends or ends[0] != end:
            break
        ests = {_estimate(vals, e, s, degree) for e in ends}
        if len(ends) >= min(_CHECKED_ENDPOINTS, 2) and len(ests) == 1:
            chosen, stable = s, True
            break
        if stride is not None:
            chosen = s
    est = _estimate(vals, end, chosen, degree)
    prev = None
    if end - step - degree * chosen >= 1:
        prev = _estimate(vals, end - step, chosen, degree)
    used = tuple(end - k * chosen for k in range(degree, -1, -1))
    return LeadingFit(degree, step, chosen, stable, used, tuple(vals[n] for n in used), est, prev)
