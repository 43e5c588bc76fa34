"""Exact q-series with rational exponents.

A :class:`QSeries` is either EXACT (a finite Laurent polynomial in fractional
powers of q) or TRUNCATED, in which case every coefficient at an exponent
``<= prec`` is known and nothing above it is stored.  The public ``window``
is ``prec`` measured from the trailing exponent.
"""

from __future__ import annotations

import json
from collections import defaultdict
from fractions import Fraction
from math import floor, lcm
from typing import Iterable, Mapping, Union

from .errors import InexactDivision, PreconditionError

Number = Union[int, Fraction]


def _norm_coeff(c) -> Number:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class QSeries:
    __slots__ = ("_terms", "_prec", "_sorted")

    def __init__(self, terms: Mapping | Iterable = (), prec=None):
        items = terms.items() if isinstance(terms, Mapping) else terms
        prec = None if prec is None else Fraction(prec)
        acc: dict = {}
        for e, c in items:
            e = Fraction(e)
            if prec is not None and e > prec:
                continue
            acc[e] = acc.get(e, 0) + c
        self._terms = {e: _norm_coeff(c) for e, c in acc.items() if c != 0}
        self._prec = prec
        self._sorted = None

    @classmethod
    def _raw(cls, terms: dict, prec) -> "QSeries":
        s = cls.__new__(cls)
        s._terms = terms
        s._prec = prec
        s._sorted = None
        return s

    # -- constructors --------------------------------------------------------

    @classmethod
    def monomial(cls, exponent=0, coeff: Number = 1) -> "QSeries":
        return cls({Fraction(exponent): coeff})

    @classmethod
    def one(cls) -> "QSeries":
        return cls.monomial(0, 1)

    @classmethod
    def zero(cls, prec=None) -> "QSeries":
        return cls({}, prec)

    # -- inspection ----------------------------------------------------------

    @property
    def terms(self) -> list[tuple[Fraction, Number]]:
        if self._sorted is None:
            self._sorted = sorted(self._terms.items())
        return self._sorted

    @property
    def prec(self) -> Fraction | None:
        return self._prec

    @property
    def is_exact(self) -> bool:
        return self._prec is None

    @property
    def window(self) -> Fraction | None:
        if self._prec is None:
            return None
        base = self.terms[0][0] if self._terms else Fraction(0)
        return self._prec - base

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __getitem__(self, exponent) -> Number:
        return self.coefficient(exponent)

    def coefficient(self, exponent) -> Number:
        e = Fraction(exponent)
        if self._prec is not None and e > self._prec:
            raise PreconditionError(f"coefficient at q^{e} is beyond the known window")
        return self._terms.get(e, 0)

    def min_exponent(self) -> Fraction:
        return self.trailing()[0]

    def max_exponent(self) -> Fraction:
        if not self._terms:
            raise PreconditionError("zero series has no degree")
        return self.terms[-1][0]

    def exponent_denominator(self) -> int:
        return lcm(1, *(e.denominator for e in self._terms))

    # -- arithmetic ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = QSeries.monomial(0, other) if other else QSeries.zero()
        if not isinstance(other, QSeries):
            return NotImplemented
        return self._prec == other._prec and self._terms == other._terms

    def __hash__(self):
        return hash((self._prec, frozenset(self._terms.items())))

    def __neg__(self) -> "QSeries":
        return QSeries._raw({e: -c for e, c in self._terms.items()}, self._prec)

    def __add__(self, other) -> "QSeries":
        if isinstance(other, (int, Fraction)):
            other = QSeries.monomial(0, other)
        prec = _min_prec(self._prec, other._prec)
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return QSeries(acc, prec)

    __radd__ = __add__

    def __sub__(self, other) -> "QSeries":
        if isinstance(other, (int, Fraction)):
            other = QSeries.monomial(0, other)
        return self + (-other)

    def __rsub__(self, other) -> "QSeries":
        return (-self) + other

    def __mul__(self, other) -> "QSeries":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return QSeries({}, self._prec)
            return QSeries._raw({e: _norm_coeff(c * other) for e, c in self._terms.items()},
                                self._prec)
        if not isinstance(other, QSeries):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            if (self.is_zero() and self.is_exact) or (other.is_zero() and other.is_exact):
                return QSeries()
            # a truncated zero only certifies zero up to its window
            cand = [z._prec + w.min_exponent() for z, w in ((self, other), (other, self))
                    if z.is_zero() and not w.is_zero()]
            return QSeries({}, min(cand) if cand else min(self._prec, other._prec))
        prec = None
        if self._prec is not None:
            prec = self._prec + other.min_exponent()
        if other._prec is not None:
            p2 = other._prec + self.min_exponent()
            prec = p2 if prec is None else min(prec, p2)
        acc: dict = defaultdict(int)
        b_items = other.terms
        for ea, ca in self.terms:
            for eb, cb in b_items:
                e = ea + eb
                if prec is not None and e > prec:
                    break
                acc[e] += ca * cb
        return QSeries(acc, prec)

    __rmul__ = __mul__

    def scalar_mul(self, c: Number) -> "QSeries":
        return self * c

    def shift(self, exponent) -> "QSeries":
        """Multiply by q^exponent."""
        s = Fraction(exponent)
        return QSeries._raw({e + s: c for e, c in self._terms.items()},
                            None if self._prec is None else self._prec + s)

    def truncate(self, prec) -> "QSeries":
        prec = Fraction(prec)
        return QSeries(self._terms, _min_prec(self._prec, prec))

    def trailing(self) -> tuple[Fraction, Number]:
        if not self._terms:
            raise PreconditionError("the zero series has no trailing monomial")
        return self.terms[0]

    def normalize_by_trailing(self) -> "QSeries":
        e0, c0 = self.trailing()
        return QSeries._raw({e - e0: _norm_coeff(Fraction(c) / c0) for e, c in self._terms.items()},
                            None if self._prec is None else self._prec - e0)

    def div_one_minus(self, step) -> "QSeries":
        """Divide by (1 - q^step), step > 0.

        EXACT input: exact Laurent-polynomial division, raising
        :class:`InexactDivision` on a nonzero remainder.  TRUNCATED input:
        power-series division within the known window.
        """
        step = Fraction(step)
        if step <= 0:
            raise PreconditionError("step must be positive")
        if self._prec is not None:
            out: dict = {}
            groups = defaultdict(list)
            for e, c in self._terms.items():
                groups[e - step * floor(e / step)].append((e, c))
            for items in groups.values():
                items.sort()
                lookup = dict(items)
                x = items[0][0]
                cum = 0
                while x <= self._prec:
                    cum += lookup.get(x, 0)
                    if cum:
                        out[x] = cum
                    x += step
            return QSeries._raw(out, self._prec)
        out = {}
        groups = defaultdict(list)
        for e, c in self._terms.items():
            groups[e - step * floor(e / step)].append((e, c))
        for items in groups.values():
            items.sort()
            lookup = dict(items)
            x, top = items[0][0], items[-1][0]
            cum = 0
            while x < top:
                cum += lookup.get(x, 0)
                if cum:
                    out[x] = cum
                x += step
            cum += lookup[top]
            if cum != 0:
                raise InexactDivision(f"nonzero remainder dividing by (1 - q^{step})")
        return QSeries._raw(out, None)

    # -- comparison helpers -------------------------------------------------

    def agreement_depth(self, other: "QSeries", upto) -> Fraction:
        """Largest exponent on the common grid, at most ``upto``, through which
        the two series agree.  The grid step is 1/D with D the common
        denominator of all exponents involved (and of ``upto``)."""
        upto = Fraction(upto)
        D = lcm(self.exponent_denominator(), other.exponent_denominator(), upto.denominator)
        keys = set(self._terms) | set(other._terms)
        bad = sorted(e for e in keys if e <= upto and self._terms.get(e, 0) != other._terms.get(e, 0))
        if not bad:
            return upto
        return bad[0] - Fraction(1, D)

    # -- serialization -------------------------------------------------------

    def to_dict(self) -> dict:
        D = self.exponent_denominator()
        window = self.window
        return {
            "denominator": D,
            "terms": [[int(e * D), str(c)] for e, c in self.terms],
            "window": None if window is None else _num_json(window),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "QSeries":
        D = int(data["denominator"])
        terms = [(Fraction(int(e), D), _norm_coeff(Fraction(c))) for e, c in data["terms"]]
        w = data.get("window")
        if w is None:
            return cls(terms)
        base = min((e for e, _ in terms), default=Fraction(0))
        return cls(terms, base + Fraction(w))

    @classmethod
    def from_json(cls, text: str) -> "QSeries":
        return cls.from_dict(json.loads(text))

    def __str__(self):
        parts = []
        for e, c in self.terms:
            parts.append(_fmt_term(e, c))
        if not parts:
            s = "0"
        else:
            s = parts[0]
            for p in parts[1:]:
                s += " - " + p[1:] if p.startswith("-") else " + " + p
        if self._prec is not None:
            s += f" + O(q^>{_fmt_exp(self._prec)})"
        return s

    def __repr__(self):
        return f"QSeries({self})"


def _num_json(x: Fraction):
    return int(x) if x.denominator == 1 else str(x)


def _fmt_exp(e: Fraction) -> str:
    return str(e) if e.denominator == 1 else f"({e})"


def _fmt_term(e: Fraction, c: Number) -> str:
    if e == 0:
        return str(c)
    mono = "q" if e == 1 else f"q^{_fmt_exp(e)}"
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    cs = str(c)
    if isinstance(c, Fraction):
        cs = f"({c})" if c > 0 else f"-({-c})"
    return f"{cs}*{mono}"


def _min_prec(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


# -- module-level operations --------------------------------------------------

def add(a: QSeries, b: QSeries) -> QSeries:
    return a + b


def mul(a: QSeries, b: QSeries) -> QSeries:
    return a * b


def negate(a: QSeries) -> QSeries:
    return -a


def scalar_mul(a: QSeries, c: Number) -> QSeries:
    return a * c


def trailing(a: QSeries) -> tuple[Fraction, Number]:
    return a.trailing()


def normalize_by_trailing(a: QSeries) -> QSeries:
    return a.normalize_by_trailing()


def inv_poch_product(exponents: Iterable, N) -> QSeries:
    """Expansion of prod 1/(1 - q^e) through q^N."""
    s = QSeries.one().truncate(N)
    for e in exponents:
        e = Fraction(e)
        if e <= 0:
            raise PreconditionError(f"exponent {e} must be positive")
        s = s.div_one_minus(e)
    return s


def euler_product(N) -> QSeries:
    """Expansion of prod_{k>=1} (1 - q^k) through q^N."""
    N = Fraction(N)
    s = QSeries.one().truncate(N)
    k = 1
    while k <= N:
        s = s - s.shift(k).truncate(N)
        k += 1
    return s


def finite_product(exponents: Iterable) -> QSeries:
    """prod (1 - q^e) as an exact Laurent polynomial."""
    s = QSeries.one()
    for e in exponents:
        s = s - s.shift(e)
    return s
