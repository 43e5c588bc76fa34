"""Weight multiplicities of irreducible highest-weight modules.

Freudenthal's recursion is the production engine.  Kostant's alternating sum
over the Weyl group, with a partition function computed by dynamic
programming, is kept as an independent oracle for small cases.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from .errors import (CosetMismatch, InternalConsistencyError, NotDominantIntegral,
                     OutOfValidityWindow, PreconditionError, UnsupportedType)
from .rootdata import RootDatum, Weight, build_root_datum
from .weylgroup import WeylGroup

WTuple = tuple[int, ...]


def _dominant_w(d: RootDatum, lam: Weight) -> WTuple:
    if not d.in_weight_lattice(lam):
        raise NotDominantIntegral(f"{lam} is not integral")
    w = d.int_weight_coords(lam)
    if any(c < 0 for c in w):
        raise NotDominantIntegral(f"{lam} is not dominant")
    return w


@dataclass(frozen=True, eq=False)
class MultTable:
    """Weight system of L(lambda): multiplicities of the dominant weights."""

    datum: RootDatum
    lam_w: WTuple
    mults_w: dict  # dominant weight coords -> multiplicity
    _memo: dict = field(default_factory=dict, repr=False)

    @property
    def lam(self) -> Weight:
        return self.datum.weight(self.lam_w)

    @property
    def dominant_mults(self) -> dict[Weight, int]:
        return {self.datum.weight(w): m for w, m in self.mults_w.items()}

    def mult_w(self, w: Sequence[int]) -> int:
        key = tuple(w)
        dom = self._memo.get(key)
        if dom is None:
            dom = self.datum.dominate_w(key)
            self._memo[key] = dom
        return self.mults_w.get(dom, 0)

    def mult(self, mu: Weight) -> int:
        if not self.datum.in_weight_lattice(mu):
            return 0
        return self.mult_w(self.datum.int_weight_coords(mu))

    def __getitem__(self, mu: Weight) -> int:
        return self.mult(mu)

    def full_support_w(self) -> dict[WTuple, int]:
        """Every weight (weight coordinates) with its multiplicity."""
        cached = self._memo.get("__full__")
        if cached is not None:
            return cached
        out = {}
        for dom, m in self.mults_w.items():
            for w in weyl_orbit_w(self.datum, dom):
                out[w] = m
        self._memo["__full__"] = out
        return out

    def full_support(self) -> dict[Weight, int]:
        return {self.datum.weight(w): m for w, m in self.full_support_w().items()}

    def dimension(self) -> int:
        return sum(self.full_support_w().values())

    def to_dict(self) -> dict:
        return {
            "lambda": list(self.lam_w),
            "mults": [[list(w), str(m)] for w, m in sorted(self.mults_w.items())],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: RootDatum, data: dict) -> "MultTable":
        return cls(d, tuple(data["lambda"]),
                   {tuple(w): int(m) for w, m in data["mults"]})


def weyl_orbit_w(d: RootDatum, dom: Sequence[int]) -> list[WTuple]:
    """Orbit of a dominant weight, generated by descending simple reflections."""
    cols = d.simple_roots_w
    n = d.rank
    start = tuple(dom)
    seen = {start}
    stack = [start]
    while stack:
        w = stack.pop()
        for i in range(n):
            c = w[i]
            if c > 0:
                col = cols[i]
                v = tuple(w[k] - c * col[k] for k in range(n))
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
    return sorted(seen)


def dominant_weights_below(d: RootDatum, lam_w: WTuple) -> dict[WTuple, int]:
    """Dominant mu with lam - mu in the positive root cone, mapped to the
    height of lam - mu.

    Dominant weights below lam are linked to lam by chains of dominant
    weights differing by positive roots, so a search that never leaves the
    dominant chamber finds all of them.
    """
    pos = d.positive_roots_w
    heights = [sum(r.root_coords) for r in d.positive_roots]
    ht = {lam_w: Fraction(0)}
    frontier = [lam_w]
    while frontier:
        nxt = []
        for mu in frontier:
            h0 = ht[mu]
            for a, h in zip(pos, heights):
                nu = tuple(x - y for x, y in zip(mu, a))
                if min(nu) >= 0 and nu not in ht:
                    ht[nu] = h0 + h
                    nxt.append(nu)
        frontier = nxt
    return ht


def weight_system(d: RootDatum, lam: Weight) -> MultTable:
    """Freudenthal's recursion over the dominant weights, in order of depth below lambda."""
    lam_w = _dominant_w(d, lam)
    return _freudenthal(d, lam_w)


@lru_cache(maxsize=128)
def _freudenthal(d: RootDatum, lam_w: WTuple) -> MultTable:
    K, M = d.scaled_weight_gram
    n = d.rank
    pos = d.positive_roots_w
    Ma = [tuple(sum(M[i][k] * a[k] for k in range(n)) for i in range(n)) for a in pos]
    aa = [sum(a[i] * ma[i] for i in range(n)) for a, ma in zip(pos, Ma)]

    def sq(v):
        return sum(v[i] * M[i][k] * v[k] for i in range(n) for k in range(n))

    rho = d.rho_w
    top = sq(tuple(x + 1 for x in lam_w))
    ht = dominant_weights_below(d, lam_w)
    order = sorted(ht, key=lambda w: (ht[w], w))
    mults = {lam_w: 1}
    memo: dict = {}

    def lookup(v):
        dom = memo.get(v)
        if dom is None:
            dom = d.dominate_w(v)
            memo[v] = dom
        return mults.get(dom, 0)

    for mu in order[1:]:
        acc = 0
        for a, ma, a2 in zip(pos, Ma, aa):
            base = sum(mu[i] * ma[i] for i in range(n))
            v = list(mu)
            k = 1
            while True:
                for i in range(n):
                    v[i] += a[i]
                m = lookup(tuple(v))
                if not m:
                    break
                acc += m * (base + k * a2)
                k += 1
        denom = top - sq(tuple(mu[i] + rho[i] for i in range(n)))
        num = 2 * acc
        if denom <= 0 or num % denom:
            raise InternalConsistencyError(f"Freudenthal step not integral at {mu}")
        m = num // denom
        if m:
            mults[mu] = m
        else:
            raise InternalConsistencyError(f"zero multiplicity for dominant {mu} below {lam_w}")
    return MultTable(d, lam_w, mults)


def weyl_dimension(d: RootDatum, lam: Weight) -> int:
    lr = lam + d.rho
    num = Fraction(1)
    for a in d.positive_roots:
        num *= d.inner(lr, a) / d.inner(d.rho, a)
    if num.denominator != 1:
        raise InternalConsistencyError("Weyl dimension is not an integer")
    return int(num)


# -- Kostant partition function ---------------------------------------------

class _PartitionTable:
    """Vector partition counts over a box in root coordinates, grown on demand."""

    def __init__(self, d: RootDatum):
        self.roots = [tuple(int(c) for c in r.root_coords) for r in d.positive_roots]
        self.bound: tuple[int, ...] = tuple(-1 for _ in range(d.rank))
        self.table: dict = {}

    def count(self, beta: tuple[int, ...]) -> int:
        if any(b < 0 for b in beta):
            return 0
        if any(b > c for b, c in zip(beta, self.bound)):
            self._grow(tuple(max(b, c, 2 * c) for b, c in zip(beta, self.bound)))
        return self.table[beta]

    def _grow(self, bound):
        ranges = [range(b + 1) for b in bound]
        box = list(itertools.product(*ranges))
        ways = dict.fromkeys(box, 0)
        ways[tuple(0 for _ in bound)] = 1
        for r in self.roots:
            # unbounded knapsack: v - r precedes v in lexicographic order
            for v in box:
                u = tuple(x - y for x, y in zip(v, r))
                if min(u) >= 0:
                    ways[v] += ways[u]
        self.table = ways
        self.bound = tuple(bound)


_PARTITIONS: dict = {}


def kostant_partition(d: RootDatum, beta: Weight) -> int:
    if not beta.in_root_lattice():
        raise PreconditionError(f"{beta} is not in the root lattice")
    tab = _PARTITIONS.get(d.lie_type)
    if tab is None:
        tab = _PARTITIONS[d.lie_type] = _PartitionTable(d)
    return tab.count(tuple(int(c) for c in beta.root_coords))


def kostant_mult(d: RootDatum, g: WeylGroup, lam: Weight, mu: Weight) -> int:
    """Kostant's multiplicity formula (oracle)."""
    _dominant_w(d, lam)
    diff = lam - mu
    if not diff.in_root_lattice():
        return 0
    lr = lam + d.rho
    mr = mu + d.rho
    total = 0
    for w in g.elements:
        total += w.sign * kostant_partition(d, w.act(lr) - mr)
    return total


# -- closed forms for first-fundamental symmetric powers --------------------

def _epsilon_coords(series: str, r: int, w: Sequence[Fraction]) -> list[Fraction]:
    """Orthonormal-basis coordinates of a weight given in weight coordinates."""
    w = [Fraction(x) for x in w]
    if series == "C":
        return [sum(w[i:], Fraction(0)) for i in range(r)]
    if series == "B":
        return [sum(w[i:r - 1], Fraction(0)) + w[r - 1] / 2 for i in range(r)]
    if series == "D":
        eps = [sum(w[i:r - 2], Fraction(0)) + (w[r - 2] + w[r - 1]) / 2 for i in range(r - 1)]
        eps.append((w[r - 1] - w[r - 2]) / 2)
        return eps
    raise UnsupportedType(f"no closed form for series {series}")


def symmetric_power_mult(series: str, r: int, j: int, mu: Weight) -> int:
    """m_{j Lambda_1}(mu) for types B, C, D from the complete homogeneous
    symmetric polynomial description of the character.

    Raises :class:`OutOfValidityWindow` when j is below the range in which the
    binomial closed form is established, and :class:`CosetMismatch` when mu
    is not a weight of the right class.
    """
    series = series.upper()
    if series not in "BCD" or len(series) != 1:
        raise UnsupportedType(f"no closed form for series {series}")
    d = build_root_datum(f"{series}{r}")
    if j < 0:
        raise PreconditionError("j must be nonnegative")
    if not d.in_weight_lattice(mu):
        raise CosetMismatch(f"{mu} is not an integral weight")
    eps = _epsilon_coords(series, r, d.weight_coords(mu))
    if any(e.denominator != 1 for e in eps):
        raise CosetMismatch(f"{mu} lies in a spin class")
    S = sum(abs(int(e)) for e in eps)
    if series == "C":
        if (j - S) % 2:
            raise CosetMismatch(f"{mu} is not in the class of {j}*Lambda_1")
        if j < S:
            raise OutOfValidityWindow(f"j={j} below |mu|_1={S}")
        return comb((j - S) // 2 + r - 1, r - 1)
    if series == "B":
        e = (j + S) % 2
        if j - 2 < S + e:
            raise OutOfValidityWindow(f"j={j} below the window {S + e + 2}")
        return comb((j - S - e) // 2 + r - 1, r - 1)
    if (j - S) % 2:
        raise CosetMismatch(f"{mu} is not in the class of {j}*Lambda_1")
    if j < S + 2:
        raise OutOfValidityWindow(f"j={j} below the window {S + 2}")
    return comb((j - S) // 2 + r - 2, r - 2)


# -- first colour index with a given weight ----------------------------------

def in_weight_set(d: RootDatum, lam: Weight, mu: Weight) -> bool:
    """Whether mu is a weight of L(lam), by the dominance criterion."""
    if not d.in_weight_lattice(mu):
        return False
    dom = d.weight(d.dominate_w(d.int_weight_coords(mu)))
    diff = lam - dom
    return diff.in_root_lattice() and all(c >= 0 for c in diff.root_coords)


def min_colour_index(d: RootDatum, lam: Weight, mu: Weight, step: int | None = None) -> int:
    """Least n0 = 1 mod step with m_{n lam}(mu) != 0 for every admissible n >= n0.

    Weight sets grow with n along the admissible subsequence, so the first
    admissible n with mu in wt(n lam) is the answer.
    """
    _dominant_w(d, lam)
    if lam.is_zero():
        raise PreconditionError("lambda must be nonzero")
    if not (mu - lam).in_root_lattice():
        raise CosetMismatch(f"{mu} is not in lambda + Q")
    order = d.coset_order(lam)
    if step is None:
        step = order
    if step != order:
        raise PreconditionError(f"step must be {order}, the order of lambda in P/Q")
    n = 1
    while not in_weight_set(d, lam * n, mu):
        n += step
    return n
