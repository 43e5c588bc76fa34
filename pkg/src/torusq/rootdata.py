"""Static data of a finite simple Lie algebra and its untwisted affinization.

All inner products use the normalization in which the highest root has
squared length 2.  Weights are stored by their coordinates in the basis of
simple roots; integral weights are also handled internally as integer tuples
of coordinates in the basis of fundamental weights ("weight coordinates").
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import lcm
from typing import TYPE_CHECKING, Sequence

import sympy

from .errors import InvalidLieType, PreconditionError

if TYPE_CHECKING:
    from .weylgroup import WeylElement

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3, "E": 6, "F": 4, "G": 2}


@dataclass(frozen=True, order=True)
class LieType:
    series: str
    rank: int

    def __post_init__(self):
        if self.series not in _MIN_RANK:
            raise InvalidLieType(f"unknown series {self.series!r}")
        if not isinstance(self.rank, int) or self.rank < _MIN_RANK[self.series]:
            raise InvalidLieType(f"invalid rank {self.rank} for series {self.series}")
        if self.series == "E" and self.rank > 8:
            raise InvalidLieType(f"invalid rank {self.rank} for series E")
        if self.series == "F" and self.rank != 4:
            raise InvalidLieType("series F only has rank 4")
        if self.series == "G" and self.rank != 2:
            raise InvalidLieType("series G only has rank 2")

    @classmethod
    def parse(cls, text: str) -> "LieType":
        m = re.fullmatch(r"\s*([A-Ga-g])(\d+)\s*", text)
        if not m:
            raise InvalidLieType(f"cannot parse Lie type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    @property
    def simply_laced(self) -> bool:
        return self.series in "ADE"

    def __str__(self):
        return f"{self.series}{self.rank}"


@dataclass(frozen=True)
class Weight:
    """An element of the real span of the simple roots, by root coordinates."""

    root_coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "root_coords", tuple(Fraction(c) for c in self.root_coords))

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.root_coords, other.root_coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.root_coords, other.root_coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.root_coords))

    def __mul__(self, c) -> "Weight":
        c = Fraction(c)
        return Weight(tuple(c * a for a in self.root_coords))

    __rmul__ = __mul__

    def __truediv__(self, c) -> "Weight":
        c = Fraction(c)
        return Weight(tuple(a / c for a in self.root_coords))

    @property
    def rank(self) -> int:
        return len(self.root_coords)

    def in_root_lattice(self) -> bool:
        return all(c.denominator == 1 for c in self.root_coords)

    def is_zero(self) -> bool:
        return not any(self.root_coords)

    def __repr__(self):
        return "Weight(" + ", ".join(str(c) for c in self.root_coords) + ")"


def cartan_matrix(t: LieType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix in Bourbaki labelling with ``C[i][j] = <alpha_j, alpha_i^vee>``."""
    n = t.rank
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, cij=-1, cji=-1):
        C[i][j] = cij
        C[j][i] = cji

    s = t.series
    if s in "ABC":
        for i in range(n - 1):
            link(i, i + 1)
        if s == "B":
            link(n - 2, n - 1, -1, -2)  # alpha_n short
        elif s == "C":
            link(n - 2, n - 1, -2, -1)  # alpha_n long
    elif s == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif s == "E":
        for i, j in [(0, 2), (2, 3), (3, 4), (1, 3)] + [(k, k + 1) for k in range(4, n - 1)]:
            link(i, j)
    elif s == "F":
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    elif s == "G":
        link(0, 1, -3, -1)
    return tuple(tuple(row) for row in C)


def _symmetrizer(C) -> list[Fraction]:
    """Half squared lengths ``(alpha_i, alpha_i)/2`` with the longest equal to 1."""
    n = len(C)
    s: list[Fraction | None] = [None] * n
    s[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and C[i][j] and s[j] is None:
                s[j] = s[i] * C[i][j] / C[j][i]
                stack.append(j)
    top = max(s)
    return [x / top for x in s]


def _positive_roots(C) -> list[tuple[int, ...]]:
    """Positive roots in root coordinates by closure under simple-root strings."""
    n = len(C)
    simple = [tuple(int(i == k) for k in range(n)) for i in range(n)]
    roots = list(simple)
    seen = set(roots)
    level = list(simple)
    while level:
        nxt = []
        for beta in level:
            for i in range(n):
                pairing = sum(C[i][j] * beta[j] for j in range(n))
                r = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in seen:
                        r += 1
                    else:
                        break
                if beta == simple[i]:
                    continue
                if r - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in seen:
                        seen.add(up)
                        nxt.append(up)
                        roots.append(up)
        level = nxt
    return sorted(roots, key=lambda r: (sum(r), r))


def _frac_matrix(M) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(Fraction(int(sympy.fraction(x)[0]), int(sympy.fraction(x)[1])) for x in row)
                 for row in M.tolist())


@dataclass(frozen=True, eq=False)
class RootDatum:
    lie_type: LieType
    cartan: tuple[tuple[int, ...], ...]
    gram: tuple[tuple[Fraction, ...], ...]
    positive_roots: tuple[Weight, ...]
    rho: Weight
    coxeter: int
    dual_coxeter: int
    labels: tuple[int, ...]
    colabels: tuple[int, ...]
    j_set: tuple[int, ...]
    short_len: Fraction
    sigma_bar: dict = field(default_factory=dict)
    i_of_j: dict = field(default_factory=dict)

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    @property
    def simply_laced(self) -> bool:
        return self.lie_type.simply_laced

    def __repr__(self):
        return f"RootDatum({self.lie_type})"

    # -- basis changes -------------------------------------------------------

    @cached_property
    def _cartan_inv(self) -> tuple[tuple[Fraction, ...], ...]:
        return _frac_matrix(sympy.Matrix(self.cartan).inv())

    @cached_property
    def fundamental_root_coords(self) -> tuple[tuple[Fraction, ...], ...]:
        """Row i holds the root coordinates of the i-th fundamental weight."""
        Ci = self._cartan_inv
        n = self.rank
        return tuple(tuple(Ci[j][i] for j in range(n)) for i in range(n))

    def weight(self, wcoords: Sequence) -> Weight:
        """Weight with the given coordinates in the fundamental-weight basis."""
        if len(wcoords) != self.rank:
            raise PreconditionError(f"expected {self.rank} coordinates, got {len(wcoords)}")
        Ci = self._cartan_inv
        w = [Fraction(c) for c in wcoords]
        return Weight(tuple(sum(Ci[j][k] * w[k] for k in range(self.rank)) for j in range(self.rank)))

    def root(self, rcoords: Sequence) -> Weight:
        if len(rcoords) != self.rank:
            raise PreconditionError(f"expected {self.rank} coordinates, got {len(rcoords)}")
        return Weight(tuple(rcoords))

    def weight_coords(self, x: Weight) -> tuple[Fraction, ...]:
        C = self.cartan
        r = x.root_coords
        return tuple(sum(C[i][j] * r[j] for j in range(self.rank)) for i in range(self.rank))

    def int_weight_coords(self, x: Weight) -> tuple[int, ...]:
        w = self.weight_coords(x)
        if any(c.denominator != 1 for c in w):
            raise PreconditionError(f"{x} is not an integral weight")
        return tuple(int(c) for c in w)

    def in_weight_lattice(self, x: Weight) -> bool:
        return all(c.denominator == 1 for c in self.weight_coords(x))

    def is_dominant(self, x: Weight) -> bool:
        return all(c >= 0 for c in self.weight_coords(x))

    def is_dominant_integral(self, x: Weight) -> bool:
        return all(c >= 0 and c.denominator == 1 for c in self.weight_coords(x))

    def fundamental(self, i: int) -> Weight:
        """Fundamental weight for 1 <= i <= rank; index 0 gives the zero weight."""
        if i == 0:
            return self.zero
        return Weight(self.fundamental_root_coords[i - 1])

    def simple_root(self, i: int) -> Weight:
        return Weight(tuple(int(k == i - 1) for k in range(self.rank)))

    @property
    def zero(self) -> Weight:
        return Weight((0,) * self.rank)

    @property
    def theta(self) -> Weight:
        return self.positive_roots[-1]

    # -- bilinear form -------------------------------------------------------

    def inner(self, x: Weight, y: Weight) -> Fraction:
        G = self.gram
        a, b = x.root_coords, y.root_coords
        n = self.rank
        return sum((a[i] * G[i][j] * b[j] for i in range(n) for j in range(n)), Fraction(0))

    def norm2(self, x: Weight) -> Fraction:
        return self.inner(x, x)

    def coroot_pairing(self, x: Weight, i: int) -> Fraction:
        """``<x, alpha_i^vee>`` for simple index 1 <= i <= rank."""
        return self.weight_coords(x)[i - 1]

    @cached_property
    def weight_gram(self) -> tuple[tuple[Fraction, ...], ...]:
        """``(Lambda_i, Lambda_j)`` for fundamental weights."""
        F = self.fundamental_root_coords
        G = self.gram
        n = self.rank
        return tuple(tuple(sum(F[i][a] * G[a][b] * F[j][b] for a in range(n) for b in range(n))
                           for j in range(n)) for i in range(n))

    @cached_property
    def scaled_weight_gram(self) -> tuple[int, tuple[tuple[int, ...], ...]]:
        """``(K, M)`` with ``M = K * weight_gram`` integral, for integer inner products."""
        WG = self.weight_gram
        K = lcm(*(x.denominator for row in WG for x in row))
        return K, tuple(tuple(int(x * K) for x in row) for row in WG)

    def scaled_inner_w(self, a: Sequence[int], b: Sequence[int]) -> int:
        """``K * (a, b)`` for weight-coordinate integer vectors."""
        _, M = self.scaled_weight_gram
        n = self.rank
        return sum(a[i] * M[i][j] * b[j] for i in range(n) for j in range(n) if a[i] and b[j])

    # -- cached integer views ------------------------------------------------

    @cached_property
    def rho_w(self) -> tuple[int, ...]:
        return (1,) * self.rank

    @cached_property
    def positive_roots_w(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.int_weight_coords(a) for a in self.positive_roots)

    @cached_property
    def simple_roots_w(self) -> tuple[tuple[int, ...], ...]:
        """Weight coordinates of the simple roots (columns of the Cartan matrix)."""
        C = self.cartan
        return tuple(tuple(C[i][j] for i in range(self.rank)) for j in range(self.rank))

    def dominate_w(self, w: Sequence[int]) -> tuple[int, ...]:
        """Dominant Weyl conjugate of an integral weight given by weight coordinates."""
        w = list(w)
        cols = self.simple_roots_w
        n = self.rank
        while True:
            for i in range(n):
                if w[i] < 0:
                    c = w[i]
                    col = cols[i]
                    for k in range(n):
                        w[k] -= c * col[k]
                    break
            else:
                return tuple(w)

    def coset_index(self, x: Weight) -> int:
        """The j in J with x in Lambda_j + Q."""
        for j in self.j_set:
            diff = x - self.fundamental(j)
            if diff.in_root_lattice():
                return j
        raise PreconditionError(f"{x} is not in the weight lattice")

    def coset_order(self, x: Weight) -> int:
        """Order of the class of x in P/Q."""
        k = 1
        while not (x * k).in_root_lattice():
            k += 1
        return k

    @cached_property
    def affine_cartan(self) -> tuple[tuple[int, ...], ...]:
        """Affine Cartan matrix, index 0 for the affine node."""
        n = self.rank
        th = self.theta
        C = self.cartan
        th_w = self.weight_coords(th)
        A = [[0] * (n + 1) for _ in range(n + 1)]
        A[0][0] = 2
        for j in range(1, n + 1):
            A[0][j] = int(-self.inner(th, self.simple_root(j)) * 2 / self.norm2(th))
            A[j][0] = int(-th_w[j - 1])
            for i in range(1, n + 1):
                A[i][j] = C[i - 1][j - 1]
        return tuple(tuple(r) for r in A)


def _null_vector(A) -> list[int]:
    ns = sympy.Matrix(A).nullspace()
    if len(ns) != 1:
        raise RuntimeError("affine Cartan matrix does not have corank 1")
    v = ns[0] / ns[0][0]
    return [int(x) for x in v]


@lru_cache(maxsize=None)
def build_root_datum(t: LieType | str) -> RootDatum:
    if isinstance(t, str):
        t = LieType.parse(t)
    from .weylgroup import sigma_bar_element

    C = cartan_matrix(t)
    n = t.rank
    s = _symmetrizer(C)
    gram = tuple(tuple(s[i] * C[i][j] for j in range(n)) for i in range(n))
    assert all(gram[i][j] == gram[j][i] for i in range(n) for j in range(n))
    roots = tuple(Weight(r) for r in _positive_roots(C))
    rho = Weight(tuple(sum((r.root_coords[k] for r in roots), Fraction(0)) / 2 for k in range(n)))
    base = RootDatum(t, C, gram, roots, rho, 0, 0, (), (), (), min(2 * x for x in s))

    labels = _null_vector(base.affine_cartan)
    colabels = _null_vector(sympy.Matrix(base.affine_cartan).T)
    j_set = tuple(i for i in range(n + 1) if labels[i] == 1 and colabels[i] == 1)
    d = RootDatum(t, C, gram, roots, rho, sum(labels), sum(colabels), tuple(labels),
                  tuple(colabels), j_set, base.short_len)

    for j in j_set:
        sig = sigma_bar_element(d, j)
        d.sigma_bar[j] = sig
        image = sig.inverse().act(d.fundamental(j))
        for i in j_set:
            if -image == d.fundamental(i):
                d.i_of_j[j] = i
                break
        else:  # pragma: no cover
            raise RuntimeError(f"no partner index for j={j}")
    return d


def sigma_data(d: RootDatum, j: int) -> tuple["WeylElement", int, int]:
    """``(sigma_bar_j, i, sign)`` for j in J."""
    if j not in d.j_set:
        raise PreconditionError(f"{j} is not in J = {list(d.j_set)} for {d.lie_type}")
    sig = d.sigma_bar[j]
    return sig, d.i_of_j[j], sig.sign


def inner(d: RootDatum, x: Weight, y: Weight) -> Fraction:
    return d.inner(x, y)


def parse_lie_type(text: str) -> LieType:
    return LieType.parse(text)

