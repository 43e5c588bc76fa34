"""Finite Weyl group: full enumeration, action on weights, dominant representatives."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import InternalConsistencyError
from .rootdata import RootDatum, Weight

# Weyl group orders above this are enumerated with a warning.
_LARGE_ORDER = 100_000


def _simple_root_matrix(C, i: int) -> np.ndarray:
    """Reflection r_i on root coordinates: x -> x - <x, alpha_i^vee> alpha_i."""
    n = len(C)
    M = np.eye(n, dtype=np.int64)
    M[i, :] -= np.asarray(C[i], dtype=np.int64)
    return M


def _simple_weight_matrix(C, i: int) -> np.ndarray:
    """Reflection r_i on weight coordinates: w -> w - w_i * (column i of C)."""
    n = len(C)
    M = np.eye(n, dtype=np.int64)
    M[:, i] -= np.asarray([C[k][i] for k in range(n)], dtype=np.int64)
    return M


@dataclass(frozen=True, eq=False)
class WeylElement:
    """An element of the finite Weyl group.

    ``matrix`` acts on root coordinates and ``wmatrix`` on weight coordinates;
    ``word`` is a reduced word ``(i1, ..., ik)`` (1-based) for r_i1 ... r_ik.
    """

    matrix: tuple[tuple[int, ...], ...]
    wmatrix: tuple[tuple[int, ...], ...]
    length: int
    word: tuple[int, ...] = field(default=())

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.wmatrix == other.wmatrix

    def __hash__(self):
        return hash(self.wmatrix)

    def __repr__(self):
        w = "".join(f"r{i}" for i in self.word) or "1"
        return f"WeylElement({w})"

    def act(self, x: Weight) -> Weight:
        M = self.matrix
        r = x.root_coords
        n = len(r)
        return Weight(tuple(sum((M[i][j] * r[j] for j in range(n)), Fraction(0)) for i in range(n)))

    def act_w(self, w: Sequence[int]) -> tuple[int, ...]:
        M = self.wmatrix
        n = len(w)
        return tuple(sum(M[i][j] * w[j] for j in range(n)) for i in range(n))

    def inverse(self) -> "WeylElement":
        R = np.linalg.inv(np.array(self.matrix, dtype=float)).round().astype(np.int64)
        Wm = np.linalg.inv(np.array(self.wmatrix, dtype=float)).round().astype(np.int64)
        word = tuple(reversed(self.word))
        return WeylElement(_tup(R), _tup(Wm), self.length, word)


def _tup(M) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(x) for x in row) for row in M)


def _ascent_word(C, v: Sequence) -> list[int]:
    """Simple-reflection ascent of v (weight coordinates) to the dominant chamber.

    Returns indices (1-based) i1, ..., ik in application order; the element
    u = r_i1 r_i2 ... r_ik then satisfies u(dominant) = v.
    """
    v = list(v)
    n = len(v)
    out = []
    while True:
        for i in range(n):
            if v[i] < 0:
                c = v[i]
                for k in range(n):
                    v[k] -= c * C[k][i]
                out.append(i + 1)
                break
        else:
            return out


def element_from_word(d: RootDatum, word: Sequence[int]) -> WeylElement:
    """The product r_i1 r_i2 ... r_ik (1-based indices), assumed reduced."""
    n = d.rank
    R = np.eye(n, dtype=np.int64)
    Wm = np.eye(n, dtype=np.int64)
    for i in word:
        R = R @ _simple_root_matrix(d.cartan, i - 1)
        Wm = Wm @ _simple_weight_matrix(d.cartan, i - 1)
    return WeylElement(_tup(R), _tup(Wm), len(word), tuple(word))


def element_from_rho_image(d: RootDatum, v: Sequence[int]) -> WeylElement:
    """The unique element u with u(rho) = v (v in weight coordinates)."""
    steps = _ascent_word(d.cartan, v)
    return element_from_word(d, steps)


def sigma_bar_element(d: RootDatum, j: int) -> WeylElement:
    """The finite Weyl element sending the simple roots to {alpha_k (k != j), -theta}.

    Built as w0^(j) w0, where w0^(j) is the longest element of the parabolic
    subgroup fixing Lambda_j: its image of rho is the ascent of -rho using only
    reflections other than r_j.
    """
    n = d.rank
    if j == 0:
        return element_from_word(d, ())
    C = d.cartan
    v = [-1] * n
    while True:
        for i in range(n):
            if i != j - 1 and v[i] < 0:
                c = v[i]
                for k in range(n):
                    v[k] -= c * C[k][i]
                break
        else:
            break
    sig = element_from_rho_image(d, v)
    target = {d.simple_root(k) for k in range(1, n + 1) if k != j} | {-d.theta}
    got = {sig.act(d.simple_root(k)) for k in range(1, n + 1)}
    if got != target:
        raise InternalConsistencyError(f"sigma_bar_{j} construction failed for {d.lie_type}")
    return sig


@dataclass(frozen=True, eq=False)
class WeylGroup:
    datum: RootDatum
    elements: tuple[WeylElement, ...]
    longest: int
    wmats: np.ndarray
    lengths: np.ndarray

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def signs(self) -> np.ndarray:
        return np.where(self.lengths % 2 == 1, -1, 1)

    @property
    def w0(self) -> WeylElement:
        return self.elements[self.longest]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def lookup(self, w: WeylElement) -> WeylElement:
        """The group's canonical copy (BFS-minimal word) of an element."""
        return self.elements[self._index[w.wmatrix]]

    @property
    def _index(self) -> dict:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {e.wmatrix: k for k, e in enumerate(self.elements)}
            object.__setattr__(self, "_idx", idx)
        return idx

    def rho_images(self) -> np.ndarray:
        """Array of w(rho) in weight coordinates, one row per element."""
        return self.wmats.sum(axis=2)


_GROUPS: dict = {}


def enumerate_weyl(d: RootDatum) -> WeylGroup:
    """Breadth-first enumeration by right multiplication with simple reflections.

    BFS depth equals length, and scanning a level in lexicographic word order
    with ascending reflection index gives each element its lexicographically
    least reduced word.
    """
    key = d.lie_type
    if key in _GROUPS:
        return _GROUPS[key]
    n = d.rank
    C = d.cartan
    SR = [_simple_root_matrix(C, i) for i in range(n)]
    SW = [_simple_weight_matrix(C, i) for i in range(n)]
    rho = np.ones(n, dtype=np.int64)
    ident = np.eye(n, dtype=np.int64)
    mats_r = [ident]
    mats_w = [ident]
    words = [()]
    seen = {tuple(rho)}
    frontier = [0]
    warned = False
    while frontier:
        nxt = []
        for k in frontier:
            for i in range(n):
                Mw = mats_w[k] @ SW[i]
                img = tuple(Mw @ rho)
                if img in seen:
                    continue
                seen.add(img)
                mats_w.append(Mw)
                mats_r.append(mats_r[k] @ SR[i])
                words.append(words[k] + (i + 1,))
                nxt.append(len(words) - 1)
                if not warned and len(words) > _LARGE_ORDER:
                    warnings.warn(f"Weyl group of {d.lie_type} is large; enumeration is expensive")
                    warned = True
        frontier = nxt
    elements = tuple(WeylElement(_tup(R), _tup(W), len(wd), wd)
                     for R, W, wd in zip(mats_r, mats_w, words))
    lengths = np.array([len(w) for w in words], dtype=np.int64)
    g = WeylGroup(d, elements, int(np.argmax(lengths)), np.stack(mats_w), lengths)
    _GROUPS[key] = g
    return g


def act(w: WeylElement, x: Weight) -> Weight:
    return w.act(x)


def dominant_representative(d: RootDatum, g: WeylGroup, x: Weight) -> tuple[Weight, WeylElement]:
    """Dominant conjugate y of x together with the minimal-length w with w x = y."""
    v = list(d.weight_coords(x))
    n = d.rank
    C = d.cartan
    applied = []
    while True:
        for i in range(n):
            if v[i] < 0:
                c = v[i]
                for k in range(n):
                    v[k] -= c * C[k][i]
                applied.append(i + 1)
                break
        else:
            break
    # w = r_ik ... r_i1
    w = element_from_word(d, tuple(reversed(applied)))
    return d.weight(v), g.lookup(w)
