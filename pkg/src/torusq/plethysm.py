"""Adams operations on characters and the resulting plethysm coefficients.

psi_p(ch L(lam)) times the Weyl denominator is the signed sum
sum_{mu, w} sign(w) m_lam(mu) e^{p mu + w rho}.  Its coefficient at a strictly
dominant weight mu'' is the multiplicity of ch L(mu'' - rho) in psi_p(ch L(lam)).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .errors import PreconditionError
from .multiplicity import MultTable, weight_system
from .rootdata import RootDatum, Weight
from .weylgroup import WeylGroup


@dataclass(frozen=True, eq=False)
class SignedSupport:
    datum: RootDatum
    lam: Weight
    p: int
    coeffs_w: dict  # weight coords -> nonzero signed integer

    @property
    def coeffs(self) -> dict[Weight, int]:
        return {self.datum.weight(w): c for w, c in self.coeffs_w.items()}

    def coefficient(self, mu: Weight) -> int:
        return self.coeffs_w.get(self.datum.int_weight_coords(mu), 0)


def adams_signed_support(d: RootDatum, g: WeylGroup, lam: Weight, p: int,
                         table: MultTable | None = None) -> SignedSupport:
    if p < 1:
        raise PreconditionError(f"p must be positive, got {p}")
    table = table or weight_system(d, lam)
    rho_imgs = [tuple(int(x) for x in row) for row in g.rho_images()]
    signs = [int(s) for s in g.signs]
    acc: dict = defaultdict(int)
    for mu, m in table.full_support_w().items():
        pm = tuple(p * x for x in mu)
        for img, s in zip(rho_imgs, signs):
            acc[tuple(a + b for a, b in zip(pm, img))] += s * m
    return SignedSupport(d, lam, p, {w: c for w, c in acc.items() if c})


def plethysm_coeffs_w(d: RootDatum, g: WeylGroup, lam: Weight, p: int,
                      table: MultTable | None = None) -> dict[tuple[int, ...], int]:
    sup = adams_signed_support(d, g, lam, p, table)
    # weights on a wall carry coefficient zero by antisymmetry and are skipped
    return {tuple(x - 1 for x in w): c for w, c in sup.coeffs_w.items() if min(w) > 0}


def plethysm_coeffs(d: RootDatum, g: WeylGroup, lam: Weight, p: int) -> dict[Weight, int]:
    """Coefficients m with psi_p(ch L(lam)) = sum_mu m[mu] ch L(mu)."""
    return {d.weight(w): c for w, c in plethysm_coeffs_w(d, g, lam, p).items()}
