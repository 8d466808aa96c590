"""The free-quotient construction: F free nilpotent, alpha from a matrix, L = F / I.

I is the ideal generated by the image of r(alpha); r then annihilates the
induced map on L by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import IdentityFails
from ..polycore import RatPoly, as_intpoly, as_ratpoly, companion_matrix
from .hall import HallBasis, extend_endomorphism, free_nilpotent
from .modules import Submodule
from .ring import (
    LieEndo,
    LieRing,
    class_lie,
    ideal_generated_by,
    induced_endo,
    lie_evaluate,
    linear_image,
    quotient,
)


@dataclass
class FreeQuotient:
    free: LieRing
    hall: HallBasis
    alpha: LieEndo
    ideal: Submodule
    quotient: LieRing
    endo: LieEndo
    class_: int | None

    @property
    def ideal_dimension(self) -> int:
        return self.ideal.rank


def block_diagonal(*blocks) -> list:
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, c in enumerate(row):
                out[off + i][off + j] = c
        off += len(b)
    return out


def default_matrix(r, doubled: bool = False) -> list:
    """Companion matrix of r, or two copies of it on the diagonal."""
    c = [[int(x) for x in row] for row in companion_matrix(as_intpoly(r)).tolist()]
    return block_diagonal(c, c) if doubled else c


def free_quotient(r, k: int, matrix=None, doubled: bool = False, cap: int = 200) -> FreeQuotient:
    """Build F (free k-step nilpotent over Q), extend ``matrix`` to alpha and pass to F / I."""
    r = as_intpoly(r)
    mat = default_matrix(r, doubled) if matrix is None else [list(row) for row in matrix]
    F, h = free_nilpotent(len(mat), k, "Q", cap=cap)
    alpha = extend_endomorphism(F, mat)
    ideal = ideal_generated_by(F, linear_image(lie_evaluate(r, alpha)).generators())
    Q, _ = quotient(F, ideal)
    endo = induced_endo(F, ideal, alpha, Q)
    if not lie_evaluate(r, endo).is_zero():
        raise IdentityFails("r does not annihilate the induced endomorphism")
    return FreeQuotient(F, h, alpha, ideal, Q, endo, class_lie(Q))


# -- root conditions in a simple extension ---------------------------------------


def _reduce(p: RatPoly, modulus: RatPoly) -> RatPoly:
    return p % modulus


def root_condition_length(r, field_poly, lam, mu, cap: int = 16) -> int:
    """Largest k <= cap with r(lam mu) = ... = r(lam mu^(k-1)) = 0, plus r(lam) = r(mu) = 0.

    ``lam`` and ``mu`` are polynomials in x standing for elements of
    Q[x]/(field_poly); the arithmetic is exact. Returns 0 if lam or mu is not
    a root of r, else at least 1.
    """
    r = as_intpoly(r)
    s, lam, mu = as_ratpoly(field_poly), as_ratpoly(lam), as_ratpoly(mu)

    def r_at(z: RatPoly) -> RatPoly:
        acc = RatPoly([])
        for c in reversed(r.coeffs):
            acc = _reduce(acc * z + RatPoly([Fraction(c)]), s)
        return acc

    if r_at(lam) or r_at(mu):
        return 0
    k = 1
    z = _reduce(lam * mu, s)
    while k < cap and not r_at(z):
        k += 1
        z = _reduce(z * mu, s)
    return k


__all__ = ["FreeQuotient", "block_diagonal", "default_matrix", "free_quotient",
           "root_condition_length"]
