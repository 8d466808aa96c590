"""Class bound for Lie rings carrying an endomorphism annihilated by a good polynomial."""

from __future__ import annotations

from math import gcd

from ..errors import HypothesisViolated, IdentityFails
from ..groups.theorems import Verdict
from ..invariants import discr_star, is_good, prod_star
from ..polycore import as_intpoly
from .ring import LieEndo, class_lie, lie_evaluate


def has_additive_torsion(L, n: int) -> bool:
    """Does (L, +) contain a nonzero element killed by n?"""
    ring = L.ring
    if ring.tag in ("Q", "Z") or L.rank == 0:
        return False
    return gcd(ring.m, n) > 1


def verify_lie_class_bound(gamma: LieEndo, r) -> Verdict:
    """r good, r(gamma) = 0 and no Discr* Prod* torsion imply class <= d^(2^d)."""
    L = gamma.L
    r = as_intpoly(r)
    good, witness = is_good(r)
    if not good:
        raise HypothesisViolated("good polynomial", f"{r} is bad: {witness}")
    if not lie_evaluate(r, gamma).is_zero():
        raise IdentityFails("r(gamma) is not the zero map")
    dp = discr_star(r) * prod_star(r)
    if has_additive_torsion(L, dp):
        raise HypothesisViolated("torsion", f"(L, +) has torsion dividing {dp}")
    d = r.degree
    bound = d ** (2 ** d)
    c = class_lie(L)
    passed = c is not None and c <= bound
    return Verdict("lie_class_bound", passed, "class_bound",
                   {"r": str(r), "degree": d, "discr_prod": dp, "class": c, "bound": bound,
                    "rank": L.rank, "ring": str(L.ring)})


__all__ = ["has_additive_torsion", "verify_lie_class_bound"]
