"""Integer invariants of r(t) in Z[t]: RRes_u, tcn, Discr*, Prod*, goodness, AF roots.

Nothing here extracts roots; everything reduces to gcds, resultants and
ideal computations in Z[t] and Q[t].
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial, gcd

from .errors import ZeroConstantTerm, ZeroInput
from .polycore import (
    IntPoly,
    RatPoly,
    as_intpoly,
    gcd_many,
    gcd_q,
    ideal_constant,
    kronecker_square_charpoly,
    partial_sum,
    resultant,
    resultant_euclid,
    squarefree_factorization,
)

# Above this Sylvester size the Euclidean route replaces Bareiss elimination.
BAREISS_LIMIT = 40


def _nonzero(r) -> IntPoly:
    r = as_intpoly(r)
    if not r:
        raise ZeroInput("the zero polynomial has no invariants")
    return r


def _lcm(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return a // gcd(a, b) * b


def _det_syl(p: IntPoly, q: IntPoly) -> int:
    if p.degree + q.degree <= BAREISS_LIMIT:
        return resultant(p, q)
    return int(resultant_euclid(p, q))


def rres(r, u: int) -> int:
    """Reduced resultant RRes_u: the constant generator of the ideal of u-periodic partial sums."""
    r = _nonzero(r)
    if u < 2:
        raise ValueError("u must be at least 2")
    return ideal_constant([partial_sum(r, u, j) for j in range(u)])


def rres_table(r) -> dict:
    r = _nonzero(r)
    return {u: rres(r, u) for u in range(2, r.degree + 2)}


def tcn(r) -> int:
    """Periodic congruence number; 1 for nonzero constants."""
    out = 1
    for value in rres_table(r).values():
        out = _lcm(out, value)
        if out == 0:
            break
    return out


def discr_star(r) -> int:
    """Discr*(r) from the square-free factorisation and one Sylvester determinant."""
    r = _nonzero(r)
    if r.degree == 0:
        return r.lc
    d = r.degree
    a = r.lc
    sqf = squarefree_factorization(r)
    m, l, v = sqf.m, sqf.l, sqf.v
    expo = 1 + 2 * d * d - 2 * m * (l - 1) - m
    return a ** expo * factorial(m - 1) * _det_syl(v, v.derivative()) ** m


def coprime_part(w: RatPoly, r) -> RatPoly:
    """Largest monic factor of w sharing no root with r (repeated gcd division)."""
    w = w.monic()
    while True:
        g = gcd_q(w, r)
        if g.degree == 0:
            return w
        w = w // g


def product_polynomial(r) -> IntPoly:
    """w(t) = prod a^2 (t - l_i l_j) over pairs of distinct roots with r(l_i l_j) != 0."""
    r = _nonzero(r)
    a = r.lc
    v = squarefree_factorization(r).v
    chi = kronecker_square_charpoly(v.monic())
    w = coprime_part(chi, r)
    return (w * (a ** (2 * w.degree))).to_int()


def prod_star(r) -> int:
    """Prod*(r) = a^(2(d^2 - deg w)d) det Syl(r, w)."""
    r = _nonzero(r)
    if r.degree == 0:
        return 1
    d = r.degree
    a = r.lc
    w = product_polynomial(r)
    return a ** (2 * (d * d - w.degree) * d) * _det_syl(r, w)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GoodnessWitness:
    """Evidence of badness: r(0) = 0, r(1) = 0, or s(t^(u+1)) | r."""

    u: int | None = None
    s: IntPoly | None = None
    r0_zero: bool = False
    r1_zero: bool = False

    def verify(self, r) -> bool:
        r = as_intpoly(r)
        if self.r0_zero:
            return r(0) == 0
        if self.r1_zero:
            return r(1) == 0
        if self.s is None or self.s.degree < 1 or self.u is None or self.u < 1:
            return False
        target = r * (r(0) * r(1))
        return self.s.substitute_power(self.u + 1).divides(target)


def _periodic_gcd(r: IntPoly, u: int) -> RatPoly:
    """gcd over Q of the polynomials r_{u,j}(t) / t^j."""
    parts = []
    for j in range(u):
        p = partial_sum(r, u, j)
        if p:
            parts.append(IntPoly(p.coeffs[j:]))
    return gcd_many(parts)


def _root_of_power(h: RatPoly, u: int) -> IntPoly:
    """Given h = S(t^u) return S, made primitive with positive leading coefficient."""
    cs = h.coeffs
    assert all(c == 0 for i, c in enumerate(cs) if i % u)
    return RatPoly(cs[::u]).primitive_int().normalized()


def is_good(r):
    """Return (good, witness); the witness is None exactly when r is good."""
    r = _nonzero(r)
    if r(0) == 0:
        return False, GoodnessWitness(r0_zero=True)
    if r(1) == 0:
        return False, GoodnessWitness(r1_zero=True)
    for k in range(2, r.degree + 2):
        if rres(r, k) == 0:
            h = _periodic_gcd(r, k)
            return False, GoodnessWitness(u=k - 1, s=_root_of_power(h, k))
    return True, None


def roots_arithmetically_free(r):
    """Decide whether the roots of r form an arithmetically-free set.

    Returns (True, None) or (False, (u, u, s)) where Phi_u | r and s(t^u) | r.
    The middle entry is the cyclotomic index, equal to u.
    """
    from .cyclotomic import cyclotomic

    r = _nonzero(r)
    if r(0) == 0:
        raise ZeroConstantTerm("roots_arithmetically_free needs r(0) != 0")
    for u in range(1, r.degree + 1):
        if not cyclotomic(u).divides(r):
            continue
        h = _periodic_gcd(r, u)
        if h.degree > 0:
            return False, (u, u, _root_of_power(h, u))
    return True, None


@dataclass(frozen=True)
class InvariantReport:
    r: IntPoly
    r_at_1: int
    tcn: int
    rres_table: dict
    discr_star: int
    prod_star: int
    good: bool
    good_witness: GoodnessWitness | None
    roots_af: bool | None
    af_witness: tuple | None = None
    notes: tuple = field(default=())

    @property
    def quadruple(self):
        return (self.r_at_1, self.tcn, self.discr_star, self.prod_star)


def invariant_report(r) -> InvariantReport:
    r = _nonzero(r)
    table = rres_table(r)
    t = 1
    for value in table.values():
        t = _lcm(t, value)
    good, witness = is_good(r)
    notes = []
    if r(0) == 0:
        af, af_w = None, None
        notes.append("roots_af undefined: r(0) = 0")
    else:
        af, af_w = roots_arithmetically_free(r)
    return InvariantReport(
        r=r,
        r_at_1=r(1),
        tcn=t,
        rres_table=table,
        discr_star=discr_star(r),
        prod_star=prod_star(r),
        good=good,
        good_witness=witness,
        roots_af=af,
        af_witness=af_w,
        notes=tuple(notes),
    )
