"""Passing between finite groups and Lie rings.

Two directions: the associated graded Lie ring of a p-group, and the class-2
BCH group x * y = x + y + [x, y]/2 on a Lie ring over Z/m with m odd.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from ..cyclotomic import factorize
from ..errors import ClassTooHigh, EvenModulus, HypothesisViolated, IdentityFails, NotPGroup
from ..groups.core import FiniteGroup, GroupMap
from ..groups.identities import IdentityDecomposition, is_identity
from ..groups.series import lower_central_series
from ..polycore import IntPoly, Matrix, as_intpoly, char_poly
from .modules import CoeffRing, solve_in_basis
from .ring import LieEndo, LieRing, class_lie, lie_evaluate, lower_central_series_lie


# -- associated graded Lie ring -----------------------------------------------


class _HomocyclicFactor:
    """Z/q coordinates on A/B when A/B is homocyclic of exponent q."""

    def __init__(self, g: FiniteGroup, a: list, b: frozenset, preferred=()):
        tb = g.table
        coset = {}
        for x in sorted(a):
            if x in coset:
                continue
            for y in b:
                coset[tb[x][y]] = x
        self.coset = coset
        reps = sorted(set(coset.values()))
        e = g.identity

        def order(x):
            k, y = 1, coset[x]
            while y != coset[e]:
                y = coset[tb[y][x]]
                k += 1
            return k

        q = max(order(x) for x in reps)
        self.q = q
        span = {coset[e]: ()}
        basis = []
        aset = set(a)
        order_tried = [x for x in preferred if x in aset] + reps
        for x in order_tried:
            if len(span) == len(reps):
                break
            if order(x) != q:
                continue
            new = {}
            for rep, vec in span.items():
                y = rep
                for j in range(q):
                    new.setdefault(coset[y], vec + (j,))
                    y = coset[tb[y][x]]
            if len(new) == len(span) * q:
                basis.append(x)
                span = new
        if len(span) != len(reps):
            raise HypothesisViolated("homocyclic",
                                     "a lower central factor is not homocyclic of one exponent")
        self.basis = basis
        self.span = span

    def coords(self, x: int) -> tuple:
        vec = self.span[self.coset[x]]
        return vec + (0,) * (len(self.basis) - len(vec))


@dataclass
class AssociatedGraded:
    ring: LieRing
    endo: LieEndo | None
    degrees: list  # degree of each basis vector
    exponent: int
    components: list = field(default_factory=list)  # basis indices per degree

    def annihilated_by(self, r) -> bool:
        """Does r(induced) vanish on every homogeneous component?"""
        if self.endo is None:
            raise ValueError("no endomorphism was supplied")
        ev = lie_evaluate(r, self.endo)
        return ev.is_zero()


def _prime_of(n: int) -> int:
    fac = factorize(n)
    if len(fac) != 1:
        raise NotPGroup(f"order {n} is not a prime power")
    return next(iter(fac))


def associated_graded_lie_ring(g: FiniteGroup, gamma: GroupMap | None = None,
                               deco: IdentityDecomposition | None = None) -> AssociatedGraded:
    """Sum of the lower central factors with the commutator bracket.

    Every factor must be homocyclic of the same exponent q; the ring is then
    Z/q. With ``deco`` given and confirmed as an identity of gamma on g, the
    induced map is checked to be annihilated by its total polynomial.
    """
    if g.order == 1:
        raise NotPGroup("the trivial group has no prime")
    _prime_of(g.order)
    series = lower_central_series(g)
    preferred = []
    if g.tag == "abelian":
        # unit vectors first, so matrix maps keep their matrix
        k = len(g.params)
        preferred = [g.idx(tuple(int(i == j) for j in range(k))) for i in range(k)]
    factors = [_HomocyclicFactor(g, sorted(a), frozenset(b), preferred)
               for a, b in zip(series, series[1:])]
    qs = {f.q for f in factors}
    if len(qs) != 1:
        raise HypothesisViolated("homocyclic", "lower central factors have different exponents")
    q = qs.pop()
    ring = CoeffRing(f"Zmod:{q}")
    offsets, degrees = [], []
    for d, f in enumerate(factors, start=1):
        offsets.append(len(degrees))
        degrees.extend([d] * len(f.basis))
    n = len(degrees)
    elems = [x for f in factors for x in f.basis]

    def embed(deg: int, x: int) -> list:
        v = [0] * n
        if deg <= len(factors):
            for i, c in enumerate(factors[deg - 1].coords(x)):
                v[offsets[deg - 1] + i] = c
        return v

    brackets = {}
    for a in range(n):
        for b in range(a + 1, n):
            da, db = degrees[a], degrees[b]
            comm = g.commutator(elems[a], elems[b])
            vec = embed(da + db, comm)
            if any(vec):
                brackets[(a, b)] = dict(enumerate(vec))
    L = LieRing(n, ring, brackets, labels=[f"g{degrees[i]}.{i}" for i in range(n)])
    endo = None
    if gamma is not None:
        cols = [embed(degrees[j], gamma.img[elems[j]]) for j in range(n)]
        endo = LieEndo(L, [[cols[j][i] for j in range(n)] for i in range(n)])
    comps = [list(range(offsets[d], offsets[d] + len(f.basis))) for d, f in enumerate(factors)]
    out = AssociatedGraded(L, endo, degrees, q, comps)
    if deco is not None:
        if gamma is None:
            raise ValueError("a decomposition needs an endomorphism")
        if is_identity(g, gamma, deco) and not out.annihilated_by(deco.total):
            raise IdentityFails("the total polynomial does not vanish on the graded ring")
    return out


# -- class-2 BCH groups -----------------------------------------------------------


def bch_group(L: LieRing) -> FiniteGroup:
    """The group x * y = x + y + [x, y]/2 on the elements of L (Z/m, m odd, class <= 2)."""
    ring = L.ring
    if ring.tag != "Zmod":
        raise ValueError("BCH groups are built on finite Lie rings over Z/m")
    m = ring.m
    if m % 2 == 0:
        raise EvenModulus("2 must be invertible")
    c = class_lie(L)
    if c is None or c > 2:
        raise ClassTooHigh(f"class {c} exceeds 2")
    half = pow(2, -1, m)
    elements = list(itertools.product(range(m), repeat=L.rank))

    def mul(x, y):
        br = L.bracket(x, y)
        return tuple((a + b + half * z) % m for a, b, z in zip(x, y, br))

    return FiniteGroup.from_function(elements, mul, tag="bch", params=(str(ring), L.rank),
                                     check=True)


def bch_automorphism(g: FiniteGroup, endo: LieEndo) -> GroupMap:
    """The map on a BCH group given by a Lie endomorphism (homomorphism property checked)."""
    return GroupMap(g, lambda v: tuple(endo(v)), name="bch")


# -- characteristic polynomials over the rationals ---------------------------------


@dataclass
class MalcevVerdict:
    passed: bool
    chi: IntPoly | None
    factor_chis: list
    integral: bool
    exponent: int | None  # least N with chi | (prod r_i)^N
    details: dict

    def __bool__(self):
        return self.passed


def _adapted_basis(L: LieRing, series: list) -> tuple:
    """Basis refining the flag Gamma_1 > Gamma_2 > ..., with the block of each factor."""
    ring = L.ring
    basis, blocks = [], []
    for term in reversed(series[:-1]):
        block = []
        for v in term.generators():
            if not basis or solve_in_basis(ring, basis, v) is None:
                basis.append(v)
                block.append(len(basis) - 1)
        blocks.append(block)
    blocks.reverse()
    return basis, blocks


def malcev_charpoly_check(L: LieRing, gamma: LieEndo, rs) -> MalcevVerdict:
    """chi of gamma, computed on the lower central factors, divides a power of prod r_i."""
    if L.ring.tag != "Q":
        raise HypothesisViolated("rational", "the Lie ring must be over Q")
    series = lower_central_series_lie(L)
    if not series[-1].is_zero():
        raise HypothesisViolated("nilpotent", "the Lie ring is not nilpotent")
    basis, blocks = _adapted_basis(L, series)
    n = L.rank
    coords = [solve_in_basis(L.ring, basis, gamma(v)) for v in basis]
    factor_chis = []
    for block in blocks:
        mat = Matrix([[coords[j][i] for j in block] for i in block]) if block else None
        factor_chis.append(char_poly(mat) if block else None)
    chi_rat = char_poly(Matrix([list(row) for row in gamma.matrix]))
    prod = None
    for c in factor_chis:
        if c is not None:
            prod = c if prod is None else prod * c
    if prod != chi_rat:
        raise AssertionError("factor characteristic polynomials disagree with the full one")
    integral = chi_rat.is_integral()
    chi = chi_rat.to_int() if integral else None
    target = IntPoly([1])
    for r in rs:
        target = target * as_intpoly(r)
    exponent = None
    if integral:
        power = IntPoly([1])
        for N in range(1, n + 1):
            power = power * target
            if chi.divides(power):
                exponent = N
                break
    passed = integral and exponent is not None
    fchis = [c.to_int() if c is not None and c.is_integral() else c for c in factor_chis]
    return MalcevVerdict(passed, chi, fchis, integral, exponent,
                         {"rank": n, "blocks": [len(b) for b in blocks]})


__all__ = [
    "AssociatedGraded", "associated_graded_lie_ring", "bch_group", "bch_automorphism",
    "MalcevVerdict", "malcev_charpoly_check",
]
