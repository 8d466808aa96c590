"""Lower central series, torsion, and characteristic-polynomial identities along a series."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..cyclotomic import factorize
from ..errors import FactorNotElementaryAbelian, IdentityFails, SeriesNotInvariant
from ..polycore import IntPoly, Matrix, char_poly
from .core import FiniteGroup, GroupMap
from .identities import IdentityDecomposition, compose_identities, is_identity


def lower_central_series(g: FiniteGroup) -> list:
    """[G = Gamma_1, Gamma_2, ...] ending at the first repeated term."""
    got = g._cache.get("lcs")
    if got is not None:
        return list(got)
    series = [g.whole()]
    while True:
        nxt = g.commutator_subgroup(series[-1], range(g.order))
        if nxt == series[-1]:
            break
        series.append(nxt)
        if len(nxt) == 1:
            break
    g._cache["lcs"] = tuple(series)
    return series


def nilpotency_class(g: FiniteGroup) -> int | None:
    """Least c with Gamma_{c+1} trivial; None when the series stalls. The trivial group has class 0."""
    series = lower_central_series(g)
    if len(series[-1]) != 1:
        return None
    return len(series) - 1


def derived_series(g: FiniteGroup) -> list:
    series = [g.whole()]
    while True:
        nxt = g.commutator_subgroup(series[-1], series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)


def is_solvable(g: FiniteGroup) -> bool:
    return len(derived_series(g)[-1]) == 1


def has_n_torsion(g: FiniteGroup, n: int) -> bool:
    """Some x != 1 with x^n = 1. Every element satisfies x^0 = 1."""
    orders = g.orders()
    return any(n % o == 0 for x, o in enumerate(orders) if x != g.identity)


def _divides_power_of(o: int, n: int) -> bool:
    if n == 0:
        return True
    n = abs(n)
    return all(n % p == 0 for p in factorize(o))


def is_n_group(g: FiniteGroup, n: int, subset=None) -> bool:
    """Every element order divides some power of n."""
    orders = g.orders()
    xs = range(g.order) if subset is None else subset
    return all(_divides_power_of(orders[x], n) for x in xs)


# -- series with elementary abelian factors -------------------------------


@dataclass(frozen=True)
class SubnormalSeriesSpec:
    """G = G_1 >= ... >= G_{l+1} = 1 with elementary abelian factors of recorded prime and rank."""

    terms: tuple
    primes: tuple
    ranks: tuple

    @classmethod
    def build(cls, g: FiniteGroup, terms: Sequence) -> "SubnormalSeriesSpec":
        terms = tuple(frozenset(t) for t in terms)
        if not terms or terms[0] != g.whole() or terms[-1] != g.trivial():
            raise ValueError("series must run from G down to the trivial subgroup")
        primes, ranks = [], []
        for a, b in zip(terms, terms[1:]):
            if not b <= a or not g.is_subgroup(a) or not g.is_normal(b, a):
                raise ValueError("each term must be normal in the previous one")
            if a == b:
                raise ValueError("repeated term in the series")
            index = len(a) // len(b)
            facs = factorize(index)
            if len(facs) != 1:
                raise FactorNotElementaryAbelian(f"factor of order {index} is not a p-group")
            (p, k), = facs.items()
            inv = g.inverse
            for x in a:
                if g.pow_idx(x, p) not in b:
                    raise FactorNotElementaryAbelian(f"factor has exponent larger than {p}")
                for y in a:
                    if g.table[g.table[inv[x]][inv[y]]][g.table[x][y]] not in b:
                        raise FactorNotElementaryAbelian("factor is not abelian")
            primes.append(p)
            ranks.append(k)
        return cls(terms, tuple(primes), tuple(ranks))

    @classmethod
    def lower_central_refined(cls, g: FiniteGroup) -> "SubnormalSeriesSpec":
        """Lower central series refined by p-th powers until every factor is elementary abelian.

        Every term is characteristic, so the series is invariant under all automorphisms.
        """
        lcs = lower_central_series(g)
        if len(lcs[-1]) != 1:
            raise ValueError("group is not nilpotent")
        terms = []
        for a, b in zip(lcs, lcs[1:]):
            cur = a
            while cur != b:
                terms.append(cur)
                index = len(cur) // len(b)
                p = min(factorize(index))
                gens = set(b) | {g.pow_idx(x, p) for x in cur}
                nxt = g.closure(gens | {g.commutator(x, y) for x in cur for y in cur})
                if nxt == cur:
                    raise FactorNotElementaryAbelian("cannot refine to elementary abelian factors")
                cur = nxt
        terms.append(g.trivial())
        return cls.build(g, terms)

    def check_invariant(self, gamma: GroupMap):
        for k, t in enumerate(self.terms):
            if not gamma.is_invariant(t):
                raise SeriesNotInvariant(f"term {k + 1} of the series is not invariant")


class _FactorCoords:
    """F_p coordinates on A/B for consecutive series terms B <| A."""

    def __init__(self, g: FiniteGroup, a: frozenset, b: frozenset, p: int):
        self.p = p
        tb = g.table
        coset = {}
        for x in sorted(a):
            if x in coset:
                continue
            for y in b:
                coset[tb[x][y]] = x
        self.coset = coset
        span = {g.identity: ()}  # coset representative -> coordinate vector
        basis = []
        for x in sorted(a):
            if coset[x] in span:
                continue
            basis.append(x)
            new = {}
            for rep, vec in span.items():
                y = rep
                for j in range(p):
                    new[coset[y]] = vec + (j,)
                    y = tb[y][x]
            span = new
        self.basis = basis
        self.span = span

    def coords(self, x: int) -> tuple:
        vec = self.span[self.coset[x]]
        return vec + (0,) * (len(self.basis) - len(vec))


def _lift(c: int, p: int) -> int:
    """Representative of c mod p in (-p/2, p/2]."""
    c %= p
    return c - p if 2 * c > p else c


def _factor_coords(g: FiniteGroup, series: SubnormalSeriesSpec) -> list:
    key = ("coords", series.terms)
    got = g._cache.get(key)
    if got is None:
        got = [_FactorCoords(g, a, b, p)
               for a, b, p in zip(series.terms, series.terms[1:], series.primes)]
        g._cache[key] = got
    return got


def factor_char_polys(g: FiniteGroup, series: SubnormalSeriesSpec, gamma: GroupMap) -> list:
    """Monic lifts of the mod-p characteristic polynomials on each factor."""
    series.check_invariant(gamma)
    out = []
    for fc in _factor_coords(g, series):
        p = fc.p
        cols = [fc.coords(gamma.img[b]) for b in fc.basis]
        k = len(cols)
        mat = Matrix([[cols[j][i] for j in range(k)] for i in range(k)])
        chi = char_poly(mat).to_int()
        out.append(IntPoly([_lift(c, p) for c in chi.coeffs]))
    return out


def char_poly_identity(g: FiniteGroup, series: SubnormalSeriesSpec, gamma: GroupMap):
    """(chi, decomposition) with chi the product of the factor characteristic polynomials.

    The decomposition composes the descending monomial words of the factors
    from the top of the series down and is confirmed with ``is_identity``.
    """
    chis = factor_char_polys(g, series, gamma)
    chi = IntPoly([1])
    for c in chis:
        chi = chi * c
    deco = compose_identities([IdentityDecomposition.monomials(c) for c in chis])
    if not is_identity(g, gamma, deco):
        raise IdentityFails("composed characteristic identity does not vanish")
    return chi, deco
