"""Constants in univariate ideals of Z[t] via strong Groebner bases."""

from __future__ import annotations

from math import gcd

from ..errors import EmptyGenerators
from .matrix import resultant_euclid
from .poly import IntPoly, as_intpoly, gcd_many


def _xgcd(a: int, b: int):
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _known_constant(gens: list) -> int | None:
    """Some nonzero integer lying in the ideal, if one is cheap to find.

    A nonzero resultant of two generators lies in the ideal; it vanishes
    exactly when the two share a factor over Q.
    """
    for g in gens:
        if g.degree == 0:
            return abs(g.lc)
    first = min(gens, key=lambda g: g.degree)
    rest = [g for g in gens if g is not first]
    for g in rest:
        res = resultant_euclid(first, g)
        if res:
            return abs(int(res))
    if len(rest) < 2:
        return None
    # a generic integer combination of the remaining generators is coprime to
    # `first` for all but finitely many choices of the multipliers
    for k in range(2, 200):
        comb = IntPoly()
        for j, g in enumerate(rest):
            comb = comb + g * (k ** j)
        if comb and comb.degree > 0:
            res = resultant_euclid(first, comb)
            if res:
                return abs(int(res))
    return None


# The completion works on plain coefficient lists (constant term first, no
# trailing zeros) since it builds many short-lived polynomials.


def _trim(f: list) -> list:
    while f and f[-1] == 0:
        f.pop()
    return f


def _sub_shifted(f: list, g: list, c: int, k: int) -> list:
    """f - c t^k g."""
    out = list(f) + [0] * max(0, len(g) + k - len(f))
    for i, x in enumerate(g):
        out[i + k] -= c * x
    return _trim(out)


def _combine(f: list, a: int, g: list, b: int, k: int) -> list:
    """a f + b t^k g."""
    out = [a * x for x in f] + [0] * max(0, len(g) + k - len(f))
    for i, x in enumerate(g):
        out[i + k] += b * x
    return _trim(out)


class _Basis:
    """Strong Groebner basis completion in Z[t] with optional coefficient modulus.

    The basis is kept interreduced: an element whose leading term is divisible by
    that of a newer element is taken out, reduced and queued again.
    """

    def __init__(self, modulus: int | None):
        self.modulus = modulus
        self.polys: list[list] = []

    def _clean(self, f: list) -> list:
        m = self.modulus
        if m and len(f) > 1:
            half = m // 2
            f = _trim([((c + half) % m) - half for c in f])
        if f and f[-1] < 0:
            f = [-c for c in f]
        return f

    def reduce(self, f: list) -> list:
        """Top-reduce f until no basis element's leading term divides its own."""
        f = self._clean(f)
        while f:
            df, lf = len(f) - 1, f[-1]
            for g in self.polys:
                dg = len(g) - 1
                if dg <= df and lf % g[-1] == 0:
                    f = self._clean(_sub_shifted(f, g, lf // g[-1], df - dg))
                    break
            else:
                return f
        return f

    def complete(self, gens: list) -> list:
        queue = [list(g.coeffs) for g in gens]
        if self.modulus:
            queue.append([self.modulus])
        pairs = []
        while queue or pairs:
            if queue:
                self._add(queue.pop(), queue, pairs)
                continue
            f, g = pairs.pop()
            if len(f) < len(g):
                f, g = g, f
            k = len(f) - len(g)
            a, b = f[-1], g[-1]
            lcm = a // gcd(a, b) * b
            queue.append(_combine(f, lcm // a, g, -(lcm // b), k))
            d, x, y = _xgcd(a, b)
            if d != a and d != b:
                queue.append(_combine(f, x, g, y, k))
        polys = [IntPoly(f) for f in self.polys]
        return sorted(polys, key=lambda p: (p.degree, p.lc))

    def _add(self, f: list, queue: list, pairs: list):
        f = self.reduce(f)
        if not f:
            return
        if len(f) == 1:
            self.modulus = gcd(self.modulus or 0, f[0])
        keep = []
        for g in self.polys:
            if len(f) <= len(g) and g[-1] % f[-1] == 0:
                queue.append(g)
            else:
                keep.append(g)
        if len(keep) < len(self.polys):
            dropped = {id(g) for g in self.polys} - {id(g) for g in keep}
            pairs[:] = [(a, b) for a, b in pairs if id(a) not in dropped and id(b) not in dropped]
        pairs.extend((g, f) for g in keep)
        keep.append(f)
        self.polys = keep


def strong_groebner_basis(gens) -> list:
    """A strong Groebner basis of the ideal generated by ``gens`` in Z[t]."""
    gens = [as_intpoly(g) for g in gens if as_intpoly(g)]
    return _Basis(None).complete(gens)


def ideal_constant(gens) -> int:
    """Nonnegative generator of Z intersected with the ideal (g_1, ..., g_k) of Z[t]."""
    gens = [as_intpoly(g) for g in gens]
    if not gens:
        raise EmptyGenerators("ideal_constant needs at least one generator")
    nz = [g for g in gens if g]
    if not nz:
        return 0
    modulus = _known_constant(nz)
    # without a known constant, check whether the generators share a factor over Q;
    # if so every element of the ideal is divisible by it
    if modulus is None and gcd_many(nz).degree > 0:
        return 0
    polys = _Basis(modulus).complete(nz)
    consts = [p.lc for p in polys if p.degree == 0]
    return min(consts) if consts else 0
