"""Concrete finite groups and the standard maps on them."""

from __future__ import annotations

import itertools
from typing import Sequence

from ..cyclotomic import factorize
from ..errors import EvenModulus
from .core import FiniteGroup, GroupMap


def abelian(ns: Sequence[int]) -> FiniteGroup:
    """Z_{n1} x ... x Z_{nk}, elements as tuples, written additively."""
    ns = tuple(int(n) for n in ns)
    if any(n < 1 for n in ns):
        raise ValueError("cyclic factors need positive order")
    elements = list(itertools.product(*(range(n) for n in ns)))

    def mul(a, b):
        return tuple((x + y) % n for x, y, n in zip(a, b, ns))

    return FiniteGroup.from_function(elements, mul, tag="abelian", params=ns, check=False)


def cyclic(n: int) -> FiniteGroup:
    return abelian((n,))


def heisenberg(m: int) -> FiniteGroup:
    """Upper unitriangular 3x3 matrices over Z/m as (x, y, z).

    (x, y, z)(x', y', z') = (x + x', y + y', z + z' + x y').
    """
    if m < 2:
        raise ValueError("modulus must be at least 2")
    elements = list(itertools.product(range(m), repeat=3))

    def mul(a, b):
        return ((a[0] + b[0]) % m, (a[1] + b[1]) % m, (a[2] + b[2] + a[0] * b[1]) % m)

    return FiniteGroup.from_function(elements, mul, tag="heisenberg", params=(m,), check=False)


def twisted_heisenberg(m: int) -> FiniteGroup:
    """Matrices [[1, x, z/2], [0, 1, y], [0, 0, 1]] reduced mod an odd m.

    In coordinates the product is (x + x', y + y', z + z' + 2 x y').
    """
    if m % 2 == 0:
        raise EvenModulus("the twisted Heisenberg group is only defined here for odd m")
    if m < 3:
        raise ValueError("modulus must be at least 3")
    elements = list(itertools.product(range(m), repeat=3))

    def mul(a, b):
        return ((a[0] + b[0]) % m, (a[1] + b[1]) % m, (a[2] + b[2] + 2 * a[0] * b[1]) % m)

    return FiniteGroup.from_function(elements, mul, tag="twisted_heisenberg", params=(m,),
                                     check=False)


def cayley(table: Sequence[Sequence[int]], tag: str = "cayley") -> FiniteGroup:
    """Group from a 0-based multiplication table with element 0 as identity."""
    table = [list(row) for row in table]
    n = len(table)
    if n == 0:
        raise ValueError("empty table")
    if any(not 0 <= v < n for row in table for v in row):
        raise ValueError("table entry out of range")
    if table[0] != list(range(n)) or [row[0] for row in table] != list(range(n)):
        raise ValueError("element 0 must be the identity")
    return FiniteGroup(range(n), table, tag=tag, params=(n,), check=True)


def permutation_group(gens: Sequence[Sequence[int]], tag: str = "perm") -> FiniteGroup:
    """Subgroup of Sym(n) generated by permutations given as image tuples.

    The product p*q applies p first, then q.
    """
    gens = [tuple(g) for g in gens]
    if not gens:
        raise ValueError("need at least one generator")
    n = len(gens[0])
    ident = tuple(range(n))
    seen = {ident}
    order = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(g[p[i]] for i in range(n))
                if q not in seen:
                    seen.add(q)
                    order.append(q)
                    nxt.append(q)
        frontier = nxt

    def mul(p, q):
        return tuple(q[p[i]] for i in range(n))

    return FiniteGroup.from_function(order, mul, tag=tag, params=(len(order),), check=False)


def relabel(g: FiniteGroup, perm: Sequence[int]) -> FiniteGroup:
    """Isomorphic copy whose element i corresponds to element perm[i] of g."""
    perm = list(perm)
    pos = {old: new for new, old in enumerate(perm)}
    table = [[pos[g.table[perm[a]][perm[b]]] for b in range(g.order)] for a in range(g.order)]
    return FiniteGroup(range(g.order), table, tag="cayley", params=(g.order,), check=False)


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    elements = [(a, b) for a in g.elements for b in h.elements]

    def mul(x, y):
        a = g.elements[g.table[g.idx(x[0])][g.idx(y[0])]]
        b = h.elements[h.table[h.idx(x[1])][h.idx(y[1])]]
        return (a, b)

    return FiniteGroup.from_function(elements, mul, tag="product", params=(g.tag, h.tag),
                                     check=False)


# -- a small catalogue of non-abelian groups -----------------------------


def symmetric(n: int) -> FiniteGroup:
    if n < 2:
        return permutation_group([tuple(range(max(n, 1)))], tag="symmetric")
    cycle = tuple(list(range(1, n)) + [0])
    swap = tuple([1, 0] + list(range(2, n)))
    return permutation_group([cycle, swap], tag="symmetric")


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the regular n-gon, order 2n."""
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return permutation_group([rot, ref], tag="dihedral")


def alternating4() -> FiniteGroup:
    return permutation_group([(1, 2, 0, 3), (1, 0, 3, 2)], tag="alternating")


def quaternion() -> FiniteGroup:
    # regular representation of Q8 on {1, i, j, k, -1, -i, -j, -k}
    i = (1, 4, 3, 6, 5, 0, 7, 2)
    j = (2, 7, 4, 1, 6, 3, 0, 5)
    return permutation_group([i, j], tag="quaternion")


def semidirect_cyclic(n: int, m: int, k: int) -> FiniteGroup:
    """Z_n x| Z_m where the generator of Z_m acts by x -> k x (needs k^m = 1 mod n)."""
    if pow(k, m, n) != 1 % n:
        raise ValueError("k^m must be 1 mod n")
    elements = [(a, b) for a in range(n) for b in range(m)]

    def mul(x, y):
        return ((x[0] + pow(k, x[1], n) * y[0]) % n, (x[1] + y[1]) % m)

    return FiniteGroup.from_function(elements, mul, tag="semidirect", params=(n, m, k),
                                     check=False)


def special_linear_2_3() -> FiniteGroup:
    """SL(2, 3) as 2x2 matrices (a, b, c, d) over Z/3 with determinant 1."""
    elements = [m for m in itertools.product(range(3), repeat=4)
                if (m[0] * m[3] - m[1] * m[2]) % 3 == 1]

    def mul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return ((a * e + b * g) % 3, (a * f + b * h) % 3, (c * e + d * g) % 3, (c * f + d * h) % 3)

    return FiniteGroup.from_function(elements, mul, tag="sl2_3", params=(24,), check=False)


def catalogue(bound: int) -> list:
    """Named non-abelian groups of order at most ``bound`` (deterministic order)."""
    makers = [
        (6, lambda: symmetric(3)),
        (8, lambda: dihedral(4)),
        (8, quaternion),
        (10, lambda: dihedral(5)),
        (12, alternating4),
        (12, lambda: dihedral(6)),
        (12, lambda: semidirect_cyclic(3, 4, 2)),
        (14, lambda: dihedral(7)),
        (16, lambda: dihedral(8)),
        (18, lambda: dihedral(9)),
        (18, lambda: direct_product(cyclic(3), symmetric(3))),
        (20, lambda: semidirect_cyclic(5, 4, 2)),
        (21, lambda: semidirect_cyclic(7, 3, 2)),
        (24, lambda: symmetric(4)),
        (24, special_linear_2_3),
        (27, lambda: heisenberg(3)),
        (36, lambda: direct_product(symmetric(3), symmetric(3))),
        (36, lambda: direct_product(alternating4(), cyclic(3))),
        (39, lambda: semidirect_cyclic(13, 3, 3)),
        (55, lambda: semidirect_cyclic(11, 5, 3)),
        (57, lambda: semidirect_cyclic(19, 3, 7)),
    ]
    return [make() for order, make in makers if order <= bound]


def abelian_invariants(n: int) -> list:
    """All abelian groups of order n, each as a tuple of prime-power cyclic orders."""

    def partitions(e, cap=None):
        cap = e if cap is None else cap
        if e == 0:
            yield ()
            return
        for first in range(min(e, cap), 0, -1):
            for rest in partitions(e - first, first):
                yield (first,) + rest

    per_prime = []
    for p, e in sorted(factorize(n).items()):
        per_prime.append([tuple(p ** k for k in part) for part in partitions(e)])
    out = []
    for combo in itertools.product(*per_prime):
        out.append(tuple(x for part in combo for x in part))
    return out or [()]


# -- maps ------------------------------------------------------------------


def scalar_map(g: FiniteGroup, k: int) -> GroupMap:
    """x -> k x on an abelian product group."""
    if g.tag != "abelian":
        raise ValueError("scalar maps need an abelian product group")
    ns = g.params
    return GroupMap(g, lambda x: tuple((k * a) % n for a, n in zip(x, ns)), name=f"scalar {k}")


def matrix_map(g: FiniteGroup, mat: Sequence[Sequence[int]]) -> GroupMap:
    """v -> M v (column convention) on Z_n^k."""
    if g.tag != "abelian" or len(set(g.params)) > 1:
        raise ValueError("matrix maps need a homocyclic group Z_n^k")
    n = g.params[0] if g.params else 1
    k = len(g.params)
    if len(mat) != k or any(len(row) != k for row in mat):
        raise ValueError("matrix size does not match the rank")

    def f(v):
        return tuple(sum(mat[i][j] * v[j] for j in range(k)) % n for i in range(k))

    return GroupMap(g, f, name="matrix")


def heisenberg_golden(g: FiniteGroup) -> GroupMap:
    """gamma(x, y, z) = (y, x + y, x y + y (y - 1) / 2 - z) on the Heisenberg group mod odd m."""
    if g.tag != "heisenberg":
        raise ValueError("needs a Heisenberg group")
    m = g.params[0]
    if m % 2 == 0:
        raise EvenModulus("y (y - 1) / 2 is only well defined for odd m")

    def f(v):
        x, y, z = v
        return (y, (x + y) % m, (x * y + y * (y - 1) // 2 - z) % m)

    return GroupMap(g, f, name="golden")


def heisenberg_golden_inverse_formula(g: FiniteGroup) -> GroupMap:
    """(x, y, z) -> (y - x, x, x y - x (1 + x) / 2 - z)."""
    m = g.params[0]

    def f(v):
        x, y, z = v
        return ((y - x) % m, x, (x * y - x * (1 + x) // 2 - z) % m)

    return GroupMap(g, f, name="golden inverse")


def twisted_golden(g: FiniteGroup) -> GroupMap:
    """beta(x, y, z) = (y, x + y, 2 x y + y^2 - z) on the twisted Heisenberg group."""
    if g.tag != "twisted_heisenberg":
        raise ValueError("needs a twisted Heisenberg group")
    m = g.params[0]

    def f(v):
        x, y, z = v
        return (y, (x + y) % m, (2 * x * y + y * y - z) % m)

    return GroupMap(g, f, name="golden")
