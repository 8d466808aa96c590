"""Seeded Lie ring corpora shared by the acceptance suite and the module tests."""

from __future__ import annotations

import random
from functools import lru_cache
from math import comb

from fpident.liering import (
    af_subset_check,
    eigenspace_grading,
    extend_endomorphism,
    free_nilpotent,
    golden_lie_ring,
)
from fpident.polycore import IntPoly

GOLDEN = IntPoly([-1, -2, 0, 1])


@lru_cache(maxsize=None)
def eigen_corpus():
    """(L, gamma, r, p) with r(gamma) = 0 and r split mod p."""
    out = []
    for p in (11, 19, 29, 31, 41):
        L, gamma = golden_lie_ring(f"Zmod:{p}")
        out.append((L, gamma, GOLDEN, p))
    rng = random.Random(5)
    for g, k, p in [(2, 2, 7), (2, 3, 11), (3, 2, 13), (2, 4, 17), (3, 3, 19)]:
        for _ in range(3):
            out.append(_diagonal_instance(rng, g, k, p))
    return tuple(out)


def _diagonal_instance(rng, g, k, p):
    """Free nilpotent ring mod p with a random diagonal action on the generators."""
    F, _ = free_nilpotent(g, k, f"Zmod:{p}")
    diag = [rng.randrange(2, p) for _ in range(g)]
    mat = [[diag[i] if i == j else 0 for j in range(g)] for i in range(g)]
    alpha = extend_endomorphism(F, mat)
    r = IntPoly([1])
    for lam in sorted({alpha.matrix[i][i] for i in range(F.rank)}):
        r = r * IntPoly([-lam, 1])
    return F, alpha, r, p


@lru_cache(maxsize=None)
def af_eigen_corpus(size=20, seed=17):
    """Diagonal instances whose eigenvalue support is arithmetically free."""
    rng = random.Random(seed)
    shapes = [(2, 2, 7), (2, 3, 11), (3, 2, 13), (2, 3, 23), (3, 2, 29), (2, 4, 17)]
    out = []
    while len(out) < size:
        F, alpha, r, p = _diagonal_instance(rng, *rng.choice(shapes))
        K = eigenspace_grading(F, alpha, r).graded
        if af_subset_check(K.group, K.support)[0]:
            out.append((F, alpha, r, p))
    return tuple(out)


def binomial_sides(L, gamma, lam, mu, v, w, m):
    # direct expansion, written out independently of the package helper
    def shift(c, k, x):
        for _ in range(k):
            x = L.sub(gamma(x), L.scale(c, x))
        return x

    def powg(k, x):
        for _ in range(k):
            x = gamma(x)
        return x

    lhs = shift(lam * mu, m, L.bracket(v, w))
    rhs = L.zero()
    for i in range(m + 1):
        rhs = L.add(rhs, L.scale(comb(m, i) * lam ** (m - i),
                                 L.bracket(shift(lam, i, v), powg(i, shift(mu, m - i, w)))))
    return lhs, rhs


@lru_cache(maxsize=None)
def binomial_instances():
    rng = random.Random(99)
    rings = [free_nilpotent(2, 3)[0], free_nilpotent(3, 2)[0], free_nilpotent(2, 4, "Zmod:7")[0]]
    out = []
    for t in range(100):
        F = rings[t % len(rings)]
        g = F.hall.generators
        mat = [[rng.randint(-2, 2) for _ in range(g)] for _ in range(g)]
        gamma = extend_endomorphism(F, mat)
        v = tuple(rng.randint(-2, 2) for _ in range(F.rank))
        w = tuple(rng.randint(-2, 2) for _ in range(F.rank))
        out.append((F, gamma, rng.randint(-3, 3), rng.randint(-3, 3), v, w, rng.randint(0, 6)))
    return out
