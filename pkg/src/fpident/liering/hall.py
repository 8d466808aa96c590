"""Hall bases and structure constants of free nilpotent Lie rings.

Basic commutators use the rule: [a, b] with a < b, and if b = [b1, b2] then
b1 <= a; elements are ordered by weight, then by the order of generation.
Each basic commutator is expanded in the free associative algebra; brackets
of basis elements are rewritten in the basis by solving, weight by weight,
against a set of pivot words.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import DimensionCap, NotHomomorphism
from .modules import CoeffRing, _rref
from .ring import LieEndo, LieRing

DIMENSION_CAP = 200


def _mobius(n: int) -> int:
    out, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            out = -out
        p += 1
    return -out if n > 1 else out


def witt_dimension(g: int, n: int) -> int:
    """Dimension of the degree-n part of the free Lie algebra on g generators."""
    total = sum(_mobius(d) * g ** (n // d) for d in range(1, n + 1) if n % d == 0)
    return total // n


def free_nilpotent_dimension(g: int, k: int) -> int:
    return sum(witt_dimension(g, n) for n in range(1, k + 1))


@dataclass(frozen=True)
class HallBasis:
    """Basic commutators as nested pairs of generator indices."""

    generators: int
    k: int
    elements: tuple  # each an int (generator) or a pair (left index, right index)
    weights: tuple

    def label(self, i: int, names=None) -> str:
        e = self.elements[i]
        if isinstance(e, int):
            return names[e] if names else f"x{e + 1}"
        return f"[{self.label(e[0], names)},{self.label(e[1], names)}]"

    def degree_counts(self) -> dict:
        out = {}
        for w in self.weights:
            out[w] = out.get(w, 0) + 1
        return out


def hall_basis(g: int, k: int) -> HallBasis:
    elements, weights = [], []
    for i in range(g):
        elements.append(i)
        weights.append(1)
    for w in range(2, k + 1):
        for a in range(len(elements)):
            for b in range(a + 1, len(elements)):
                if weights[a] + weights[b] != w:
                    continue
                eb = elements[b]
                if not isinstance(eb, int) and eb[0] > a:
                    continue
                elements.append((a, b))
                weights.append(w)
    return HallBasis(g, k, tuple(elements), tuple(weights))


def _expand(h: HallBasis) -> list:
    """Each basis element as {word: coefficient} in the free associative algebra."""
    out = []
    for e in h.elements:
        if isinstance(e, int):
            out.append({(e,): 1})
            continue
        p, q = out[e[0]], out[e[1]]
        poly = {}
        for u, a in p.items():
            for v, b in q.items():
                poly[u + v] = poly.get(u + v, 0) + a * b
                poly[v + u] = poly.get(v + u, 0) - a * b
        out.append({w: c for w, c in poly.items() if c})
    return out


def free_nilpotent(g: int, k: int, ring="Q", cap: int = DIMENSION_CAP):
    """Free k-step nilpotent Lie ring on g generators; returns (LieRing, HallBasis).

    The Hall basis is a Z-basis, so the structure constants are integers and
    the same table serves over Q, Z and Z/m.
    """
    if g < 1 or k < 1:
        raise ValueError("need g >= 1 and k >= 1")
    dim = free_nilpotent_dimension(g, k)
    if dim > cap:
        raise DimensionCap(f"dimension {dim} exceeds the cap {cap}")
    h = hall_basis(g, k)
    if len(h.elements) != dim:
        raise AssertionError("Hall basis size disagrees with the Witt formula")
    exp = _expand(h)
    q = CoeffRing("Q")
    by_weight = {}
    for w in range(1, k + 1):
        idx = [i for i in range(dim) if h.weights[i] == w]
        words = sorted({u for i in idx for u in exp[i]})
        col = {u: c for c, u in enumerate(words)}
        mat = [[Fraction(0)] * len(words) for _ in idx]
        for r, i in enumerate(idx):
            for u, c in exp[i].items():
                mat[r][col[u]] = Fraction(c)
        _, piv = _rref(mat, len(words), q)
        # square system on the pivot words: coefficients c with c . M[:, piv] = target[piv]
        sq = [[mat[r][p] for p in piv] for r in range(len(idx))]
        by_weight[w] = (idx, [words[p] for p in piv], _inverse(sq))
    brackets = {}
    for a in range(dim):
        for b in range(a + 1, dim):
            w = h.weights[a] + h.weights[b]
            if w > k:
                continue
            target = {}
            for u, x in exp[a].items():
                for v, y in exp[b].items():
                    target[u + v] = target.get(u + v, 0) + x * y
                    target[v + u] = target.get(v + u, 0) - x * y
            idx, pwords, inv = by_weight[w]
            rhs = [Fraction(target.get(u, 0)) for u in pwords]
            coeffs = [sum(rhs[t] * inv[t][s] for t in range(len(rhs))) for s in range(len(idx))]
            # confirm the solution on every word, not just the pivots
            check = {}
            for s, c in enumerate(coeffs):
                if c:
                    for u, x in exp[idx[s]].items():
                        check[u] = check.get(u, 0) + c * x
            if {u: c for u, c in check.items() if c} != {u: c for u, c in target.items() if c}:
                raise AssertionError("bracket is not in the span of the Hall basis")
            comb = {idx[s]: int(c) for s, c in enumerate(coeffs) if c}
            if any(Fraction(v) != c for v, c in zip(comb.values(), [c for c in coeffs if c])):
                raise AssertionError("non-integral structure constant")
            if comb:
                brackets[(a, b)] = comb
    labels = [h.label(i) for i in range(dim)]
    L = LieRing(dim, ring, brackets, labels=labels)
    L.hall = h
    return L, h


def _inverse(m: list) -> list:
    n = len(m)
    q = CoeffRing("Q")
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    red, piv = _rref(aug, 2 * n, q)
    if list(piv[:n]) != list(range(n)):
        raise AssertionError("pivot block is singular")
    return [list(row[n:]) for row in red]


def extend_endomorphism(F: LieRing, mat) -> LieEndo:
    """Unique extension of a linear map on the generators (column convention) to F."""
    h = F.hall
    if h is None:
        raise ValueError("needs a ring built by free_nilpotent")
    g = h.generators
    if len(mat) != g or any(len(row) != g for row in mat):
        raise ValueError("matrix must be square of size equal to the number of generators")
    images = []
    for e in h.elements:
        if isinstance(e, int):
            v = [0] * F.rank
            for i in range(g):
                v[i] = mat[i][e]
            images.append(F.ring.vec(v))
        else:
            images.append(F.bracket(images[e[0]], images[e[1]]))
    cols = images
    matrix = [[cols[j][i] for j in range(F.rank)] for i in range(F.rank)]
    try:
        return LieEndo(F, matrix)
    except NotHomomorphism as exc:  # pragma: no cover - would mean a wrong basis
        raise AssertionError(str(exc)) from None
