"""Finite-rank Lie rings given by structure constants, and their endomorphisms."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Sequence

from ..errors import JacobiFails, NotHomomorphism
from ..polycore import as_intpoly
from .modules import CoeffRing, Submodule


class LieRing:
    """Lie ring on the basis e_0..e_{n-1} over Q, Z or Z/m.

    ``brackets`` maps (i, j) with i < j to {k: c} meaning [e_i, e_j] = sum c e_k.
    Antisymmetry is built in; the Jacobi identity is checked on all basis triples.
    """

    def __init__(self, rank: int, ring="Q", brackets: dict | None = None,
                 labels: Sequence[str] | None = None, check: bool = True):
        self.rank = rank
        self.ring = CoeffRing.parse(ring)
        table = {}
        for (i, j), comb in (brackets or {}).items():
            if not (0 <= i < rank and 0 <= j < rank):
                raise ValueError(f"bracket index ({i}, {j}) out of range")
            if i == j:
                if any(self.ring.norm(c) for c in comb.values()):
                    raise JacobiFails(f"[e_{i}, e_{i}] must vanish")
                continue
            sign = 1
            if i > j:
                i, j, sign = j, i, -1
            vec = [self.ring.norm(0)] * rank
            for k, c in comb.items():
                vec[k] = self.ring.norm(vec[k] + sign * c)
            if any(vec):
                table[(i, j)] = tuple(vec)
        self._table = table
        # sparse rows: _rows[i][j] = {k: c} for [e_i, e_j], both orders
        rows = [dict() for _ in range(rank)]
        for (i, j), vec in table.items():
            comb = {k: c for k, c in enumerate(vec) if c}
            rows[i][j] = comb
            rows[j][i] = {k: self.ring.norm(-c) for k, c in comb.items()}
        self._rows = rows
        self.labels = tuple(labels) if labels else tuple(f"e{i + 1}" for i in range(rank))
        self.hall = None  # set by free_nilpotent
        if check:
            self.check_jacobi()

    # -- vectors ---------------------------------------------------------

    def zero(self) -> tuple:
        return self.ring.zero_vec(self.rank)

    def basis(self, i: int) -> tuple:
        return self.ring.unit_vec(self.rank, i)

    def add(self, v, w) -> tuple:
        return tuple(self.ring.norm(a + b) for a, b in zip(v, w))

    def sub(self, v, w) -> tuple:
        return tuple(self.ring.norm(a - b) for a, b in zip(v, w))

    def scale(self, c, v) -> tuple:
        return tuple(self.ring.norm(c * a) for a in v)

    def basis_bracket(self, i: int, j: int) -> tuple:
        if i == j:
            return self.zero()
        if i < j:
            return self._table.get((i, j), self.zero())
        return tuple(self.ring.norm(-c) for c in self._table.get((j, i), self.zero()))

    def bracket(self, v, w) -> tuple:
        out = [0] * self.rank
        wnz = [(j, b) for j, b in enumerate(w) if b]
        rows = self._rows
        for i, a in enumerate(v):
            if not a:
                continue
            row = rows[i]
            for j, b in wnz:
                comb = row.get(j)
                if comb:
                    c = a * b
                    for k, x in comb.items():
                        out[k] += c * x
        return self.ring.vec(out)

    def _sparse_bracket(self, comb: dict, k: int) -> dict:
        """[sum c_m e_m, e_k] as a sparse dict (unnormalised)."""
        out = {}
        rows = self._rows
        for m, c in comb.items():
            for t, x in rows[m].get(k, {}).items():
                out[t] = out.get(t, 0) + c * x
        return out

    def structure_constants(self) -> dict:
        return dict(self._table)

    def is_abelian(self) -> bool:
        return not self._table

    def check_jacobi(self):
        n = self.rank
        rows = self._rows
        norm = self.ring.norm
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    s = self._sparse_bracket(rows[i].get(j, {}), k)
                    for t, x in self._sparse_bracket(rows[j].get(k, {}), i).items():
                        s[t] = s.get(t, 0) + x
                    for t, x in self._sparse_bracket(rows[k].get(i, {}), j).items():
                        s[t] = s.get(t, 0) + x
                    if any(norm(x) for x in s.values()):
                        raise JacobiFails(f"Jacobi identity fails on (e{i + 1}, e{j + 1}, e{k + 1})")

    def __repr__(self):
        return f"LieRing(rank={self.rank}, ring={self.ring})"

    # -- serialisation ---------------------------------------------------

    def to_json(self) -> dict:
        def enc(c):
            return str(c)

        brackets = [[i, j, [[k, enc(c)] for k, c in enumerate(vec) if c]]
                    for (i, j), vec in sorted(self._table.items())]
        return {"rank": self.rank, "ring": str(self.ring), "brackets": brackets,
                "labels": list(self.labels)}

    @classmethod
    def from_json(cls, doc) -> "LieRing":
        if isinstance(doc, str):
            doc = json.loads(doc)
        ring = CoeffRing.parse(doc.get("ring", "Q"))
        brackets = {}
        for i, j, comb in doc.get("brackets", []):
            if not i < j:
                raise ValueError("brackets must be listed with i < j")
            brackets[(int(i), int(j))] = {int(k): Fraction(str(c)) for k, c in comb}
        return cls(int(doc["rank"]), ring, brackets, labels=doc.get("labels"))


class LieEndo:
    """Linear map on a LieRing; column j of ``matrix`` is the image of e_j."""

    def __init__(self, ring: LieRing, matrix: Sequence[Sequence], check: bool = True):
        self.L = ring
        n = ring.rank
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise ValueError("matrix size does not match the rank")
        self.matrix = tuple(ring.ring.vec(row) for row in matrix)
        if check:
            self.check_bracket()

    def image(self, j: int) -> tuple:
        return tuple(self.matrix[i][j] for i in range(self.L.rank))

    def __call__(self, v) -> tuple:
        n = self.L.rank
        return self.L.ring.vec(sum(self.matrix[i][j] * v[j] for j in range(n)) for i in range(n))

    def check_bracket(self):
        L = self.L
        for i in range(L.rank):
            for j in range(i + 1, L.rank):
                lhs = L.bracket(self.image(i), self.image(j))
                rhs = self(L.basis_bracket(i, j))
                if lhs != rhs:
                    raise NotHomomorphism(f"map does not preserve [e{i + 1}, e{j + 1}]")

    def compose(self, other: "LieEndo") -> "LieEndo":
        """self after other."""
        return LieEndo(self.L, _matmul(self.L.ring, self.matrix, other.matrix), check=False)

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.matrix)

    def is_identity(self) -> bool:
        return self.matrix == identity_endo(self.L).matrix

    def __eq__(self, other):
        return isinstance(other, LieEndo) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"LieEndo({[list(r) for r in self.matrix]})"


def _matmul(ring: CoeffRing, a, b):
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    return [[ring.norm(sum(a[i][t] * b[t][j] for t in range(k))) for j in range(m)]
            for i in range(n)]


def identity_endo(L: LieRing) -> LieEndo:
    return LieEndo(L, [L.basis(i) for i in range(L.rank)], check=False)


def lie_evaluate(r, gamma: LieEndo) -> LieEndo:
    """The linear map sum a_i gamma^i (not a Lie endomorphism in general)."""
    r = as_intpoly(r)
    L, ring = gamma.L, gamma.L.ring
    n = L.rank
    out = [[ring.norm(0)] * n for _ in range(n)]
    # Horner: ((a_d g + a_{d-1}) g + ...)
    for c in reversed(r.coeffs or (0,)):
        out = _matmul(ring, out, gamma.matrix)
        for i in range(n):
            out[i][i] = ring.norm(out[i][i] + c)
    return LieEndo(L, out, check=False)


def linear_image(f: LieEndo) -> Submodule:
    L = f.L
    return Submodule.span(L.ring, L.rank, [f.image(j) for j in range(L.rank)])


# -- ideals, series, quotients ------------------------------------------


def ideal_generated_by(L: LieRing, vectors) -> Submodule:
    """Smallest ideal containing the vectors: bracket with the basis until stable."""
    cur = Submodule.span(L.ring, L.rank, vectors)
    while True:
        gens = cur.generators()
        new = [L.bracket(v, L.basis(k)) for v in gens for k in range(L.rank)]
        nxt = Submodule.span(L.ring, L.rank, gens + new)
        if nxt == cur:
            return cur
        cur = nxt


def bracket_span(L: LieRing, a: Submodule, b: Submodule) -> Submodule:
    """Additive span of [a, b]."""
    return Submodule.span(L.ring, L.rank,
                          [L.bracket(v, w) for v in a.generators() for w in b.generators()])


def _q_rank(s: Submodule) -> int:
    return len(s.rows) if s.ring.tag != "Zmod" else -1


def lower_central_series_lie(L: LieRing, limit: int = 256) -> list:
    """[Gamma_1 = L, Gamma_2, ...] ending at zero or at the first stable term."""
    whole = Submodule.whole(L.ring, L.rank)
    series = [whole]
    while not series[-1].is_zero() and len(series) <= limit:
        nxt = bracket_span(L, series[-1], whole)
        if nxt == series[-1]:
            break
        if L.ring.tag == "Z" and _q_rank(nxt) == _q_rank(series[-1]):
            # over Z a nonzero term of unchanged rank never reaches zero
            series.append(nxt)
            break
        series.append(nxt)
    return series


def class_lie(L: LieRing) -> int | None:
    """Nilpotency class; 0 for the zero ring, None if not nilpotent."""
    series = lower_central_series_lie(L)
    if not series[-1].is_zero():
        return None
    return len(series) - 1


def derived_series_lie(L: LieRing, limit: int = 256) -> list:
    series = [Submodule.whole(L.ring, L.rank)]
    while not series[-1].is_zero() and len(series) <= limit:
        nxt = bracket_span(L, series[-1], series[-1])
        if nxt == series[-1]:
            break
        if L.ring.tag == "Z" and _q_rank(nxt) == _q_rank(series[-1]):
            series.append(nxt)
            break
        series.append(nxt)
    return series


def derived_length(L: LieRing) -> int | None:
    series = derived_series_lie(L)
    if not series[-1].is_zero():
        return None
    return len(series) - 1


def quotient(L: LieRing, ideal: Submodule):
    """(L / I, projection) over a field, on the complement of the pivot columns."""
    if not L.ring.is_field:
        raise ValueError("quotients are computed over fields only")
    keep = ideal.complement_indices()
    q = len(keep)

    def project(v) -> tuple:
        return ideal.complement_coords(v)

    brackets = {}
    for a in range(q):
        for b in range(a + 1, q):
            vec = project(L.basis_bracket(keep[a], keep[b]))
            if any(vec):
                brackets[(a, b)] = dict(enumerate(vec))
    labels = [L.labels[k] for k in keep]
    return LieRing(q, L.ring, brackets, labels=labels), project


def induced_endo(L: LieRing, ideal: Submodule, gamma: LieEndo, quot: LieRing) -> LieEndo:
    """The map induced by gamma on L / I (I must be gamma-invariant)."""
    keep = ideal.complement_indices()
    for v in ideal.generators():
        if not ideal.contains(gamma(v)):
            raise ValueError("ideal is not invariant under the endomorphism")
    cols = [ideal.complement_coords(gamma.image(k)) for k in keep]
    q = len(keep)
    return LieEndo(quot, [[cols[j][i] for j in range(q)] for i in range(q)])


def abelian_lie_ring(rank: int, ring="Q") -> LieRing:
    return LieRing(rank, ring, {})


def heisenberg_lie_ring(ring="Q") -> LieRing:
    return LieRing(3, ring, {(0, 1): {2: 1}}, labels=["x", "y", "z"])


def golden_lie_ring(ring="Q"):
    """Basis (x1, x2, e) with [x1, x2] = 2e, and the endomorphism x1 -> x2, x2 -> x1 + x2, e -> -e."""
    L = LieRing(3, ring, {(0, 1): {2: 2}}, labels=["x1", "x2", "[x1,x2]/2"])
    gamma = LieEndo(L, [[0, 1, 0], [1, 1, 0], [0, 0, -1]])
    return L, gamma


__all__ = [
    "LieRing", "LieEndo", "identity_endo", "lie_evaluate", "linear_image",
    "ideal_generated_by", "bracket_span", "lower_central_series_lie", "class_lie",
    "derived_series_lie", "derived_length", "quotient", "induced_endo",
    "abelian_lie_ring", "heisenberg_lie_ring", "golden_lie_ring",
]
