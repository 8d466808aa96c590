"""Coefficient rings Q, Z, Z/m and submodules of free modules over them.

Over a field (Q or Z/p) submodules are kept in reduced row echelon form.
Over Z they are kept in Hermite normal form; over Z/m with m composite the
submodule is represented by the Hermite form of its preimage in Z^n, which
contains m Z^n. Both normal forms are unique, so equality is row equality.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from ..cyclotomic import is_prime


class CoeffRing:
    """One of Q, Z or Z/m, with scalar normalisation."""

    def __init__(self, tag: str = "Q", modulus: int | None = None):
        if tag.startswith("Zmod:"):
            modulus = int(tag.split(":", 1)[1])
            tag = "Zmod"
        if tag not in ("Q", "Z", "Zmod"):
            raise ValueError(f"unknown ring {tag!r}")
        if tag == "Zmod" and (modulus is None or modulus < 2):
            raise ValueError("Z/m needs m >= 2")
        self.tag = tag
        self.m = modulus if tag == "Zmod" else None
        self.is_field = tag == "Q" or (tag == "Zmod" and is_prime(self.m))

    @classmethod
    def parse(cls, spec) -> "CoeffRing":
        if isinstance(spec, CoeffRing):
            return spec
        return cls(str(spec))

    def __eq__(self, other):
        return isinstance(other, CoeffRing) and (self.tag, self.m) == (other.tag, other.m)

    def __hash__(self):
        return hash((self.tag, self.m))

    def __str__(self):
        return f"Zmod:{self.m}" if self.tag == "Zmod" else self.tag

    __repr__ = __str__

    def norm(self, c):
        if self.tag == "Q":
            return Fraction(c)
        if isinstance(c, Fraction):
            if c.denominator != 1:
                if self.tag == "Z":
                    raise ValueError(f"{c} is not an integer")
                return (c.numerator * pow(c.denominator, -1, self.m)) % self.m
            c = c.numerator
        c = int(c)
        return c % self.m if self.m else c

    def inv(self, c):
        if self.tag == "Q":
            return 1 / Fraction(c)
        if self.tag == "Zmod":
            return pow(int(c), -1, self.m)
        if c in (1, -1):
            return c
        raise ZeroDivisionError(f"{c} is not a unit in Z")

    def vec(self, v: Iterable) -> tuple:
        return tuple(self.norm(c) for c in v)

    def zero_vec(self, n: int) -> tuple:
        return (self.norm(0),) * n

    def unit_vec(self, n: int, i: int) -> tuple:
        return tuple(self.norm(1 if j == i else 0) for j in range(n))


def _rref(rows: list, ncols: int, ring: CoeffRing) -> tuple:
    """Reduced row echelon form over a field; returns (rows, pivot columns)."""
    a = [list(r) for r in rows]
    piv = []
    r = 0
    for c in range(ncols):
        k = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if k is None:
            continue
        a[r], a[k] = a[k], a[r]
        inv = ring.inv(a[r][c])
        a[r] = [ring.norm(x * inv) for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [ring.norm(x - f * y) for x, y in zip(a[i], a[r])]
        piv.append(c)
        r += 1
    return [tuple(row) for row in a[:r]], tuple(piv)


def _hnf(rows: list, ncols: int) -> tuple:
    """Row Hermite normal form over Z; returns (rows, pivot columns)."""
    a = [list(r) for r in rows if any(r)]
    piv = []
    r = 0
    for c in range(ncols):
        while True:
            nz = [i for i in range(r, len(a)) if a[i][c] != 0]
            if not nz:
                break
            k = min(nz, key=lambda i: abs(a[i][c]))
            a[r], a[k] = a[k], a[r]
            clean = True
            for i in range(r + 1, len(a)):
                if a[i][c]:
                    q = a[i][c] // a[r][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    if a[i][c]:
                        clean = False
            if clean:
                break
        if r < len(a) and a[r][c] != 0:
            if a[r][c] < 0:
                a[r] = [-x for x in a[r]]
            for i in range(r):
                q = a[i][c] // a[r][c]
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
            piv.append(c)
            r += 1
        a = a[:r] + [row for row in a[r:] if any(row)]
    return [tuple(row) for row in a[:r]], tuple(piv)


class Submodule:
    """A submodule of R^n in canonical form."""

    def __init__(self, ring: CoeffRing, n: int, rows: Sequence, pivots: Sequence):
        self.ring = ring
        self.n = n
        self.rows = tuple(tuple(r) for r in rows)
        self.pivots = tuple(pivots)

    @classmethod
    def span(cls, ring: CoeffRing, n: int, vectors: Iterable) -> "Submodule":
        vecs = [tuple(v) for v in vectors]
        if any(len(v) != n for v in vecs):
            raise ValueError("vector length does not match the module rank")
        if ring.is_field:
            rows, piv = _rref([ring.vec(v) for v in vecs], n, ring)
        elif ring.tag == "Z":
            rows, piv = _hnf([[int(c) for c in v] for v in vecs], n)
        else:
            m = ring.m
            lifted = [[int(c) % m for c in v] for v in vecs]
            lifted += [[m if j == i else 0 for j in range(n)] for i in range(n)]
            rows, piv = _hnf(lifted, n)
        return cls(ring, n, rows, piv)

    @classmethod
    def whole(cls, ring: CoeffRing, n: int) -> "Submodule":
        return cls.span(ring, n, [ring.unit_vec(n, i) for i in range(n)])

    @classmethod
    def zero(cls, ring: CoeffRing, n: int) -> "Submodule":
        return cls.span(ring, n, [])

    def __eq__(self, other):
        return (isinstance(other, Submodule) and self.ring == other.ring
                and self.n == other.n and self.rows == other.rows)

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Submodule({self.ring}, n={self.n}, gens={len(self.generators())})"

    def generators(self) -> list:
        """Nonzero generating vectors, as ring elements."""
        out = []
        for r in self.rows:
            v = self.ring.vec(r)
            if any(v):
                out.append(v)
        return out

    def reduce(self, v) -> tuple:
        """Remainder of v after subtracting the canonical rows; zero iff v is a member."""
        ring = self.ring
        if ring.is_field:
            v = list(ring.vec(v))
            for row, c in zip(self.rows, self.pivots):
                f = v[c]
                if f != 0:
                    v = [ring.norm(x - f * y) for x, y in zip(v, row)]
            return tuple(v)
        v = [int(c) % ring.m if ring.m else int(c) for c in v]
        for row, c in zip(self.rows, self.pivots):
            q = v[c] // row[c]
            if q:
                v = [x - q * y for x, y in zip(v, row)]
        return tuple(v)

    def contains(self, v) -> bool:
        return not any(self.reduce(v))

    def __contains__(self, v):
        return self.contains(v)

    def __le__(self, other: "Submodule") -> bool:
        return all(other.contains(v) for v in self.generators())

    def __add__(self, other: "Submodule") -> "Submodule":
        return Submodule.span(self.ring, self.n, self.generators() + other.generators())

    def is_zero(self) -> bool:
        return not self.generators()

    @property
    def rank(self) -> int:
        """Dimension over a field; rank of the lattice over Z; number of HNF rows mod m."""
        if self.ring.tag == "Zmod" and not self.ring.is_field:
            return sum(1 for row, c in zip(self.rows, self.pivots) if row[c] != self.ring.m)
        return len(self.rows)

    def size(self) -> int | None:
        """Number of elements for finite coefficient rings, None otherwise."""
        ring = self.ring
        if ring.tag != "Zmod":
            return None if self.rows else 1
        if ring.is_field:
            return ring.m ** len(self.rows)
        index = 1
        for row, c in zip(self.rows, self.pivots):
            index *= row[c]
        return ring.m ** self.n // index

    def complement_coords(self, v) -> tuple:
        """Coordinates of v modulo this subspace on the non-pivot unit vectors (fields only)."""
        if not self.ring.is_field:
            raise ValueError("complements are only available over fields")
        red = self.reduce(v)
        return tuple(red[j] for j in range(self.n) if j not in self.pivots)

    def complement_indices(self) -> list:
        return [j for j in range(self.n) if j not in self.pivots]


def solve_in_basis(ring: CoeffRing, basis: Sequence, v) -> tuple | None:
    """Coordinates of v in the given linearly independent vectors over a field, or None."""
    if not ring.is_field:
        raise ValueError("solve_in_basis needs a field")
    k = len(basis)
    n = len(v)
    # augmented system: columns are the basis vectors
    rows = [[basis[j][i] for j in range(k)] + [v[i]] for i in range(n)]
    red, piv = _rref(rows, k + 1, ring)
    if k in piv:
        return None
    sol = [ring.norm(0)] * k
    for row, c in zip(red, piv):
        sol[c] = row[k]
    return tuple(sol)


def nullspace(ring: CoeffRing, mat: Sequence[Sequence]) -> list:
    """Basis of {x : M x = 0} over a field."""
    ncols = len(mat[0]) if mat else 0
    red, piv = _rref([ring.vec(r) for r in mat], ncols, ring)
    free = [j for j in range(ncols) if j not in piv]
    out = []
    for f in free:
        x = [ring.norm(0)] * ncols
        x[f] = ring.norm(1)
        for row, c in zip(red, piv):
            x[c] = ring.norm(-row[f])
        out.append(tuple(x))
    return out
