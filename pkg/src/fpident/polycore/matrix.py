"""Exact dense matrices with integer or rational entries."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import ConstantInput, NotMonic, NotSquare, ZeroInput
from .poly import RatPoly, as_intpoly, as_ratpoly


class Matrix:
    """Immutable row-major matrix of exact scalars (int or Fraction)."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Sequence], ncols: int | None = None):
        rows = tuple(tuple(r) for r in rows)
        if rows:
            n = len(rows[0])
            if any(len(r) != n for r in rows):
                raise ValueError("ragged matrix")
        else:
            n = ncols or 0
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = n

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> "Matrix":
        m = n if m is None else m
        return cls([[0] * m for _ in range(n)], m)

    @classmethod
    def diagonal(cls, entries: Sequence) -> "Matrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)], n)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if isinstance(other, Matrix):
            return self.shape == other.shape and self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Matrix({[list(r) for r in self.rows]!r})"

    def tolist(self):
        return [list(r) for r in self.rows]

    def is_integral(self) -> bool:
        return all(isinstance(x, int) or (isinstance(x, Fraction) and x.denominator == 1)
                   for r in self.rows for x in r)

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self.rows), self.nrows) if self.rows else Matrix.zeros(self.ncols, 0)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in r] for r in self.rows], self.ncols)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError("shape mismatch")
            cols = list(zip(*other.rows)) if other.rows else []
            out = []
            for r in self.rows:
                out.append([sum(a * b for a, b in zip(r, c) if a) for c in cols])
            return Matrix(out, other.ncols)
        return Matrix([[a * other for a in r] for r in self.rows], self.ncols)

    def __rmul__(self, other):
        return Matrix([[other * a for a in r] for r in self.rows], self.ncols)

    def __pow__(self, n: int) -> "Matrix":
        if not self.is_square():
            raise NotSquare("power of a non-square matrix")
        result = Matrix.identity(self.nrows)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def apply(self, vec: Sequence) -> list:
        return [sum(a * b for a, b in zip(r, vec)) for r in self.rows]

    def det(self):
        """Exact determinant: Bareiss over Z, Gaussian elimination over Q."""
        if not self.is_square():
            raise NotSquare("determinant of a non-square matrix")
        if self.is_integral():
            return bareiss_det([[int(x) for x in r] for r in self.rows])
        return _fraction_det([[Fraction(x) for x in r] for r in self.rows])


IntMatrix = Matrix
RatMatrix = Matrix


def bareiss_det(a: list) -> int:
    """Fraction-free Bareiss elimination on an integer matrix (copied)."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(r) for r in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        rk = m[k]
        for i in range(k + 1, n):
            ri = m[i]
            f = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pivot - f * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def _fraction_det(a: list) -> Fraction:
    n = len(a)
    m = [list(r) for r in a]
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = -det
        p = m[k][k]
        det *= p
        for i in range(k + 1, n):
            f = m[i][k] / p
            if f:
                ri, rk = m[i], m[k]
                for j in range(k, n):
                    ri[j] -= f * rk[j]
    return det


# ---------------------------------------------------------------------------


def sylvester_matrix(p, q) -> Matrix:
    """Sylvester matrix of p and q, size deg p + deg q.

    Convention: the first deg p rows hold shifted coefficients of q, the
    remaining deg q rows hold shifted coefficients of p, coefficients in
    descending powers.  Hence

        det Syl(p, q) = lc(q)^deg(p) * prod_{q(beta)=0} p(beta),

    which is the classical Res(q, p) = (-1)^(deg p * deg q) Res(p, q).
    """
    p = as_intpoly(p) if not isinstance(p, RatPoly) else p
    q = as_intpoly(q) if not isinstance(q, RatPoly) else q
    if not p or not q:
        raise ZeroInput("Sylvester matrix of a zero polynomial")
    dp, dq = p.degree, q.degree
    n = dp + dq
    pc = list(reversed(p.coeffs))
    qc = list(reversed(q.coeffs))
    rows = []
    for i in range(dp):
        rows.append([0] * i + qc + [0] * (n - i - dq - 1))
    for i in range(dq):
        rows.append([0] * i + pc + [0] * (n - i - dp - 1))
    return Matrix(rows, n)


def resultant(p, q):
    """Determinant of ``sylvester_matrix(p, q)`` by fraction-free elimination."""
    return sylvester_matrix(p, q).det()


def resultant_euclid(p, q):
    """Same value as ``resultant`` computed by the Euclidean algorithm over Q.

    Used for large degrees where an O(n^3) determinant is too slow.
    """
    p = as_ratpoly(p)
    q = as_ratpoly(q)
    if not p or not q:
        raise ZeroInput("resultant of a zero polynomial")
    # Our convention equals the classical Res(q, p).
    return _classical_res(q, p)


def _classical_res(a: RatPoly, b: RatPoly):
    """Classical Res(a, b) = lc(a)^deg(b) prod_{a(x)=0} b(x)."""
    result = Fraction(1)
    while True:
        da, db = a.degree, b.degree
        if db == 0:
            result *= b.lc ** da
            break
        if da == 0:
            result *= a.lc ** db
            break
        if da < db:
            # Res(a, b) = (-1)^(da db) Res(b, a)
            if (da * db) % 2:
                result = -result
            a, b = b, a
            continue
        # da >= db: Res(a, b) = (-1)^(da db) lc(b)^(da - deg r) Res(b, r)
        r = a % b
        if not r:
            return 0
        if (da * db) % 2:
            result = -result
        result *= b.lc ** (da - r.degree)
        a, b = b, r
    return int(result) if result.denominator == 1 else result


def companion_matrix(p) -> Matrix:
    """Companion matrix with ones on the superdiagonal and -a_0..-a_{n-1} as last row."""
    p = as_ratpoly(p)
    if not p or p.degree < 1:
        raise ConstantInput("companion matrix of a constant polynomial")
    if p.lc != 1:
        raise NotMonic("companion matrix needs a monic polynomial")
    n = p.degree
    rows = [[1 if j == i + 1 else 0 for j in range(n)] for i in range(n - 1)]
    rows.append([_simplify(-c) for c in p.coeffs[:n]])
    return Matrix(rows, n)


def _simplify(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def kronecker_square(m: Matrix) -> Matrix:
    if not m.is_square():
        raise NotSquare("Kronecker square of a non-square matrix")
    n = m.nrows
    rows = []
    for i1 in range(n):
        for i2 in range(n):
            rows.append([m.rows[i1][j1] * m.rows[i2][j2] for j1 in range(n) for j2 in range(n)])
    return Matrix(rows, n * n)


def char_poly(m: Matrix) -> RatPoly:
    """det(t I - M) via reduction to upper Hessenberg form over Q."""
    if not m.is_square():
        raise NotSquare("characteristic polynomial of a non-square matrix")
    n = m.nrows
    h = [[Fraction(x) for x in r] for r in m.rows]
    for k in range(1, n - 1):
        piv = next((i for i in range(k, n) if h[i][k - 1] != 0), None)
        if piv is None:
            continue
        if piv != k:
            h[k], h[piv] = h[piv], h[k]
            for r in h:
                r[k], r[piv] = r[piv], r[k]
        pk = h[k][k - 1]
        for i in range(k + 1, n):
            f = h[i][k - 1] / pk
            if f == 0:
                continue
            ri, rk = h[i], h[k]
            for j in range(n):
                ri[j] -= f * rk[j]
            for r in h:
                r[k] += f * r[i]
    # recurrence for the characteristic polynomial of a Hessenberg matrix
    polys = [RatPoly((1,))]
    for k in range(1, n + 1):
        pk = RatPoly((-h[k - 1][k - 1], 1)) * polys[k - 1]
        prod = Fraction(1)
        for i in range(k - 1, 0, -1):
            prod *= h[i][i - 1]
            if prod == 0:
                break
            pk = pk - polys[i - 1] * (prod * h[i - 1][k - 1])
        polys.append(pk)
    return polys[n]


def kronecker_square_charpoly(p) -> RatPoly:
    """Characteristic polynomial of C (x) C for C the companion matrix of monic p.

    Uses power sums: the eigenvalues of C (x) C are the products x_i x_j, so
    their k-th power sum is s_k^2 where s_k is the k-th power sum of the
    roots of p.  Newton's identities convert back to coefficients.  Agrees
    with ``char_poly(kronecker_square(companion_matrix(p)))``.
    """
    p = as_ratpoly(p)
    if not p or p.degree < 1:
        raise ConstantInput("need a nonconstant polynomial")
    if p.lc != 1:
        raise NotMonic("need a monic polynomial")
    n = p.degree
    integral = p.is_integral()
    c = [x.numerator if integral else x for x in p.coeffs]
    big = n * n
    # power sums s_1..s_big of the roots of p
    s = [0] * (big + 1)
    s[0] = n
    for k in range(1, big + 1):
        acc = 0
        for i in range(1, min(k, n) + 1):
            if i < k:
                acc += c[n - i] * s[k - i]
        if k <= n:
            acc += k * c[n - k]
        s[k] = -acc
    ps = [x * x for x in s]
    # Newton: k e_k = sum_{i=1}^k (-1)^(i-1) e_{k-i} P_i
    e = [1] + [0] * big
    for k in range(1, big + 1):
        acc = 0
        for i in range(1, k + 1):
            term = e[k - i] * ps[i]
            acc = acc + term if i % 2 else acc - term
        if integral:
            q, rem = divmod(acc, k)
            assert rem == 0
            e[k] = q
        else:
            e[k] = Fraction(acc) / k
    coeffs = [0] * (big + 1)
    for k in range(big + 1):
        coeffs[big - k] = -e[k] if k % 2 else e[k]
    return RatPoly(coeffs)


def poly_at_matrix(p, m: Matrix) -> Matrix:
    """Evaluate a polynomial at a square matrix by Horner's rule."""
    if not m.is_square():
        raise NotSquare("need a square matrix")
    n = m.nrows
    acc = Matrix.zeros(n)
    ident = Matrix.identity(n)
    for c in reversed(p.coeffs):
        acc = acc * m + ident * c
    return acc
