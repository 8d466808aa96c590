"""Dense univariate polynomials over the integers and the rationals.

Coefficients are stored lowest degree first, so ``coeffs[i]`` belongs to
``t**i``.  Both classes are immutable; arithmetic between an ``IntPoly`` and
a ``RatPoly`` produces a ``RatPoly``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Iterable, Sequence

from ..errors import ConstantInput, ZeroInput


def _to_int(c) -> int:
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    if isinstance(c, Rational) and c.denominator == 1:
        return int(c.numerator)
    raise ValueError(f"not an integer coefficient: {c!r}")


def _to_frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise ValueError(f"not a rational coefficient: {c!r}")


class _Poly:
    __slots__ = ("coeffs",)

    @staticmethod
    def _coerce(c):  # pragma: no cover - overridden
        raise NotImplementedError

    def __init__(self, coeffs: Iterable = ()):
        if isinstance(coeffs, (int, Fraction)):
            coeffs = (coeffs,)
        cs = [self._coerce(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors -------------------------------------------------
    @classmethod
    def monomial(cls, c, k: int = 1):
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [c])

    @classmethod
    def constant(cls, c):
        return cls((c,))

    # -- basic queries --------------------------------------------------
    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self):
        return bool(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __hash__(self):
        return hash(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, _Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == ((other,) if other != 0 else ())
        return NotImplemented

    # -- arithmetic -----------------------------------------------------
    def _wrap(self, other):
        """Return (cls, other as polynomial) for a binary operation."""
        if isinstance(other, _Poly):
            cls = RatPoly if (isinstance(self, RatPoly) or isinstance(other, RatPoly)) else IntPoly
            return cls, other
        if isinstance(other, bool) or isinstance(other, int):
            return type(self), type(self)((other,))
        if isinstance(other, Fraction):
            if other.denominator == 1 and isinstance(self, IntPoly):
                return IntPoly, IntPoly((other.numerator,))
            return RatPoly, RatPoly((other,))
        return None, None

    def __add__(self, other):
        cls, o = self._wrap(other)
        if cls is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return cls(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)([-c for c in self.coeffs])

    def __pos__(self):
        return self

    def __sub__(self, other):
        cls, o = self._wrap(other)
        if cls is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        cls, o = self._wrap(other)
        if cls is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return cls()
        if len(b) == 1:
            c = b[0]
            return cls([x * c for x in a])
        if len(a) == 1:
            c = a[0]
            return cls([c * x for x in b])
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return cls(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = type(self)((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __call__(self, x):
        """Horner evaluation; ``x`` may be any ring element supporting + and *."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- structural operations -----------------------------------------
    def derivative(self):
        return type(self)([i * c for i, c in enumerate(self.coeffs)][1:])

    def substitute_power(self, u: int):
        """Return p(t^u)."""
        if u < 1:
            raise ValueError("u must be at least 1")
        if u == 1 or not self.coeffs:
            return self
        out = [0] * ((len(self.coeffs) - 1) * u + 1)
        for i, c in enumerate(self.coeffs):
            out[i * u] = c
        return type(self)(out)

    def negate_variable(self):
        """Return p(-t)."""
        return type(self)([c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)])

    def shift(self, k: int):
        """Multiply by t^k."""
        if not self.coeffs or k == 0:
            return self
        return type(self)([0] * k + list(self.coeffs))

    def compose(self, q):
        """Return p(q(t))."""
        acc = type(q)()
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def reverse_shift_strip(self):
        """Drop the largest power of t dividing p, returning p / t^j."""
        cs = self.coeffs
        k = 0
        while k < len(cs) and cs[k] == 0:
            k += 1
        return type(self)(cs[k:])

    def to_rat(self) -> "RatPoly":
        return RatPoly(self.coeffs)

    def monic(self) -> "RatPoly":
        if not self.coeffs:
            return RatPoly()
        lc = Fraction(self.lc)
        return RatPoly([Fraction(c) / lc for c in self.coeffs])

    # -- printing -------------------------------------------------------
    def __str__(self):
        return format_poly(self.coeffs)

    def __repr__(self):
        return f"{type(self).__name__}({list(self.coeffs)!r})"


class IntPoly(_Poly):
    """Polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ()
    _coerce = staticmethod(_to_int)

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive_part(self) -> "IntPoly":
        g = self.content()
        if g <= 1:
            return self
        return IntPoly([c // g for c in self.coeffs])

    def normalized(self) -> "IntPoly":
        """Primitive part with positive leading coefficient."""
        p = self.primitive_part()
        return -p if p.lc < 0 else p

    def pseudo_rem(self, other: "IntPoly") -> "IntPoly":
        """lc(other)^(deg self - deg other + 1) * self mod other, over the integers."""
        if not other.coeffs:
            raise ZeroInput("pseudo-remainder by zero")
        r = list(self.coeffs)
        db = len(other.coeffs) - 1
        b = other.coeffs
        lb = b[-1]
        e = len(r) - 1 - db + 1
        if e <= 0:
            return self
        while r and len(r) - 1 >= db:
            lr = r[-1]
            k = len(r) - 1 - db
            r = [x * lb for x in r]
            for i, y in enumerate(b):
                r[i + k] -= lr * y
            e -= 1
            while r and r[-1] == 0:
                r.pop()
        if e > 0:
            f = lb ** e
            r = [x * f for x in r]
        return IntPoly(r)

    def divmod_int(self, other: "IntPoly"):
        """Division with remainder when lc(other) = +-1, or exact division.

        Raises ValueError if an integral quotient step is impossible.
        """
        q, rem = divmod(self.to_rat(), other.to_rat())
        return q.to_int(), rem.to_int()

    def exact_div(self, other) -> "IntPoly":
        if isinstance(other, int):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            out = []
            for c in self.coeffs:
                qq, rr = divmod(c, other)
                if rr:
                    raise ValueError("not divisible")
                out.append(qq)
            return IntPoly(out)
        q, rem = divmod(self.to_rat(), other.to_rat())
        if rem:
            raise ValueError("not divisible")
        return q.to_int()

    def divides(self, other: "IntPoly") -> bool:
        """True when self | other in Z[t]."""
        if not self.coeffs:
            return not other.coeffs
        q, rem = divmod(other.to_rat(), self.to_rat())
        return not rem and all(c.denominator == 1 for c in q.coeffs)


class RatPoly(_Poly):
    """Polynomial with exact rational coefficients."""

    __slots__ = ()
    _coerce = staticmethod(_to_frac)

    def __divmod__(self, other):
        if not isinstance(other, _Poly):
            other = RatPoly((other,))
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        b = [Fraction(c) for c in other.coeffs]
        r = list(self.coeffs)
        db = len(b) - 1
        inv = 1 / b[-1]
        q = [Fraction(0)] * max(len(r) - db, 0)
        while r and len(r) - 1 >= db:
            k = len(r) - 1 - db
            c = r[-1] * inv
            q[k] = c
            for i, y in enumerate(b):
                r[i + k] -= c * y
            r.pop()
            while r and r[-1] == 0:
                r.pop()
        return RatPoly(q), RatPoly(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_int(self) -> IntPoly:
        if not self.is_integral():
            raise ValueError(f"polynomial {self} has non-integral coefficients")
        return IntPoly([c.numerator for c in self.coeffs])

    def primitive_int(self) -> IntPoly:
        """The primitive integer polynomial proportional to self (same sign of lc)."""
        if not self.coeffs:
            return IntPoly()
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        return IntPoly([(c * den).numerator for c in self.coeffs]).primitive_part()


T = IntPoly((0, 1))


def as_intpoly(p) -> IntPoly:
    if isinstance(p, IntPoly):
        return p
    if isinstance(p, RatPoly):
        return p.to_int()
    if isinstance(p, int):
        return IntPoly((p,))
    return IntPoly(p)


def as_ratpoly(p) -> RatPoly:
    if isinstance(p, RatPoly):
        return p
    if isinstance(p, _Poly):
        return p.to_rat()
    if isinstance(p, (int, Fraction)):
        return RatPoly((p,))
    return RatPoly(p)


def format_poly(coeffs: Sequence, var: str = "t") -> str:
    """Canonical text form: descending powers, explicit signs, ``*`` and ``^``."""
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        neg = c < 0
        a = -c if neg else c
        if i == 0:
            body = str(a)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if a == 1 else f"{a}*{mono}"
        if not terms:
            terms.append(("-" if neg else "") + body)
        else:
            terms.append((" - " if neg else " + ") + body)
    return "".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# gcd over Q via subresultant PRS on primitive integer parts


def _subresultant_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd of two nonzero primitive integer polynomials."""
    if a.degree < b.degree:
        a, b = b, a
    g = 1
    h = 1
    while True:
        delta = a.degree - b.degree
        r = a.pseudo_rem(b)
        if not r:
            return b.normalized()
        if r.degree == 0:
            return IntPoly((1,))
        a = b
        b = r.exact_div(g * h ** delta)
        g = a.lc
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = g ** delta // h ** (delta - 1)


def gcd_q(p, q) -> RatPoly:
    """Monic gcd in Q[t]; gcd(0, 0) = 0."""
    p = as_ratpoly(p)
    q = as_ratpoly(q)
    if not p and not q:
        return RatPoly()
    if not p:
        return q.monic()
    if not q:
        return p.monic()
    a = p.primitive_int()
    b = q.primitive_int()
    if a.degree == 0 or b.degree == 0:
        return RatPoly((1,))
    return _subresultant_gcd(a, b).monic()


def gcd_many(polys) -> RatPoly:
    g = RatPoly()
    for p in polys:
        g = gcd_q(g, p)
        if g.degree == 0:
            break
    return g


# ---------------------------------------------------------------------------
# square-free factorisation


@dataclass(frozen=True)
class SquareFreeDecomposition:
    """r = prod u_i^i with the data needed by the invariant formulas."""

    parts: tuple  # of (IntPoly, multiplicity)
    m: int
    u: IntPoly
    l: int
    v: IntPoly

    def reconstruct(self) -> IntPoly:
        out = IntPoly((1,))
        for p, i in self.parts:
            out = out * p ** i
        return out


def squarefree_factorization(r) -> SquareFreeDecomposition:
    """Yun's algorithm over Q, rescaled to primitive integer factors.

    Each nontrivial factor is primitive with positive leading coefficient,
    except that the leftover integer constant is folded into u_1.
    """
    r = as_intpoly(r)
    if not r:
        raise ZeroInput("square-free factorisation of the zero polynomial")
    if r.degree < 1:
        raise ConstantInput("square-free factorisation needs a nonconstant polynomial")
    f = r.to_rat()
    df = f.derivative()
    a0 = gcd_q(f, df)
    b = f // a0
    c = df // a0
    d = c - b.derivative()
    factors = []
    i = 1
    while b.degree > 0:
        a = gcd_q(b, d)
        factors.append((a.primitive_int().normalized(), i))
        b = b // a
        c = d // a
        d = c - b.derivative()
        i += 1
    prod = IntPoly((1,))
    for p, k in factors:
        prod = prod * p ** k
    c0 = r.exact_div(prod)
    assert c0.degree == 0
    c0 = c0.lc
    parts = []
    for p, k in factors:
        if k == 1:
            p = p * c0
        if p != 1:
            parts.append((p, k))
    m = max(k for p, k in parts if p.degree > 0)
    u = IntPoly((1,))
    for p, _ in parts:
        u = u * p
    if u.lc < 0:
        u = -u
    a = r.lc
    abar = u.lc
    if a % abar:
        raise ArithmeticError("leading coefficient of u does not divide a")
    v = u * (a // abar)
    return SquareFreeDecomposition(tuple(parts), m, u, u.degree, v)


# ---------------------------------------------------------------------------


def partial_sum(r, u: int, j: int) -> IntPoly:
    """Sum of the monomials a_i t^i of r with i = j (mod u)."""
    r = as_intpoly(r)
    if u < 1 or not 0 <= j < u:
        raise ValueError("need u >= 1 and 0 <= j < u")
    return IntPoly([c if i % u == j else 0 for i, c in enumerate(r.coeffs)])


def substitute_power(r, u: int):
    """r(t^u)."""
    return r.substitute_power(u)
