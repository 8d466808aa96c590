"""Gradings by finite abelian groups, arithmetically-free supports and class bounds."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb, gcd
from typing import Hashable, Sequence

from ..errors import DoesNotSplit, IdentityFails, SupportNotAF
from ..invariants import discr_star, prod_star
from ..polycore import as_intpoly
from .modules import CoeffRing, nullspace, solve_in_basis
from .ring import LieEndo, LieRing, class_lie, derived_length, lie_evaluate


# -- abelian group descriptors -----------------------------------------------


class AbelianGroup:
    """A finite abelian group, or Z^n, written multiplicatively through ``op``."""

    kind = "abstract"

    def op(self, a, b):
        raise NotImplementedError

    def identity(self):
        raise NotImplementedError

    def elements(self) -> list:
        raise NotImplementedError

    def power(self, a, k: int):
        out = self.identity()
        for _ in range(k):
            out = self.op(out, a)
        return out


class CyclicProduct(AbelianGroup):
    """Z_{n1} x ... x Z_{nk}, elements as tuples, operation is addition."""

    kind = "additive"

    def __init__(self, ns: Sequence[int]):
        self.ns = tuple(int(n) for n in ns)

    def op(self, a, b):
        return tuple((x + y) % n for x, y, n in zip(a, b, self.ns))

    def identity(self):
        return (0,) * len(self.ns)

    def elements(self) -> list:
        return list(itertools.product(*(range(n) for n in self.ns)))

    def normalize(self, a):
        return tuple(int(x) % n for x, n in zip(a, self.ns))

    def __repr__(self):
        return f"CyclicProduct{self.ns}"


class Units(AbelianGroup):
    """(Z/n)^x, elements as residues, operation is multiplication."""

    kind = "units"

    def __init__(self, n: int):
        if n < 2:
            raise ValueError("need n >= 2")
        self.n = n

    def op(self, a, b):
        return a * b % self.n

    def identity(self):
        return 1 % self.n

    def elements(self) -> list:
        return [a for a in range(1, self.n) if gcd(a, self.n) == 1]

    def normalize(self, a):
        a = int(a) % self.n
        if gcd(a, self.n) != 1:
            raise ValueError(f"{a} is not a unit mod {self.n}")
        return a

    def __repr__(self):
        return f"Units({self.n})"


class FreeAbelian(AbelianGroup):
    """Z^n, elements as integer tuples (infinite, so ``elements`` is unavailable)."""

    kind = "free"

    def __init__(self, n: int):
        self.n = n

    def op(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def identity(self):
        return (0,) * self.n

    def elements(self) -> list:
        raise ValueError("Z^n is infinite")

    def normalize(self, a):
        return tuple(int(x) for x in a)

    def __repr__(self):
        return f"FreeAbelian({self.n})"


class FormalSupport(AbelianGroup):
    """A label set with a partial product; missing products lie outside every support."""

    kind = "formal"

    def __init__(self, labels: Sequence[Hashable], products: dict, identity=None):
        self.labels = tuple(labels)
        self.products = {}
        for (a, b), c in products.items():
            self.products[(a, b)] = c
            self.products[(b, a)] = c
        self._identity = identity

    def op(self, a, b):
        if a is None or b is None:
            return None
        if a == self._identity:
            return b
        if b == self._identity:
            return a
        return self.products.get((a, b))

    def identity(self):
        return self._identity

    def elements(self) -> list:
        return list(self.labels)

    def normalize(self, a):
        return a

    def __repr__(self):
        return f"FormalSupport({list(self.labels)})"


# -- arithmetic freeness -------------------------------------------------------


def af_subset_check(group: AbelianGroup, X) -> tuple:
    """(is_af, witness): witness is the first (lambda, mu) whose progression stays in X."""
    xs = list(dict.fromkeys(group.normalize(x) for x in X))
    members = set(xs)
    n = len(xs)
    for lam in xs:
        for mu in xs:
            cur, ok = lam, True
            for _ in range(n):
                cur = group.op(cur, mu)
                if cur is None or cur not in members:
                    ok = False
                    break
            if ok:
                return False, (lam, mu)
    return True, None


def partial_products(group: AbelianGroup, bs: Sequence) -> set:
    """S(b_1..b_k): products over all subsets (every prefix of every ordering)."""
    out = set()
    for i in range(len(bs) + 1):
        for sub in itertools.combinations(range(len(bs)), i):
            cur = group.identity()
            for j in sub:
                cur = group.op(cur, bs[j])
            out.add(cur)
    return out


def growth_or_progression_check(group: AbelianGroup, bs: Sequence) -> tuple:
    """(holds, kind): kind is "growth" or "progression" for the branch that holds.

    Needs every b_i different from the identity.
    """
    k = len(bs)
    e = group.identity()
    if any(b == e for b in bs):
        raise ValueError("the elements must differ from the identity")
    s = partial_products(group, bs)
    if len(s) >= k + 1:
        return True, "growth"
    for g0 in s:
        for c in set(bs):
            cur, ok = g0, True
            for _ in range(k):
                cur = group.op(cur, c)
                if cur not in s:
                    ok = False
                    break
            if ok:
                return True, "progression"
    return False, None


def escape_check(group: AbelianGroup, X, a, bs: Sequence) -> tuple | None:
    """A permutation and cut-off with a * b_s(1) ... b_s(k) outside X, or None."""
    members = {group.normalize(x) for x in X}
    n = len(bs)
    for perm in itertools.permutations(range(n)):
        cur = a
        for k in range(1, n + 1):
            cur = group.op(cur, bs[perm[k - 1]])
            if cur is None or cur not in members:
                return perm, k
    return None


# -- graded Lie rings ------------------------------------------------------------


@dataclass
class GradedLieRing:
    """A Lie ring whose basis vector i carries the label ``labels[i]``."""

    ring: LieRing
    labels: list
    group: AbelianGroup
    check: bool = True
    support: list = field(init=False)

    def __post_init__(self):
        if len(self.labels) != self.ring.rank:
            raise ValueError("one label per basis vector is required")
        self.labels = [self.group.normalize(x) for x in self.labels]
        self.support = list(dict.fromkeys(self.labels))
        if self.check:
            self.verify_grading()

    def component(self, label) -> list:
        return [i for i, x in enumerate(self.labels) if x == label]

    def verify_grading(self):
        L = self.ring
        for i in range(L.rank):
            for j in range(i + 1, L.rank):
                vec = L.basis_bracket(i, j)
                target = self.group.op(self.labels[i], self.labels[j])
                for k, c in enumerate(vec):
                    if c and self.labels[k] != target:
                        raise IdentityFails(
                            f"[e{i + 1}, e{j + 1}] leaves the component labelled {target!r}")


@dataclass
class BoundVerdict:
    passed: bool
    class_: int | None
    class_bound: int
    derived_length: int | None
    derived_bound: int
    af_checked: bool

    def __bool__(self):
        return self.passed


def graded_class_bound_check(K: GradedLieRing, check_af: bool = True) -> BoundVerdict:
    """Class at most |X|^(2^|X|) and derived length at most 2^|X| for AF support X."""
    X = K.support
    af_checked = False
    if check_af:
        af, witness = af_subset_check(K.group, X)
        af_checked = True
        if not af:
            raise SupportNotAF(f"support contains the progression generated by {witness}")
    x = len(X)
    cb = x ** (2 ** x)
    db = 2 ** x
    c = class_lie(K.ring)
    dl = derived_length(K.ring)
    passed = c is not None and dl is not None and c <= cb and dl <= db
    return BoundVerdict(passed, c, cb, dl, db, af_checked)


# -- eigenspaces over prime fields ---------------------------------------------------


def _roots_mod_p(r, p: int) -> list:
    """Roots of r mod p with multiplicity, or None if r does not split mod p."""
    coeffs = [c % p for c in as_intpoly(r).coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) <= 1:
        raise DoesNotSplit("r vanishes or is constant mod p")
    roots = []
    cur = coeffs
    for a in range(p):
        while len(cur) > 1:
            # synthetic division by (t - a)
            out, acc = [], 0
            for c in reversed(cur):
                acc = (acc * a + c) % p
                out.append(acc)
            if out[-1] != 0:
                break
            cur = list(reversed(out[:-1]))
            roots.append(a)
    if len(cur) != 1:
        return None
    return roots


@dataclass
class EigenGrading:
    graded: GradedLieRing
    change_of_basis: list  # columns: eigenvectors in the original basis
    endo: LieEndo  # gamma in the eigenvector basis
    roots: list
    dims: dict
    strong: bool  # p does not divide a * Discr* * Prod*
    weak: bool  # p does not divide Prod*
    zero_brackets_forced: bool  # brackets into non-root labels vanish


def _power_map(ring: CoeffRing, mat, k: int):
    n = len(mat)
    out = [[ring.norm(int(i == j)) for j in range(n)] for i in range(n)]
    for _ in range(k):
        out = [[ring.norm(sum(out[i][t] * mat[t][j] for t in range(n))) for j in range(n)]
               for i in range(n)]
    return out


def eigenspace_grading(L: LieRing, gamma: LieEndo, r) -> EigenGrading:
    """Generalised eigenspace decomposition of L over Z/p along the roots of r."""
    ring = L.ring
    if ring.tag != "Zmod" or not ring.is_field:
        raise ValueError("eigenspace gradings are computed over prime fields")
    p = ring.m
    r = as_intpoly(r)
    roots = _roots_mod_p(r, p)
    if roots is None:
        raise DoesNotSplit(f"{r} does not split into linear factors mod {p}")
    if not lie_evaluate(r, gamma).is_zero():
        raise IdentityFails("r(gamma) is not zero on L")
    n = L.rank
    distinct = sorted(set(roots))
    spaces = {}
    for lam in distinct:
        shifted = [[ring.norm(gamma.matrix[i][j] - (lam if i == j else 0)) for j in range(n)]
                   for i in range(n)]
        spaces[lam] = nullspace(ring, _power_map(ring, shifted, n))
    cols, labels = [], []
    for lam in distinct:
        for v in spaces[lam]:
            cols.append(v)
            labels.append(lam)
    if len(cols) != n:
        raise AssertionError("generalised eigenspaces do not span L")
    # structure constants in the eigenbasis
    brackets = {}
    for a in range(n):
        for b in range(a + 1, n):
            vec = solve_in_basis(ring, cols, L.bracket(cols[a], cols[b]))
            if any(vec):
                brackets[(a, b)] = dict(enumerate(vec))
    names = [f"E{lab}.{i}" for i, lab in enumerate(labels)]
    new = LieRing(n, ring, brackets, labels=names)
    images = [solve_in_basis(ring, cols, gamma(c)) for c in cols]
    endo = LieEndo(new, [[images[j][i] for j in range(n)] for i in range(n)])
    graded = GradedLieRing(new, labels, Units(p))
    root_set = set(distinct)
    forced = all(
        not any(new.basis_bracket(a, b))
        for a in range(n) for b in range(a + 1, n)
        if labels[a] * labels[b] % p not in root_set)
    d, pr = discr_star(r), prod_star(r)
    lead = r.lc
    strong = (lead * d * pr) % p != 0
    weak = pr % p != 0
    dims = {lam: len(spaces[lam]) for lam in distinct}
    return EigenGrading(graded, cols, endo, roots, dims, strong, weak, forced)


# -- the binomial commutator formula ------------------------------------------------


def _shift_apply(gamma: LieEndo, c, k: int, v):
    """(gamma - c)^k v."""
    L = gamma.L
    for _ in range(k):
        v = L.sub(gamma(v), L.scale(c, v))
    return v


def _gamma_apply(gamma: LieEndo, k: int, v):
    for _ in range(k):
        v = gamma(v)
    return v


def binomial_commutator_sides(L: LieRing, gamma: LieEndo, lam, mu, v, w, m: int) -> tuple:
    """Both sides of the binomial commutator formula as vectors."""
    lhs = _shift_apply(gamma, L.ring.norm(lam * mu), m, L.bracket(v, w))
    rhs = L.zero()
    for i in range(m + 1):
        left = L.scale(L.ring.norm(comb(m, i) * lam ** (m - i)), _shift_apply(gamma, lam, i, v))
        right = _gamma_apply(gamma, i, _shift_apply(gamma, mu, m - i, w))
        rhs = L.add(rhs, L.bracket(left, right))
    return lhs, rhs


def binomial_commutator_check(L: LieRing, gamma: LieEndo, lam, mu, v, w, m: int) -> bool:
    if not 0 <= m <= 8:
        raise ValueError("m must lie between 0 and 8")
    lhs, rhs = binomial_commutator_sides(L, gamma, lam, mu, v, w, m)
    return lhs == rhs


def annihilation_exponent(gamma: LieEndo, lam, v, cap: int | None = None) -> int | None:
    """Least m with (gamma - lam)^m v = 0, or None within ``cap`` steps."""
    cap = gamma.L.rank + 1 if cap is None else cap
    cur = tuple(v)
    for m in range(cap + 1):
        if not any(cur):
            return m
        cur = _shift_apply(gamma, lam, 1, cur)
    return None


__all__ = [
    "AbelianGroup", "CyclicProduct", "Units", "FreeAbelian", "FormalSupport",
    "af_subset_check", "partial_products", "growth_or_progression_check", "escape_check",
    "GradedLieRing", "BoundVerdict", "graded_class_bound_check", "EigenGrading",
    "eigenspace_grading", "binomial_commutator_sides", "binomial_commutator_check",
    "annihilation_exponent",
]
