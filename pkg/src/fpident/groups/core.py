"""Finite groups given by a multiplication table, and maps between their elements.

Elements carry a user-facing encoding (tuples for structured families, plain
integers for Cayley tables) but every computation runs on table indices.
"""

from __future__ import annotations

import random
from collections import deque
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

from ..errors import NotAutomorphism, NotHomomorphism

# Group axioms and homomorphism checks are exhaustive up to this order.
EXHAUSTIVE_LIMIT = 512
SAMPLE_SIZE = 20000
SEED = 20240611


class FiniteGroup:
    """A finite group with elements indexed 0..order-1.

    ``table[i][j]`` is the index of ``elements[i] * elements[j]``.
    """

    def __init__(self, elements: Sequence[Hashable], table: Sequence[Sequence[int]],
                 tag: str = "cayley", params: tuple = (), check: bool = True):
        self.elements = tuple(elements)
        self.index = {e: i for i, e in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise ValueError("element encodings are not distinct")
        self.table = tuple(tuple(row) for row in table)
        self.order = len(self.elements)
        self.tag = tag
        self.params = params
        n = self.order
        if n == 0:
            raise ValueError("a group has at least one element")
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise ValueError("table has the wrong shape")
        ident = None
        for e in range(n):
            if all(self.table[e][x] == x and self.table[x][e] == x for x in range(n)):
                ident = e
                break
        if ident is None:
            raise ValueError("no identity element")
        self.identity = ident
        inv = [None] * n
        for x in range(n):
            row = self.table[x]
            for y in range(n):
                if row[y] == ident:
                    inv[x] = y
                    break
            if inv[x] is None or self.table[inv[x]][x] != ident:
                raise ValueError(f"element {self.elements[x]!r} has no inverse")
        self.inverse = tuple(inv)
        self._cache: dict = {}
        if check:
            self._check_associative()

    @classmethod
    def from_function(cls, elements: Iterable[Hashable], mul: Callable, tag: str = "custom",
                      params: tuple = (), check: bool = True) -> "FiniteGroup":
        elements = tuple(elements)
        index = {e: i for i, e in enumerate(elements)}
        try:
            table = [[index[mul(a, b)] for b in elements] for a in elements]
        except KeyError as exc:
            raise ValueError(f"not closed under multiplication: {exc}") from None
        return cls(elements, table, tag=tag, params=params, check=check)

    def _check_associative(self):
        n, tb = self.order, self.table
        if n <= EXHAUSTIVE_LIMIT:
            arr = np.asarray(tb, dtype=np.int64)
            for a in range(n):
                # (a*b)*c against a*(b*c) for all b, c at once
                if not np.array_equal(arr[arr[a]], arr[a][arr]):
                    raise ValueError("multiplication is not associative")
        else:
            rng = random.Random(SEED)
            for _ in range(SAMPLE_SIZE):
                a, b, c = rng.randrange(n), rng.randrange(n), rng.randrange(n)
                if tb[tb[a][b]][c] != tb[a][tb[b][c]]:
                    raise ValueError("multiplication is not associative")

    def __repr__(self):
        return f"FiniteGroup({self.tag}{self.params}, order={self.order})"

    def __len__(self):
        return self.order

    # -- index-level arithmetic ------------------------------------------

    def idx(self, element) -> int:
        try:
            return self.index[element]
        except KeyError:
            raise ValueError(f"{element!r} is not an element of {self!r}") from None

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def pow_idx(self, x: int, n: int) -> int:
        if n < 0:
            x, n = self.inverse[x], -n
        out = self.identity
        tb = self.table
        while n:
            if n & 1:
                out = tb[out][x]
            x = tb[x][x]
            n >>= 1
        return out

    def commutator(self, a: int, b: int) -> int:
        """[a, b] = a^-1 b^-1 a b."""
        tb, inv = self.table, self.inverse
        return tb[tb[inv[a]][inv[b]]][tb[a][b]]

    def conjugate(self, a: int, g: int) -> int:
        """g^-1 a g."""
        return self.table[self.table[self.inverse[g]][a]][g]

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != self.identity:
            y = self.table[y][x]
            k += 1
        return k

    def orders(self) -> tuple:
        got = self._cache.get("orders")
        if got is None:
            got = tuple(self.element_order(x) for x in range(self.order))
            self._cache["orders"] = got
        return got

    # -- subgroups -------------------------------------------------------

    def closure(self, gens: Iterable[int]) -> frozenset:
        """Subgroup generated by ``gens`` (breadth-first; finite so no inverses needed)."""
        gens = [g for g in set(gens) if g != self.identity]
        seen = {self.identity}
        queue = deque([self.identity])
        tb = self.table
        while queue:
            x = queue.popleft()
            row = tb[x]
            for g in gens:
                y = row[g]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    def normal_closure(self, subset: Iterable[int]) -> frozenset:
        conj = {self.conjugate(a, g) for a in subset for g in range(self.order)}
        return self.closure(conj)

    def is_subgroup(self, s: Iterable[int]) -> bool:
        s = frozenset(s)
        if self.identity not in s:
            return False
        return all(self.table[a][b] in s for a in s for b in s)

    def is_normal(self, h: frozenset, within: frozenset | None = None) -> bool:
        within = range(self.order) if within is None else within
        return all(self.conjugate(a, g) in h for a in h for g in within)

    def commutator_subgroup(self, a: Iterable[int], b: Iterable[int]) -> frozenset:
        b = list(b)
        return self.closure({self.commutator(x, y) for x in a for y in b})

    def center(self) -> frozenset:
        tb = self.table
        return frozenset(z for z in range(self.order)
                         if all(tb[z][g] == tb[g][z] for g in range(self.order)))

    def is_abelian(self) -> bool:
        tb = self.table
        return all(tb[a][b] == tb[b][a] for a in range(self.order) for b in range(a))

    def whole(self) -> frozenset:
        return frozenset(range(self.order))

    def trivial(self) -> frozenset:
        return frozenset((self.identity,))

    def generators(self) -> list:
        """A small generating set: greedily add the element that enlarges the span most."""
        got = self._cache.get("generators")
        if got is not None:
            return list(got)
        orders = self.orders()
        derived = self.commutator_subgroup(range(self.order), range(self.order))
        # elements of the derived subgroup are never needed first
        cand = sorted(range(self.order), key=lambda x: (x in derived, -orders[x], x))
        gens, span = [], self.trivial()
        while len(span) < self.order:
            best, best_span = None, span
            for x in cand:
                if x in span:
                    continue
                new = self.closure(gens + [x])
                if len(new) > len(best_span):
                    best, best_span = x, new
                    if len(new) == self.order:
                        break
            gens.append(best)
            span = best_span
        self._cache["generators"] = tuple(gens)
        return gens


class GroupMap:
    """A total map G -> G stored as a tuple of image indices.

    Construction checks the homomorphism property (exhaustively for small
    groups, on random pairs otherwise) unless ``check`` is False.
    """

    def __init__(self, domain: FiniteGroup, images, check: bool = True, name: str = ""):
        self.domain = domain
        g = domain
        if isinstance(images, dict):
            img = [g.idx(images[e]) for e in g.elements]
        elif callable(images):
            img = [g.idx(images(e)) for e in g.elements]
        else:
            img = list(images)
            if len(img) != g.order:
                raise ValueError("images must list one image per element")
        self.img = tuple(img)
        self.name = name
        if any(not 0 <= y < g.order for y in self.img):
            raise ValueError("image index out of range")
        if check:
            self._check_hom()
        self.is_automorphism = len(set(self.img)) == g.order

    @classmethod
    def from_indices(cls, domain: FiniteGroup, img: Sequence[int], check: bool = True,
                     name: str = "") -> "GroupMap":
        return cls(domain, list(img), check=check, name=name)

    def _check_hom(self):
        g, img, tb = self.domain, self.img, self.domain.table
        n = g.order
        if img[g.identity] != g.identity:
            raise NotHomomorphism("identity is not mapped to identity")
        if n <= EXHAUSTIVE_LIMIT:
            pairs = ((a, b) for a in range(n) for b in range(n))
        else:
            rng = random.Random(SEED)
            pairs = ((rng.randrange(n), rng.randrange(n)) for _ in range(SAMPLE_SIZE))
        for a, b in pairs:
            if img[tb[a][b]] != tb[img[a]][img[b]]:
                raise NotHomomorphism(
                    f"map fails on ({g.elements[a]!r}, {g.elements[b]!r})")

    def __call__(self, element):
        g = self.domain
        return g.elements[self.img[g.idx(element)]]

    def __getitem__(self, i: int) -> int:
        return self.img[i]

    def __eq__(self, other):
        return isinstance(other, GroupMap) and other.domain is self.domain and other.img == self.img

    def __hash__(self):
        return hash(self.img)

    def __repr__(self):
        label = self.name or "map"
        return f"GroupMap({label} on {self.domain!r})"

    def compose(self, other: "GroupMap") -> "GroupMap":
        """self after other."""
        return GroupMap.from_indices(self.domain, [self.img[y] for y in other.img], check=False)

    def power_table(self, k: int) -> tuple:
        """Index images under self^k (k >= 0)."""
        cache = self.__dict__.setdefault("_powers", {0: tuple(range(self.domain.order))})
        if k not in cache:
            prev = self.power_table(k - 1)
            cache[k] = tuple(self.img[y] for y in prev)
        return cache[k]

    def inverse(self) -> "GroupMap":
        if not self.is_automorphism:
            raise NotAutomorphism("map is not bijective")
        inv = [0] * self.domain.order
        for x, y in enumerate(self.img):
            inv[y] = x
        return GroupMap.from_indices(self.domain, inv, check=False)

    def fixed_points(self) -> list:
        return [x for x, y in enumerate(self.img) if x == y]

    def is_invariant(self, subset: Iterable[int]) -> bool:
        subset = frozenset(subset)
        return all(self.img[x] in subset for x in subset)


def identity_map(g: FiniteGroup) -> GroupMap:
    return GroupMap.from_indices(g, range(g.order), check=False, name="identity")
