"""Automorphism enumeration by generator images and the instance search built on it."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from ..errors import BoundExceeded, FactorNotElementaryAbelian
from ..polycore import as_intpoly
from .core import FiniteGroup, GroupMap
from .families import (
    abelian,
    abelian_invariants,
    catalogue,
    cayley,
    heisenberg,
    twisted_heisenberg,
)
from .identities import IdentityDecomposition, compose_identities, is_identity
from .series import SubnormalSeriesSpec, factor_char_polys, nilpotency_class

MAX_ORDER = 128
FAMILIES = ("trivial", "abelian", "heisenberg", "cayley")


def _extend(g: FiniteGroup, phi: dict, gens: list, images: list, fpf: bool) -> dict | None:
    """Extend a partial homomorphism on <gens[:-1]> to <gens> by breadth-first search.

    Returns None when the assignment is inconsistent, not injective, or (with
    ``fpf``) fixes a nontrivial element.
    """
    tb = g.table
    phi = dict(phi)
    used = set(phi.values())
    queue = list(phi)
    pairs = list(zip(gens, images))
    k = 0
    while k < len(queue):
        x = queue[k]
        k += 1
        fx = phi[x]
        for s, t in pairs:
            y = tb[x][s]
            fy = tb[fx][t]
            got = phi.get(y)
            if got is None:
                if fy in used or (fpf and fy == y):
                    return None
                phi[y] = fy
                used.add(fy)
                queue.append(y)
            elif got != fy:
                return None
    return phi


class _Budget:
    def __init__(self, nodes: int | None):
        self.nodes = nodes
        self.used = 0
        self.exhausted = False

    def spend(self) -> bool:
        self.used += 1
        if self.nodes is not None and self.used > self.nodes:
            self.exhausted = True
        return not self.exhausted


def automorphisms(g: FiniteGroup, fpf: bool = False, limit: int | None = None,
                  budget: "_Budget | None" = None) -> Iterator[GroupMap]:
    """All automorphisms (or only the fix-point-free ones), in a deterministic order.

    ``limit`` caps the number yielded; ``budget`` caps the extension steps tried.
    """
    gens = g.generators()
    orders = g.orders()
    e = g.identity
    if not gens:
        yield GroupMap.from_indices(g, [e], check=False)
        return
    count = 0

    def rec(k, phi, images):
        nonlocal count
        if limit is not None and count >= limit:
            return
        if k == len(gens):
            img = [phi[x] for x in range(g.order)]
            count += 1
            yield GroupMap.from_indices(g, img, check=False)
            return
        s = gens[k]
        for t in range(g.order):
            # injectivity and fixed points are caught by _extend
            if orders[t] != orders[s]:
                continue
            if budget is not None and not budget.spend():
                return
            nxt = _extend(g, phi, gens[:k + 1], images + [t], fpf)
            if nxt is not None:
                yield from rec(k + 1, nxt, images + [t])
                if limit is not None and count >= limit:
                    return

    yield from rec(0, {e: e}, [])


class SearchResult(list):
    """List of instances; ``truncated`` names groups whose enumeration hit a cap."""

    def __init__(self, items=(), truncated=()):
        super().__init__(items)
        self.truncated = list(truncated)


@dataclass(frozen=True)
class Instance:
    group: FiniteGroup
    alpha: GroupMap
    deco: IdentityDecomposition
    strategy: str


def family_groups(bound: int, families: Sequence[str] = FAMILIES, tables: Sequence = ()) -> list:
    """Candidate groups of order at most ``bound`` from the named families."""
    out = []
    fams = {f.lower() for f in families}
    if "trivial" in fams or "abelian" in fams:
        out.append(abelian(()))
    if "abelian" in fams:
        for n in range(2, bound + 1):
            for inv in abelian_invariants(n):
                out.append(abelian(inv))
    if "heisenberg" in fams:
        m = 2
        while m ** 3 <= bound:
            out.append(heisenberg(m))
            if m % 2:
                out.append(twisted_heisenberg(m))
            m += 1
    if "cayley" in fams:
        out.extend(catalogue(bound))
    for t in tables:
        grp = t if isinstance(t, FiniteGroup) else cayley(t)
        if grp.order <= bound:
            out.append(grp)
    return out


def _lcs_series(g: FiniteGroup):
    key = "lcs_refined"
    if key not in g._cache:
        try:
            g._cache[key] = SubnormalSeriesSpec.lower_central_refined(g)
        except (ValueError, FactorNotElementaryAbelian):
            g._cache[key] = None
    return g._cache[key]


def candidate_decompositions(g: FiniteGroup, alpha: GroupMap, r) -> Iterator[tuple]:
    """(strategy, decomposition) pairs tried in order for one automorphism."""
    r = as_intpoly(r)
    yield "monotone", IdentityDecomposition.monotone(r)
    mono = IdentityDecomposition.monomials(r)
    if len(mono) > 1:
        yield "monomial", mono
    if nilpotency_class(g) is not None and g.order > 1:
        series = _lcs_series(g)
        if series is not None:
            chis = factor_char_polys(g, series, alpha)
            chi = chis[0]
            for c in chis[1:]:
                chi = chi * c
            if chi == r:
                yield "cayley_hamilton", compose_identities(
                    [IdentityDecomposition.monomials(c) for c in chis])


def search_instances(bound: int, families: Sequence[str] = FAMILIES, r=None,
                     tables: Sequence = (), max_order: int = MAX_ORDER,
                     per_group: int | None = None, automorphism_limit: int | None = 20000,
                     node_limit: int | None = 200000) -> SearchResult:
    """Fix-point-free automorphisms with ``r`` as an identity, over small groups.

    ``per_group`` caps the instances recorded per group; ``automorphism_limit``
    and ``node_limit`` cap the automorphisms inspected and the backtracking steps
    per group. Groups cut short are listed in ``result.truncated``. The trivial
    group is reported with its only map whatever r is.
    """
    if bound > max_order:
        raise BoundExceeded(f"order bound {bound} exceeds the maximum {max_order}")
    if r is None:
        raise ValueError("a polynomial r is required")
    r = as_intpoly(r)
    out = SearchResult()
    for g in family_groups(bound, families, tables):
        found = 0
        budget = _Budget(node_limit)
        seen = 0
        for alpha in automorphisms(g, fpf=True, limit=automorphism_limit, budget=budget):
            seen += 1
            if per_group is not None and found >= per_group:
                break
            if g.order == 1:
                out.append(Instance(g, alpha, IdentityDecomposition.monotone(r), "trivial"))
                found += 1
                continue
            for strategy, deco in candidate_decompositions(g, alpha, r):
                if is_identity(g, alpha, deco):
                    out.append(Instance(g, alpha, deco, strategy))
                    found += 1
                    break
        if budget.exhausted or (automorphism_limit is not None and seen >= automorphism_limit):
            out.truncated.append(f"{g.tag}{g.params}")
    return out
