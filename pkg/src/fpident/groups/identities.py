"""Evaluating polynomial identities of group endomorphisms.

For r = a_0 + a_1 t + ... + a_d t^d the monotone evaluation is
x^{a_0} gamma(x^{a_1}) ... gamma^d(x^{a_d}); a decomposition r = r_1 + ... + r_k
evaluates the parts one after another and multiplies the results in order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..errors import ConstantTermNotUnit, IdentityFails, NotAutomorphism
from ..polycore import IntPoly, as_intpoly
from .core import FiniteGroup, GroupMap


@dataclass(frozen=True)
class IdentityDecomposition:
    """Ordered polynomials r_1, ..., r_k; the decomposed polynomial is their sum."""

    parts: tuple

    def __init__(self, parts: Sequence):
        object.__setattr__(self, "parts", tuple(as_intpoly(p) for p in parts))

    @property
    def total(self) -> IntPoly:
        out = IntPoly()
        for p in self.parts:
            out = out + p
        return out

    @classmethod
    def monotone(cls, r) -> "IdentityDecomposition":
        return cls([r])

    @classmethod
    def monomials(cls, r, descending: bool = True) -> "IdentityDecomposition":
        """[a_d t^d, ..., a_0] (or ascending), skipping zero coefficients."""
        r = as_intpoly(r)
        terms = [IntPoly.monomial(c, i) for i, c in enumerate(r.coeffs) if c]
        return cls(terms[::-1] if descending else terms)

    def word(self) -> list:
        """Flatten into (coefficient, exponent) letters in evaluation order."""
        return [(c, i) for p in self.parts for i, c in enumerate(p.coeffs) if c]

    @classmethod
    def from_word(cls, word) -> "IdentityDecomposition":
        return cls([IntPoly.monomial(c, e) for c, e in word])

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        return "[" + ", ".join(str(p) for p in self.parts) + "]"


def _as_deco(deco) -> IdentityDecomposition:
    if isinstance(deco, IdentityDecomposition):
        return deco
    if isinstance(deco, (list, tuple)):
        return IdentityDecomposition(deco)
    return IdentityDecomposition.monotone(deco)


def power(g: FiniteGroup, x, n: int):
    """x^n for an encoded element x."""
    return g.elements[g.pow_idx(g.idx(x), n)]


def _eval_word_idx(g: FiniteGroup, gamma: GroupMap, word, x: int) -> int:
    tb = g.table
    out = g.identity
    for c, e in word:
        y = gamma.power_table(e)[x] if e else x
        out = tb[out][g.pow_idx(y, c)]
    return out


def evaluate_monotone(g: FiniteGroup, gamma: GroupMap, r, x):
    """x^{a_0} gamma(x^{a_1}) ... gamma^d(x^{a_d}), multiplied left to right."""
    r = as_intpoly(r)
    word = [(c, i) for i, c in enumerate(r.coeffs) if c]
    return g.elements[_eval_word_idx(g, gamma, word, g.idx(x))]


def evaluate_decomposed(g: FiniteGroup, gamma: GroupMap, deco, x):
    deco = _as_deco(deco)
    return g.elements[_eval_word_idx(g, gamma, deco.word(), g.idx(x))]


def evaluate_word(g: FiniteGroup, gamma: GroupMap, word, x):
    return g.elements[_eval_word_idx(g, gamma, list(word), g.idx(x))]


def word_map(g: FiniteGroup, gamma: GroupMap, word) -> tuple:
    """Index images of x -> word(x) for every element."""
    word = list(word)
    return tuple(_eval_word_idx(g, gamma, word, x) for x in range(g.order))


def is_identity(g: FiniteGroup, gamma: GroupMap, deco) -> bool:
    """True iff the decomposed evaluation is trivial on every element."""
    word = _as_deco(deco).word()
    e = g.identity
    return all(_eval_word_idx(g, gamma, word, x) == e for x in range(g.order))


def is_fixpoint_free(g: FiniteGroup, alpha: GroupMap) -> bool:
    if not alpha.is_automorphism:
        raise NotAutomorphism("fix-point-freeness is asked of automorphisms only")
    return all(y != x for x, y in enumerate(alpha.img) if x != g.identity)


# -- composition -----------------------------------------------------------


def invert_word(word) -> list:
    """Word for the inverse element: reverse the letters and negate them."""
    return [(-c, e) for c, e in reversed(list(word))]


def shift_word(word, k: int) -> list:
    return [(c, e + k) for c, e in word]


def compose_identities(decos: Sequence) -> IdentityDecomposition:
    """Decomposition of r_1 r_2 ... r_l from decompositions of each factor.

    ``decos[0]`` must vanish on the whole group, ``decos[1]`` on the subgroup
    generated by values of the first one, and so on (for a series G_1 > G_2 > ...
    with decos[i] killing the factor G_i / G_{i+1}, list them from the top).
    Each letter a t^f of the next factor substitutes the current word, shifted
    by f and inverted when a < 0, |a| times.
    """
    decos = [_as_deco(d) for d in decos]
    if not decos:
        raise ValueError("need at least one decomposition")
    if len(decos) == 1:
        return decos[0]
    word = decos[0].word()
    for deco in decos[1:]:
        inv = invert_word(word)
        new = []
        for c, f in deco.word():
            block = shift_word(word if c > 0 else inv, f)
            new.extend(block * abs(c))
        word = new
    return IdentityDecomposition.from_word(word)


def _merge_constant_letters(word) -> list:
    out = []
    for c, e in word:
        if out and out[-1][1] == e:
            c += out.pop()[0]
            if c == 0:
                continue
        out.append((c, e))
    return out


def inverse_word(deco) -> tuple:
    """Word w with gamma^{-1}(v) = w(v), read off an identity with unit constant term.

    Writing the identity as P(x) x^eps Q(x) with every letter of P and Q of
    exponent >= 1, substituting x = gamma^{-1}(v) lowers every exponent by one.
    """
    deco = _as_deco(deco)
    chi = deco.total
    if chi.coeff(0) not in (1, -1):
        raise ConstantTermNotUnit(f"constant term {chi.coeff(0)} is not a unit")
    word = _merge_constant_letters(deco.word())
    zero = [k for k, (_, e) in enumerate(word) if e == 0]
    if len(zero) != 1:
        raise ValueError("the word must contain exactly one letter with exponent 0")
    k = zero[0]
    eps = word[k][0]
    if eps not in (1, -1):
        raise ConstantTermNotUnit("the exponent-0 letter must be x or x^-1")
    p, q = shift_word(word[:k], -1), shift_word(word[k + 1:], -1)
    if eps == 1:
        return tuple(invert_word(p) + invert_word(q))
    return tuple(q + p)


def inverse_from_identity(g: FiniteGroup, gamma: GroupMap, chi, deco) -> GroupMap:
    """gamma^{-1} evaluated through the word of ``inverse_word``; checked against brute force."""
    deco = _as_deco(deco)
    chi = as_intpoly(chi)
    if chi.coeff(0) not in (1, -1):
        raise ConstantTermNotUnit(f"chi(0) = {chi.coeff(0)} is not a unit")
    if deco.total != chi:
        raise ValueError("decomposition does not sum to chi")
    if not gamma.is_automorphism:
        raise NotAutomorphism("gamma is not bijective")
    if not is_identity(g, gamma, deco):
        raise IdentityFails("decomposition is not an identity of gamma")
    img = word_map(g, gamma, inverse_word(deco))
    out = GroupMap.from_indices(g, img, check=False, name="inverse")
    if out.img != gamma.inverse().img:
        raise IdentityFails("word inverse disagrees with the brute-force inverse")
    return out
