"""Structure statements for groups with identities, as checkable predicates."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import HypothesisViolated
from ..invariants import discr_star, is_good, prod_star, tcn
from .core import FiniteGroup, GroupMap
from .identities import _as_deco, is_fixpoint_free, is_identity
from .series import (
    _divides_power_of,
    derived_series,
    has_n_torsion,
    is_n_group,
    lower_central_series,
    nilpotency_class,
)


@dataclass
class Verdict:
    name: str
    passed: bool
    branch: str | None
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return self.passed


def _require_identity(g, gamma, deco):
    deco = _as_deco(deco)
    if not is_identity(g, gamma, deco):
        raise HypothesisViolated("identity", "the decomposition does not vanish on G")
    return deco, deco.total


def _require_good(r):
    good, witness = is_good(r)
    if not good:
        raise HypothesisViolated("good polynomial", f"{r} is bad: {witness}")


def _require_fpf(g, alpha):
    if not alpha.is_automorphism:
        raise HypothesisViolated("automorphism", "the map is not bijective")
    if not is_fixpoint_free(g, alpha):
        raise HypothesisViolated("fix-point-free", f"{len(alpha.fixed_points()) - 1} nontrivial fixed points")


def verify_theorem_A(g: FiniteGroup, alpha: GroupMap, deco) -> Verdict:
    """G has tcn(r)-torsion or G is nilpotent."""
    _require_fpf(g, alpha)
    deco, r = _require_identity(g, alpha, deco)
    _require_good(r)
    n = tcn(r)
    torsion = has_n_torsion(g, n)
    cls = nilpotency_class(g)
    if cls is not None:
        branch = "nilpotent"
    elif torsion:
        branch = "torsion"
    else:
        branch = None
    details = {"r": str(r), "tcn": n, "has_tcn_torsion": torsion, "class": cls, "order": g.order}
    return Verdict("theorem_A", cls is not None or torsion, branch, details)


def verify_theorem_B(g: FiniteGroup, gamma: GroupMap, deco) -> Verdict:
    """Nilpotent G: (Discr* Prod*)-torsion, or class at most d^(2^d)."""
    cls = nilpotency_class(g)
    if cls is None:
        raise HypothesisViolated("nilpotent", "G is not nilpotent")
    deco, r = _require_identity(g, gamma, deco)
    _require_good(r)
    d = r.degree
    n = discr_star(r) * prod_star(r)
    bound = d ** (2 ** d)
    torsion = has_n_torsion(g, n)
    within = cls <= bound
    if within:
        branch = "class_bound"
    elif torsion:
        branch = "torsion"
    else:
        branch = None
    details = {"r": str(r), "degree": d, "discr_prod": n, "has_torsion": torsion,
               "class": cls, "bound": bound}
    return Verdict("theorem_B", within or torsion, branch, details)


def _quotient_is_nilpotent(g: FiniteGroup, s: frozenset) -> tuple:
    """(nilpotent?, class) for G/S with S normal, by pushing the lower central series."""
    series = lower_central_series(g)
    # Gamma_i(G/S) = Gamma_i(G) S / S, so G/S has class c iff Gamma_{c+1}(G) <= S
    for i, term in enumerate(series):
        if term <= s:
            return True, i
    return False, None


def verify_solvable_decomposition(g: FiniteGroup, alpha: GroupMap, deco) -> Verdict:
    """S = normal closure of the tcn(r)-elements is a tcn-group and G/S a nilpotent tcn'-group."""
    if len(derived_series(g)[-1]) != 1:
        raise HypothesisViolated("solvable", "G is not solvable")
    _require_fpf(g, alpha)
    deco, r = _require_identity(g, alpha, deco)
    n = tcn(r)
    orders = g.orders()
    seeds = [x for x in range(g.order) if _divides_power_of(orders[x], n)]
    s = g.normal_closure(seeds)
    s_is_n = is_n_group(g, n, s)
    nil, qcls = _quotient_is_nilpotent(g, s)
    # G/S has no n-torsion iff no coset of order dividing n is nontrivial
    q_index = g.order // len(s)
    q_torsion = False
    if q_index > 1:
        q_torsion = any(
            g.pow_idx(x, n) in s for x in range(g.order) if x not in s
        )
    characteristic = alpha.is_invariant(s)
    passed = s_is_n and nil and not q_torsion and characteristic
    details = {"r": str(r), "tcn": n, "S_order": len(s), "S_is_tcn_group": s_is_n,
               "quotient_order": q_index, "quotient_class": qcls,
               "quotient_has_tcn_torsion": q_torsion, "S_alpha_invariant": characteristic}
    return Verdict("solvable_decomposition", passed, "decomposition" if passed else None, details)
