"""Finite groups, endomorphisms and polynomial identities."""

from .core import EXHAUSTIVE_LIMIT, FiniteGroup, GroupMap, identity_map
from .families import (
    abelian,
    abelian_invariants,
    alternating4,
    catalogue,
    cayley,
    cyclic,
    dihedral,
    direct_product,
    heisenberg,
    heisenberg_golden,
    heisenberg_golden_inverse_formula,
    matrix_map,
    permutation_group,
    quaternion,
    relabel,
    scalar_map,
    semidirect_cyclic,
    special_linear_2_3,
    symmetric,
    twisted_golden,
    twisted_heisenberg,
)
from .identities import (
    IdentityDecomposition,
    compose_identities,
    evaluate_decomposed,
    evaluate_monotone,
    evaluate_word,
    inverse_from_identity,
    inverse_word,
    invert_word,
    is_fixpoint_free,
    is_identity,
    power,
    word_map,
)
from .search import Instance, SearchResult, automorphisms, family_groups, search_instances
from .series import (
    SubnormalSeriesSpec,
    char_poly_identity,
    derived_series,
    factor_char_polys,
    has_n_torsion,
    is_n_group,
    is_solvable,
    lower_central_series,
    nilpotency_class,
)
from .theorems import (
    Verdict,
    verify_solvable_decomposition,
    verify_theorem_A,
    verify_theorem_B,
)

__all__ = [
    "EXHAUSTIVE_LIMIT", "FiniteGroup", "GroupMap", "identity_map", "abelian",
    "abelian_invariants", "alternating4", "catalogue", "cayley", "cyclic", "dihedral",
    "direct_product", "heisenberg", "heisenberg_golden", "heisenberg_golden_inverse_formula",
    "matrix_map", "permutation_group", "quaternion", "relabel", "scalar_map",
    "semidirect_cyclic", "special_linear_2_3", "symmetric", "twisted_golden",
    "twisted_heisenberg", "IdentityDecomposition", "compose_identities", "evaluate_decomposed",
    "evaluate_monotone", "evaluate_word", "inverse_from_identity", "inverse_word",
    "invert_word", "is_fixpoint_free", "is_identity", "power", "word_map", "Instance",
    "SearchResult", "automorphisms", "family_groups", "search_instances", "SubnormalSeriesSpec",
    "char_poly_identity", "derived_series", "factor_char_polys", "has_n_torsion", "is_n_group",
    "is_solvable", "lower_central_series", "nilpotency_class", "Verdict",
    "verify_solvable_decomposition", "verify_theorem_A", "verify_theorem_B",
]
