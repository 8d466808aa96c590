"""Lie rings: structure constants, free nilpotent quotients, gradings and BCH groups."""

from .bridge import (
    AssociatedGraded,
    MalcevVerdict,
    associated_graded_lie_ring,
    bch_automorphism,
    bch_group,
    malcev_charpoly_check,
)
from .construction import (
    FreeQuotient,
    block_diagonal,
    default_matrix,
    free_quotient,
    root_condition_length,
)
from .grading import (
    AbelianGroup,
    BoundVerdict,
    CyclicProduct,
    EigenGrading,
    FormalSupport,
    FreeAbelian,
    GradedLieRing,
    Units,
    af_subset_check,
    annihilation_exponent,
    binomial_commutator_check,
    binomial_commutator_sides,
    eigenspace_grading,
    escape_check,
    graded_class_bound_check,
    growth_or_progression_check,
    partial_products,
)
from .hall import (
    HallBasis,
    extend_endomorphism,
    free_nilpotent,
    free_nilpotent_dimension,
    hall_basis,
    witt_dimension,
)
from .modules import CoeffRing, Submodule, nullspace, solve_in_basis
from .ring import (
    LieEndo,
    LieRing,
    abelian_lie_ring,
    bracket_span,
    class_lie,
    derived_length,
    derived_series_lie,
    golden_lie_ring,
    heisenberg_lie_ring,
    ideal_generated_by,
    identity_endo,
    induced_endo,
    lie_evaluate,
    linear_image,
    lower_central_series_lie,
    quotient,
)
from .verify import has_additive_torsion, verify_lie_class_bound

__all__ = [
    "AssociatedGraded", "MalcevVerdict", "associated_graded_lie_ring", "bch_automorphism",
    "bch_group", "malcev_charpoly_check", "FreeQuotient", "block_diagonal", "default_matrix",
    "free_quotient", "root_condition_length", "AbelianGroup", "BoundVerdict", "CyclicProduct",
    "EigenGrading", "FormalSupport", "FreeAbelian", "GradedLieRing", "Units", "af_subset_check",
    "annihilation_exponent", "binomial_commutator_check", "binomial_commutator_sides",
    "eigenspace_grading", "escape_check", "graded_class_bound_check",
    "growth_or_progression_check", "partial_products", "HallBasis", "extend_endomorphism",
    "free_nilpotent", "free_nilpotent_dimension", "hall_basis", "witt_dimension", "CoeffRing",
    "Submodule", "nullspace", "solve_in_basis", "LieEndo", "LieRing", "abelian_lie_ring",
    "bracket_span", "class_lie", "derived_length", "derived_series_lie", "golden_lie_ring",
    "heisenberg_lie_ring", "ideal_generated_by", "identity_endo", "induced_endo",
    "lie_evaluate", "linear_image", "lower_central_series_lie", "quotient",
    "has_additive_torsion", "verify_lie_class_bound",
]
