"""Exact computations with algebras graded by finite abelian groups."""
from .abgroup import FiniteAbelianGroup, GroupHom, Subgroup, hom_group, quotient, section
from .cohom import (SymCocycle, character_from_real_cocycle, class_invariants, classes_equal,
                    coboundary, delta, extend_cocycle, inflate, inflation_preimage, restrict,
                    section_cocycle, standard_cocycle, validate_cocycle)
from .galg import (GradedAlgebra, centroid, centroid_as_twisted_group_algebra, graded_iso_search,
                   graded_simplicity, group_algebra, is_graded_central, matrix_algebra,
                   restrict_scalars, twist, twisted_group_algebra)
from .loop import (ClassificationTriple, canonical_centroid_check, central_image, chi_twist,
                   classify, equivalence_check, loop_algebra, twisted_loop)

__all__ = [
    "FiniteAbelianGroup", "GroupHom", "Subgroup", "hom_group", "quotient", "section",
    "SymCocycle", "character_from_real_cocycle", "class_invariants", "classes_equal", "coboundary",
    "delta", "extend_cocycle", "inflate", "inflation_preimage", "restrict", "section_cocycle",
    "standard_cocycle", "validate_cocycle",
    "GradedAlgebra", "centroid", "centroid_as_twisted_group_algebra", "graded_iso_search",
    "graded_simplicity", "group_algebra", "is_graded_central", "matrix_algebra", "restrict_scalars",
    "twist", "twisted_group_algebra",
    "ClassificationTriple", "canonical_centroid_check", "central_image", "chi_twist", "classify",
    "equivalence_check", "loop_algebra", "twisted_loop",
]

__version__ = "0.1.0"
