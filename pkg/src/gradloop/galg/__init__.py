"""Graded algebras: construction, twists, centroids, simplicity, isomorphism."""
from .algebra import (MAX_DIM, GradedAlgebra, GradedMorphism, Mismatch, algebra,
                      diagonal_iso_check, group_algebra, matrix_algebra, quaternion_table, regrade,
                      restrict_scalars, twist, twisted_group_algebra, validate_algebra)
from .centroid import (CentroidDescription, CentroidTGA, centroid, centroid_as_twisted_group_algebra,
                       centroid_full, centroid_twist_map, in_centroid, is_graded_central)
from .iso import Iso, IsoUnknown, NonIso, graded_iso_search
from .simplicity import (NotSimple, Simple, Unknown, graded_ideal_closure, graded_simplicity,
                         verify_ideal_witness)

__all__ = [
    "MAX_DIM", "CentroidDescription", "CentroidTGA", "GradedAlgebra", "GradedMorphism", "Iso",
    "IsoUnknown", "Mismatch", "NonIso", "NotSimple", "Simple", "Unknown", "algebra", "centroid",
    "centroid_as_twisted_group_algebra", "centroid_full", "centroid_twist_map",
    "diagonal_iso_check", "graded_ideal_closure", "graded_iso_search", "graded_simplicity",
    "group_algebra", "in_centroid", "matrix_algebra", "is_graded_central", "quaternion_table", "regrade",
    "restrict_scalars", "twist", "twisted_group_algebra", "validate_algebra",
    "verify_ideal_witness",
]
