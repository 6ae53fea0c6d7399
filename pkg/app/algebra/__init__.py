"""
Finite fields and projective space over them
"""

from app.algebra.finite_field import Field, FieldElement, field_make, field_of_order
from app.algebra.projective import ProjectivePoint, SymplecticForm, projective_points, symplectic_pair

__all__ = [
    "Field",
    "FieldElement",
    "field_make",
    "field_of_order",
    "ProjectivePoint",
    "SymplecticForm",
    "projective_points",
    "symplectic_pair",
]
