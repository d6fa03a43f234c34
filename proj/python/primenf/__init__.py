"""Symplectic normal forms of prime-order mapping classes."""

from ._core import (
    InvariantError,
    NotUnimodularError,
    ValidationError,
    adapted_intersection,
    candidate_check,
    enumerate_classes,
    genus_of,
    mod_inverse,
    normal_form,
    normalize_class,
    presentation,
    standard_J,
    validate_class,
)

__all__ = [
    "InvariantError",
    "NotUnimodularError",
    "ValidationError",
    "adapted_intersection",
    "candidate_check",
    "enumerate_classes",
    "genus_of",
    "mod_inverse",
    "normal_form",
    "normalize_class",
    "presentation",
    "standard_J",
    "validate_class",
]
