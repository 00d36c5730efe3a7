"""Constructions that carry fan families up a splitter chain."""
from fanforge.lifting.contraction import contraction_inner, lift_through_contraction
from fanforge.lifting.deletion import deletion_inner, lift_through_deletion
from fanforge.lifting.trace import LiftingTrace

__all__ = [
    "LiftingTrace", "lift_through_contraction", "lift_through_deletion",
    "contraction_inner", "deletion_inner",
]
