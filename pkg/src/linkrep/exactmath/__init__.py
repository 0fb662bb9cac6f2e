from .laurent import LaurentPoly, determinant, one_minus_vars_product
from .quaternion import (
    I,
    J,
    K,
    ONE,
    Q8,
    DihedralQuat,
    Q8Element,
    Reflection,
    Rotation,
    conjugate_by,
    dihedral_mul,
    q8_commute,
    q8_mul,
    q8_product,
)
from .snf import SnfResult, int_det, smith_normal_form

__all__ = [
    "LaurentPoly",
    "determinant",
    "one_minus_vars_product",
    "I",
    "J",
    "K",
    "ONE",
    "Q8",
    "DihedralQuat",
    "Q8Element",
    "Reflection",
    "Rotation",
    "conjugate_by",
    "dihedral_mul",
    "q8_commute",
    "q8_mul",
    "q8_product",
    "SnfResult",
    "int_det",
    "smith_normal_form",
]
