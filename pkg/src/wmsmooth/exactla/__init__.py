"""Exact integer and rational linear algebra."""

from .cone import (
    RationalCone,
    double_description,
    dual_cone,
    extremal_rays,
    hilbert_basis,
    lattice_points_in_box,
    reduce_modulo,
)
from .intmat import (
    EmptyInput,
    det,
    elementary_divisors,
    hermite_normal_form,
    integer_kernel,
    part_of_basis,
    part_of_basis_snf,
    primitive,
    smith_normal_form,
)
from .lattice import IntegerLattice
from .lp import feasible, strict_positive_combination_meets, witness_positive_combination

__all__ = [
    "EmptyInput",
    "IntegerLattice",
    "RationalCone",
    "det",
    "double_description",
    "dual_cone",
    "elementary_divisors",
    "extremal_rays",
    "feasible",
    "hermite_normal_form",
    "hilbert_basis",
    "integer_kernel",
    "lattice_points_in_box",
    "part_of_basis",
    "part_of_basis_snf",
    "primitive",
    "reduce_modulo",
    "smith_normal_form",
    "strict_positive_combination_meets",
    "witness_positive_combination",
]
