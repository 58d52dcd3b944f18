"""Smoothness of weight monoids of affine spherical varieties."""

from .admiss import AdmissibleTriple, is_admissible, primitive_triples, triple_from_names
from .enumerators import enumerate_other_types, enumerate_sl_fullrank
from .errors import InputError, InternalInconsistency
from .exactla import IntegerLattice, RationalCone, hilbert_basis, part_of_basis
from .monoid import WeightMonoid
from .polytope import LocalModel, Polytope, check_pair, is_delzant, is_reflective_polytope, local_monoid
from .rootsys import GroupDatum, build_group, gl2, group_from_root_datum, torus
from .sl2c import classify_sl2c, family_instance, sigma_n_sl2c, sl2c_group, table4_instance
from .sphroots import s_gamma, sigma_n_general, sigma_n_gsat, sigma_sc
from .verdict import Outcome, Route, Verdict, check_gsat_smooth, check_reflective_smooth, smooth_verdict

__all__ = [
    "AdmissibleTriple",
    "GroupDatum",
    "InputError",
    "IntegerLattice",
    "InternalInconsistency",
    "LocalModel",
    "Outcome",
    "Polytope",
    "RationalCone",
    "Route",
    "Verdict",
    "WeightMonoid",
    "build_group",
    "check_gsat_smooth",
    "check_pair",
    "check_reflective_smooth",
    "classify_sl2c",
    "enumerate_other_types",
    "enumerate_sl_fullrank",
    "family_instance",
    "gl2",
    "group_from_root_datum",
    "hilbert_basis",
    "is_admissible",
    "is_delzant",
    "is_reflective_polytope",
    "local_monoid",
    "part_of_basis",
    "primitive_triples",
    "s_gamma",
    "sigma_n_general",
    "sigma_n_gsat",
    "sigma_n_sl2c",
    "sigma_sc",
    "sl2c_group",
    "smooth_verdict",
    "table4_instance",
    "torus",
    "triple_from_names",
]
