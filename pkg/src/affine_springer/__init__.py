"""Affine type-A Weyl group combinatorics and Iwahori-Bruhat cells of Laurent matrices."""

from .affine_weyl import (
    AffinePermutation,
    AffineRoot,
    Coroot,
    act_on_root,
    bruhat_leq,
    is_left_descent,
    is_right_descent,
    min_coset_rep,
    multiply,
    simple_reflection,
    table_case,
    tau,
    translation_length,
)
from .errors import DomainError, EliminationBudgetError, SingularMatrixError
from .laurent import LaurentMatrix, LaurentPoly, apm, extract_cell, extract_cell_mod, membership
from .partitions import Partition, conjugate, dominance_leq, verify_partition_identity
from .tableau import ParabolicDescriptor, ParabolicTableau, build_tableau, dim_g_mod_p

__all__ = [
    "AffinePermutation",
    "AffineRoot",
    "Coroot",
    "DomainError",
    "EliminationBudgetError",
    "LaurentMatrix",
    "LaurentPoly",
    "ParabolicDescriptor",
    "ParabolicTableau",
    "Partition",
    "SingularMatrixError",
    "act_on_root",
    "apm",
    "bruhat_leq",
    "build_tableau",
    "conjugate",
    "dim_g_mod_p",
    "dominance_leq",
    "extract_cell",
    "extract_cell_mod",
    "is_left_descent",
    "is_right_descent",
    "membership",
    "min_coset_rep",
    "multiply",
    "simple_reflection",
    "table_case",
    "tau",
    "translation_length",
    "verify_partition_identity",
]
