"""Exact derivation algebra of the group algebra F·V_8n over Q and F_p.

V_8n = <a, b | a^2n = b^4 = 1, ba = a^-1 b^-1, b^-1 a = a^-1 b>.
Everything is computed with exact scalars: Fractions over Q, integer
residues over F_p.
"""

from .algebra import AlgebraElement, GroupAlgebra, anti_centralizer, centralizer
from .derivation import (
    DerivationPair,
    GeneratorImages,
    Kind,
    NotADerivation,
    classify,
    derivation_space_oracle,
    evaluate,
    inner_derivation,
    inner_span,
    inner_witness,
    is_derivation_pair,
    listed_basis,
    obstruction_matrix,
    outer_codimension,
)
from .field import CharacteristicTwoError, FieldError, FieldSpec
from .group import ConjugacyClass, GroupElement, GroupParams
from .linalg import Subspace, kernel, rank, rref, solve, subspace_equal

__all__ = [
    "AlgebraElement",
    "CharacteristicTwoError",
    "ConjugacyClass",
    "DerivationPair",
    "FieldError",
    "FieldSpec",
    "GeneratorImages",
    "GroupAlgebra",
    "GroupElement",
    "GroupParams",
    "Kind",
    "NotADerivation",
    "Subspace",
    "anti_centralizer",
    "centralizer",
    "classify",
    "derivation_space_oracle",
    "evaluate",
    "inner_derivation",
    "inner_span",
    "inner_witness",
    "is_derivation_pair",
    "kernel",
    "listed_basis",
    "obstruction_matrix",
    "outer_codimension",
    "rank",
    "rref",
    "solve",
    "subspace_equal",
]
