"""Exact computations with finitely generated abelian groups, Moore spaces and binary homotopy operations."""

from homops.abgroup import FgAbGroup, GroupMorphism, IntMatrix, ParseError, cokernel, direct_sum, order, smith_normal_form
from homops.errors import DegreeTooSmall, DomainError, OutOfRange, Unknown, Unsupported2Torsion
from homops.functors import FunctorKind, ext, hom, tensor, tor
from homops.chains import ChainComplex, homology, kunneth_check, moore_complex, tensor_complex
from homops.moorecalc import MooreAtom, MooreExpr, StemTable, homotopy_with_coeffs, smash_decompose, stem
from homops.opsclassify import OperationType, SpecialKind, classify

__version__ = "0.1.0"

__all__ = [
    "FgAbGroup", "GroupMorphism", "IntMatrix", "ParseError", "cokernel", "direct_sum", "order", "smith_normal_form",
    "DegreeTooSmall", "DomainError", "OutOfRange", "Unknown", "Unsupported2Torsion",
    "FunctorKind", "ext", "hom", "tensor", "tor",
    "ChainComplex", "homology", "kunneth_check", "moore_complex", "tensor_complex",
    "MooreAtom", "MooreExpr", "StemTable", "homotopy_with_coeffs", "smash_decompose", "stem",
    "OperationType", "SpecialKind", "classify",
]
