"""Verified geometric algebra for Cl(4,0)/Cl(1,3): quaternion matrix
representations, stereographic charts on the 3-sphere and the hyperboloid,
and the tower of 2-component, quaternion, and Dirac spinors."""

from .core import (
    EUCLIDEAN4,
    MINKOWSKI12,
    PAULI3,
    SPACETIME13,
    Multivector,
    Signature,
    dot,
    exp_blade,
    geometric_product,
    grade_select,
    reverse,
    vector_inverse,
)
from .errors import GAError
from .isomap import AlgebraTag, euclidean_to_spacetime, spacetime_to_euclidean
from .quatrep import QuatMatrix2, Quaternion, quat_mul, rep_pss, rep_vec, unrep_pss, unrep_vec
from .spinors import CenterScalar, IdealSpinor, fidelity
from .quatspinor import QuatSpinor, canonical_q, fidelity_q
from .dirac import DiracSpinor, dirac_to_geometric, geometric_to_qspinor, qspinor_to_dirac

__all__ = [
    "AlgebraTag",
    "CenterScalar",
    "DiracSpinor",
    "EUCLIDEAN4",
    "GAError",
    "IdealSpinor",
    "MINKOWSKI12",
    "Multivector",
    "PAULI3",
    "QuatMatrix2",
    "QuatSpinor",
    "Quaternion",
    "SPACETIME13",
    "Signature",
    "canonical_q",
    "dirac_to_geometric",
    "dot",
    "euclidean_to_spacetime",
    "exp_blade",
    "fidelity",
    "fidelity_q",
    "geometric_product",
    "geometric_to_qspinor",
    "grade_select",
    "qspinor_to_dirac",
    "quat_mul",
    "rep_pss",
    "rep_vec",
    "reverse",
    "spacetime_to_euclidean",
    "unrep_pss",
    "unrep_vec",
    "vector_inverse",
]

__version__ = "0.1.0"
