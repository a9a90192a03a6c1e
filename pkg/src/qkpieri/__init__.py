"""Exact quantum K-theory Pieri products for Gr(m,n), OG(n,2n) and LG(n,2n)."""

from .errors import ConsistencyError, DomainError, OrderError, ParseError, QKError
from .strip_poset import Family, QuantumShape, SkewShape, format_shape, parse_shape, skew
from .coeffs import coeff_A, coeff_B, coeff_C, coeff_H, coeff_Hq, coeff_N, coeff_Nhat, coeff_Nq, h
from .qk_ring import QKClass, pieri, pieri_class, psi, undeformed_pieri_lg
from .seidel import SeidelElement, act_on_shape, seidel_degree, seidel_multiply
from .tableaux import Tableau, enumerate_tableaux, validate
from .symplectic_model import MatrixDiagram, SchubertSymbol, diagram, gw_pieri

__version__ = "0.1.0"

__all__ = [
    "QKError", "DomainError", "ParseError", "OrderError", "ConsistencyError",
    "Family", "QuantumShape", "SkewShape", "parse_shape", "format_shape", "skew",
    "h", "coeff_A", "coeff_B", "coeff_C", "coeff_H", "coeff_Hq", "coeff_N", "coeff_Nhat", "coeff_Nq",
    "QKClass", "pieri", "pieri_class", "psi", "undeformed_pieri_lg",
    "SeidelElement", "act_on_shape", "seidel_degree", "seidel_multiply",
    "Tableau", "enumerate_tableaux", "validate",
    "SchubertSymbol", "MatrixDiagram", "diagram", "gw_pieri",
]
