"""Noncommutative symmetric functions with exact arithmetic.

Elements carry a basis tag (``Psi``, ``S``, ``Lambda``, ``M``, ``F``, ``L``,
``R``) and rational coefficients indexed by compositions; every conversion
runs through power-sum (``Psi``) coordinates.
"""

from .algebra import BASES, F, L, LAMBDA, M, PSI, R, S, Element, TensorElement, format_element
from .bases import TransitionMatrix, convert, to_psi, transition_matrix
from .compositions import DomainError, composition, compositions_of, conjugate
from .kernels import BACKEND
from .products import multiply, omega, pair

__all__ = [
    "BACKEND",
    "BASES",
    "DomainError",
    "Element",
    "F",
    "L",
    "LAMBDA",
    "M",
    "PSI",
    "R",
    "S",
    "TensorElement",
    "TransitionMatrix",
    "composition",
    "compositions_of",
    "conjugate",
    "convert",
    "format_element",
    "multiply",
    "omega",
    "pair",
    "to_psi",
    "transition_matrix",
]
