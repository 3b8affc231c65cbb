"""Closed forms and a numerical oracle for integrals of rational functions times ln x."""

from logint.constexpr import Atom, ConstantExpr
from logint.errors import CapacityError, DivergenceError, DomainError

__version__ = "0.1.0"

__all__ = ["Atom", "CapacityError", "ConstantExpr", "DivergenceError", "DomainError", "__version__"]
