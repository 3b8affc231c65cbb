"""Reduction of ``int_0^b R(x) ln x dx`` to the basis families."""

from logint.reduce.combination import (
    BasisCall,
    BasisCombination,
    as_upper,
    evaluate_combination,
    explain,
    quad,
    reduce_integrand,
    reduce_to_basis,
)
from logint.reduce.integrand import IntegrandSyntaxError, RationalIntegrand, UnsupportedPoleError
from logint.reduce.parser import parse_integrand
from logint.reduce.partial import PartialFractionForm, partial_fractions, recombine

__all__ = [
    "BasisCall",
    "BasisCombination",
    "IntegrandSyntaxError",
    "PartialFractionForm",
    "RationalIntegrand",
    "UnsupportedPoleError",
    "as_upper",
    "evaluate_combination",
    "explain",
    "parse_integrand",
    "partial_fractions",
    "quad",
    "recombine",
    "reduce_integrand",
    "reduce_to_basis",
]
