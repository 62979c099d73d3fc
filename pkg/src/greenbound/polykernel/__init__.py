"""Exact multivariate polynomial arithmetic, Groebner bases and ideal operations."""

from .field import DEFAULT_PRIME, GF65521, QQ, FieldSpec
from .groebner import buchberger, divide_exact, normal_form, spoly
from .ideal import (
    GradedQuotient,
    Ideal,
    contains_maximal_ideal,
    eliminate,
    hilbert_dim,
    ideal_colon_element,
    ideal_intersection,
    ideal_sum,
    kernel_of_monomial_map,
    principal,
    standard_monomial_count,
)
from .monomial import GREVLEX, LEX, MonomialOrder, monomials_of_degree
from .polynomial import Polynomial, default_names, linear_form_coefficients

__all__ = [
    "DEFAULT_PRIME",
    "GF65521",
    "QQ",
    "FieldSpec",
    "buchberger",
    "divide_exact",
    "normal_form",
    "spoly",
    "GradedQuotient",
    "Ideal",
    "contains_maximal_ideal",
    "eliminate",
    "hilbert_dim",
    "ideal_colon_element",
    "ideal_intersection",
    "ideal_sum",
    "kernel_of_monomial_map",
    "principal",
    "standard_monomial_count",
    "GREVLEX",
    "LEX",
    "MonomialOrder",
    "monomials_of_degree",
    "Polynomial",
    "default_names",
    "linear_form_coefficients",
]
