"""Dold-Puppe complexes of polynomial functors, computed exactly over the integers."""

from .chain import ChainComplex, random_complex, unit_complex
from .dold_puppe import (
    ConsistencyError,
    DPComplex,
    DPSummand,
    ResourceLimitError,
    build,
    dp_degree,
    dp_differential,
    quotient_oracle,
)
from .functors import PolynomialFunctor
from .linalg import HomologyGroup, ValidationError, homology, smith_normal_form

__all__ = [
    "ChainComplex",
    "ConsistencyError",
    "DPComplex",
    "DPSummand",
    "HomologyGroup",
    "PolynomialFunctor",
    "ResourceLimitError",
    "ValidationError",
    "build",
    "dp_degree",
    "dp_differential",
    "homology",
    "quotient_oracle",
    "random_complex",
    "smith_normal_form",
    "unit_complex",
]
