"""Exact combinatorics of mod-p motivic decompositions of generalized
Severi-Brauer varieties and flag varieties of central simple algebras."""

from motivec.arith import DomainError, QPoly, binom, gauss_binom, vp, vp_binom
from motivec.csa import AlgebraClass, FlagDescriptor, ProductVariety

__all__ = [
    "AlgebraClass",
    "DomainError",
    "FlagDescriptor",
    "ProductVariety",
    "QPoly",
    "binom",
    "gauss_binom",
    "vp",
    "vp_binom",
]
