"""Homological shift ideals of monomial ideals."""

from .monomial import MonomialIdeal, minimalize
from .oracle import betti_table, hs_all, hs_oracle, projdim
from .linquot import UNDECIDED, find_linear_quotient_order, hs_via_sets

__all__ = [
    "MonomialIdeal",
    "UNDECIDED",
    "betti_table",
    "find_linear_quotient_order",
    "hs_all",
    "hs_oracle",
    "hs_via_sets",
    "minimalize",
    "projdim",
]

__version__ = "0.1.0"
