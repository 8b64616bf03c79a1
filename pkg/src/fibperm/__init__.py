"""Exact permanents of integer matrices by contraction, Hessenberg expansion
and Ryser's formula, with checks of Fibonacci/Lucas permanent identities."""

from fibperm.contraction import (
    contract_column,
    contract_row,
    find_contractible_column,
    per_contraction,
)
from fibperm.families import Family, FamilySpec, build_family, family
from fibperm.matrix import IntMatrix, hadamard, is_lower_hessenberg, make_matrix, transpose
from fibperm.permanent import det_bareiss, per_hessenberg, per_naive, per_ryser
from fibperm.sequences import fib, fib_sum, lucas, lucas_sum

__version__ = "0.1.0"
