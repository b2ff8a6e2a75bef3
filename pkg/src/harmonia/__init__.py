"""Harmonic-integral representations of combination counts and partition numbers.

Two independent routes evaluate the integrals: exact expansion of the
integrand as an integer trigonometric polynomial (``exact_eval``), and
floating-point quadrature (``quadrature``). Both are checked against
classical oracles (``oracles``).
"""

from .errors import BudgetExceeded, DomainError, InvalidArgument, ParityError
from .exact_eval import (
    bose_exact,
    bose_special_exact,
    degree_bound_bose,
    degree_bound_partition,
    mu,
    parity_check,
    partition_exact,
)
from .fourier_core import SymmetricTrigPoly
from .oracles import (
    binomial_oracle,
    brute_count_bose,
    brute_count_partition,
    partition_oracle,
    pentagonal_oracle,
)
from .quadrature import bose_quad, build_rule, partition_quad

__version__ = "0.1.0"
