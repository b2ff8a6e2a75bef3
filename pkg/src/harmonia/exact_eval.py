"""
Exact evaluation of the harmonic integrals for B(N, s) and p_s.

Each integrand ``K(x) cos(mu x)`` is expanded as an integer polynomial.
All of its frequencies are even, and ``(2/pi) * integral_0^{pi/2} cos(2jx) dx``
vanishes for ``j >= 1``, so the normalized integral is the constant
Fourier coefficient. Expansions carry ``2 cos(mu x)`` rather than
``cos(mu x)`` to stay on the integers; the constant term is halved at the end.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import fourier_core as fc
from .errors import InvalidArgument, ParityError

__all__ = [
    "ExactResult",
    "mu",
    "bose_kernel",
    "partition_kernel",
    "bose_integrand",
    "partition_integrand",
    "bose_exact",
    "bose_special_exact",
    "partition_exact",
    "degree_bound_bose",
    "degree_bound_partition",
    "parity_check",
]


@dataclass(frozen=True)
class ExactResult:
    quantity: str
    params: tuple
    value: int
    max_freq: int
    term_count: int


def mu(s: int) -> int:
    """Modulation frequency ``s^2 (s+1) / 2 - 2 s`` of the partition integrand."""
    if s < 1:
        raise InvalidArgument(f"s must be >= 1, got {s}")
    return s * s * (s + 1) // 2 - 2 * s


def _check_bose(N, s):
    if N < 0 or s < 1:
        raise InvalidArgument(f"need N >= 0 and s >= 1, got N={N}, s={s}")


@lru_cache(maxsize=256)
def bose_kernel(N: int, s: int) -> fc.SymmetricTrigPoly:
    """``[sin((N+1)x) / sin x]^s``."""
    _check_bose(N, s)
    return fc.power(fc.dirichlet(N), s)


@lru_cache(maxsize=64)
def partition_kernel(s: int) -> fc.SymmetricTrigPoly:
    """``prod_{k=1}^{s} sin(k(s+1)x) / sin(kx)``, multiplied in ascending k."""
    if s < 1:
        raise InvalidArgument(f"s must be >= 1, got {s}")
    base = fc.dirichlet(s)
    out = fc.from_constant(1)
    for k in range(1, s + 1):
        out = fc.multiply(out, fc.scale_frequency(base, k))
    return out


@lru_cache(maxsize=256)
def bose_integrand(N: int, s: int) -> fc.SymmetricTrigPoly:
    """``K(x) * 2 cos((s-2) N x)`` for the Bose kernel."""
    return fc.mul_by_double_cos(bose_kernel(N, s), (s - 2) * N)


@lru_cache(maxsize=64)
def partition_integrand(s: int) -> fc.SymmetricTrigPoly:
    """``K(x) * 2 cos(mu(s) x)`` for the partition kernel."""
    return fc.mul_by_double_cos(partition_kernel(s), mu(s))


def _read_integral(poly: fc.SymmetricTrigPoly) -> int:
    odd = [m for m in poly.coeffs if m % 2]
    if odd:
        raise ParityError(f"integrand has odd frequencies {odd[:5]}; "
                          "constant term is not the integral")
    doubled = poly.constant_coefficient()
    if doubled % 2:
        raise ParityError("doubled constant term is odd")
    return doubled // 2


def _result(quantity, params, poly):
    return ExactResult(quantity, params, _read_integral(poly),
                       poly.max_frequency(), len(poly))


def bose_exact(N: int, s: int) -> ExactResult:
    """B(N, s) from ``(2/pi) int_0^{pi/2} D_N(x)^s cos((s-2)Nx) dx``."""
    _check_bose(N, s)
    return _result("bose", (N, s), bose_integrand(N, s))


def bose_special_exact(s: int) -> ExactResult:
    """The ``N = s`` case, ``(2s-1)! / (s! (s-1)!)``."""
    return bose_exact(s, s)


def partition_exact(s: int) -> ExactResult:
    if s < 1:
        raise InvalidArgument(f"s must be >= 1, got {s}")
    return _result("partition", (s,), partition_integrand(s))


def degree_bound_bose(N: int, s: int) -> int:
    return s * N + abs(s - 2) * N


def degree_bound_partition(s: int) -> int:
    return s * s * (s + 1) // 2 + abs(mu(s))


def parity_check(quantity: str, params) -> bool:
    """True iff the expanded integrand has only even frequencies."""
    if quantity == "bose":
        poly = bose_integrand(*params)
    elif quantity == "partition":
        (s,) = params if isinstance(params, tuple) else (params,)
        poly = partition_integrand(s)
    else:
        raise InvalidArgument(f"unknown quantity {quantity!r}")
    return all(m % 2 == 0 for m in poly.coeffs)
