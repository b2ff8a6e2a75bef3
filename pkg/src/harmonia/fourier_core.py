"""
Exact algebra of finite even trigonometric polynomials.

A polynomial is stored in the symmetric exponential form: a sparse table
``{m: a_m}`` over non-negative frequencies, standing for the function

    a_0 + sum_{m >= 1} 2 a_m cos(m x)  ==  sum_{m in Z} a_|m| exp(i m x).

In this form the product of two integer polynomials is again integer, which
keeps every kernel expansion exact without rationals. Dense work is done on
numpy object arrays so that coefficients stay Python ints.
"""

from __future__ import annotations

import math
from types import MappingProxyType
from typing import Mapping

import numpy as np

from .errors import InvalidArgument, ParityError

__all__ = [
    "SymmetricTrigPoly",
    "from_constant",
    "dirichlet",
    "scale_frequency",
    "multiply",
    "power",
    "mul_by_cos",
    "mul_by_double_cos",
    "constant_coefficient",
    "max_frequency",
    "evaluate",
]


def _is_int(v) -> bool:
    return isinstance(v, (int, np.integer)) and not isinstance(v, bool)


class SymmetricTrigPoly:
    """Immutable even trigonometric polynomial with integer coefficients.

    Parameters
    ----------
    coeffs : mapping of int to int, optional
        Frequency to coefficient table. Zero entries are dropped.
    """

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        table = {}
        for m, a in (coeffs or {}).items():
            if not _is_int(m) or m < 0:
                raise InvalidArgument(f"frequency must be a non-negative int, got {m!r}")
            if not _is_int(a):
                raise InvalidArgument(f"coefficient must be an int, got {a!r}")
            if a:
                table[int(m)] = int(a)
        self._coeffs = MappingProxyType(dict(sorted(table.items())))
        self._hash = None

    @classmethod
    def _from_dense(cls, arr) -> "SymmetricTrigPoly":
        # arr[m] is the coefficient at frequency m
        obj = cls.__new__(cls)
        obj._coeffs = MappingProxyType({m: int(a) for m, a in enumerate(arr) if a})
        obj._hash = None
        return obj

    @property
    def coeffs(self) -> Mapping[int, int]:
        return self._coeffs

    def frequencies(self) -> list[int]:
        return list(self._coeffs)

    def to_dense(self, length: int | None = None) -> np.ndarray:
        """One-sided coefficient array (object dtype) indexed by frequency."""
        if length is None:
            length = self.max_frequency() + 1
        out = np.zeros(length, dtype=object)
        for m, a in self._coeffs.items():
            out[m] = a
        return out

    def to_full(self) -> np.ndarray:
        """Two-sided array ``c[m + M]`` for ``-M <= m <= M``."""
        half = self.to_dense()
        return np.concatenate([half[:0:-1], half])

    def max_frequency(self) -> int:
        return next(reversed(self._coeffs), 0) if self._coeffs else 0

    def constant_coefficient(self) -> int:
        return self._coeffs.get(0, 0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def evaluate(self, x):
        return evaluate(self, x)

    def __mul__(self, other):
        if isinstance(other, SymmetricTrigPoly):
            return multiply(self, other)
        return NotImplemented

    def __pow__(self, e: int):
        return power(self, e)

    def __eq__(self, other):
        if isinstance(other, SymmetricTrigPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, Mapping):
            return dict(self._coeffs) == dict(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._coeffs.items()))
        return self._hash

    def __len__(self):
        return len(self._coeffs)

    def __repr__(self):
        if len(self._coeffs) > 8:
            return (f"SymmetricTrigPoly(<{len(self._coeffs)} terms, "
                    f"max_frequency={self.max_frequency()}>)")
        return f"SymmetricTrigPoly({dict(self._coeffs)!r})"


def from_constant(c: int) -> SymmetricTrigPoly:
    return SymmetricTrigPoly({0: c})


def dirichlet(N: int) -> SymmetricTrigPoly:
    """Expansion of ``sin((N+1)x) / sin(x)``.

    The ratio equals ``sum_{j=0}^{N} exp(i (N - 2j) x)``, so every frequency
    ``N, N-2, ...`` down to 0 or 1 carries coefficient 1.
    """
    if not _is_int(N) or N < 0:
        raise InvalidArgument(f"N must be a non-negative int, got {N!r}")
    return SymmetricTrigPoly({m: 1 for m in range(N % 2, N + 1, 2)})


def scale_frequency(p: SymmetricTrigPoly, k: int) -> SymmetricTrigPoly:
    """Substitute ``x -> k x``."""
    if not _is_int(k) or k < 1:
        raise InvalidArgument(f"k must be a positive int, got {k!r}")
    return SymmetricTrigPoly({k * m: a for m, a in p.coeffs.items()})


def multiply(p: SymmetricTrigPoly, q: SymmetricTrigPoly) -> SymmetricTrigPoly:
    """Exact symmetric convolution of two polynomials.

    The operand with fewer terms is walked term by term; each of its
    two-sided terms adds a shifted, scaled copy of the other operand's
    dense two-sided array into the non-negative half of the result.
    """
    if p.is_zero() or q.is_zero():
        return SymmetricTrigPoly()
    if len(p) < len(q):
        p, q = q, p
    Ma, Mb = p.max_frequency(), q.max_frequency()
    A = p.to_full()  # A[v + Ma] = c_v
    out = np.zeros(Ma + Mb + 1, dtype=object)
    for u0, b in q.coeffs.items():
        for u in ((u0, -u0) if u0 else (0,)):
            lo = max(0, u - Ma)
            hi = u + Ma
            if hi < 0:
                continue
            seg = A[lo - u + Ma:hi - u + Ma + 1]
            out[lo:hi + 1] += seg if b == 1 else b * seg
    return SymmetricTrigPoly._from_dense(out)


def power(p: SymmetricTrigPoly, e: int) -> SymmetricTrigPoly:
    """``p ** e`` by repeated squaring."""
    if not _is_int(e) or e < 0:
        raise InvalidArgument(f"exponent must be a non-negative int, got {e!r}")
    result = from_constant(1)
    base = p
    while e:
        if e & 1:
            result = multiply(result, base)
        e >>= 1
        if e:
            base = multiply(base, base)
    return result


def _double_cos(mu: int) -> SymmetricTrigPoly:
    # 2 cos(mu x) = exp(i mu x) + exp(-i mu x)
    mu = abs(mu)
    return SymmetricTrigPoly({0: 2} if mu == 0 else {mu: 1})


def mul_by_double_cos(p: SymmetricTrigPoly, mu: int) -> SymmetricTrigPoly:
    """Exact product ``p(x) * 2 cos(mu x)``; always integer."""
    if not _is_int(mu):
        raise InvalidArgument(f"mu must be an int, got {mu!r}")
    return multiply(p, _double_cos(mu))


def mul_by_cos(p: SymmetricTrigPoly, mu: int) -> SymmetricTrigPoly:
    """Exact product ``p(x) * cos(mu x)``.

    The result coefficient at ``m`` is ``(c[m - mu] + c[m + mu]) / 2``. The
    constant term is always ``c[|mu|]``, but other entries may be
    half-integers; in that case ParityError is raised rather than rounding.
    Use :func:`mul_by_double_cos` when only integer closure is needed.
    """
    doubled = mul_by_double_cos(p, mu)
    odd = [m for m, a in doubled.coeffs.items() if a % 2]
    if odd:
        raise ParityError(
            f"p * cos({mu}x) has half-integer coefficients at frequencies "
            f"{odd[:5]}{'...' if len(odd) > 5 else ''}")
    return SymmetricTrigPoly({m: a // 2 for m, a in doubled.coeffs.items()})


def constant_coefficient(p: SymmetricTrigPoly) -> int:
    return p.constant_coefficient()


def max_frequency(p: SymmetricTrigPoly) -> int:
    return p.max_frequency()


def evaluate(p: SymmetricTrigPoly, x):
    """Floating-point value of ``a_0 + sum 2 a_m cos(m x)``.

    Accepts a scalar (returns float) or an array (returns ndarray).
    """
    if np.ndim(x) == 0:
        xf = float(x)
        terms = [float(a) if m == 0 else 2.0 * float(a) * math.cos(m * xf)
                 for m, a in p.coeffs.items()]
        return math.fsum(terms)
    xa = np.asarray(x, dtype=float)
    if p.is_zero():
        return np.zeros_like(xa)
    freqs = np.array(p.frequencies(), dtype=float)
    weights = np.array([float(a) if m == 0 else 2.0 * float(a)
                        for m, a in p.coeffs.items()])
    return np.cos(np.multiply.outer(xa, freqs)) @ weights
