"""
Pointwise evaluation of Dirichlet-kernel ratios and the full integrands.

Kernels are always evaluated from their finite cosine sums, so removable
singularities (``sin(k x) = 0``) need no special casing.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InvalidArgument

__all__ = [
    "BOSE_FORMS",
    "PARTITION_FORMS",
    "KernelSpec",
    "dirichlet_eval",
    "integrand_bose",
    "integrand_partition",
]

BOSE_FORMS = ("sine18", "cosine24", "combined25")
PARTITION_FORMS = ("sine35", "cosine42", "combined43")


@dataclass(frozen=True)
class KernelSpec:
    """One factor ``sin((order+1) k x) / sin(k x)``."""

    order: int
    multiplier: int = 1

    def __post_init__(self):
        if self.order < 0:
            raise InvalidArgument(f"order must be >= 0, got {self.order}")
        if self.multiplier < 1:
            raise InvalidArgument(f"multiplier must be >= 1, got {self.multiplier}")

    def __call__(self, x):
        return dirichlet_eval(self.order, self.multiplier * np.asarray(x, dtype=float))


def dirichlet_eval(N: int, y):
    """Value of ``sin((N+1) y) / sin(y)`` for any real ``y``.

    Computed as ``sum_{j=0}^{N} cos((N - 2j) y)``, folded onto the
    non-negative frequencies.
    """
    if N < 0:
        raise InvalidArgument(f"N must be >= 0, got {N}")
    scalar = np.ndim(y) == 0
    y = np.asarray(y, dtype=float)
    freqs = np.arange(N % 2, N + 1, 2, dtype=float)
    total = 2.0 * np.cos(np.multiply.outer(y, freqs)).sum(axis=-1)
    if N % 2 == 0:
        total = total - 1.0
    return float(total) if scalar else total


def _trig_pair(form: str, a, b, x):
    if form.startswith("sine"):
        return np.sin(a * x) * np.sin(b * x)
    return np.cos(a * x) * np.cos(b * x)


def integrand_bose(N: int, s: int, x, form: str = "combined25"):
    """Integrand whose ``(4/pi) * integral over [0, pi/2]`` is ``B(N, s)``.

    ``combined25`` carries the factor 1/2 so the three forms share one
    prefactor. It is also valid at ``N = 0``; the split forms are not.
    """
    if form not in BOSE_FORMS:
        raise InvalidArgument(f"unknown Bose form {form!r}; expected one of {BOSE_FORMS}")
    min_N = 0 if form == "combined25" else 1
    if N < min_N or s < 1:
        raise DomainError(f"form {form} needs N >= {min_N} and s >= 1, got N={N}, s={s}")
    scalar = np.ndim(x) == 0
    x = np.asarray(x, dtype=float)
    kernel = dirichlet_eval(N, x) ** s
    if form == "combined25":
        val = 0.5 * kernel * np.cos((s - 2) * N * x)
    else:
        val = kernel * _trig_pair(form, 2 * N, N * s, x)
    return float(val) if scalar else val


def integrand_partition(s: int, x, form: str = "combined43"):
    """Integrand whose ``(4/pi) * integral over [0, pi/2]`` is ``p_s``."""
    if form not in PARTITION_FORMS:
        raise InvalidArgument(
            f"unknown partition form {form!r}; expected one of {PARTITION_FORMS}")
    if s < 1:
        raise DomainError(f"s must be >= 1, got {s}")
    scalar = np.ndim(x) == 0
    x = np.asarray(x, dtype=float)
    kernel = np.ones_like(x)
    for k in range(1, s + 1):
        kernel = kernel * dirichlet_eval(s, k * x)
    phase = s * s * (s + 1) // 2
    if form == "combined43":
        val = 0.5 * kernel * np.cos((phase - 2 * s) * x)
    else:
        val = kernel * _trig_pair(form, 2 * s, phase, x)
    return float(val) if scalar else val
