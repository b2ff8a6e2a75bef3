"""
Floating-point route: quadrature of the integrands over [0, pi/2].

Every integrand in scope is an even trigonometric polynomial whose
frequencies are all even, so it has period pi and is symmetric about 0.
The composite trapezoid rule with n panels on [0, pi/2] therefore
integrates it exactly as long as the top frequency is at most 4n - 2.
The algebraic rules (Gauss-Legendre, Clenshaw-Curtis) are only here for
convergence comparisons.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from . import exact_eval
from .errors import InvalidArgument
from .kernels import BOSE_FORMS, PARTITION_FORMS, integrand_bose, integrand_partition

__all__ = [
    "FAMILIES",
    "QuadratureRule",
    "QuadResult",
    "SweepRow",
    "build_rule",
    "integrate",
    "integrand_degree",
    "default_nodes",
    "bose_quad",
    "partition_quad",
    "convergence_sweep",
]

HALF_PI = math.pi / 2
FAMILIES = ("trapezoid_periodic", "gauss_legendre", "clenshaw_curtis")
FAMILY_ALIASES = {"trapezoid": "trapezoid_periodic", "gauss": "gauss_legendre",
                  "cc": "clenshaw_curtis"}


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    family: str
    nodes: np.ndarray
    weights: np.ndarray
    exactness_degree: int

    @property
    def n(self) -> int:
        return len(self.nodes)

    def __iter__(self):
        return iter(zip(self.nodes, self.weights))

    def __repr__(self):
        return (f"QuadratureRule(family={self.family!r}, n={self.n}, "
                f"exactness_degree={self.exactness_degree})")


class QuadResult(NamedTuple):
    value: float
    abs_err: float
    rule: QuadratureRule


class SweepRow(NamedTuple):
    n: int
    value: float
    abs_err: float


def _trapezoid(n):
    x = np.linspace(0.0, HALF_PI, n + 1)
    w = np.full(n + 1, HALF_PI / n)
    w[0] = w[-1] = HALF_PI / (2 * n)
    return x, w


def _gauss_legendre(n):
    t, w = np.polynomial.legendre.leggauss(n)
    return HALF_PI * (t + 1) / 2, w * (HALF_PI / 2)


def _clenshaw_curtis(n):
    # n + 1 Chebyshev extreme points, weights from the cosine-series formula
    if n == 1:
        t = np.array([-1.0, 1.0])
        w = np.array([1.0, 1.0])
    else:
        theta = np.pi * np.arange(n + 1) / n
        t = -np.cos(theta)
        w = np.zeros(n + 1)
        v = np.ones(n - 1)
        inner = np.arange(1, n)
        if n % 2 == 0:
            w[0] = w[n] = 1.0 / (n * n - 1)
            for k in range(1, n // 2):
                v -= 2 * np.cos(2 * k * theta[inner]) / (4 * k * k - 1)
            v -= np.cos(n * theta[inner]) / (n * n - 1)
        else:
            w[0] = w[n] = 1.0 / (n * n)
            for k in range(1, (n - 1) // 2 + 1):
                v -= 2 * np.cos(2 * k * theta[inner]) / (4 * k * k - 1)
        w[inner] = 2 * v / n
    return HALF_PI * (t + 1) / 2, w * (HALF_PI / 2)


def build_rule(family: str, n: int) -> QuadratureRule:
    """Nodes and weights on [0, pi/2].

    For ``trapezoid_periodic`` there are ``n + 1`` equispaced points; for
    ``gauss_legendre`` ``n`` points; for ``clenshaw_curtis`` ``n + 1``.
    """
    family = FAMILY_ALIASES.get(family, family)
    if family not in FAMILIES:
        raise InvalidArgument(f"unknown rule family {family!r}")
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise InvalidArgument(f"node count must be a positive int, got {n!r}")
    if family == "trapezoid_periodic":
        x, w = _trapezoid(n)
        return QuadratureRule(family, x, w, 4 * n - 2)
    if family == "gauss_legendre":
        x, w = _gauss_legendre(n)
    else:
        x, w = _clenshaw_curtis(n)
    return QuadratureRule(family, x, w, 0)


def integrate(rule: QuadratureRule, f: Callable) -> float:
    """Weighted sum of ``f`` over the rule, accumulated with ``math.fsum``."""
    values = np.asarray(f(rule.nodes), dtype=float)
    return math.fsum(rule.weights * values)


def integrand_degree(quantity: str, params, form: str) -> int:
    """Top frequency of the expanded integrand for a given form."""
    if quantity == "bose":
        N, s = params
        if form == "combined25":
            return exact_eval.degree_bound_bose(N, s)
        return s * N + (s + 2) * N
    if quantity == "partition":
        (s,) = params
        if form == "combined43":
            return exact_eval.degree_bound_partition(s)
        return s * s * (s + 1) + 2 * s
    raise InvalidArgument(f"unknown quantity {quantity!r}")


def default_nodes(degree: int) -> int:
    """Smallest trapezoid panel count whose exactness covers ``degree``."""
    return max(1, -(-(degree + 2) // 4))


def _quad(quantity, params, form, rule, f, exact):
    if rule is None:
        rule = build_rule("trapezoid_periodic",
                          default_nodes(integrand_degree(quantity, params, form)))
    value = 4.0 / math.pi * integrate(rule, f)
    return QuadResult(value, abs(value - exact), rule)


def bose_quad(N: int, s: int, form: str = "combined25",
              rule: QuadratureRule | None = None) -> QuadResult:
    """Numerical ``(4/pi) int_0^{pi/2}`` of a Bose integrand.

    With ``rule=None`` the trapezoid rule is sized from the form's degree.
    """
    if form not in BOSE_FORMS:
        raise InvalidArgument(f"unknown Bose form {form!r}")
    integrand_bose(N, s, 0.0, form)  # domain check before building anything
    exact = exact_eval.bose_exact(N, s).value
    return _quad("bose", (N, s), form, rule,
                 lambda x: integrand_bose(N, s, x, form), exact)


def partition_quad(s: int, form: str = "combined43",
                   rule: QuadratureRule | None = None) -> QuadResult:
    if form not in PARTITION_FORMS:
        raise InvalidArgument(f"unknown partition form {form!r}")
    integrand_partition(s, 0.0, form)
    exact = exact_eval.partition_exact(s).value
    return _quad("partition", (s,), form, rule,
                 lambda x: integrand_partition(s, x, form), exact)


def convergence_sweep(quantity: str, params, family: str, n_list,
                      form: str | None = None) -> list[SweepRow]:
    """One row per node count, in the order given."""
    n_list = list(n_list)
    if not n_list:
        raise InvalidArgument("n_list must not be empty")
    rows = []
    for n in n_list:
        rule = build_rule(family, n)
        if quantity == "bose":
            res = bose_quad(*params, form=form or "combined25", rule=rule)
        elif quantity == "partition":
            res = partition_quad(*params, form=form or "combined43", rule=rule)
        else:
            raise InvalidArgument(f"unknown quantity {quantity!r}")
        rows.append(SweepRow(n, res.value, res.abs_err))
    return rows
