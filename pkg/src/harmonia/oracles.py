"""
Classical ground truth for B(N, s) and p_s.

Two structurally different partition oracles are provided (coefficient
extraction from the finite Euler product, and Euler's pentagonal
recurrence), plus brute-force enumeration of the defining delta-sums.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import BudgetExceeded, InvalidArgument

__all__ = [
    "DEFAULT_BUDGET",
    "OracleValue",
    "binomial_oracle",
    "partition_oracle",
    "pentagonal_oracle",
    "brute_count_bose",
    "brute_count_partition",
    "oracle_value",
]

DEFAULT_BUDGET = 10_000_000


@dataclass(frozen=True)
class OracleValue:
    quantity: str
    params: tuple
    value: int
    method: str


def binomial_oracle(N: int, s: int) -> int:
    """``C(N + s - 1, N)`` by the multiplicative formula.

    Each step ``r -> r * (s - 1 + i) / i`` divides exactly, since the
    running value is ``C(s - 1 + i, i)``.
    """
    if s < 1:
        raise InvalidArgument(f"s must be >= 1, got {s}")
    if N < 0:
        raise InvalidArgument(f"N must be >= 0, got {N}")
    r = 1
    for i in range(1, N + 1):
        r = r * (s - 1 + i) // i
    return r


def partition_oracle(s: int) -> int:
    """Coefficient of ``x**s`` in ``prod_{k<=s} 1 / (1 - x**k)``.

    Dividing by ``1 - x**k`` is the running sum ``c[n] += c[n - k]``.
    """
    if s < 0:
        raise InvalidArgument(f"s must be >= 0, got {s}")
    c = [1] + [0] * s
    for k in range(1, s + 1):
        for n in range(k, s + 1):
            c[n] += c[n - k]
    return c[s]


def pentagonal_oracle(s: int) -> int:
    """p(s) from the pentagonal-number recurrence."""
    if s < 0:
        raise InvalidArgument(f"s must be >= 0, got {s}")
    p = [1] + [0] * s
    for n in range(1, s + 1):
        total = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > n:
                break
            sign = 1 if j % 2 else -1
            total += sign * p[n - g1]
            g2 = g1 + j
            if g2 <= n:
                total += sign * p[n - g2]
            j += 1
        p[n] = total
    return p[s]


class _Budget:
    def __init__(self, limit):
        self.limit = limit
        self.used = 0

    def tick(self):
        self.used += 1
        if self.used > self.limit:
            raise BudgetExceeded(f"enumeration exceeded {self.limit} states")


def _count_weighted(weights, bound, target, budget):
    # number of tuples 0 <= n_i <= bound with sum(w_i n_i) == target
    last = len(weights) - 1

    def rec(i, remaining):
        budget.tick()
        w = weights[i]
        if i == last:
            return 1 if remaining % w == 0 and remaining // w <= bound else 0
        total = 0
        for n in range(min(bound, remaining // w) + 1):
            total += rec(i + 1, remaining - n * w)
        return total

    return rec(0, target)


def _scan_literal(weights, bound, target, budget):
    count = 0
    for tup in itertools.product(range(bound + 1), repeat=len(weights)):
        budget.tick()
        if sum(w * n for w, n in zip(weights, tup)) == target:
            count += 1
    return count


def brute_count_bose(N: int, s: int, budget: int = DEFAULT_BUDGET,
                     literal: bool = False) -> int:
    """Count tuples ``0 <= n_i <= N`` with ``n_1 + ... + n_s = N``.

    With ``literal=True`` the whole hypercube is scanned (``s <= 4`` only);
    otherwise a recursion prunes on the remaining sum.
    """
    if s < 1 or N < 0:
        raise InvalidArgument(f"need N >= 0 and s >= 1, got N={N}, s={s}")
    b = _Budget(budget)
    if literal:
        if s > 4:
            raise InvalidArgument("literal hypercube scan is limited to s <= 4")
        return _scan_literal([1] * s, N, N, b)
    return _count_weighted([1] * s, N, N, b)


def brute_count_partition(s: int, budget: int = DEFAULT_BUDGET,
                          literal: bool = False) -> int:
    """Count tuples ``0 <= n_k <= s`` with ``sum k n_k = s``.

    Weights are walked from ``s`` down to 1 so the pruning bites early.
    """
    if s < 1:
        raise InvalidArgument(f"s must be >= 1, got {s}")
    b = _Budget(budget)
    if literal:
        if s > 4:
            raise InvalidArgument("literal hypercube scan is limited to s <= 4")
        return _scan_literal(list(range(1, s + 1)), s, s, b)
    return _count_weighted(list(range(s, 0, -1)), s, s, b)


def oracle_value(quantity: str, params: tuple, method: str,
                 budget: int = DEFAULT_BUDGET) -> OracleValue:
    """Dispatch one oracle and wrap the result."""
    if quantity == "bose":
        N, s = params
        funcs = {"binomial": lambda: binomial_oracle(N, s),
                 "brute_force": lambda: brute_count_bose(N, s, budget)}
    elif quantity == "partition":
        (s,) = params
        funcs = {"euler_dp": lambda: partition_oracle(s),
                 "pentagonal": lambda: pentagonal_oracle(s),
                 "brute_force": lambda: brute_count_partition(s, budget)}
    else:
        raise InvalidArgument(f"unknown quantity {quantity!r}")
    if method not in funcs:
        raise InvalidArgument(f"method {method!r} not available for {quantity}")
    return OracleValue(quantity, tuple(params), funcs[method](), method)
