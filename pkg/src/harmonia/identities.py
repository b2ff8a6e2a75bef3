"""
Numerical spot checks of the derivation steps.

Three families of identities are checked at sample points:

* the single sum lemma ``sum_{n=0}^{M} trig(2knx + phi) = D_M(kx) trig(kMx + phi)``;
* the full chains, where every index of the nested sum is collapsed;
* the orthogonality relations that turn a Kronecker delta into an integral.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .errors import BudgetExceeded, InvalidArgument
from .kernels import dirichlet_eval
from .quadrature import QuadratureRule, integrate

__all__ = [
    "IdentityCase",
    "check_sum_lemma",
    "check_chain",
    "chain_by_lemma",
    "check_orthogonality",
    "random_sum_lemma_cases",
    "CHAIN_TERM_BUDGET",
]

CHAIN_TERM_BUDGET = 2_000_000
_TRIG = {"sin": np.sin, "cos": np.cos}


@dataclass(frozen=True)
class IdentityCase:
    identity_id: str
    params: dict
    lhs: float
    rhs: float

    @property
    def rel_err(self) -> float:
        return abs(self.lhs - self.rhs) / max(abs(self.rhs), 1.0)

    def as_dict(self):
        d = asdict(self)
        d["rel_err"] = self.rel_err
        return d


def _trig(name):
    try:
        return _TRIG[name]
    except KeyError:
        raise InvalidArgument(f"trig must be 'sin' or 'cos', got {name!r}") from None


def check_sum_lemma(trig: str, M: int, k: int, phi: float, x: float) -> IdentityCase:
    """Compare a direct sum over ``n = 0..M`` with its closed form."""
    f = _trig(trig)
    if M < 1 or k < 1:
        raise InvalidArgument(f"need M >= 1 and k >= 1, got M={M}, k={k}")
    n = np.arange(M + 1)
    lhs = math.fsum(f(2 * k * n * x + phi))
    rhs = dirichlet_eval(M, k * x) * float(f(k * M * x + phi))
    return IdentityCase(f"sum_{trig}", {"M": M, "k": k, "phi": phi, "x": x}, lhs, rhs)


def _chain_setup(quantity, params):
    if quantity == "bose":
        N, s = params
        bound, weights = N, [1] * s
        phase = N * s
    elif quantity == "partition":
        (s,) = params
        bound, weights = s, list(range(1, s + 1))
        phase = s * s * (s + 1) // 2
    else:
        raise InvalidArgument(f"unknown quantity {quantity!r}")
    if s > 6:
        raise BudgetExceeded(f"nested sums limited to s <= 6, got s={s}")
    if (bound + 1) ** s > CHAIN_TERM_BUDGET:
        raise BudgetExceeded(f"{(bound + 1) ** s} terms exceeds {CHAIN_TERM_BUDGET}")
    return bound, weights, phase


def check_chain(trig: str, quantity: str, params, x: float) -> IdentityCase:
    """Literal nested sum versus kernel product times the accumulated phase.

    ``params`` is ``(N, s)`` for ``bose`` and ``(s,)`` for ``partition``.
    """
    f = _trig(trig)
    params = tuple(params)
    bound, weights, phase = _chain_setup(quantity, params)
    grids = np.meshgrid(*[w * np.arange(bound + 1) for w in weights],
                        indexing="ij", sparse=True)
    lhs = math.fsum(np.ravel(f(2 * x * sum(grids))))
    kernel = 1.0
    for w in weights:
        kernel *= dirichlet_eval(bound, w * x)
    rhs = kernel * float(f(phase * x))
    names = ("N", "s") if quantity == "bose" else ("s",)
    return IdentityCase(f"chain_{trig}_{quantity}",
                        dict(zip(names, params), x=x), lhs, rhs)


def chain_by_lemma(trig: str, quantity: str, params, x: float, depth: int | None = None,
                   rest: tuple = ()) -> tuple[float, float]:
    """Collapse the first ``depth`` indices one at a time with the sum lemma.

    Returns ``(lhs, rhs)`` where lhs sums the first ``depth`` indices
    directly with the remaining ones fixed to ``rest``, and rhs is the
    product of the collected kernel factors times the trig of the phase
    accumulated so far.
    """
    f = _trig(trig)
    params = tuple(params)
    bound, weights, _ = _chain_setup(quantity, params)
    depth = len(weights) if depth is None else depth
    rest = tuple(rest) or (0,) * (len(weights) - depth)
    if len(rest) != len(weights) - depth:
        raise InvalidArgument("rest must fix every index beyond depth")
    fixed = sum(w * n for w, n in zip(weights[depth:], rest))
    inner = weights[:depth]
    grids = np.meshgrid(*[w * np.arange(bound + 1) for w in inner], indexing="ij")
    total = (sum(grids) if inner else np.zeros(1)) + fixed
    lhs = math.fsum(np.ravel(f(2 * x * total)))
    factor, phi = 1.0, 2 * fixed * x
    for w in inner:
        factor *= dirichlet_eval(bound, w * x)
        phi += w * bound * x
    return lhs, factor * float(f(phi))


def check_orthogonality(trig: str, m: int, n: int, nodes: int | None = None) -> IdentityCase:
    """``(2/pi) int_0^pi trig(mx) trig(nx) dx`` by a periodic trapezoid rule.

    Expected: 1 on the diagonal, 0 off it, and 2 for ``cos`` at ``m = n = 0``.
    ``nodes`` panels are exact while ``m + n < 2 * nodes``.
    """
    f = _trig(trig)
    if m < 0 or n < 0:
        raise InvalidArgument("m and n must be non-negative")
    if trig == "sin" and (m < 1 or n < 1):
        raise InvalidArgument("sine orthogonality needs m >= 1 and n >= 1")
    if nodes is None:
        nodes = m + n + 1
    if nodes < 1:
        raise InvalidArgument(f"nodes must be >= 1, got {nodes}")
    xs = np.linspace(0.0, math.pi, nodes + 1)
    ws = np.full(nodes + 1, math.pi / nodes)
    ws[0] = ws[-1] = math.pi / (2 * nodes)

    rule = QuadratureRule("trapezoid_periodic", xs, ws, 2 * nodes - 1)
    got = 2 / math.pi * integrate(rule, lambda x: f(m * x) * f(n * x))
    expected = (2.0 if m == 0 else 1.0) if m == n else 0.0
    return IdentityCase(f"orth_{trig}", {"m": m, "n": n, "nodes": nodes}, got, expected)


def random_sum_lemma_cases(seed: int, count: int = 200):
    """Seeded draws of ``(trig, M, k, phi, x)`` honouring the lemma's precondition."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        trig = "sin" if rng.integers(2) else "cos"
        M = int(rng.integers(1, 51))
        k = int(rng.integers(1, 11))
        phi = float(rng.uniform(0, 2 * math.pi))
        x = float(rng.uniform(0, math.pi / 2))
        # keep away from zeros of sin(kx)
        if abs(math.sin(k * x)) < 1e-6 or x == 0.0:
            continue
        out.append(check_sum_lemma(trig, M, k, phi, x))
    return out
