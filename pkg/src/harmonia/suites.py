"""
Verification suites run by ``harmonia verify``.

Each suite is a fixed, desk-scale grid of cases. A case yields a row
``(suite, case, expected, got, status)``; exact integers are recorded as
decimal strings and floats with ``repr`` so reports are byte-reproducible.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from . import exact_eval as ex
from . import identities as ident
from . import oracles as orc
from . import quadrature as qd
from .kernels import BOSE_FORMS, PARTITION_FORMS

__all__ = ["SUITES", "ReportRow", "VerificationReport", "run_suites"]

SUITES = ("oracles", "exact", "quadrature", "identities", "parity")

# tolerances, mirrored in tests/test_acceptance.py
QUAD_COMBINED_TOL = 1e-9
QUAD_SPLIT_TOL = 2e-9
IDENTITY_REL_TOL = 1e-9
ORTHOGONALITY_TOL = 1e-10


@dataclass(frozen=True)
class ReportRow:
    suite: str
    case: str
    expected: str
    got: str
    status: str


@dataclass
class VerificationReport:
    seed: int
    suites: list
    rows: list = field(default_factory=list)

    @property
    def failures(self) -> list:
        return [r for r in self.rows if r.status != "pass"]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> str:
        doc = {
            "seed": self.seed,
            "suites": list(self.suites),
            "total": len(self.rows),
            "failed": len(self.failures),
            "rows": [asdict(r) for r in self.rows],
        }
        return json.dumps(doc, indent=1, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["suite", "case", "expected", "got", "status"])
        for r in self.rows:
            w.writerow([r.suite, r.case, r.expected, r.got, r.status])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"{r.status.upper():4s} {r.suite:10s} {r.case}  expected={r.expected} got={r.got}"
                 for r in self.rows]
        lines.append(f"seed={self.seed} total={len(self.rows)} failed={len(self.failures)}")
        return "\n".join(lines) + "\n"


def _eq(suite, case, expected, got):
    return ReportRow(suite, case, str(expected), str(got),
                     "pass" if expected == got else "fail")


def _close(suite, case, expected, got, tol, err=None):
    if err is None:
        err = abs(got - expected)
    return ReportRow(suite, case, repr(expected), repr(got),
                     "pass" if err <= tol else "fail")


# -- case generators: each yields zero-argument callables returning rows --

def _oracle_cases(seed, budget):
    for s in range(0, 41):
        yield lambda s=s: _eq("oracles", f"pentagonal s={s}",
                              orc.partition_oracle(s), orc.pentagonal_oracle(s))
    for s in range(1, 41):
        yield lambda s=s: _eq("oracles", f"brute_partition s={s}",
                              orc.partition_oracle(s), orc.brute_count_partition(s, budget))
    for s in range(1, 5):
        yield lambda s=s: _eq("oracles", f"literal_partition s={s}",
                              orc.brute_count_partition(s, budget),
                              orc.brute_count_partition(s, budget, literal=True))
    for s in range(1, 15):
        for N in range(0, 15 - s):
            yield lambda N=N, s=s: _eq("oracles", f"brute_bose N={N} s={s}",
                                       orc.binomial_oracle(N, s), orc.brute_count_bose(N, s, budget))
            if s <= 4:
                yield lambda N=N, s=s: _eq(
                    "oracles", f"literal_bose N={N} s={s}",
                    orc.brute_count_bose(N, s, budget),
                    orc.brute_count_bose(N, s, budget, literal=True))
    for N in range(1, 13):
        for s in range(2, 13):
            yield lambda N=N, s=s: _eq(
                "oracles", f"pascal N={N} s={s}", orc.binomial_oracle(N, s),
                orc.binomial_oracle(N - 1, s) + orc.binomial_oracle(N, s - 1))


def _exact_cases(seed, budget):
    for N in range(0, 13):
        for s in range(1, 13):
            yield lambda N=N, s=s: _eq("exact", f"bose N={N} s={s}",
                                       orc.binomial_oracle(N, s), ex.bose_exact(N, s).value)
    for s in range(1, 13):
        closed = math.factorial(2 * s - 1) // (math.factorial(s) * math.factorial(s - 1))
        yield lambda s=s, c=closed: _eq("exact", f"bose_special s={s}", c,
                                        ex.bose_special_exact(s).value)
    for s in range(1, 31):
        yield lambda s=s: _eq("exact", f"partition_vs_dp s={s}",
                              orc.partition_oracle(s), ex.partition_exact(s).value)
        yield lambda s=s: _eq("exact", f"partition_vs_pentagonal s={s}",
                              orc.pentagonal_oracle(s), ex.partition_exact(s).value)


def _quad_row(quantity, params, form):
    if quantity == "bose":
        res = qd.bose_quad(*params, form=form)
        exact = ex.bose_exact(*params).value
        label = f"bose N={params[0]} s={params[1]} {form}"
        tol = QUAD_COMBINED_TOL if form == "combined25" else QUAD_SPLIT_TOL
    else:
        res = qd.partition_quad(*params, form=form)
        exact = ex.partition_exact(*params).value
        label = f"partition s={params[0]} {form}"
        tol = QUAD_COMBINED_TOL if form == "combined43" else QUAD_SPLIT_TOL
    return _close("quadrature", f"{label} n={res.rule.n - 1}", float(exact), res.value, tol)


def _quad_cases(seed, budget):
    for N in range(0, 9):
        for s in range(1, 9):
            for form in BOSE_FORMS:
                if N == 0 and form != "combined25":
                    continue
                yield lambda N=N, s=s, f=form: _quad_row("bose", (N, s), f)
    for s in range(1, 7):
        for form in PARTITION_FORMS:
            yield lambda s=s, f=form: _quad_row("partition", (s,), f)


def _identity_cases(seed, budget):
    rng = np.random.default_rng(seed)
    sums = ident.random_sum_lemma_cases(seed, 200)
    for i, c in enumerate(sums):
        yield lambda i=i, c=c: _close(
            "identities", f"{c.identity_id} #{i} M={c.params['M']} k={c.params['k']}",
            c.rhs, c.lhs, IDENTITY_REL_TOL, c.rel_err)
    chain_x = iter(rng.uniform(0.01, math.pi / 2, size=2 * (36 + 6)))
    for trig in ("sin", "cos"):
        for N in range(1, 7):
            for s in range(1, 7):
                x = float(next(chain_x))
                yield lambda t=trig, N=N, s=s, x=x: _chain_row(t, "bose", (N, s), x)
        for s in range(1, 7):
            x = float(next(chain_x))
            yield lambda t=trig, s=s, x=x: _chain_row(t, "partition", (s,), x)
    for trig in ("sin", "cos"):
        lo = 1 if trig == "sin" else 0
        for m in range(lo, 7):
            for n in range(lo, 7):
                def row(t=trig, m=m, n=n):
                    c = ident.check_orthogonality(t, m, n)
                    return _close("identities", f"orth_{t} m={m} n={n}", c.rhs, c.lhs,
                                  ORTHOGONALITY_TOL)
                yield row


def _chain_row(trig, quantity, params, x):
    c = ident.check_chain(trig, quantity, params, x)
    p = " ".join(f"{k}={v}" for k, v in c.params.items() if k != "x")
    return _close("identities", f"{c.identity_id} {p}", c.rhs, c.lhs,
                  IDENTITY_REL_TOL, c.rel_err)


def _parity_cases(seed, budget):
    def bose(N, s):
        poly = ex.bose_integrand(N, s)
        ok = ex.parity_check("bose", (N, s)) and poly.max_frequency() == ex.degree_bound_bose(N, s)
        return ReportRow("parity", f"bose N={N} s={s}",
                         f"even;deg={ex.degree_bound_bose(N, s)}",
                         f"{'even' if ex.parity_check('bose', (N, s)) else 'odd'};"
                         f"deg={poly.max_frequency()}", "pass" if ok else "fail")

    def part(s):
        poly = ex.partition_integrand(s)
        par = ex.parity_check("partition", (s,))
        ok = par and poly.max_frequency() == ex.degree_bound_partition(s)
        return ReportRow("parity", f"partition s={s}",
                         f"even;deg={ex.degree_bound_partition(s)}",
                         f"{'even' if par else 'odd'};deg={poly.max_frequency()}",
                         "pass" if ok else "fail")

    for N in range(0, 13):
        for s in range(1, 13):
            yield lambda N=N, s=s: bose(N, s)
    for s in range(1, 31):
        yield lambda s=s: part(s)


_GENERATORS = {
    "oracles": _oracle_cases,
    "exact": _exact_cases,
    "quadrature": _quad_cases,
    "identities": _identity_cases,
    "parity": _parity_cases,
}


def run_suites(names, seed: int = 0, budget: int = orc.DEFAULT_BUDGET,
               threads: int | None = None) -> VerificationReport:
    """Run the named suites (``"all"`` expands to every suite).

    Cases may be evaluated on a thread pool; rows always come back in
    generation order.
    """
    if isinstance(names, str):
        names = [names]
    expanded = []
    for n in names:
        expanded.extend(SUITES if n == "all" else [n])
    for n in expanded:
        if n not in _GENERATORS:
            raise ValueError(f"unknown suite {n!r}")
    if threads is None:
        threads = os.cpu_count() or 1
    report = VerificationReport(seed, expanded)
    for n in expanded:
        thunks = list(_GENERATORS[n](seed, budget))
        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                report.rows.extend(pool.map(lambda f: f(), thunks))
        else:
            report.rows.extend(f() for f in thunks)
    return report
