"""
Command-line front end.

    harmonia compute {bose,partition} [--N N] --s S [--method ...] [--form ...]
    harmonia table [--max-s 10]
    harmonia verify [--suite all] [--seed 0]
    harmonia bench

Exit codes: 0 success, 1 verification mismatch, 2 invalid arguments.
Output goes to stdout unless ``--out`` (or ``$HARMONIA_OUT_DIR``) is given.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
import time
from dataclasses import asdict, dataclass, fields

import numpy as np

from . import exact_eval as ex
from . import fourier_core as fc
from . import oracles as orc
from . import quadrature as qd
from .errors import HarmoniaError
from .kernels import BOSE_FORMS, PARTITION_FORMS
from .suites import SUITES, run_suites

OUT_DIR_ENV = "HARMONIA_OUT_DIR"
BENCH_COLUMNS = ["task", "param", "nodes_or_terms", "elapsed_ms", "value_digest", "abs_err"]
TABLE_COLUMNS = ["s", "mu", "p_exact", "p_oracle", "match"]
RULES = {"trapezoid": "trapezoid_periodic", "gauss": "gauss_legendre", "cc": "clenshaw_curtis"}


@dataclass
class ComputationResult:
    quantity: str
    params: dict
    method: str
    form: str | None = None
    value: str | None = None
    float_value: float | None = None
    abs_err: float | None = None
    nodes: int | None = None
    exactness_degree: int | None = None
    elapsed_ms: float | None = None
    seed: int | None = None

    def to_dict(self) -> dict:
        d = asdict(self)
        # flattened copies of params for convenience; ignored by from_dict
        for k, v in self.params.items():
            d.setdefault(k, v)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "ComputationResult":
        names = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in d.items() if k in names})


# -- argument types --

def _positive(v):
    n = int(v)
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {n}")
    return n


def _non_negative(v):
    n = int(v)
    if n < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {n}")
    return n


def _budget(v):
    n = int(v)
    if n < 1000:
        raise argparse.ArgumentTypeError(f"budget must be >= 1000, got {n}")
    return n


def _int_list(v):
    try:
        return [int(t) for t in v.split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated ints, got {v!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="harmonia",
        description="Harmonic-integral representations of B(N,s) and p_s, "
                    "evaluated exactly and by quadrature.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "text"], default=None)
    common.add_argument("--out", help=f"output path (default: ${OUT_DIR_ENV}/<command>.<ext>, "
                                      "else stdout)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=_budget, default=orc.DEFAULT_BUDGET,
                        help="state budget for brute-force enumeration (>= 1000)")
    common.add_argument("--threads", type=_positive, default=None,
                        help="thread count hint (default: available CPUs)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="compute one quantity")
    p.add_argument("quantity", choices=["bose", "partition"])
    p.add_argument("--N", type=_non_negative)
    p.add_argument("--s", type=_positive, required=True)
    p.add_argument("--method", choices=["exact", "quad", "oracle", "brute"], default="exact")
    p.add_argument("--form", choices=BOSE_FORMS + PARTITION_FORMS)
    p.add_argument("--rule", choices=list(RULES), default="trapezoid")
    p.add_argument("--nodes", type=_positive, help="override the node count")

    p = sub.add_parser("table", parents=[common], help="mu(s) and p_s table",
                       description="CSV columns: " + ",".join(TABLE_COLUMNS))
    p.add_argument("--max-s", type=_positive, default=10)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")

    p = sub.add_parser("bench", parents=[common], help="timing sweeps (CSV)",
                       description="CSV columns: " + ",".join(BENCH_COLUMNS))
    p.add_argument("--partition-s", type=_int_list, default=[5, 10, 20, 30])
    p.add_argument("--quad-s", type=_positive, default=6)
    p.add_argument("--oracle-s", type=_int_list, default=[100, 500])
    p.add_argument("--fft-s", type=_int_list, default=[5, 10, 20])
    return parser


# -- commands --

def cmd_compute(args) -> ComputationResult:
    q = args.quantity
    if q == "bose":
        if args.N is None:
            raise HarmoniaError("compute bose requires --N")
        params = {"N": args.N, "s": args.s}
        default_form, forms = "combined25", BOSE_FORMS
    else:
        if args.N is not None:
            raise HarmoniaError("compute partition does not take --N")
        params = {"s": args.s}
        default_form, forms = "combined43", PARTITION_FORMS
    form = args.form or default_form
    if form not in forms:
        raise HarmoniaError(f"form {form} does not apply to {q}")
    ptuple = tuple(params.values())
    res = ComputationResult(q, params, args.method, seed=args.seed)
    t0 = time.perf_counter()
    if args.method == "exact":
        r = ex.bose_exact(*ptuple) if q == "bose" else ex.partition_exact(*ptuple)
        res.value = str(r.value)
        res.form = default_form
    elif args.method == "oracle":
        res.value = str(orc.binomial_oracle(*ptuple) if q == "bose"
                        else orc.partition_oracle(*ptuple))
    elif args.method == "brute":
        res.value = str(orc.brute_count_bose(*ptuple, budget=args.budget) if q == "bose"
                        else orc.brute_count_partition(*ptuple, budget=args.budget))
    else:
        family = RULES[args.rule]
        n = args.nodes
        if n is None:
            deg = qd.integrand_degree(q, ptuple, form)
            n = qd.default_nodes(deg) if family == "trapezoid_periodic" else 4 * qd.default_nodes(deg)
        rule = qd.build_rule(family, n)
        qr = (qd.bose_quad(*ptuple, form=form, rule=rule) if q == "bose"
              else qd.partition_quad(*ptuple, form=form, rule=rule))
        res.form = form
        res.float_value = qr.value
        res.abs_err = qr.abs_err
        res.nodes = rule.n
        res.exactness_degree = rule.exactness_degree
    res.elapsed_ms = (time.perf_counter() - t0) * 1e3
    return res


def table_rows(max_s: int) -> list[dict]:
    rows = []
    for s in range(1, max_s + 1):
        exact = ex.partition_exact(s).value
        oracle = orc.partition_oracle(s)
        rows.append({"s": s, "mu": ex.mu(s), "p_exact": exact, "p_oracle": oracle,
                     "match": exact == oracle})
    return rows


def _digest(value) -> str:
    return hashlib.sha256(str(value).encode()).hexdigest()[:16]


def _fft_partition(s: int) -> float:
    # floating-point convolution of the partition integrand; benchmark only
    size = 2 * ex.degree_bound_partition(s) + 1
    size = 1 << (size - 1).bit_length()
    spectrum = np.ones(size // 2 + 1, dtype=complex)
    factors = [fc.scale_frequency(fc.dirichlet(s), k) for k in range(1, s + 1)]
    factors.append(fc.SymmetricTrigPoly({abs(ex.mu(s)): 1} if ex.mu(s) else {0: 2}))
    for f in factors:
        a = np.zeros(size)
        for m, c in f.coeffs.items():
            a[m] += c
            if m:
                a[-m] += c
        spectrum *= np.fft.rfft(a)
    return float(np.fft.irfft(spectrum, n=size)[0]) / 2


def bench_rows(args) -> list[dict]:
    rows = []

    def timed(fn):
        t0 = time.perf_counter()
        v = fn()
        return v, (time.perf_counter() - t0) * 1e3

    for s in args.partition_s:
        ex.partition_kernel.cache_clear()
        ex.partition_integrand.cache_clear()
        r, ms = timed(lambda: ex.partition_exact(s))
        rows.append({"task": "partition_exact", "param": f"s={s}",
                     "nodes_or_terms": r.term_count, "elapsed_ms": ms,
                     "value_digest": _digest(r.value), "abs_err": ""})
    s = args.quad_s
    exact = ex.partition_exact(s).value
    n0 = qd.default_nodes(qd.integrand_degree("partition", (s,), "combined43"))
    for n in (n0, 2 * n0, 4 * n0):
        rule = qd.build_rule("trapezoid_periodic", n)
        r, ms = timed(lambda: qd.partition_quad(s, rule=rule))
        rows.append({"task": "partition_quad_trapezoid", "param": f"s={s}",
                     "nodes_or_terms": rule.n, "elapsed_ms": ms,
                     "value_digest": _digest(round(r.value)), "abs_err": repr(r.abs_err)})
    for n in (n0, 2 * n0, 4 * n0):
        rule = qd.build_rule("gauss_legendre", n)
        r, ms = timed(lambda: qd.partition_quad(s, rule=rule))
        rows.append({"task": "partition_quad_gauss", "param": f"s={s}",
                     "nodes_or_terms": rule.n, "elapsed_ms": ms,
                     "value_digest": _digest(round(r.value)), "abs_err": repr(r.abs_err)})
    for s in args.oracle_s:
        for name, fn in (("pentagonal_oracle", orc.pentagonal_oracle),
                         ("euler_dp_oracle", orc.partition_oracle)):
            v, ms = timed(lambda: fn(s))
            rows.append({"task": name, "param": f"s={s}", "nodes_or_terms": s,
                         "elapsed_ms": ms, "value_digest": _digest(v), "abs_err": ""})
    for s in args.fft_s:
        exact = ex.partition_exact(s).value
        v, ms = timed(lambda: _fft_partition(s))
        rows.append({"task": "partition_fft_float", "param": f"s={s}",
                     "nodes_or_terms": ex.degree_bound_partition(s), "elapsed_ms": ms,
                     "value_digest": _digest(round(v)), "abs_err": repr(abs(v - exact))})
    for r in rows:
        r["elapsed_ms"] = f"{r['elapsed_ms']:.3f}"
    return rows


# -- output --

def _csv(rows, columns) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, columns, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def _text_table(rows, columns) -> str:
    cells = [[str(r[c]) for c in columns] for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(columns)]
    lines = ["  ".join(c.rjust(w) for c, w in zip(columns, widths))]
    lines += ["  ".join(v.rjust(w) for v, w in zip(row, widths)) for row in cells]
    return "\n".join(lines) + "\n"


def _render_result(res: ComputationResult, fmt: str) -> str:
    d = res.to_dict()
    if fmt == "json":
        return json.dumps(d, sort_keys=True) + "\n"
    flat = {k: ("" if v is None else v) for k, v in d.items() if k != "params"}
    if fmt == "csv":
        return _csv([flat], list(flat))
    return "".join(f"{k}: {v}\n" for k, v in flat.items())


def _emit(text: str, args, ext: str):
    path = args.out
    if path is None and os.environ.get(OUT_DIR_ENV):
        path = os.path.join(os.environ[OUT_DIR_ENV], f"{args.command}.{ext}")
    if path is None:
        sys.stdout.write(text)
        return
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "compute":
            fmt = args.format or "json"
            _emit(_render_result(cmd_compute(args), fmt), args, fmt)
            return 0
        if args.command == "table":
            fmt = args.format or "text"
            rows = table_rows(args.max_s)
            if fmt == "json":
                text = json.dumps([{**r, "p_exact": str(r["p_exact"]),
                                    "p_oracle": str(r["p_oracle"])} for r in rows],
                                  indent=1) + "\n"
            elif fmt == "csv":
                text = _csv(rows, TABLE_COLUMNS)
            else:
                text = _text_table(rows, TABLE_COLUMNS)
            _emit(text, args, fmt)
            return 0 if all(r["match"] for r in rows) else 1
        if args.command == "verify":
            fmt = args.format or "json"
            report = run_suites(args.suite, seed=args.seed, budget=args.budget,
                                threads=args.threads)
            text = {"json": report.to_json, "csv": report.to_csv,
                    "text": report.to_text}[fmt]()
            _emit(text, args, fmt)
            if not report.ok:
                print(f"{len(report.failures)} of {len(report.rows)} cases failed",
                      file=sys.stderr)
            return 0 if report.ok else 1
        if args.command == "bench":
            fmt = args.format or "csv"
            rows = bench_rows(args)
            text = json.dumps(rows, indent=1) + "\n" if fmt == "json" else (
                _csv(rows, BENCH_COLUMNS) if fmt == "csv" else _text_table(rows, BENCH_COLUMNS))
            _emit(text, args, fmt)
            return 0
    except (HarmoniaError, ValueError) as exc:
        print(f"harmonia: error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
