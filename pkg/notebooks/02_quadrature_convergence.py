"""
Quadrature of periodic integrands
=================================

All in-scope integrands have only even frequencies, so the plain trapezoid
rule on [0, pi/2] is exact once its node count covers the top frequency.
Algebraic rules need far more nodes for the same integrand.
"""

# %%
from harmonia import exact_eval as ex
from harmonia import quadrature as qd

s = 5
deg = ex.degree_bound_partition(s)
n0 = qd.default_nodes(deg)
print(f"p_{s}: integrand degree {deg}, trapezoid panels needed {n0}")

# %%
for row in qd.convergence_sweep("partition", (s,), "trapezoid_periodic", [n0 // 4, n0 // 2, n0, 2 * n0]):
    print(f"trapezoid n={row.n:4d}  value={row.value:.15g}  abs_err={row.abs_err:.2e}")

# %%
for family in ("gauss_legendre", "clenshaw_curtis"):
    for row in qd.convergence_sweep("partition", (s,), family, [n0, 2 * n0, 4 * n0, 8 * n0]):
        print(f"{family:16s} n={row.n:4d}  abs_err={row.abs_err:.2e}")

# %%
# The sine and cosine forms each give the count on their own
for form in qd.BOSE_FORMS:
    r = qd.bose_quad(4, 5, form)
    print(f"B(4,5) via {form:10s}: {r.value:.12f} (nodes {r.rule.n}, err {r.abs_err:.1e})")

# %%
# Roundoff floor grows with the integrand peak (N+1)^s
for N in (2, 4, 6, 8):
    r = qd.bose_quad(N, N)
    print(f"N=s={N}: peak {(N + 1) ** N:>10d}  abs_err {r.abs_err:.1e}")
