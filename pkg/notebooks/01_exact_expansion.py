"""
Exact evaluation of the harmonic integrals
==========================================

The integrand of each representation is a finite trigonometric polynomial.
Expanding it with integer coefficients turns the integral into a lookup of
the constant Fourier coefficient.
"""

# %%
import math

from harmonia import exact_eval as ex
from harmonia import fourier_core as fc

# sin(3x)/sin(x) = 1 + 2 cos 2x, stored as {0: 1, 2: 1}
d2 = fc.dirichlet(2)
print(d2)
print(fc.evaluate(d2, 0.7), "vs", math.sin(2.1) / math.sin(0.7))

# %%
# Squaring stays on the integers: (2cos x)^2 = 2 + 2cos 2x
two_cos = fc.SymmetricTrigPoly({1: 1})
print(two_cos * two_cos)

# %%
# B(N, s): kernel D_N(x)^s times 2cos((s-2)Nx); half the constant term is the count
N, s = 3, 4
integrand = ex.bose_integrand(N, s)
print("terms:", len(integrand), "top frequency:", integrand.max_frequency(),
      "bound:", ex.degree_bound_bose(N, s))
print("all frequencies even:", ex.parity_check("bose", (N, s)))
print("B(3, 4) =", ex.bose_exact(N, s).value)

# %%
# Partition numbers, and the modulation frequencies mu(s)
for s in range(1, 11):
    r = ex.partition_exact(s)
    print(f"s={s:2d}  mu={ex.mu(s):4d}  p_s={r.value:3d}  integrand terms={r.term_count}")

# %%
# Coefficients quickly outgrow float64: the s = 30 kernel peaks at 31**30
r = ex.partition_exact(30)
print("p_30 =", r.value, "max frequency", r.max_freq)
print("largest kernel coefficient has", len(str(max(ex.partition_kernel(30).coeffs.values()))), "digits")
