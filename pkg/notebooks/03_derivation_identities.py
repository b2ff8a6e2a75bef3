"""
The derivation steps, checked numerically
=========================================

Each nested delta-sum collapses one index at a time through a closed-form
sum of sines or cosines. Here the intermediate steps are evaluated at
sample points.
"""

# %%
from harmonia import identities as ident

c = ident.check_sum_lemma("sin", M=5, k=3, phi=0.7, x=0.4)
print(c.identity_id, c.lhs, c.rhs, f"rel_err={c.rel_err:.1e}")

# %%
# Partial collapse of the partition chain for s = 4: sum the first `depth`
# indices, hold the rest fixed
for depth in range(5):
    lhs, rhs = ident.chain_by_lemma("cos", "partition", (4,), 0.29, depth, rest=(1,) * (4 - depth))
    print(f"depth {depth}: direct {lhs: .12f}  closed form {rhs: .12f}")

# %%
for trig in ("sin", "cos"):
    c = ident.check_chain(trig, "partition", (6,), 0.31)
    print(f"{c.identity_id}: {7 ** 6} terms, rel_err {c.rel_err:.1e}")

# %%
# Orthogonality; cos at m = n = 0 integrates to 2, not 1
for trig, m, n in [("sin", 3, 3), ("cos", 2, 5), ("cos", 0, 0)]:
    c = ident.check_orthogonality(trig, m, n)
    print(f"{trig}({m}x){trig}({n}x): {c.lhs:.12f}")
