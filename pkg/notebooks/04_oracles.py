"""
Classical oracles and brute-force counting
==========================================

Ground truth for both counts, computed three ways.
"""

# %%
import time

from harmonia import oracles as orc

for s in (10, 50, 100):
    print(s, orc.partition_oracle(s), orc.pentagonal_oracle(s))

# %%
# Brute force over the hypercube: literal scan versus pruned recursion
for s in range(1, 5):
    t0 = time.perf_counter()
    lit = orc.brute_count_partition(s, literal=True)
    t1 = time.perf_counter()
    pr = orc.brute_count_partition(s)
    t2 = time.perf_counter()
    print(f"s={s}: literal {lit} ({(t1 - t0) * 1e3:.2f} ms)  pruned {pr} ({(t2 - t1) * 1e3:.2f} ms)")

# %%
print("B(6, 6):", orc.binomial_oracle(6, 6), orc.brute_count_bose(6, 6))
