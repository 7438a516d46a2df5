"""Dominance order on partitions against Bruhat order on the translations tau_q."""

from itertools import product

from affine_springer.affine_weyl import bruhat_leq, tau
from affine_springer.constructions import q_of_partition
from affine_springer.partitions import dominance_leq, partitions_of

for n in range(2, 7):
    parts = list(partitions_of(n))
    taus = {p: tau(q_of_partition(p, n)) for p in parts}
    agree = sum(bruhat_leq(taus[a], taus[b]) == dominance_leq(a, b) for a, b in product(parts, repeat=2))
    print(f"n={n}: {len(parts)} partitions, orders agree on {agree}/{len(parts) ** 2} pairs")

n = 4
for p in partitions_of(n):
    t = tau(q_of_partition(p, n))
    print(f"  {str(p):<12} q={q_of_partition(p, n).z}  window={t.window_str()}  length={t.length()}")
