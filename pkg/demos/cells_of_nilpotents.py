"""Cells of 1 - t^-1 N as N runs over conjugates of the Richardson element.

Z itself can land in a smaller cell modulo G_0; random conjugates reach
the translation tau_q that labels the whole orbit.
"""

import random
from collections import Counter

from affine_springer.affine_weyl import bruhat_leq
from affine_springer.constructions import build_tau_q, build_Z, psi, random_sl
from affine_springer.linalg import rational_inverse, rational_matmul
from affine_springer.tableau import build_tableau

rng = random.Random(1)
for n, d in [(2, (1,)), (3, (1, 2)), (4, (2,)), (4, (1, 3))]:
    tab = build_tableau(n, d)
    Z, tq = build_Z(tab), build_tau_q(tab)
    print(f"n={n} d={d} nu={tab.nu.parts} tau_q={tq.window_str()}")
    print("  psi(Z)            ", psi(Z)[1].window_str())
    seen = Counter()
    for _ in range(20):
        g = random_sl(n, rng)
        cell = psi(rational_matmul(rational_matmul(g, Z), rational_inverse(g)))[1]
        assert bruhat_leq(cell, tq)
        seen[cell.window_str()] += 1
    for window, count in seen.most_common():
        print(f"  conjugates {count:>2}x    {window}")
