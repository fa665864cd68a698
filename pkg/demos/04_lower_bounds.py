"""
Point sets that force a large stretch
=====================================

Exhaustive search over all colorings confirms that no k-coloring beats the
analytic lower bound on these constructions.
"""

from chromospan import constructions
from chromospan.analysis import optimal_coloring_bruteforce

for inst in (
    constructions.gen_lb_k2(5),
    constructions.gen_lb_k3(5),
    constructions.gen_lb_kgon(5),
):
    col, best = optimal_coloring_bruteforce(inst.points, inst.k)
    print(f"k={inst.k} points={len(inst.points):<2} optimum {best:.6f} >= {inst.analytic_bound:.6f}  ({inst.bound_formula})")

# The online adversary: polygon vertices first, the center last
for k in range(5, 9):
    inst = constructions.gen_online_lb(k)
    achieved = constructions.run_adversary(k)
    print(f"online k={k}: adversary forces {achieved:.4f} >= {inst.analytic_bound:.4f}")
