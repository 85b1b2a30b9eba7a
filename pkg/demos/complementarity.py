"""
How real can two observables be at once?
========================================

For a system entangled with an ancilla, the realisms of two observables
with mutually unbiased eigenbases are capped by a bound that tightens as
the entanglement grows. A looser bound covers arbitrary pairs.
"""

import numpy as np

from abrealism.measures import MeasureContext, complementarity_check
from abrealism.sampling import random_density_matrix, random_mub_pair, random_observable

rng = np.random.default_rng(1)
ctx = MeasureContext(2.0, 2)

print("rank   lhs     MUB bound  general bound")
for rank in (1, 2, 4):
    rho = random_density_matrix(4, rng, rank=rank, split=(2, 2))
    O, O2 = random_mub_pair(2, rng)
    res = complementarity_check(rho, O, O2, ctx)
    print(f"{rank:4d}  {res.lhs:.4f}   {res.rhs_mub:.4f}     {res.rhs_general:.4f}")

# a non-MUB pair: only the general bound applies
rho = random_density_matrix(4, rng, rank=1, split=(2, 2))
res = complementarity_check(rho, random_observable(2, rng), random_observable(2, rng), ctx)
print(f"random pair: lhs {res.lhs:.4f} <= {res.rhs_general:.4f} (c = {res.c:.3f}), MUB bound: {res.rhs_mub}")
