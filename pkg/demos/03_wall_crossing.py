# Walking through weight space: P_t(M^0) changes at walls, P_t(N^0) does not.

# %%
from fractions import Fraction as F

import numpy as np

from parhiggs import Curve, WeightVector, parabolic_poincare, segment_crossings
from parhiggs.arrangement import enumerate_chambers, perturb
from parhiggs.betti import wallcross_delta_check
from parhiggs.morse import weighted_stratum_sum

curve = Curve(0, 5)
start = WeightVector(curve, (F(1, 20),) * 5)
end = perturb(WeightVector(curve, (F(9, 20),) * 5))

# %% every wall on the way, at exact parameters
for c in segment_crossings(start, end):
    print(c.wall, c.param)

# %% P_t(M^0) along the segment, sampled between crossings
params = [F(0)] + [c.param for c in segment_crossings(start, end)] + [F(1)]
for lo, hi in zip(params, params[1:]):
    s = (lo + hi) / 2
    w = WeightVector(curve, tuple(a + s * (b - a) for a, b in zip(start.alpha, end.alpha)))
    print(f"{str(s):>10}", parabolic_poincare(w), "  +strata:", parabolic_poincare(w) + weighted_stratum_sum(w))

# %% how many chambers share each polynomial
sample = enumerate_chambers(curve)
polys = [str(parabolic_poincare(w)) for _, w in sample]
values, counts = np.unique(polys, return_counts=True)
for v, k in zip(values, counts):
    print(f"{k:4d}  {v}")

# %% a single crossing, checked as a polynomial identity
rec = wallcross_delta_check(segment_crossings(start, end)[0].wall, curve)
print(rec.to_json_obj())
