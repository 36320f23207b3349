# Rank-2 parabolic bundles on P^1 with three marked points.
# Five chambers, four walls; everything here is a point or empty.

# %%
from fractions import Fraction as F

from parhiggs import Curve, WeightVector, enumerate_walls, p1_three_classify
from parhiggs.arrangement import enumerate_chambers, is_null_chamber, is_vanishing_wall

curve = Curve(0, 3)
for wall in enumerate_walls(curve):
    print(wall, "vanishing" if is_vanishing_wall(wall, curve) else "")

# %% the grid finds all five chambers
sample = enumerate_chambers(curve)
for cid, w in sample:
    print(cid.key(), w, "null" if is_null_chamber(w) else "")

# %% one weight vector per label
for alpha in [(F(1, 4),) * 3, (F(2, 5),) * 3, (F(1, 3),) * 3, (F(2, 5), F(1, 10), F(1, 10))]:
    c = p1_three_classify(alpha)
    print(f"\n{c.name} at {c.weights}")
    print("  M:", c.parabolic)
    print("  N:", c.higgs)
    print("  P:", c.pairs)
    print("  stable Higgs fields exist on:", ", ".join(c.higgs_bundles) or "nothing")

# %% the moduli space of Higgs bundles is always a single point
from parhiggs import higgs_poincare
print(higgs_poincare(curve))
