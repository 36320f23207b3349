# When does a non-stable parabolic bundle carry a stabilizing Higgs field?

# %%
from fractions import Fraction as F

from parhiggs import SplitData, WeightVector, exists_stable_higgs, exists_stable_pair

def show(data):
    p, h = exists_stable_pair(data), exists_stable_higgs(data)
    print(f"g={data.curve.g} degL={data.degL} e={data.e} split={data.xi_zero}:"
          f" pair={p.tag}, higgs={h.tag}")
    for d in (p, h):
        print("   ", d.reason or d.missing)

# %% genus 0: F^000 on the wall alpha_1 + alpha_2 + alpha_3 = 1
show(SplitData(WeightVector.of(0, [F(1, 3)] * 3), -1, (0, 0, 0), xi_zero=True))

# %% genus 0, null chamber: the same line bundle now destabilizes
show(SplitData(WeightVector.of(0, [F(2, 5)] * 3), -1, (0, 0, 0), xi_zero=True))
show(SplitData(WeightVector.of(0, [F(2, 5)] * 3), -1, (0, 0, 0), xi_zero=False))

# %% genus 1 with L = M: constant fields only
show(SplitData(WeightVector.of(1, [F(1, 4)] * 2), -1, (0, 1), xi_zero=True, L_eq_M=True))

# %% genus 2: the answer can depend on the actual line bundle
show(SplitData(WeightVector.of(2, [F(1, 3)]), 0, (0,), xi_zero=False))
