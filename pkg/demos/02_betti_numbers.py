# Poincare polynomials of N^0, two ways, and the Euler characteristic.

# %%
from parhiggs import Curve, higgs_poincare_closed, higgs_poincare_morse
from parhiggs.betti import euler_formula, parabolic_reference_poincare, reference_weights
from parhiggs.morse import enumerate_strata, cover_poincare

curve = Curve(1, 2)
w = reference_weights(curve)
print("reference weights:", w)
print("P_t(M^0) there:", parabolic_reference_poincare(curve))

# %% strata: (d, e), Morse index, divisor degree
for s in enumerate_strata(w):
    print(s.d, s.e, s.lam, s.h, s.critical_value, "  ", cover_poincare(s.h, curve.g))

# %% both routes agree
print(higgs_poincare_morse(curve))
print(higgs_poincare_closed(curve))

# %% a small table
print(f"{'g':>2} {'n':>2}  P_t(N^0)")
for g in range(3):
    for n in range(1, 5):
        p = higgs_poincare_closed(Curve(g, n))
        if p.is_zero():
            continue
        chi = p(-1)
        assert chi == euler_formula(Curve(g, n))
        print(f"{g:>2} {n:>2}  {p}   chi={chi}")
