"""Poincare polynomials of the rank-2 parabolic Higgs moduli space ``N^0``.

Two independent routes are provided:

* :func:`higgs_poincare_morse` adds the Morse strata, evaluated at the
  reference weights ``(1/3, 1/9, ..., 1/3^n)``, to the reference-chamber
  Poincare polynomial of the parabolic moduli ``M^0``;
* :func:`higgs_poincare_closed` evaluates the closed formula obtained by
  residue calculus.

``P_t(N^0)`` does not depend on the weights, so ``P_t(M^0_alpha)`` in any
chamber follows by subtracting that chamber's strata. Wall crossings are
verified against the projective-bundle formula for ``M^0``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .arrangement import (
    ChamberID, ChamberSample, Wall, enumerate_chambers, is_null_chamber, null_witnesses,
    segment_crossings,
)
from .errors import (
    FormulaMismatch, IdentityFailure, InvalidInput, MismatchWithMorse, NegativeCoefficient,
)
from .exactmath import (
    ZERO, IntPoly, binom, one_minus_t2, projective_poincare, symmetric_product_poincare,
)
from .morse import (
    Stratum, cover_poincare, divisor_degree, enumerate_strata, morse_index,
    weighted_stratum_sum,
)
from .parabolic import Curve, WeightVector

ONE_PLUS_T = IntPoly((1, 1))
ONE_PLUS_T2 = IntPoly((1, 0, 1))
ONE_PLUS_T3 = IntPoly((1, 0, 0, 1))


def reference_weights(curve: Curve) -> WeightVector:
    return WeightVector(curve, tuple(Fraction(1, 3 ** i) for i in range(1, curve.n + 1)))


def reference_is_null(curve: Curve) -> bool:
    """The reference weights sit in a genus-0 null chamber, witnessed by ``e = (0,1,...,1)``."""
    w = reference_weights(Curve(0, curve.n))
    return (0,) + (1,) * (curve.n - 1) in null_witnesses(w)


@lru_cache(maxsize=None)
def parabolic_reference_poincare(curve: Curve) -> IntPoly:
    """``P_t(M^0)`` at the reference weights."""
    g, n = curve.g, curve.n
    num = ONE_PLUS_T2 ** (n - 1) * (ONE_PLUS_T3 ** (2 * g) - (ONE_PLUS_T ** (2 * g)).shift(2 * g))
    return num.exact_div(one_minus_t2() ** 2)


@lru_cache(maxsize=None)
def higgs_poincare_morse(curve: Curve) -> IntPoly:
    return parabolic_reference_poincare(curve) + weighted_stratum_sum(reference_weights(curve))


def q_count(n: int, j: int) -> int:
    """Number of strata sharing the reindexed value ``j``: ``sum_{i<=j} C(n-1, i)``."""
    return sum(binom(n - 1, i) for i in range(j + 1))


def Q_poly(n: int) -> IntPoly:
    return IntPoly.from_dict({2 * k: q_count(n, k) for k in range(n - 1)})


def s1_sum(curve: Curve) -> IntPoly:
    """First strata sum (``j <= n-2``), summed term by term."""
    g, n = curve.g, curve.n
    total = ZERO
    for j in range(n - 1):
        total += q_count(n, j) * symmetric_product_poincare(2 * g + n - j - 3, g).shift(2 * (g + j))
    return total


def s2_sum(curve: Curve) -> IntPoly:
    """Second strata sum (``j >= n-1``) without the cover correction."""
    g, n = curve.g, curve.n
    total = ZERO
    for j in range(2 * g - 1):
        total += 2 ** (n - 1) * symmetric_product_poincare(2 * g - j - 2, g).shift(2 * (g + n + j - 1))
    return total


def s1_closed(curve: Curve) -> IntPoly:
    g, n = curve.g, curve.n
    inner = Q_poly(n).shift(2 * g)
    if n >= 2:
        inner -= IntPoly.monomial(2 * (2 * g + n - 2), 2 ** (n - 2) * (n - 1))
    return (inner * ONE_PLUS_T ** (2 * g)).exact_div(one_minus_t2())


def s2_closed(curve: Curve) -> IntPoly:
    g, n = curve.g, curve.n
    if g == 0:
        # the bracket collapses to t^{2n-2} - t^{2n-2}
        return ZERO
    inner = (IntPoly.monomial(2 * (g + n - 1))
             + IntPoly.monomial(4 * g + 2 * n - 2, 2 * g - 1)
             - IntPoly.monomial(4 * g + 2 * n - 3, 2 * g))
    return (2 ** (n - 1) * inner * ONE_PLUS_T ** (2 * g)).exact_div(one_minus_t2() ** 2)


def cover_correction_total(curve: Curve) -> IntPoly:
    """``2^{n-1}(2^{2g}-1) t^{2(2g+n-2)} (1+t)^{2g-2}``, zero at genus 0."""
    g, n = curve.g, curve.n
    if g == 0:
        return ZERO
    return (2 ** (n - 1) * (2 ** (2 * g) - 1)) * (ONE_PLUS_T ** (2 * g - 2)).shift(2 * (2 * g + n - 2))


@lru_cache(maxsize=None)
def higgs_poincare_closed(curve: Curve) -> IntPoly:
    """Closed formula, every division checked.

    All terms are put over ``(1-t^2)^2`` before dividing, so the individual
    summands need not be polynomials.
    """
    g, n = curve.g, curve.n
    den1 = one_minus_t2()
    top = ONE_PLUS_T3 ** (2 * g) * ONE_PLUS_T2 ** (n - 1)
    bracket = IntPoly.monomial(2 * n + 4 * g - 2, 2 * g - 1)
    if g > 0:
        bracket -= IntPoly.monomial(2 * n + 4 * g - 3, 2 * g)
    top += 2 ** (n - 1) * ONE_PLUS_T ** (2 * g) * bracket
    if n >= 2:
        middle = (2 ** (n - 2) * (n - 1)) * (ONE_PLUS_T ** (2 * g)).shift(2 * n + 4 * g - 4)
        top -= middle * den1
    top += cover_correction_total(curve) * den1 ** 2
    return top.exact_div(den1 ** 2)


def higgs_poincare(curve: Curve) -> IntPoly:
    """``P_t(N^0)``, cross-validated between the two routes."""
    morse = higgs_poincare_morse(curve)
    closed = higgs_poincare_closed(curve)
    if morse != closed:
        raise MismatchWithMorse(f"g={curve.g}, n={curve.n}: Morse {morse} vs closed {closed}")
    return morse


def euler_formula(curve: Curve) -> int:
    g, n = curve.g, curve.n
    if g == 0:
        if n < 3:
            raise InvalidInput("genus-0 Euler characteristic needs n >= 3")
        # (n-1)(n-2) 2^{n-4}; n = 3 gives 2 * 1 / 2
        return (n - 1) * (n - 2) * 2 ** n // 16
    if g == 1:
        return 3 * 2 ** n
    return 0


def euler_characteristic(curve: Curve) -> int:
    if curve.g == 0 and curve.n < 3:
        raise InvalidInput("genus-0 Euler characteristic needs n >= 3")
    value = higgs_poincare(curve)(-1)
    expected = euler_formula(curve)
    if value != expected:
        raise FormulaMismatch(f"g={curve.g}, n={curve.n}: P(-1) = {value}, formula {expected}")
    return value


def is_connected_simply_connected(p: IntPoly) -> bool:
    return p[0] == 1 and p[1] == 0


def parabolic_poincare(w: WeightVector) -> IntPoly:
    """``P_t(M^0_alpha) = P_t(N^0) - (strata contribution at alpha)``."""
    p = higgs_poincare_morse(w.curve) - weighted_stratum_sum(w)
    if any(c < 0 for c in p):
        raise NegativeCoefficient(f"P_t(M^0) at {w} has a negative coefficient: {p}")
    return p


@dataclass(frozen=True)
class WallCrossRecord:
    """Crossing data of one wall.

    The ``+`` side is where the canonical label has positive parabolic
    degree. ``a_plus``/``a_minus`` are the projective-fibre dimensions
    over the strictly semistable locus on each side, so that
    ``P(M^0_+) - P(M^0_-) = (P(P^{a_plus}) - P(P^{a_minus})) (1+t)^{2g}``.
    ``delta`` is the strata difference ``t^{lam_hat} P(S^{h_hat}) - t^{lam} P(S^h)``.
    """
    wall: Wall
    lam: int
    lam_hat: int
    h: int
    h_hat: int
    a_plus: int
    a_minus: int
    delta: IntPoly

    def to_json_obj(self) -> dict:
        return {
            "wall": self.wall.to_json_obj(),
            "lambda": self.lam, "lambda_hat": self.lam_hat,
            "h": self.h, "h_hat": self.h_hat,
            "a_plus": self.a_plus, "a_minus": self.a_minus,
            "delta": self.delta.to_json_obj(),
        }


def projective_jump(a_plus: int, a_minus: int, g: int) -> IntPoly:
    return (projective_poincare(a_plus) - projective_poincare(a_minus)) * ONE_PLUS_T ** (2 * g)


def wallcross_delta_check(wall: Wall, curve: Curve,
                          sides: Optional[tuple[WeightVector, WeightVector]] = None) -> WallCrossRecord:
    """Verify the wall-crossing identity for ``wall`` as an exact polynomial identity.

    With ``sides = (w_minus, w_plus)``, two generic weights separated by this
    wall alone, additionally check that the strata sums jump by ``delta``
    and that ``parabolic_poincare`` jumps by the projective-bundle formula.
    """
    if wall.n != curve.n:
        raise InvalidInput(f"wall {wall} does not belong to n={curve.n}")
    g = curve.g
    (d, e), (dh, eh) = wall.labels
    lam, lam_hat = morse_index(curve, d, e), morse_index(curve, dh, eh)
    h, h_hat = divisor_degree(curve, d, e), divisor_degree(curve, dh, eh)
    delta = cover_poincare(h_hat, g).shift(lam_hat) - cover_poincare(h, g).shift(lam)

    # the covers are plain symmetric products on these walls
    if binom(2 * g - 2, h) or binom(2 * g - 2, h_hat):
        raise IdentityFailure(f"{wall}: divisor degrees {h}, {h_hat} not above 2g-2")
    rhs = (IntPoly.monomial(lam_hat) - IntPoly.monomial(lam)) * ONE_PLUS_T ** (2 * g)
    if delta * one_minus_t2() != rhs:
        raise IdentityFailure(f"{wall}: residue identity fails, delta = {delta}")
    if lam % 2 or lam_hat % 2:
        raise IdentityFailure(f"{wall}: odd Morse index")
    a_plus, a_minus = lam // 2 - 1, lam_hat // 2 - 1
    if projective_jump(a_plus, a_minus, g) != delta:
        raise IdentityFailure(f"{wall}: projective-bundle form disagrees with delta")
    rec = WallCrossRecord(wall, lam, lam_hat, h, h_hat, a_plus, a_minus, delta)

    if sides is not None:
        w_minus, w_plus = sides
        crossings = segment_crossings(w_minus, w_plus)
        if [c.wall for c in crossings] != [wall] or crossings[0].from_sign != -1:
            raise InvalidInput(f"sides must be separated by {wall} alone, minus side first")
        ws_jump = weighted_stratum_sum(w_minus) - weighted_stratum_sum(w_plus)
        if ws_jump != delta:
            raise IdentityFailure(f"{wall}: strata sums jump by {ws_jump}, expected {delta}")
        par_jump = parabolic_poincare(w_plus) - parabolic_poincare(w_minus)
        if par_jump != projective_jump(a_plus, a_minus, g):
            raise IdentityFailure(f"{wall}: P(M^0) jumps by {par_jump}, expected "
                                  f"{projective_jump(a_plus, a_minus, g)}")
    return rec


@dataclass(frozen=True)
class ChamberSurvey:
    curve: Curve
    sample: ChamberSample
    parabolic: dict[ChamberID, IntPoly]
    null: dict[ChamberID, bool]
    crossings_checked: int
    higgs: IntPoly


def survey_chambers(curve: Curve, K: int = 16) -> ChamberSurvey:
    """Check chamber independence over every grid-sampled chamber.

    For each chamber: ``P_t(M^0)`` has nonnegative coefficients and (genus 0)
    vanishes exactly on null chambers. For each adjacent pair: the strata
    and ``P_t(M^0)`` jumps match :func:`wallcross_delta_check`.
    """
    sample = enumerate_chambers(curve, K)
    higgs = higgs_poincare(curve)
    par: dict[ChamberID, IntPoly] = {}
    null: dict[ChamberID, bool] = {}
    for cid, w in sample:
        p = parabolic_poincare(w)
        if p + weighted_stratum_sum(w) != higgs:
            raise IdentityFailure(f"chamber {cid.key()}: parabolic + strata != P_t(N^0)")
        par[cid] = p
        if curve.g == 0:
            null[cid] = is_null_chamber(w)
            if null[cid] != p.is_zero():
                raise IdentityFailure(f"chamber at {w}: null={null[cid]} but P_t(M^0) = {p}")
        elif p.is_zero():
            raise IdentityFailure(f"chamber at {w}: empty moduli in genus {curve.g}")
    reps = sample.lookup()
    checked = 0
    for wall, minus, plus in sample.adjacent_pairs():
        wallcross_delta_check(wall, curve, (reps[minus], reps[plus]))
        checked += 1
    return ChamberSurvey(curve, sample, par, null, checked, higgs)


@dataclass(frozen=True)
class PoincareReport:
    curve: Curve
    higgs_morse: IntPoly
    higgs_closed: IntPoly
    euler: Optional[int]
    weights: Optional[WeightVector] = None
    parabolic: Optional[IntPoly] = None
    strata: tuple[Stratum, ...] = ()
    parabolic_by_chamber: dict = field(default_factory=dict)

    def to_json_obj(self) -> dict:
        higgs = self.higgs_morse
        out = {
            "genus": self.curve.g,
            "points": self.curve.n,
            "higgs": [str(c) for c in higgs.coeffs],
            "higgs_closed_agrees": self.higgs_morse == self.higgs_closed,
            "euler": self.euler,
            "weights": str(self.weights) if self.weights is not None else None,
            "parabolic": [str(c) for c in self.parabolic.coeffs] if self.parabolic is not None else None,
            "strata": [s.to_json_obj() | {"poincare": [str(c) for c in cover_poincare(s.h, self.curve.g).coeffs]}
                       for s in self.strata],
        }
        if self.parabolic_by_chamber:
            out["parabolic_by_chamber"] = {
                cid.key(): [str(c) for c in p.coeffs] for cid, p in sorted(
                    self.parabolic_by_chamber.items(), key=lambda kv: kv[0].key())
            }
        return out


def poincare_report(curve: Curve, weights: Optional[WeightVector] = None,
                    chambers: bool = False, K: int = 16) -> PoincareReport:
    if weights is None:
        weights = reference_weights(curve)
    elif weights.curve != curve:
        raise InvalidInput("weights belong to a different curve")
    morse = higgs_poincare_morse(curve)
    closed = higgs_poincare_closed(curve)
    if morse != closed:
        raise MismatchWithMorse(f"g={curve.g}, n={curve.n}: Morse {morse} vs closed {closed}")
    euler = None if (curve.g == 0 and curve.n < 3) else euler_characteristic(curve)
    by_chamber = {}
    if chambers:
        by_chamber = dict(survey_chambers(curve, K).parabolic)
    return PoincareReport(
        curve=curve, higgs_morse=morse, higgs_closed=closed, euler=euler,
        weights=weights, parabolic=parabolic_poincare(weights),
        strata=tuple(enumerate_strata(weights)), parabolic_by_chamber=by_chamber,
    )
