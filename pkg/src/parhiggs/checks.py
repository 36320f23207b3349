"""Self-check suites, runnable from the CLI (``check --suite ...``).

Each check recomputes a family of identities from scratch and reports the
first counterexample it finds. All randomness is seeded, so a run is
reproducible bit for bit.
"""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .arrangement import (
    Wall, enumerate_chambers, enumerate_walls, fusion_nonempty, is_null_chamber,
    is_vanishing_wall, null_chamber_wall, on_walls,
)
from .betti import (
    Q_poly, euler_formula, higgs_poincare, higgs_poincare_closed, higgs_poincare_morse,
    is_connected_simply_connected, parabolic_poincare, survey_chambers,
)
from .errors import ParHiggsError
from .exactmath import ONE, IntPoly, binom, macdonald_coeff, projective_poincare
from .morse import minimum_stratum, weighted_stratum_sum
from .parabolic import (
    Curve, ParLineData, WeightVector, hom_chi, hom_twist_degree, intersection_counts,
)
from .stability import (
    P1_INDEX, SplitData, exists_stable_higgs, exists_stable_pair, p1_three_classify,
    p1_three_label,
)


@dataclass
class CheckResult:
    name: str
    passed: bool = True
    checked: int = 0
    counterexample: Optional[dict] = None
    seconds: float = 0.0
    notes: list[str] = field(default_factory=list)

    def fail(self, **info):
        if self.passed:
            self.passed = False
            self.counterexample = {k: str(v) for k, v in info.items()}

    def to_json_obj(self) -> dict:
        out = {"name": self.name, "passed": self.passed, "checked": self.checked,
               "seconds": round(self.seconds, 3)}
        if self.counterexample:
            out["counterexample"] = self.counterexample
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def _timed(name: str, body: Callable[[CheckResult], None]) -> CheckResult:
    res = CheckResult(name)
    t0 = time.perf_counter()
    try:
        body(res)
    except ParHiggsError as exc:
        res.fail(error=type(exc).__name__, message=exc)
    res.seconds = time.perf_counter() - t0
    return res


def _random_alpha(rng: random.Random, n: int, max_den: int = 97) -> tuple[Fraction, ...]:
    out = []
    for _ in range(n):
        q = rng.randint(3, max_den)
        out.append(Fraction(rng.randint(1, (q - 1) // 2), q))
    return tuple(out)


def _random_generic(rng: random.Random, curve: Curve, max_den: int = 97) -> WeightVector:
    while True:
        w = WeightVector(curve, _random_alpha(rng, curve.n, max_den))
        if not on_walls(w):
            return w


def brute_macdonald(h: int, g: int) -> IntPoly:
    """``[x^h] (1+xt)^{2g} (1-x)^{-1} (1-xt^2)^{-1}`` by summing over ``a+b+c = h``."""
    terms: dict[int, int] = {}
    for a in range(h + 1):
        for b in range(h + 1 - a):
            for c in range(h + 1 - a - b):
                if a + b + c != h:
                    continue
                k = a + 2 * c
                terms[k] = terms.get(k, 0) + binom(2 * g, a)
    return IntPoly.from_dict(terms)


# 1

def check_p1_three(res: CheckResult, samples: int = 200, seed: int = 1):
    curve = Curve(0, 3)
    if higgs_poincare(curve) != ONE:
        res.fail(curve=curve, higgs=higgs_poincare(curve))
        return
    rng = random.Random(seed)
    for _ in range(samples):
        w = _random_generic(rng, curve)
        c = p1_three_classify(w)
        par = parabolic_poincare(w)
        # parabolic moduli from the classifier: a point in C0, empty in C_e
        expected_par = ONE if c.label == "C0" else IntPoly()
        if par != expected_par or par + weighted_stratum_sum(w) != ONE:
            res.fail(weights=w, label=c.name, parabolic=par)
        null = is_null_chamber(w)
        if null != (c.label == "C_e"):
            res.fail(weights=w, label=c.name, null=null)
        if null:
            wall = null_chamber_wall(w)
            d = -1 - sum(c.e) // 2
            if wall != Wall.from_label(d, c.e) or not is_vanishing_wall(wall, curve):
                res.fail(weights=w, label=c.name, wall=wall)
        res.checked += 1
    # points on each H_e: exactly the vanishing walls
    for _ in range(samples // 4):
        for e in P1_INDEX:
            w = _point_on_label(rng, curve, -1 - sum(e) // 2, e)
            if w is None:
                continue
            c = p1_three_classify(w)
            walls = on_walls(w)
            if c.label != "H_e" or c.e != e or len(walls) != 1 or not is_vanishing_wall(walls[0], curve):
                res.fail(weights=w, label=c.name, walls=walls)
            res.checked += 1


def _point_on_label(rng: random.Random, curve: Curve, d: int, e, max_den: int = 61,
                    tries: int = 200) -> Optional[WeightVector]:
    """A random rational point with ``d + sum(beta(alpha, e)) = 0`` inside the cube."""
    n = curve.n
    free = 0
    for _ in range(tries):
        rest = _random_alpha(rng, n - 1, max_den)
        alpha = list(rest[:free]) + [Fraction(0)] + list(rest[free:])
        val = d + sum(e)
        for i, (a, ei) in enumerate(zip(alpha, e)):
            if i != free:
                val += -a if ei else a
        # coefficient of alpha_free is +1 (e=0) or -1 (e=1)
        a0 = -val if e[free] == 0 else val
        if 0 < a0 < Fraction(1, 2):
            alpha[free] = a0
            return WeightVector(curve, tuple(alpha))
    return None


# 2

EULER_CASES = ([(0, n) for n in range(3, 9)] + [(1, n) for n in range(1, 7)]
               + [(g, n) for g in (2, 3) for n in range(1, 5)])


def check_euler(res: CheckResult):
    for g, n in EULER_CASES:
        curve = Curve(g, n)
        value = higgs_poincare(curve)(-1)
        if g == 0:
            expected = Fraction((n - 1) * (n - 2) * 2 ** n, 16)
        elif g == 1:
            expected = 3 * 2 ** n
        else:
            expected = 0
        if value != expected or euler_formula(curve) != expected:
            res.fail(g=g, n=n, value=value, expected=expected)
        res.checked += 1


# 3, 4

def check_dual_derivation(res: CheckResult):
    for g in range(4):
        for n in range(1, 7):
            curve = Curve(g, n)
            m, c = higgs_poincare_morse(curve), higgs_poincare_closed(curve)
            if m != c:
                res.fail(g=g, n=n, morse=m, closed=c)
            res.checked += 1


def check_known_values(res: CheckResult):
    target = IntPoly((1, 0, 5))
    for g, n in ((1, 1), (0, 4)):
        p = higgs_poincare(Curve(g, n))
        if p != target:
            res.fail(g=g, n=n, value=p)
        res.checked += 1
    for g in range(4):
        for n in range(1, 7):
            p = higgs_poincare(Curve(g, n))
            if g == 0 and n < 3:
                if not p.is_zero():
                    res.fail(g=g, n=n, value=p, reason="expected empty moduli")
                continue
            if not is_connected_simply_connected(p):
                res.fail(g=g, n=n, value=p, reason="b0 != 1 or b1 != 0")
            res.checked += 1


# 5

SURVEY_CASES = ((0, 4), (0, 5), (1, 1), (1, 2), (2, 1))


def check_chamber_survey(res: CheckResult, K: int = 16, cases=SURVEY_CASES):
    for g, n in cases:
        s = survey_chambers(Curve(g, n), K)
        res.checked += len(s.parabolic) + s.crossings_checked
        res.notes.append(f"g={g} n={n}: {len(s.parabolic)} chambers, {s.crossings_checked} crossings")


# 6

def check_macdonald(res: CheckResult):
    for g in range(4):
        for h in range(13):
            m = macdonald_coeff(h, g)
            if m != brute_macdonald(h, g):
                res.fail(h=h, g=g, value=m, oracle=brute_macdonald(h, g))
            if not m.is_palindromic(2 * h):
                res.fail(h=h, g=g, value=m, reason="not palindromic")
            if g == 0 and m != projective_poincare(h):
                res.fail(h=h, g=g, value=m, reason="not P^h")
            res.checked += 1


# 7

def check_nonempty(res: CheckResult, K: int = 16):
    curve = Curve(0, 3)
    for ks in itertools.product(range(1, 16), repeat=3):
        w = WeightVector(curve, tuple(Fraction(k, 32) for k in ks))
        if on_walls(w):
            continue
        if fusion_nonempty(w.alpha) == is_null_chamber(w):
            res.fail(weights=w, fusion=fusion_nonempty(w.alpha))
        res.checked += 1
    for n in (3, 4, 5):
        for _, w in enumerate_chambers(Curve(0, n), K):
            s = minimum_stratum(w)
            null = is_null_chamber(w)
            if (s is not None) != null or (s is not None and s.h != n - 3):
                res.fail(weights=w, stratum=s, null=null)
            res.checked += 1


# 8

def check_stability(res: CheckResult, samples: int = 150, seed: int = 3):
    rng = random.Random(seed)
    # g = 3 semistable: always a stabilizing Higgs field
    for n in (2, 3, 4, 5):
        curve = Curve(3, n)
        walls = enumerate_walls(curve)
        for _ in range(samples // 4):
            wall = rng.choice(walls)
            for d, e in wall.labels:
                w = _point_on_label(rng, curve, d, e)
                if w is None:
                    continue
                data = SplitData(w, d, e, xi_zero=rng.random() < 0.5,
                                 L_eq_M=rng.choice((None, True, False)))
                dec = exists_stable_higgs(data)
                if not dec.is_yes:
                    res.fail(weights=w, d=d, e=e, decision=dec.tag)
                res.checked += 1
    _check_nine_outcomes(res)
    _check_exception_families(res)


P1_REPRESENTATIVES = {
    "C0": (Fraction(1, 4),) * 3,
    "C_000": (Fraction(2, 5),) * 3,
    "C_011": (Fraction(2, 5), Fraction(1, 10), Fraction(1, 10)),
    "C_101": (Fraction(1, 10), Fraction(2, 5), Fraction(1, 10)),
    "C_110": (Fraction(1, 10), Fraction(1, 10), Fraction(2, 5)),
    "H_000": (Fraction(1, 3),) * 3,
    "H_011": (Fraction(2, 5), Fraction(1, 5), Fraction(1, 5)),
    "H_101": (Fraction(1, 5), Fraction(2, 5), Fraction(1, 5)),
    "H_110": (Fraction(1, 5), Fraction(1, 5), Fraction(2, 5)),
}


def expected_p1_sets(name: str) -> tuple[tuple, tuple, tuple]:
    """(stable bundles, bundles with a stable pair, bundles with a stable Higgs field)."""
    if name == "C0":
        return ("G",), ("G",), ("G",)
    f = "F^" + name[2:]
    if name.startswith("C_"):
        return (), ("G", f), (f,)
    return (), ("G",), ()


def _check_nine_outcomes(res: CheckResult):
    for name, alpha in P1_REPRESENTATIVES.items():
        c = p1_three_classify(alpha)
        got = (c.stable_bundles, c.pair_bundles, c.higgs_bundles)
        if c.name != name or got != expected_p1_sets(name):
            res.fail(weights=alpha, expected=name, got=c.name, sets=got)
        res.checked += 1
    labels: dict[str, WeightVector] = {}
    curve = Curve(0, 3)
    for ks in itertools.product(range(1, 32), repeat=3):
        w = WeightVector(curve, tuple(Fraction(k, 64) for k in ks))
        label, e = p1_three_label(w)
        name = label if e is None else f"{label[0]}_{''.join(map(str, e))}"
        labels.setdefault(name, w)
        if (label == "H_e") != bool(on_walls(w)):
            res.fail(weights=w, label=name, walls=on_walls(w))
        elif label != "H_e" and (label == "C_e") != is_null_chamber(w):
            res.fail(weights=w, label=name)
    if set(labels) != set(P1_REPRESENTATIVES):
        res.fail(labels=sorted(labels))
    for name, w in labels.items():
        c = p1_three_classify(w)
        if (c.stable_bundles, c.pair_bundles, c.higgs_bundles) != expected_p1_sets(name):
            res.fail(weights=w, label=name)
    res.checked += 1


def _check_exception_families(res: CheckResult):
    h = Fraction(1, 4)
    cases = [
        # (i-a): g=0, n=2, split, L = M
        ("i-a", exists_stable_pair, SplitData(WeightVector.of(0, (h, h)), -1, (0, 1), True, L_eq_M=True)),
        # (i-b): g=0, F^000 on the wall alpha_1+alpha_2+alpha_3 = 1
        ("i-b", exists_stable_pair, SplitData(WeightVector.of(0, (Fraction(1, 3),) * 3), -1, (0, 0, 0), True)),
        ("ii-a", exists_stable_higgs, SplitData(WeightVector.of(0, (Fraction(1, 3),) * 3), -1, (0, 0, 0), True)),
        ("ii-a", exists_stable_higgs, SplitData(WeightVector.of(0, (h, h)), -1, (0, 1), True)),
        # (ii-b): g=1, split, L = M
        ("ii-b", exists_stable_higgs, SplitData(WeightVector.of(1, (h, h)), -1, (0, 1), True, L_eq_M=True)),
    ]
    for family, fn, data in cases:
        dec = fn(data)
        if not dec.is_no or family not in dec.reason:
            res.fail(family=family, decision=dec.tag, reason=dec.reason)
        res.checked += 1


# 9

def check_identities(res: CheckResult, samples: int = 300, seed: int = 9):
    t2 = IntPoly((1, 0, -1))
    for n in range(1, 11):
        lhs = Q_poly(n) * t2 + IntPoly.monomial(2 * (n - 1), 2 ** (n - 1))
        if lhs != IntPoly((1, 0, 1)) ** (n - 1):
            res.fail(n=n, lhs=lhs)
        if Q_poly(n)(1) != (2 ** (n - 2) * (n - 1) if n >= 2 else 0):
            res.fail(n=n, reason="Q_n(1)")
        res.checked += 1
    rng = random.Random(seed)
    half = Fraction(1, 2)
    for _ in range(samples):
        g, n = rng.randint(0, 4), rng.randint(1, 10)
        curve = Curve(g, n)
        # weights of L, with ties beta = gamma = 1/2 allowed
        beta = [half if rng.random() < 0.2 else Fraction(rng.randint(1, 30), 31) for _ in range(n)]
        dl = rng.randint(-6, 6)
        L = ParLineData(dl, beta)
        M = ParLineData(-n - dl, [1 - b for b in beta])
        e, eh = intersection_counts(L, M)
        base = L.deg - M.deg + g - 1
        ok = (hom_chi(M, L, False, True, curve) == base + e
              and hom_chi(M, L, True, True, curve) == base + eh
              # Serre duality pairs (L -> M twisted by K(D)) with strong (M -> L)
              and hom_twist_degree(L, M, False, True, curve) + hom_twist_degree(M, L, True, False, curve)
              == 2 * g - 2
              and hom_twist_degree(L, M, True, True, curve) + hom_twist_degree(M, L, False, False, curve)
              == 2 * g - 2
              and hom_twist_degree(L, M, True, True, curve) <= hom_twist_degree(L, M, False, True, curve)
              and eh <= e)
        if not ok:
            res.fail(g=g, n=n, degL=dl, beta=[str(b) for b in beta])
        res.checked += 1


CRITERIA: dict[str, tuple[str, Callable[[CheckResult], None]]] = {
    "p1_three": ("1. P^1 with three points", check_p1_three),
    "euler": ("2. Euler characteristics", check_euler),
    "dual_derivation": ("3. Morse sum equals closed formula", check_dual_derivation),
    "known_values": ("4. known values, b0 = 1, b1 = 0", check_known_values),
    "chamber_survey": ("5. chamber independence", check_chamber_survey),
    "macdonald": ("6. Macdonald oracle", check_macdonald),
    "nonempty": ("7. nonemptiness", check_nonempty),
    "stability": ("8. stability decisions", check_stability),
    "identities": ("9. Q_n and hom-dictionary identities", check_identities),
}

SUITES = {
    "wallcross": ("chamber_survey",),
    "euler": ("euler",),
    "consistency": ("dual_derivation", "known_values", "macdonald", "identities"),
    "nonempty": ("nonempty", "p1_three"),
    "stability": ("stability",),
    "all": tuple(CRITERIA),
}


def run_criterion(key: str) -> CheckResult:
    label, body = CRITERIA[key]
    return _timed(label, body)


def run_suite(name: str) -> list[CheckResult]:
    if name not in SUITES:
        raise KeyError(name)
    return [run_criterion(k) for k in SUITES[name]]
