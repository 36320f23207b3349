import random
from fractions import Fraction

import pytest

from parhiggs.arrangement import enumerate_chambers, is_null_chamber, on_walls
from parhiggs.errors import NonGeneric, WrongGenus
from parhiggs.exactmath import ZERO, IntPoly
from parhiggs.morse import (
    cover_poincare, divisor_degree, enumerate_strata, minimum_stratum, morse_index,
    weighted_stratum_sum,
)
from parhiggs.parabolic import Curve, WeightVector

import oracles

F = Fraction
sympy = pytest.importorskip("sympy")


def ref(g, n):
    return WeightVector.of(g, [F(1, 3 ** i) for i in range(1, n + 1)])


def test_index_and_divisor_degree():
    c = Curve(2, 3)
    assert morse_index(c, -1, (0, 1, 0)) == 2 * (3 - 2 + 1 + 1)
    assert divisor_degree(c, -1, (0, 1, 0)) == 2 + 2 - 1


def test_strata_reference_g0_n4():
    # frozen from the brute-force oracle; the strata alone give 1 + 5t^2
    s = enumerate_strata(ref(0, 4))
    assert [(x.d, x.e, x.lam, x.h, x.critical_value) for x in s] == [
        (-3, (0, 1, 1, 1), 0, 1, F(14, 81)),
        (-2, (0, 1, 1, 0), 2, 0, F(16, 81)),
        (-2, (0, 1, 0, 1), 2, 0, F(20, 81)),
        (-2, (0, 0, 1, 1), 2, 0, F(32, 81)),
        (-3, (1, 1, 1, 1), 2, 0, F(41, 81)),
    ]
    assert weighted_stratum_sum(ref(0, 4)) == IntPoly((1, 0, 5))


@pytest.mark.parametrize("g,n", [(0, 3), (0, 5), (1, 2), (2, 3), (3, 2)])
def test_strata_match_brute_force(g, n):
    rng = random.Random(g * 10 + n)
    for _ in range(10):
        w = WeightVector.of(g, [F(rng.randint(1, 60), 121) for _ in range(n)])
        if on_walls(w):
            continue
        mine = sorted((s.d, s.e, s.lam, s.h) for s in enumerate_strata(w))
        assert mine == sorted(oracles.strata_brute(g, w.alpha))


def test_stratum_fields():
    s = enumerate_strata(ref(1, 2))[0]
    assert s.lam == 2 * (s.j + 1)
    obj = s.to_json_obj()
    assert set(obj) == {"d", "e", "lambda", "h", "critical_value"}
    assert "/" in obj["critical_value"]


def test_non_generic_rejected():
    with pytest.raises(NonGeneric):
        enumerate_strata(WeightVector.of(0, (F(1, 3),) * 3))


@pytest.mark.parametrize("g", range(4))
@pytest.mark.parametrize("h", range(-1, 7))
def test_cover_poincare(h, g):
    assert list(cover_poincare(h, g).coeffs) == oracles.coeffs(oracles.cover_sympy(h, g))


def test_cover_has_extra_classes_only_in_degree_h():
    # 2^{2g} copies of H^h minus one already in S^h X
    assert cover_poincare(1, 2) - IntPoly((1, 4, 1)) == IntPoly.monomial(1, 15 * 2)
    assert cover_poincare(-1, 2) == ZERO


@pytest.mark.parametrize("g,n", [(0, 4), (1, 1), (1, 3), (2, 2)])
def test_weighted_sum_matches_sympy(g, n):
    rng = random.Random(n)
    for _ in range(5):
        w = WeightVector.of(g, [F(rng.randint(1, 40), 83) for _ in range(n)])
        if on_walls(w):
            continue
        assert list(weighted_stratum_sum(w).coeffs) == oracles.coeffs(oracles.strata_sum_sympy(g, w.alpha))


@pytest.mark.parametrize("n", (3, 4, 5))
def test_minimum_stratum_iff_null(n):
    for _, w in enumerate_chambers(Curve(0, n)):
        s = minimum_stratum(w)
        assert (s is not None) == is_null_chamber(w)
        if s is not None:
            assert s.lam == 0 and s.h == n - 3


def test_minimum_stratum_genus_guard():
    with pytest.raises(WrongGenus):
        minimum_stratum(ref(1, 3))
