from fractions import Fraction

import pytest

from parhiggs.arrangement import Wall, enumerate_walls, is_vanishing_wall
from parhiggs.betti import (
    Q_poly, cover_correction_total, euler_characteristic, euler_formula, higgs_poincare,
    higgs_poincare_closed, higgs_poincare_morse, is_connected_simply_connected,
    parabolic_poincare, parabolic_reference_poincare, poincare_report, projective_jump,
    q_count, reference_is_null, reference_weights, s1_closed, s1_sum, s2_closed, s2_sum,
    survey_chambers, wallcross_delta_check,
)
from parhiggs.errors import InvalidInput, NonGeneric
from parhiggs.exactmath import ONE, ZERO, IntPoly
from parhiggs.morse import weighted_stratum_sum
from parhiggs.parabolic import Curve, WeightVector

import oracles

F = Fraction
P = IntPoly


@pytest.mark.parametrize("g", range(4))
@pytest.mark.parametrize("n", range(1, 7))
def test_closed_form_against_sympy(g, n):
    pytest.importorskip("sympy")
    c = Curve(g, n)
    assert list(higgs_poincare_closed(c).coeffs) == oracles.coeffs(oracles.higgs_closed_sympy(g, n))
    assert list(higgs_poincare_morse(c).coeffs) == oracles.coeffs(oracles.higgs_morse_sympy(g, n))


@pytest.mark.parametrize("g,n,expected", [
    # frozen, derived by the two routes and the sympy oracle
    (0, 3, (1,)), (0, 4, (1, 0, 5)), (1, 1, (1, 0, 5)),
    (0, 5, (1, 0, 6, 0, 17)), (1, 2, (1, 0, 3, 2, 10)),
    (0, 1, ()), (0, 2, ()),
])
def test_known_values(g, n, expected):
    assert higgs_poincare(Curve(g, n)) == P(expected)


@pytest.mark.parametrize("g,n", [(0, 3), (0, 4), (1, 1), (1, 2), (2, 1), (3, 2)])
def test_reference_parabolic(g, n):
    pytest.importorskip("sympy")
    expect = oracles.coeffs(oracles.reference_parabolic_sympy(g, n))
    assert list(parabolic_reference_poincare(Curve(g, n)).coeffs) == expect


def test_reference_parabolic_samples():
    assert parabolic_reference_poincare(Curve(1, 1)) == P((1, 0, 1))       # P^1
    assert parabolic_reference_poincare(Curve(0, 5)) == ZERO
    assert parabolic_reference_poincare(Curve(2, 1)) == P((1, 0, 2, 4, 2, 4, 2, 0, 1))


def test_reference_is_null_genus0():
    for n in range(3, 9):
        assert reference_is_null(Curve(0, n))


def test_q_identities():
    for n in range(1, 11):
        assert Q_poly(n) * P((1, 0, -1)) + P.monomial(2 * (n - 1), 2 ** (n - 1)) == P((1, 0, 1)) ** (n - 1)
    assert q_count(4, 0) == 1 and q_count(4, 2) == 7 and q_count(4, 3) == 8


@pytest.mark.parametrize("g,n", [(0, 3), (0, 6), (1, 1), (1, 4), (2, 2), (3, 3)])
def test_strata_sums_closed_forms(g, n):
    c = Curve(g, n)
    assert s1_sum(c) == s1_closed(c)
    assert s2_sum(c) == s2_closed(c)


def test_cover_correction_vanishes_in_genus0():
    assert cover_correction_total(Curve(0, 4)) == ZERO
    assert cover_correction_total(Curve(1, 1)) == P.monomial(2, 3)


class TestEuler:
    def test_formula(self):
        assert [euler_formula(Curve(0, n)) for n in range(3, 9)] == [1, 6, 24, 80, 240, 672]
        assert [euler_formula(Curve(1, n)) for n in range(1, 4)] == [6, 12, 24]
        assert euler_formula(Curve(2, 3)) == 0

    @pytest.mark.parametrize("g,n", [(0, 3), (0, 8), (1, 6), (2, 4), (3, 1)])
    def test_characteristic(self, g, n):
        assert euler_characteristic(Curve(g, n)) == euler_formula(Curve(g, n))

    def test_genus0_small_n(self):
        with pytest.raises(InvalidInput):
            euler_characteristic(Curve(0, 2))


def test_connectivity():
    for g in range(4):
        for n in range(1, 7):
            p = higgs_poincare(Curve(g, n))
            if g == 0 and n < 3:
                continue
            assert is_connected_simply_connected(p)
            assert all(c >= 0 for c in p)


def test_parabolic_poincare_rejects_wall_points():
    with pytest.raises(NonGeneric):
        parabolic_poincare(WeightVector.of(0, [F(1, 5)] * 5))


def test_parabolic_poincare_values():
    assert parabolic_poincare(reference_weights(Curve(0, 5))) == ZERO
    # frozen [DERIVED] values at sample points of genus 0, n = 5
    assert parabolic_poincare(WeightVector.of(0, [F(1, 5)] * 4 + [F(2, 11)])) == P((1, 0, 5, 0, 1))
    assert parabolic_poincare(WeightVector.of(0, [F(1, 4)] * 4 + [F(1, 5)])) == P((1, 0, 6, 0, 1))
    assert parabolic_poincare(WeightVector.of(0, [F(1, 10)] * 5)) == P((1, 0, 5, 0, 1))


def test_g1_n3_two_values():
    s = survey_chambers(Curve(1, 3))
    assert set(s.parabolic.values()) == {P((1, 0, 3, 0, 3, 0, 1)), P((1, 0, 4, 2, 4, 0, 1))}


def test_projective_jump_empty_space():
    assert projective_jump(-1, -1, 2) == ZERO
    assert projective_jump(0, -1, 0) == ONE


@pytest.mark.parametrize("g,n", [(0, 3), (0, 4), (0, 5), (1, 2), (2, 3)])
def test_every_wall_delta(g, n):
    c = Curve(g, n)
    for wl in enumerate_walls(c):
        rec = wallcross_delta_check(wl, c)
        # only vanishing walls have a = -1 on a label, and only in genus 0
        vanish = -1 in (rec.a_plus, rec.a_minus)
        if g == 0:
            assert vanish == is_vanishing_wall(wl, c)
        else:
            assert not vanish
        assert rec.to_json_obj()["wall"] == wl.to_json_obj()


def test_delta_check_with_sides():
    c = Curve(0, 3)
    wl = Wall(-1, (0, 0, 0))
    rec = wallcross_delta_check(wl, c, (WeightVector.of(0, [F(1, 4)] * 3), WeightVector.of(0, [F(2, 5)] * 3)))
    assert rec.a_plus == -1 and rec.a_minus == 0
    with pytest.raises(InvalidInput):
        wallcross_delta_check(wl, c, (WeightVector.of(0, [F(2, 5)] * 3), WeightVector.of(0, [F(1, 4)] * 3)))


@pytest.mark.parametrize("g,n", [(0, 3), (0, 4), (1, 1), (1, 2), (2, 1), (1, 3)])
def test_survey(g, n):
    s = survey_chambers(Curve(g, n))
    assert all(all(x >= 0 for x in p) for p in s.parabolic.values())
    if g == 0:
        assert all(s.null[cid] == p.is_zero() for cid, p in s.parabolic.items())
    else:
        assert not any(p.is_zero() for p in s.parabolic.values())


def test_report_json():
    rep = poincare_report(Curve(1, 1))
    obj = rep.to_json_obj()
    assert obj["higgs"] == ["1", "0", "5"] and obj["euler"] == 6 and obj["higgs_closed_agrees"]
    assert obj["parabolic"] == ["1", "0", "1"]
    assert poincare_report(Curve(0, 2)).euler is None
    with pytest.raises(InvalidInput):
        poincare_report(Curve(1, 1), WeightVector.of(0, [F(1, 3)]))
