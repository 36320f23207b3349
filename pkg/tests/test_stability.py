import itertools
import random
from fractions import Fraction

import pytest

from parhiggs.arrangement import enumerate_walls, is_null_chamber, is_vanishing_wall, on_walls
from parhiggs.errors import InsufficientData, InvalidInput, WrongGenus
from parhiggs.parabolic import Curve, WeightVector, pardeg_sub
from parhiggs.stability import (
    Decision, SplitData, exists_semistable_higgs, exists_semistable_pair, exists_stable_higgs,
    exists_stable_pair, p1_three_classify, p1_three_label,
)

F = Fraction
Q = F(1, 4)


def w_(g, *alpha):
    return WeightVector.of(g, [F(a) for a in alpha])


def on_label(rng, g, d, e, den=61):
    """Random point of the open cube with d + sum(beta) = 0; e[0] == 0 solves for alpha_1."""
    n = len(e)
    for _ in range(500):
        rest = [F(rng.randint(1, (den - 1) // 2), den) for _ in range(n - 1)]
        val = d + sum(e) + sum(-a if ei else a for a, ei in zip(rest, e[1:]))
        a0 = -val if e[0] == 0 else val
        if 0 < a0 < F(1, 2):
            return WeightVector.of(g, [a0] + rest)
    return None


class TestDecision:
    def test_tags(self):
        assert Decision.yes().is_yes and Decision.no().is_no
        d = Decision.indeterminate("h1 of something")
        assert d.tag == "indeterminate" and d.to_json_obj()["missing"] == "h1 of something"
        with pytest.raises(ValueError):
            Decision("maybe")


class TestSplitData:
    def test_requires_destabilizing(self):
        with pytest.raises(InvalidInput):
            SplitData(w_(0, "1/4", "1/4", "1/4"), -1, (0, 0, 0), False)  # pardeg -1/4

    def test_derived_fields(self):
        d = SplitData(w_(1, "1/3", "1/5"), -1, (0, 1), True)
        assert d.degM == -1 and d.pardeg == F(1, 3) - F(1, 5)
        assert not d.semistable and d.split
        assert (d.e_closed, d.e_open) == (1, 1)
        # open weights never give L = M
        assert d.l_equals_m() is False

    def test_dictionary_degrees(self):
        for g in range(4):
            d = SplitData(w_(g, "1/3", "1/5", "1/7"), -1, (0, 1, 0), False)
            # 2g - 2 - 2 degL - |e|
            assert d.pair_hom_degree() == d.higgs_hom_degree() == 2 * g - 2 + 2 - 1
            assert d.higgs_hom_degree() <= d.pair_hom_degree()


class TestLowGenus:
    def test_unstable_g0(self):
        # (0,0,0) with degree -1 and weights summing past 1: sub of positive degree
        d = SplitData(w_(0, "2/5", "2/5", "2/5"), -1, (0, 0, 0), False)
        assert exists_stable_pair(d).is_yes           # D = 0, h = 1
        assert exists_stable_higgs(d).is_no           # used up by xi
        d = SplitData(w_(0, "2/5", "2/5", "2/5"), -1, (0, 0, 0), True)
        assert exists_stable_higgs(d).is_yes

    def test_exception_i_a(self):
        d = SplitData(w_(0, Q, Q), -1, (0, 1), True, L_eq_M=True)
        dec = exists_stable_pair(d)
        assert dec.is_no and "i-a" in dec.reason

    def test_exception_i_b(self):
        d = SplitData(w_(0, "1/3", "1/3", "1/3"), -1, (0, 0, 0), True)
        dec = exists_stable_pair(d)
        assert dec.is_no and "i-b" in dec.reason

    def test_exception_ii_a(self):
        d = SplitData(w_(0, "1/3", "1/3", "1/3"), -1, (0, 0, 0), True)
        dec = exists_stable_higgs(d)
        assert dec.is_no and "ii-a" in dec.reason

    def test_exception_ii_b(self):
        d = SplitData(w_(1, Q, Q), -1, (0, 1), True, L_eq_M=True)
        dec = exists_stable_higgs(d)
        assert dec.is_no and "ii-b" in dec.reason
        # without L = M the same numbers do admit a stable Higgs field
        d = SplitData(w_(1, Q, Q), -1, (0, 1), True, L_eq_M=False)
        assert exists_stable_higgs(d).is_yes

    def test_g1_degree_zero_needs_hint(self):
        d = SplitData(w_(1, "1/3"), 0, (0,), False)
        with pytest.raises(InsufficientData):
            exists_stable_pair(d)
        d = SplitData(w_(1, "1/3"), 0, (0,), True, hom_trivial=True)
        assert exists_stable_pair(d).is_yes and exists_stable_higgs(d).is_yes
        d = SplitData(w_(1, "1/3"), 0, (0,), True, hom_trivial=False)
        assert exists_stable_pair(d).is_no

    def test_never_indeterminate_low_genus(self):
        rng = random.Random(4)
        for _ in range(300):
            g, n = rng.randint(0, 1), rng.randint(1, 5)
            alpha = [F(rng.randint(1, 30), 61) for _ in range(n)]
            w = WeightVector.of(g, alpha)
            e = tuple(rng.randint(0, 1) for _ in range(n))
            d = rng.randint(-n - 1, 2)
            if pardeg_sub(d, w, e) < 0:
                continue
            data = SplitData(w, d, e, rng.random() < 0.5, hom_trivial=rng.choice((True, False)))
            assert exists_stable_pair(data).tag != "indeterminate"
            assert exists_stable_higgs(data).tag != "indeterminate"


class TestHigherGenus:
    def test_indeterminate_band(self):
        d = SplitData(w_(2, "1/3"), 0, (0,), False)
        dec = exists_stable_pair(d)
        assert dec.tag == "indeterminate" and "degree-2" in dec.missing

    def test_negative_degree_no(self):
        # degL large: the twisted hom bundle has negative degree
        d = SplitData(w_(2, "1/3"), 2, (0,), True)
        assert exists_stable_pair(d).is_no and exists_stable_higgs(d).is_no

    def test_large_degree_yes(self):
        # D = 2g - 2 - 2 degL - |e| = 3 > 2g - 2, so h1 = 2
        d = SplitData(w_(2, *["1/3"] * 5), -3, (1,) * 5, False)
        assert d.pair_hom_degree() == 3
        assert exists_stable_pair(d).is_yes and exists_stable_higgs(d).is_yes

    @pytest.mark.parametrize("g", (2, 3, 4))
    def test_semistable_always_known(self, g):
        rng = random.Random(g)
        for n in (2, 3, 4):
            for wall in enumerate_walls(Curve(g, n)):
                for d, e in wall.labels:
                    w = on_label(rng, g, d, e)
                    if w is None:
                        continue
                    data = SplitData(w, d, e, xi_zero=rng.random() < 0.5)
                    assert data.semistable
                    assert exists_stable_pair(data).is_yes
                    assert exists_stable_higgs(data).is_yes

    def test_g2_semistable_split(self):
        # semistable with deg L - deg M + |e| >= 2 in genus 2
        w = w_(2, "1/4", "1/4")
        d = SplitData(w, -1, (0, 1), True)
        assert d.degL - d.degM + d.e_closed >= 1
        assert exists_stable_pair(d).is_yes


def test_semistable_variants():
    d = SplitData(w_(0, "1/3", "1/3", "1/3"), -1, (0, 0, 0), True)
    assert exists_semistable_pair(d).is_yes and exists_semistable_higgs(d).is_yes
    d = SplitData(w_(0, "2/5", "2/5", "2/5"), -1, (0, 0, 0), False)
    assert exists_semistable_higgs(d) == exists_stable_higgs(d)


class TestP1:
    @pytest.mark.parametrize("alpha,name", [
        (("1/4", "1/4", "1/4"), "C0"),
        (("2/5", "2/5", "2/5"), "C_000"),
        (("2/5", "1/10", "1/10"), "C_011"),
        (("1/3", "1/3", "1/3"), "H_000"),
        (("1/5", "1/5", "2/5"), "H_110"),
    ])
    def test_labels(self, alpha, name):
        assert p1_three_classify([F(a) for a in alpha]).name == name

    def test_c0(self):
        c = p1_three_classify([Q] * 3)
        assert c.stable_bundles == ("G",) and c.higgs_bundles == ("G",)
        assert "C^5" in c.pairs and c.parabolic.startswith("{G}")

    def test_null_chamber(self):
        c = p1_three_classify([F(2, 5)] * 3)
        assert c.stable_bundles == () and c.parabolic == "empty"
        assert c.higgs_bundles == ("F^000",) and "Phi_0" in c.higgs
        assert c.pair_bundles == ("G", "F^000")

    def test_wall(self):
        c = p1_three_classify([F(1, 3)] * 3)
        assert c.higgs_bundles == () and c.pair_bundles == ("G",)
        assert "three" in c.higgs and "hyperplane" in c.pairs

    def test_grid_partition(self):
        seen = set()
        for ks in itertools.product(range(1, 32, 2), repeat=3):
            w = WeightVector.of(0, [F(k, 64) for k in ks])
            label, e = p1_three_label(w)
            seen.add((label, e))
            assert (label == "H_e") == bool(on_walls(w))
            if label == "H_e":
                assert all(is_vanishing_wall(x, w.curve) for x in on_walls(w))
            else:
                assert (label == "C_e") == is_null_chamber(w)
        assert len({s for s in seen if s[0] == "C_e"}) == 4
        assert ("C0", None) in seen

    def test_genus_guard(self):
        with pytest.raises(WrongGenus):
            p1_three_classify(w_(1, Q, Q, Q))
        with pytest.raises(WrongGenus):
            p1_three_classify([Q, Q])

    def test_json(self):
        obj = p1_three_classify([Q] * 3).to_json_obj()
        assert obj["label"] == "C0" and obj["weights"] == "1/4,1/4,1/4"
