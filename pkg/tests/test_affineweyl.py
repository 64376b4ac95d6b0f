"""Tests for Iwahori-Weyl groups and partial affine flag verdicts."""

from collections import Counter

import pytest

from schubert_normality.affineweyl.flags import flag_rows, flag_summary, flag_verdict, omega_translate_flag
from schubert_normality.affineweyl.group import IwahoriWeylGroup, double_coset_max
from schubert_normality.coinvariants.lattice import coinvariants
from schubert_normality.exceptions import InvalidCoweight, LengthCap, NotStabilizing, RankCap, WrongType
from schubert_normality.normality.verdict import Provenance, Status
from tests.conftest import group


@pytest.fixture
def w_pgl2(pgl2):
    return IwahoriWeylGroup(coinvariants(pgl2))


@pytest.fixture
def w_pu3(pu3):
    return IwahoriWeylGroup(coinvariants(pu3))


class TestIwahoriWeylGroup:

    def test_shape(self, w_pgl2):
        assert w_pgl2.rank == 1
        assert w_pgl2.nodes == frozenset({0, 1})
        assert len(w_pgl2.omega) == 2
        assert all(w_pgl2.length(om) == 0 for om in w_pgl2.omega)
        assert len(w_pgl2.finite_weyl_group) == 2

    def test_generators_are_involutions(self, w_pgl2):
        for s in w_pgl2.generators:
            assert w_pgl2.mul(s, s) == w_pgl2.identity
            assert w_pgl2.length(s) == 1

    def test_inverse(self, w_pgl2):
        a = w_pgl2.parse("s0s1")
        assert w_pgl2.mul(a, w_pgl2.inverse(a)) == w_pgl2.identity

    def test_parse_and_name(self, w_pgl2):
        a = w_pgl2.parse("s0s1s0")
        assert w_pgl2.length(a) == 3
        assert w_pgl2.name(a) == "s0s1s0"
        assert w_pgl2.name(w_pgl2.parse("1")) == "1"
        assert w_pgl2.name(w_pgl2.omega[1]) == "1.omega1"
        assert w_pgl2.to_dict(a) == {"omega": 0, "word": [0, 1, 0], "length": 3}
        assert w_pgl2.from_dict(w_pgl2.to_dict(a)) == a

    def test_parse_rejects_bad_nodes(self, w_pgl2):
        with pytest.raises(InvalidCoweight):
            w_pgl2.parse("s0s5")
        with pytest.raises(InvalidCoweight):
            w_pgl2.parse("s0.omega7")

    def test_translation_length(self, w_pgl2, pgl2):
        lat = coinvariants(pgl2)
        t = w_pgl2.translation(lat.class_of((2,)))
        assert w_pgl2.length(t) == 2
        assert w_pgl2.translation_class(t) == lat.class_of((2,))

    def test_bruhat(self, w_pgl2):
        s0, s0s1s0 = w_pgl2.parse("s0"), w_pgl2.parse("s0s1s0")
        assert w_pgl2.bruhat_leq(s0, s0s1s0)
        assert not w_pgl2.bruhat_leq(s0s1s0, s0)
        assert not w_pgl2.bruhat_leq(w_pgl2.omega[1], s0s1s0)
        with pytest.raises(LengthCap):
            w_pgl2.bruhat_leq(s0, s0s1s0, length_cap=2)

    def test_rank_cap(self):
        with pytest.raises(RankCap):
            IwahoriWeylGroup(coinvariants(group("pgl(5)@5")))

    def test_reducible_rejected(self, so4):
        with pytest.raises(WrongType):
            IwahoriWeylGroup(coinvariants(so4))

    def test_elements_by_length(self, w_pgl2):
        comp = w_pgl2.lattice.components[0]
        elements = w_pgl2.elements(comp, 4)
        assert len(elements) == 9
        assert [w_pgl2.length(e) for e in elements] == sorted(w_pgl2.length(e) for e in elements)

    def test_omega_permutation(self, w_pgl2):
        om = w_pgl2.omega[1]
        assert w_pgl2.omega_permutation(om) == (1, 0)
        assert w_pgl2.stabilizes(om, [0, 1])
        assert not w_pgl2.stabilizes(om, [1])

    def test_double_coset_max(self, w_pgl2):
        top = double_coset_max(w_pgl2, {1}, w_pgl2.lattice.zero)
        assert w_pgl2.length(top) == 1
        with pytest.raises(WrongType):
            w_pgl2.parabolic({0, 1})

    def test_pgl3_lengths(self, pgl3):
        w = IwahoriWeylGroup(coinvariants(pgl3))
        comp = w.lattice.zero.component
        counts = Counter(w.length(e) for e in w.elements(comp, 4))
        assert [counts[k] for k in range(5)] == [1, 3, 6, 9, 12]


class TestFlagVerdicts:

    def test_pgl2_summary(self, w_pgl2):
        summary = flag_summary(w_pgl2, 4)
        for k in (0, 1):
            assert summary[k] == Counter({"Normal": 5, "NonNormal": 4})

    def test_pgl2_identity(self, w_pgl2):
        v = flag_verdict(w_pgl2, w_pgl2.identity)
        assert v.status == Status.NORMAL
        assert v.provenance == Provenance.FACET_PROPAGATION

    def test_pu3_summary(self, w_pu3):
        summary = flag_summary(w_pu3, 8)
        assert summary[0] == Counter({"Normal": 6, "NonNormal": 11})

    def test_pu3_elements(self, w_pu3):
        assert flag_verdict(w_pu3, w_pu3.parse("s0s1s0")).status == Status.NORMAL
        assert flag_verdict(w_pu3, w_pu3.parse("s1s0s1")).status == Status.NON_NORMAL

    def test_length_cap(self, w_pgl2):
        with pytest.raises(LengthCap):
            flag_verdict(w_pgl2, w_pgl2.parse("s0s1s0"), length_cap=2)

    def test_omega_translate(self, w_pgl2):
        om = w_pgl2.omega[1]
        v = w_pgl2.parse("s0")
        moved = omega_translate_flag(w_pgl2, om, v)
        assert w_pgl2.length(moved) == 1
        assert flag_verdict(w_pgl2, moved).status == flag_verdict(w_pgl2, v).status
        with pytest.raises(NotStabilizing):
            omega_translate_flag(w_pgl2, om, v, facet=[1])
        with pytest.raises(NotStabilizing):
            omega_translate_flag(w_pgl2, v, v)

    def test_pgl3_rows(self, pgl3):
        rows = flag_rows(IwahoriWeylGroup(coinvariants(pgl3)), 9)
        assert all(r["verdict"] == "Normal" for r in rows if r["length"] <= 6)
        assert all(r["verdict"] == "NonNormal" for r in rows if r["length"] == 9)
        unknown = [r for r in rows if r["verdict"] == "Unknown"]
        assert unknown
        assert {r["length"] for r in unknown} <= {7, 8}
        assert {r["component"] for r in rows} == {0, 1, 2}

    def test_pgl3_counts_by_length(self, pgl3):
        rows = flag_rows(IwahoriWeylGroup(coinvariants(pgl3)), 8)
        counts = [Counter((r["length"], r["verdict"]) for r in rows if r["component"] == k) for k in range(3)]
        assert counts[1] == counts[0] == counts[2]
        c = counts[0]
        assert (c[(7, "Normal")], c[(7, "NonNormal")], c[(7, "Unknown")]) == (6, 3, 12)
        assert (c[(8, "Normal")], c[(8, "NonNormal")], c[(8, "Unknown")]) == (0, 18, 6)
        assert sum(n for (_, v), n in c.items() if v == "Normal") == 70
        assert sum(n for (_, v), n in c.items() if v == "Unknown") == 18
