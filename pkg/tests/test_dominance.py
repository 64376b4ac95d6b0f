"""Tests for the dominance order, Hasse segments and the Besson-Hong order."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schubert_normality.coinvariants.lattice import coinvariants
from schubert_normality.dominance.besson_hong import besson_hong_down_set, besson_hong_leq, steps
from schubert_normality.dominance.hasse import hasse_segment
from schubert_normality.dominance.lemmas import check_b_lemma, check_d_lemma
from schubert_normality.dominance.order import (
    covers,
    dimension,
    dominantize,
    down_set,
    factorwise_qm,
    is_minuscule,
    leq,
    minuscule_below,
    quasi_minuscule,
    support,
    up_set,
    weyl_orbit,
)
from schubert_normality.exceptions import CapExceeded, NotComparable, NotDominant, WrongType
from schubert_normality.normality.typea import epsilon_class, sl_lattice
from tests.conftest import group


def _cls(g, *weight):
    return coinvariants(g).class_of(weight)


class TestOrder:

    def test_leq_in_pgl3(self, pgl3):
        zero, theta = _cls(pgl3, 0, 0), _cls(pgl3, 1, 1)
        w1, w2, two_w2 = _cls(pgl3, 1, 0), _cls(pgl3, 0, 1), _cls(pgl3, 0, 2)
        assert leq(zero, theta)
        assert not leq(theta, zero)
        assert leq(w1, two_w2)
        assert not leq(w1, w2)

    def test_minuscule_and_support(self, pgl3):
        two_w2 = _cls(pgl3, 0, 2)
        assert minuscule_below(two_w2).name == "w1"
        assert support(two_w2) == frozenset({1})
        assert support(_cls(pgl3, 1, 1)) == frozenset({0, 1})
        assert support(_cls(pgl3, 1, 0)) == frozenset()

    def test_minuscule_below_requires_dominant(self, pgl3):
        with pytest.raises(NotDominant):
            minuscule_below(_cls(pgl3, 2, -1))

    def test_is_minuscule(self, pgl3):
        assert is_minuscule(_cls(pgl3, 1, 0))
        assert not is_minuscule(_cls(pgl3, 1, 1))

    def test_quasi_minuscule(self, pgl3, so4):
        assert factorwise_qm(coinvariants(pgl3)).name == "w1+w2"
        assert quasi_minuscule(coinvariants(so4), 0).weight == (2, 0)
        assert factorwise_qm(coinvariants(so4)).weight == (2, 2)

    def test_dimension(self, pgl3):
        assert dimension(_cls(pgl3, 0, 0), _cls(pgl3, 1, 1)) == 4
        with pytest.raises(NotComparable):
            dimension(_cls(pgl3, 1, 0), _cls(pgl3, 1, 1))

    def test_down_and_up_sets(self, pgl3):
        assert [mu.name for mu in down_set(_cls(pgl3, 1, 1))] == ["0", "w1+w2"]
        assert [mu.name for mu in up_set(_cls(pgl3, 1, 0), 4)] == ["w1", "2w2"]

    def test_down_set_cap(self, pgl3):
        with pytest.raises(CapExceeded):
            down_set(_cls(pgl3, 6, 6), max_nodes=3)

    def test_weyl_orbit(self, pgl3):
        orbit = weyl_orbit(_cls(pgl3, 0, -1))
        assert orbit[0].name == "w1"
        assert len(orbit) == 3
        assert dominantize(_cls(pgl3, 0, -1)).name == "w1"

    def test_covers(self, pgl3):
        found = covers(_cls(pgl3, 1, 1))
        assert [(mu.name, s) for mu, s in found] == [("0", frozenset({0, 1}))]


class TestHasse:

    def test_pgl2_segments(self, pgl2):
        lat = coinvariants(pgl2)
        zero, one = lat.components
        seg = hasse_segment(lat, zero, 4)
        assert seg.names() == ["0", "2w1", "4w1"]
        assert seg.edge_names() == {("0", "2w1", "{1}"), ("2w1", "4w1", "{1}")}
        assert hasse_segment(lat, one, 4).names() == ["w1", "3w1"]

    def test_pgl3_segment_labels(self, pgl3):
        lat = coinvariants(pgl3)
        w1 = lat.class_of((1, 0))
        seg = hasse_segment(lat, w1.component, 4)
        assert seg.edge_names() == {("w1", "2w2", "{2}")}
        data = seg.to_dict()
        assert data["nodes"][0] == {"name": "w1", "height": 2, "weight": [1, 0]}

    @pytest.mark.parametrize("preset,cap,expected", [
        ("so(7)@2", 14, {("0", "w2", "{1,2,3}"), ("w1", "w3", "{2,3}"), ("w3", "w1+w2", "{1,2}")}),
        ("psp(4)@2", 8, {("0", "w1", "{1,2}"), ("w1", "2w2", "{2}")}),
        ("psp(6)@2", 12, {("0", "w1", "{1,2,3}"), ("w2", "2w3", "{3}")}),
        ("pso(8)@2", 12, {("w1", "w3+w4", "{2,3,4}")}),
        ("pso(10)@2", 18, {("w1", "w3", "{2,3,4,5}")}),
        ("pso(12)@2", 24, {("w1", "w3", "{2,3,4,5,6}")}),
    ])
    def test_classical_edges(self, preset, cap, expected):
        lat = coinvariants(group(preset))
        edges = set()
        for comp in lat.components:
            edges |= hasse_segment(lat, comp, cap).edge_names()
        assert expected <= edges

    def test_empty_segment_below_cap(self, pgl2):
        lat = coinvariants(pgl2)
        assert hasse_segment(lat, lat.components[1], 0).names() == []


class TestLemmas:

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_b_statement(self, n):
        report = check_b_lemma(n)
        assert report.holds, report.counterexamples
        assert report.checked > 0

    @pytest.mark.parametrize("n", [4, 5])
    def test_d_statement(self, n):
        report = check_d_lemma(n)
        assert report.holds, report.counterexamples

    def test_rank_too_small(self):
        with pytest.raises(WrongType):
            check_b_lemma(2)


class TestBessonHong:

    def test_dominant_element_is_largest(self, pgl3):
        mu = _cls(pgl3, 1, 1)
        for x in weyl_orbit(mu):
            assert besson_hong_leq(x, mu)

    def test_single_step(self, pgl3):
        assert besson_hong_leq(_cls(pgl3, 1, 0), _cls(pgl3, 0, 2))
        assert _cls(pgl3, 1, 0) in steps(_cls(pgl3, 0, 2))

    def test_different_components(self, pgl3):
        assert not besson_hong_leq(_cls(pgl3, 1, 0), _cls(pgl3, 1, 1))

    def test_not_below(self, pgl3):
        assert not besson_hong_leq(_cls(pgl3, 1, 1), _cls(pgl3, 0, 0))

    def test_down_set_in_epsilon_coordinates(self):
        lat = sl_lattice(2, 3)
        top = epsilon_class(lat, (-2, 1, 1))
        below = besson_hong_down_set(top)
        expected = [(-2, 1, 1), (-1, 0, 1), (0, -1, 1), (-1, 1, 0), (0, 1, -1), (0, 0, 0)]
        assert below[0] == top
        assert {mu.weight for mu in below} == {epsilon_class(lat, x).weight for x in expected}
        assert all(besson_hong_leq(mu, top) for mu in below)
        assert not besson_hong_leq(epsilon_class(lat, (1, 0, -1)), top)


_small = st.tuples(st.integers(0, 4), st.integers(0, 4))


class TestOrderProperties:

    @settings(max_examples=60, deadline=None)
    @given(_small, _small, _small)
    def test_transitive(self, a, b, c):
        g = group("pgl(3)@3")
        la, mu, nu = _cls(g, *a), _cls(g, *b), _cls(g, *c)
        if leq(la, mu) and leq(mu, nu):
            assert leq(la, nu)

    @settings(max_examples=60, deadline=None)
    @given(_small, _small)
    def test_antisymmetric(self, a, b):
        g = group("pgl(3)@3")
        la, mu = _cls(g, *a), _cls(g, *b)
        if leq(la, mu) and leq(mu, la):
            assert la == mu

    @settings(max_examples=40, deadline=None)
    @given(_small)
    def test_minuscule_is_below(self, a):
        mu = _cls(group("pgl(3)@3"), *a)
        la = minuscule_below(mu)
        assert is_minuscule(la)
        assert leq(la, mu)
