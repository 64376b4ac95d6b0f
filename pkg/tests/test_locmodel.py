"""Tests for LM-triples and local model verdicts."""

import pytest

from schubert_normality.config.loader import load_triple
from schubert_normality.exceptions import InvalidCoweight, NotDominant
from schubert_normality.levels.base import Level
from schubert_normality.locmodel.rank_one import PGL2, PU3, rank_one_kind
from schubert_normality.locmodel.triple import LMTriple
from schubert_normality.locmodel.verdict import admissible_max, generic_fiber_verdict, locmodel_verdict
from schubert_normality.normality.verdict import Provenance, Status
from tests.conftest import group


def _verdict(preset, mu, level="abs-special", char_F=0):
    return locmodel_verdict(LMTriple.build(group(preset), mu, level, char_F))


class TestLMTriple:

    def test_build(self, pgl3):
        t = LMTriple.build(pgl3, "w1+w2", "hyperspecial")
        assert t.parts == ((1, 1),)
        assert t.level is Level.ABS_SPECIAL
        assert t.residue_char == 3
        assert t.mu_bar.name == "w1+w2"

    def test_restriction_parts(self, pgl2):
        t = LMTriple.build(pgl2, "w1;w1")
        assert len(t.parts) == 2
        assert t.mu_bar.weight == (2,)
        assert LMTriple.build(pgl2, [[1], [1]]).parts == t.parts

    def test_needs_residue_char(self):
        with pytest.raises(InvalidCoweight):
            LMTriple.build(group("pgl(3)"), "w1")

    def test_char_F(self, pgl3):
        with pytest.raises(InvalidCoweight):
            LMTriple.build(pgl3, "w1", char_F=2)

    def test_dominant(self, pgl3):
        with pytest.raises(NotDominant):
            LMTriple.build(pgl3, "-w1")

    def test_from_file(self, examples_dir):
        t = LMTriple.from_spec(load_triple(examples_dir / "lm-pu3-special.yaml"))
        assert t.level is Level.SPECIAL
        assert t.residue_char == 3


class TestRankOne:

    def test_kinds(self, pgl2, pu3, pgl3):
        assert rank_one_kind(pgl2) == PGL2
        assert rank_one_kind(pu3) == PU3
        assert rank_one_kind(pgl3) is None

    @pytest.mark.parametrize("mu,level,char_F,status", [
        ("w1", "abs-special", 0, Status.NORMAL),
        ("w1", "iwahori", 2, Status.NORMAL),
        ("w1;w1", "iwahori", 0, Status.NORMAL),
        ("w1;w1", "abs-special", 0, Status.NON_NORMAL),
        ("2w1", "iwahori", 0, Status.NORMAL),
        ("2w1", "iwahori", 2, Status.NON_NORMAL),
        ("2w1", "abs-special", 0, Status.NON_NORMAL),
    ])
    def test_pgl2_table(self, mu, level, char_F, status):
        v = _verdict("pgl(2)@2", mu, level, char_F)
        assert v.status == status
        assert v.provenance == Provenance.RANK_ONE

    @pytest.mark.parametrize("mu,level,status", [
        ("w1", "special", Status.NORMAL),
        ("w1", "iwahori", Status.NORMAL),
        ("w1", "abs-special", Status.NON_NORMAL),
        ("1,0,-1", "special", Status.NON_NORMAL),
    ])
    def test_pu3_table(self, mu, level, status):
        assert _verdict("pu(3)@3", mu, level).status == status

    def test_central(self):
        v = _verdict("pgl(2)@2", "0")
        assert v.status == Status.NORMAL
        assert v.provenance == Provenance.CENTRAL


class TestLocalModelVerdict:

    def test_abs_special_pgl3(self):
        v = _verdict("pgl(3)@3", "w1+w2")
        assert v.status == Status.NON_NORMAL
        assert v.provenance == Provenance.LOCAL_MODEL
        assert v.pi1_order == 3

    def test_generic_fiber(self):
        v = _verdict("pgl(3)@3", "w1+w2", char_F=3)
        assert v.status == Status.NON_NORMAL
        assert v.provenance == Provenance.GENERIC_FIBER

    def test_minuscule(self):
        v = _verdict("pgl(3)@3", "w1")
        assert v.status == Status.NORMAL
        assert v.provenance == Provenance.LOCAL_MODEL

    def test_iwahori_pgl3(self):
        v = _verdict("pgl(3)@3", "w1+w2", "iwahori")
        assert v.status == Status.NORMAL
        assert v.provenance == Provenance.FACET_PROPAGATION
        assert len(v.witness["admissible_max"]) == 6

    def test_generic_fiber_verdict(self, pgl3):
        assert generic_fiber_verdict(LMTriple.build(pgl3, "w1+w2")).provenance == Provenance.CHAR_ZERO
        assert generic_fiber_verdict(LMTriple.build(pgl3, "w1", char_F=3)).is_normal


class TestAdmissibleMax:

    def test_special_vertex(self, pgl3):
        out = admissible_max(LMTriple.build(pgl3, "w1+w2"))
        assert len(out) == 1
        assert out[0]["class"]["name"] == "w1+w2"

    def test_iwahori(self, pgl3):
        out = admissible_max(LMTriple.build(pgl3, "w1+w2", "iwahori"))
        assert len(out) == 6
        assert all(a["length"] == 4 for a in out)
