"""Tests for the Jinja2 renderer."""

import json

import pytest
from jinja2 import TemplateNotFound, UndefinedError

from schubert_normality.affineweyl.flags import flag_rows
from schubert_normality.affineweyl.group import IwahoriWeylGroup
from schubert_normality.coinvariants.lattice import coinvariants
from schubert_normality.dominance.hasse import hasse_segment
from schubert_normality.engine.renderer import (
    create_jinja_env,
    emit_flag_csv,
    emit_table,
    render_hasse_dot,
    render_template,
)
from schubert_normality.normality.classify import classify


class TestRenderer:

    def test_create_env(self):
        env = create_jinja_env()
        assert env.undefined.__name__ == "StrictUndefined"

    def test_render_simple_template(self, tmp_path):
        (tmp_path / "test.txt.j2").write_text("pi_1 has order {{ n }}")
        env = create_jinja_env(tmp_path)
        assert render_template(env, "test.txt.j2", {"n": 3}) == "pi_1 has order 3"

    def test_strict_undefined_raises(self, tmp_path):
        (tmp_path / "test.txt.j2").write_text("{{ missing }}")
        env = create_jinja_env(tmp_path)
        with pytest.raises(UndefinedError):
            render_template(env, "test.txt.j2", {})

    def test_template_not_found(self):
        with pytest.raises(TemplateNotFound):
            render_template(create_jinja_env(), "nonexistent.j2", {})

    def test_quote_filter(self, tmp_path):
        (tmp_path / "test.j2").write_text("{{ value | quote }}")
        env = create_jinja_env(tmp_path)
        assert render_template(env, "test.j2", {"value": 'a"b'}) == '"a\\"b"'

    def test_csv_cell_filter(self, tmp_path):
        (tmp_path / "test.j2").write_text("{{ a | csv_cell }};{{ b | csv_cell }}")
        env = create_jinja_env(tmp_path)
        assert render_template(env, "test.j2", {"a": "{1,2}", "b": "w1"}) == '"{1,2}";w1'

    def test_templates_exist(self):
        env = create_jinja_env()
        for name in ["hasse.dot.j2", "classification.md.j2", "classification.csv.j2", "flag.csv.j2"]:
            assert env.get_template(name) is not None


class TestHasseDot:

    def test_golden_pgl2(self, pgl2, golden_dir):
        lat = coinvariants(pgl2)
        segments = [hasse_segment(lat, c, 4) for c in lat.components]
        assert render_hasse_dot(segments) == (golden_dir / "pgl2_hasse.dot").read_text()

    def test_stable(self, pgl3):
        lat = coinvariants(pgl3)
        segments = [hasse_segment(lat, c, 6) for c in lat.components]
        assert render_hasse_dot(segments) == render_hasse_dot(segments)


class TestTables:

    def test_markdown(self, pgl2):
        out = emit_table([classify(pgl2)], "md")
        assert out == (
            "| group | component | family | verdict | provenance |\n"
            "| --- | --- | --- | --- | --- |\n"
            "| pgl(2) | 0 | minuscule 0 | Normal | pi1-criterion |\n"
            "| pgl(2) | 1 | minuscule w1 | Normal | pi1-criterion |\n"
        )

    def test_csv_quotes_commas(self, pgl3):
        out = emit_table([classify(pgl3)], "csv")
        lines = out.splitlines()
        assert lines[0] == "group,component,family,verdict,provenance"
        assert len(lines) == 1 + len(classify(pgl3).rows())

    def test_json(self, pgl3):
        rows = json.loads(emit_table([classify(pgl3)], "json"))
        assert {r["component"] for r in rows} == {0, 1, 2}

    def test_unknown_format(self, pgl2):
        with pytest.raises(ValueError):
            emit_table([classify(pgl2)], "xml")


class TestFlagCsv:

    def test_header_and_order(self, pgl2):
        rows = flag_rows(IwahoriWeylGroup(coinvariants(pgl2)), 2)
        lines = emit_flag_csv(list(reversed(rows))).splitlines()
        assert lines[0] == "component,element,length,status,provenance"
        assert len(lines) == 1 + len(rows) == 11
        assert lines[1].startswith("0,1,0,")
