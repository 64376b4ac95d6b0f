"""Tests for the group spec schema, presets, loader and validator."""

import pytest
from pydantic import ValidationError

from schubert_normality.config.loader import load_from_dict, load_from_yaml, load_group, load_triple
from schubert_normality.config.presets import PRESET_NAMES, is_preset, preset_spec
from schubert_normality.config.schema import CAP_ENV_VAR, AbsType, Caps, GroupSpec, LMTripleSpec
from schubert_normality.rootdata.cartan import SimpleType
from schubert_normality.validation.spec_validator import errors_only, validate_group_spec


class TestLoader:

    def test_json_example(self, pgl3_path):
        spec = load_group(pgl3_path)
        assert spec.name == "PGL3"
        assert spec.char == 3
        assert spec.factors[0].abs_type == AbsType.A
        assert spec.factors[0].lattice == "ad"

    def test_yaml_synonyms(self, examples_dir):
        spec = load_group(examples_dir / "so4.yaml")
        assert [f.lattice for f in spec.factors] == ["sc", "sc"]
        assert spec.basis == [[1, 1], [0, 2]]
        assert validate_group_spec(spec) == []

    def test_bare_factor(self, examples_dir):
        spec = load_group(examples_dir / "e6-ramified.yaml")
        assert len(spec.factors) == 1
        assert spec.factors[0].twist_order == 2
        assert spec.factors[0].lattice == "ad"

    def test_all_examples_valid(self, examples_dir):
        for path in sorted(examples_dir.glob("*")):
            if path.name.startswith("lm-"):
                continue
            assert errors_only(validate_group_spec(load_group(path))) == [], path.name

    def test_empty_file(self, fixtures_dir):
        with pytest.raises(ValueError, match="Empty config file"):
            load_from_yaml(fixtures_dir / "empty.yaml")

    def test_bad_twist_file(self, fixtures_dir):
        with pytest.raises(ValidationError):
            load_group(fixtures_dir / "bad_twist.yaml")

    def test_nonexistent_source(self):
        with pytest.raises(ValueError):
            load_group("no/such/file.yaml")

    def test_char_override(self, pgl3_path):
        assert load_group(pgl3_path, char=2).char == 2

    def test_factors_as_dict(self):
        spec = load_from_dict({"p": 5, "factors": {"type": "c", "rank": 2}})
        assert spec.char == 5
        assert spec.factors[0].abs_type == AbsType.C


class TestSchema:

    def test_char_must_be_prime(self):
        with pytest.raises(ValidationError):
            load_from_dict({"char": 4, "factors": [{"abs_type": "A", "rank": 1}]})

    def test_twist_range(self):
        with pytest.raises(ValidationError):
            load_from_dict({"factors": [{"abs_type": "A", "rank": 3, "twist_order": 4}]})

    def test_round_trip_datum(self):
        g = load_group("so4@2").to_datum()
        assert GroupSpec.from_datum(g).to_datum() == g

    def test_datum(self):
        g = load_group("pu(3)@3").to_datum()
        assert g.factors[0].simple_type == SimpleType("A", 2)
        assert g.factors[0].twist_order == 2


class TestPresets:

    def test_names(self):
        assert "pgl" in PRESET_NAMES
        assert is_preset("PGL(3)@3")
        assert not is_preset("foo(3)")

    def test_preset_spec(self):
        data = preset_spec("pgl(2)@2")
        assert data["name"] == "pgl(2)"
        assert data["char"] == 2
        assert data["factors"][0]["rank"] == 1

    @pytest.mark.parametrize("preset,letter,rank,lattice", [
        ("so(8)", "D", 4, "SO"),
        ("so(7)", "B", 3, "ad"),
        ("spin(9)", "B", 4, "sc"),
        ("sp(6)", "C", 3, "sc"),
        ("e7-ad", "E", 7, "ad"),
    ])
    def test_types(self, preset, letter, rank, lattice):
        f = load_group(preset).factors[0]
        assert (f.abs_type.value, f.rank, f.lattice) == (letter, rank, lattice)

    def test_parity(self):
        with pytest.raises(ValueError):
            preset_spec("sp(5)")
        with pytest.raises(ValueError):
            preset_spec("pso(7)")

    def test_unknown(self):
        with pytest.raises(ValueError, match="unknown group preset"):
            preset_spec("foo(3)")

    def test_shared_basis(self):
        assert preset_spec("so4@2")["basis"] == [[1, 1], [0, 2]]


class TestValidator:

    def _fields(self, data):
        return {i.field for i in errors_only(validate_group_spec(load_from_dict(data)))}

    def test_invalid_rank(self):
        assert self._fields({"factors": [{"abs_type": "B", "rank": 1}]}) == {"factors[0].rank"}

    def test_invalid_twist(self):
        assert self._fields({"factors": [{"abs_type": "A", "rank": 3, "twist_order": 3}]}) == {"factors[0].twist_order"}

    def test_so_outside_type_d(self):
        assert self._fields({"factors": [{"abs_type": "A", "rank": 3, "lattice": "SO"}]}) == {"factors[0].lattice"}

    def test_basis_without_coroots(self):
        assert self._fields({"factors": [{"abs_type": "A", "rank": 1, "lattice": [[3]]}]}) == {"factors[0].lattice"}

    def test_wild(self):
        assert self._fields({"char": 2, "factors": [{"abs_type": "A", "rank": 2, "twist_order": 2}]}) == {"char"}

    def test_twist_moves_lattice(self):
        data = {"factors": [{"abs_type": "D", "rank": 4, "twist_order": 2, "lattice": "half_spin"}]}
        assert self._fields(data) == {"factors"}

    def test_everything_normal_warning(self):
        issues = validate_group_spec(load_group("pgl(3)@2"))
        assert errors_only(issues) == []
        assert [i.severity for i in issues] == ["warning"]
        assert "char" in str(issues[0])


class TestCaps:

    def test_defaults(self, monkeypatch):
        monkeypatch.delenv(CAP_ENV_VAR, raising=False)
        caps = Caps.resolve()
        assert caps == Caps()
        assert caps.length == 14

    def test_env_then_flag(self, monkeypatch):
        monkeypatch.setenv(CAP_ENV_VAR, "6")
        assert Caps.resolve().height == 6
        assert Caps.resolve(9).length == 9

    def test_bad_env(self, monkeypatch):
        monkeypatch.setenv(CAP_ENV_VAR, "lots")
        with pytest.raises(ValueError):
            Caps.resolve()


class TestTripleSpec:

    def test_example_file(self, examples_dir):
        spec = load_triple(examples_dir / "lm-pgl2-iwahori.yaml")
        assert spec.level == "iwahori"
        assert spec.residue_char == 2
        assert spec.group.name == "pgl(2)"

    def test_char_F(self):
        group = {"char": 3, "factors": [{"abs_type": "A", "rank": 2}]}
        with pytest.raises(ValidationError):
            LMTripleSpec.model_validate({"group": group, "mu": "w1", "char_F": 2})

    def test_residue_char_fills_group(self):
        group = {"factors": [{"abs_type": "A", "rank": 2}]}
        spec = LMTripleSpec.model_validate({"group": group, "mu": [1, 0], "residue_char": 3})
        assert spec.group.char == 3
