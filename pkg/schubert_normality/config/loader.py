"""Load group specs and LM-triples from YAML, JSON, dicts or preset names.

Every input path converges on ``load_from_dict``, producing a validated
``GroupSpec``.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import yaml

from schubert_normality.config.presets import is_preset, preset_spec
from schubert_normality.config.schema import GroupSpec, LMTripleSpec

_LATTICE_SYNONYMS = {
    "adjoint": "ad",
    "simply_connected": "sc",
    "simply-connected": "sc",
    "so": "SO",
    "halfspin": "half_spin",
    "half-spin": "half_spin",
}


def _normalize_factor(raw: dict[str, Any]) -> dict[str, Any]:
    """Accept ``type`` for ``abs_type``, lowercase letters and lattice synonyms."""
    data = dict(raw)
    if "type" in data and "abs_type" not in data:
        data["abs_type"] = data.pop("type")
    if isinstance(data.get("abs_type"), str):
        data["abs_type"] = data["abs_type"].upper()
    lattice = data.get("lattice")
    if isinstance(lattice, str):
        data["lattice"] = _LATTICE_SYNONYMS.get(lattice.lower(), lattice)
    elif isinstance(lattice, list):
        data["lattice"] = {"basis": lattice}
    return data


def _normalize_group(raw: dict[str, Any]) -> dict[str, Any]:
    """Accept a bare factor dict in place of ``factors`` and ``p`` for ``char``."""
    data = dict(raw)
    if "factors" not in data and ("abs_type" in data or "type" in data):
        factor_keys = {"abs_type", "type", "rank", "twist_order", "lattice", "central_rank", "restriction_degree"}
        factor = {k: data.pop(k) for k in list(data) if k in factor_keys}
        data["factors"] = [factor]
    if isinstance(data.get("factors"), dict):
        data["factors"] = [data["factors"]]
    if "p" in data and "char" not in data:
        data["char"] = data.pop("p")
    data["factors"] = [_normalize_factor(f) for f in data.get("factors", [])]
    return data


def _read(path: Path) -> Any:
    with open(path, "r") as f:
        text = f.read()
    if not text.strip():
        raise ValueError(f"Empty config file: {path}")
    if path.suffix.lower() == ".json":
        return json.loads(text)
    return yaml.safe_load(text)


def load_from_dict(data: dict[str, Any]) -> GroupSpec:
    """Load and validate a GroupSpec from a dict."""
    return GroupSpec.model_validate(_normalize_group(data))


def load_from_yaml(path: str | Path) -> GroupSpec:
    path = Path(path)
    raw = _read(path)
    if raw is None:
        raise ValueError(f"Empty config file: {path}")
    return load_from_dict(raw)


def load_from_json(path: str | Path) -> GroupSpec:
    path = Path(path)
    return load_from_dict(_read(path))


def load_group(source: str | Path, char: int | None = None) -> GroupSpec:
    """A file path (JSON or YAML) or a preset name; ``char`` overrides the characteristic.

    An existing file always wins over a preset of the same name.
    """
    path = Path(source)
    if path.is_file():
        spec = load_from_json(path) if path.suffix.lower() == ".json" else load_from_yaml(path)
    elif is_preset(str(source)):
        spec = load_from_dict(preset_spec(str(source)))
    else:
        raise ValueError(f"{source!r} is neither a spec file nor a known preset")
    if char is not None:
        spec = GroupSpec.model_validate({**spec.model_dump(), "char": char})
    return spec


def load_triple_from_dict(data: dict[str, Any]) -> LMTripleSpec:
    raw = dict(data)
    group = raw.get("group")
    if isinstance(group, str):
        raw["group"] = load_group(group).model_dump()
    elif isinstance(group, dict):
        raw["group"] = _normalize_group(group)
    return LMTripleSpec.model_validate(raw)


def load_triple(path: str | Path) -> LMTripleSpec:
    path = Path(path)
    raw = _read(path)
    if raw is None:
        raise ValueError(f"Empty config file: {path}")
    return load_triple_from_dict(raw)
