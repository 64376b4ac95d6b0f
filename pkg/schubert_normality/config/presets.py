"""Named group presets such as ``pgl(3)@3`` or ``e7-ad@2``."""

from __future__ import annotations

import re
from typing import Any, Callable

_PRESET = re.compile(r"^\s*([a-z0-9-]+)\s*(?:\(\s*(\d+)\s*\))?\s*(?:@\s*(\d+))?\s*$")


def _factor(letter: str, rank: int, lattice: Any = "ad", twist: int = 1) -> dict[str, Any]:
    return {"abs_type": letter, "rank": rank, "lattice": lattice, "twist_order": twist}


def _even(name: str, n: int | None) -> int:
    if n is None or n % 2:
        raise ValueError(f"{name}(n) needs an even n")
    return n // 2


def _odd(name: str, n: int | None) -> int:
    if n is None or n % 2 == 0:
        raise ValueError(f"{name}(n) needs an odd n")
    return n // 2


def _sized(name: str, n: int | None) -> int:
    if n is None:
        raise ValueError(f"{name} needs a size, e.g. {name}(3)")
    return n


_BUILDERS: dict[str, Callable[[int | None], list[dict[str, Any]]]] = {
    "pgl": lambda n: [_factor("A", _sized("pgl", n) - 1, "ad")],
    "sl": lambda n: [_factor("A", _sized("sl", n) - 1, "sc")],
    "gl": lambda n: [_factor("A", _sized("gl", n) - 1, "gl")],
    "pu": lambda n: [_factor("A", _sized("pu", n) - 1, "ad", 2)],
    "su": lambda n: [_factor("A", _sized("su", n) - 1, "sc", 2)],
    "so": lambda n: (
        [_factor("D", _even("so", n), "SO")] if n is not None and n % 2 == 0
        else [_factor("B", _odd("so", n), "ad")]
    ),
    "pso": lambda n: [_factor("D", _even("pso", n), "ad")],
    "spin": lambda n: (
        [_factor("D", _even("spin", n), "sc")] if n is not None and n % 2 == 0
        else [_factor("B", _odd("spin", n), "sc")]
    ),
    "hspin": lambda n: [_factor("D", _even("hspin", n), "half_spin")],
    "sp": lambda n: [_factor("C", _even("sp", n), "sc")],
    "psp": lambda n: [_factor("C", _even("psp", n), "ad")],
    "e6-ad": lambda n: [_factor("E", 6, "ad")],
    "e6-sc": lambda n: [_factor("E", 6, "sc")],
    "e7-ad": lambda n: [_factor("E", 7, "ad")],
    "e7-sc": lambda n: [_factor("E", 7, "sc")],
    "e8": lambda n: [_factor("E", 8, "ad")],
    "f4": lambda n: [_factor("F", 4, "ad")],
    "g2": lambda n: [_factor("G", 2, "ad")],
    "e6-ram": lambda n: [_factor("E", 6, "ad", 2)],
    "triality": lambda n: [_factor("D", 4, "ad", 3)],
    "so4": lambda n: [_factor("A", 1, "sc"), _factor("A", 1, "sc")],
}

# SO_4 = (SL_2 x SL_2) / diagonal mu_2
_SHARED_BASIS = {"so4": [[1, 1], [0, 2]]}

PRESET_NAMES = tuple(sorted(_BUILDERS))


def is_preset(text: str) -> bool:
    m = _PRESET.match(text.lower())
    return bool(m) and m.group(1) in _BUILDERS


def preset_spec(text: str) -> dict[str, Any]:
    """Expand a preset string into a raw group-spec dict."""
    m = _PRESET.match(text.lower())
    if not m or m.group(1) not in _BUILDERS:
        raise ValueError(f"unknown group preset {text!r}; known: {', '.join(PRESET_NAMES)}")
    key, size, char = m.group(1), m.group(2), m.group(3)
    n = int(size) if size else None
    data: dict[str, Any] = {
        "name": text.split("@")[0].strip(),
        "char": int(char) if char else 0,
        "factors": _BUILDERS[key](n),
    }
    if key in _SHARED_BASIS:
        data["basis"] = _SHARED_BASIS[key]
    return data
