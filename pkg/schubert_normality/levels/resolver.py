"""Level resolver: turns level names into strategies."""

from __future__ import annotations

from typing import Iterable

from schubert_normality.coinvariants.group import GroupDatum
from schubert_normality.config.schema import Caps
from schubert_normality.exceptions import UnsupportedLevel
from schubert_normality.levels.base import Level, LevelStrategy
from schubert_normality.levels.flag import FlagStrategy, IwahoriStrategy
from schubert_normality.levels.special import AbsSpecialStrategy, SpecialOnlyStrategy

_LEVEL_MAP: dict[Level, type[LevelStrategy]] = {
    Level.ABS_SPECIAL: AbsSpecialStrategy,
    Level.SPECIAL: SpecialOnlyStrategy,
    Level.IWAHORI: IwahoriStrategy,
    Level.FACET: FlagStrategy,
}

_SYNONYMS = {
    "absolutely_special": Level.ABS_SPECIAL,
    "absolutely-special": Level.ABS_SPECIAL,
    "abs_special": Level.ABS_SPECIAL,
    "hyperspecial": Level.ABS_SPECIAL,
    "special_only": Level.SPECIAL,
    "special-only": Level.SPECIAL,
    "other_facet": Level.FACET,
}


def resolve_level(name: str | Level) -> Level:
    if isinstance(name, Level):
        return name
    key = name.strip().lower()
    if key in _SYNONYMS:
        return _SYNONYMS[key]
    try:
        return Level(key)
    except ValueError as exc:
        raise UnsupportedLevel(f"unknown level {name!r}") from exc


def get_strategy(
    level: str | Level,
    group: GroupDatum,
    caps: Caps | None = None,
    facet: Iterable[int] = (),
) -> LevelStrategy:
    strategy_cls = _LEVEL_MAP.get(resolve_level(level))
    if strategy_cls is None:
        raise UnsupportedLevel(f"no strategy for level {level!r}")
    return strategy_cls(group, caps, facet)
