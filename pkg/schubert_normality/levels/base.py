"""Base level strategy ABC.

Each parahoric level decides Schubert varieties in its own partial flag
variety and knows which Schubert varieties are maximal in the admissible
locus of a cocharacter.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from enum import Enum
from typing import Iterable

from schubert_normality.coinvariants.group import GroupDatum
from schubert_normality.coinvariants.lattice import CoinvariantClass, CoinvariantLattice, coinvariants
from schubert_normality.config.schema import Caps
from schubert_normality.normality.verdict import Verdict


class Level(str, Enum):
    ABS_SPECIAL = "abs-special"
    SPECIAL = "special"
    IWAHORI = "iwahori"
    FACET = "facet"


class LevelStrategy(ABC):
    """Abstract base for level-specific verdicts."""

    level: Level

    def __init__(self, group: GroupDatum, caps: Caps | None = None, facet: Iterable[int] = ()):
        self.group = group
        self.caps = caps or Caps()
        self.facet = frozenset(facet)

    @property
    def lattice(self) -> CoinvariantLattice:
        return coinvariants(self.group)

    @abstractmethod
    def verdict(self, mu: CoinvariantClass) -> Verdict:
        """Verdict for the Schubert variety attached to the dominant class ``mu``."""

    @abstractmethod
    def admissible_max(self, mu: CoinvariantClass) -> list:
        """Maximal Schubert varieties of the admissible locus of ``mu``."""

    @property
    def is_vertex(self) -> bool:
        return True

    def describe(self) -> str:
        return self.level.value
