"""Special vertices: absolutely special, and the special-only vertex of PU_{2n+1}."""

from __future__ import annotations

from schubert_normality.coinvariants.lattice import CoinvariantClass
from schubert_normality.exceptions import UnsupportedLevel
from schubert_normality.levels.base import Level, LevelStrategy
from schubert_normality.normality.criterion import verdict_abs_special
from schubert_normality.normality.special import VertexKind, is_odd_unitary, verdict_special
from schubert_normality.normality.verdict import Verdict


class AbsSpecialStrategy(LevelStrategy):
    level = Level.ABS_SPECIAL

    def verdict(self, mu: CoinvariantClass) -> Verdict:
        return verdict_abs_special(mu)

    def admissible_max(self, mu: CoinvariantClass) -> list[CoinvariantClass]:
        # the admissible locus is Gr_{<= mu} itself
        return [mu]


class SpecialOnlyStrategy(LevelStrategy):
    level = Level.SPECIAL

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        if not is_odd_unitary(self.group):
            raise UnsupportedLevel(f"{self.group.label()} has no special vertex that is not absolutely special")

    def verdict(self, mu: CoinvariantClass) -> Verdict:
        return verdict_special(mu, VertexKind.SPECIAL_ONLY)

    def admissible_max(self, mu: CoinvariantClass) -> list[CoinvariantClass]:
        return [mu]
