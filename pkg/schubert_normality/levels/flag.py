"""Iwahori level and general facets, through the Iwahori-Weyl group."""

from __future__ import annotations

from functools import cached_property

from schubert_normality.affineweyl.flags import FlagWitnesses, flag_verdict, flag_witnesses
from schubert_normality.affineweyl.group import AffineElement, IwahoriWeylGroup
from schubert_normality.coinvariants.lattice import CoinvariantClass
from schubert_normality.dominance.order import weyl_orbit
from schubert_normality.exceptions import UnsupportedLevel
from schubert_normality.levels.base import Level, LevelStrategy
from schubert_normality.normality.verdict import Verdict


class FlagStrategy(LevelStrategy):
    """Schubert varieties S_v(f, f) for the facet f fixed by the nodes in ``facet``."""

    level = Level.FACET

    @cached_property
    def weyl_group(self) -> IwahoriWeylGroup:
        return IwahoriWeylGroup(self.lattice, self.caps.rank)

    @cached_property
    def witnesses(self) -> FlagWitnesses:
        return flag_witnesses(self.weyl_group, self.facet, self.caps.length, self.caps.nodes)

    @property
    def is_vertex(self) -> bool:
        return len(self.facet) == self.lattice.rank

    def representative(self, v: AffineElement) -> AffineElement:
        w = self.weyl_group
        return w.double_coset_max(self.facet, v) if self.facet else v

    def element_verdict(self, v: AffineElement) -> Verdict:
        return flag_verdict(self.weyl_group, v, self.facet, self.witnesses, self.caps.length)

    def verdict(self, mu: CoinvariantClass) -> Verdict:
        """Verdict for the Schubert variety of the translation t_mu."""
        return self.element_verdict(self.representative(self.weyl_group.translation(mu)))

    def admissible_max(self, mu: CoinvariantClass) -> list[AffineElement]:
        """max(W_f t_la W_f) for la in the Weyl orbit of mu, keeping the Bruhat-maximal ones."""
        w = self.weyl_group
        reps = {self.representative(w.translation(la)) for la in weyl_orbit(mu)}
        top = [
            a for a in reps
            if not any(a != b and w.bruhat_leq(a, b, self.caps.length) for b in reps)
        ]
        return sorted(top, key=lambda a: w.reduced_word(a)[1])


class IwahoriStrategy(FlagStrategy):
    level = Level.IWAHORI

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        if self.facet:
            raise UnsupportedLevel("the Iwahori level fixes no affine node; use the facet level")

    @property
    def is_vertex(self) -> bool:
        return False
