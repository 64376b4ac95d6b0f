"""Verdicts at special vertices, including the special-only vertex of odd unitary groups."""

from __future__ import annotations

from enum import Enum

from schubert_normality.coinvariants.group import GroupDatum
from schubert_normality.coinvariants.lattice import CoinvariantClass, CoinvariantLattice, adjoint_image, coinvariants
from schubert_normality.dominance.order import down_set, factorwise_qm, leq
from schubert_normality.exceptions import NotDominant, UnsupportedLevel
from schubert_normality.normality.criterion import verdict_abs_special
from schubert_normality.normality.verdict import Provenance, Status, Verdict, non_normal, normal, unknown


class VertexKind(str, Enum):
    ABSOLUTELY_SPECIAL = "absolutely_special"
    SPECIAL_ONLY = "special_only"


def is_odd_unitary(g: GroupDatum) -> bool:
    """A single ramified A_{2n} factor: the only case with a special-only vertex."""
    if len(g.factors) != 1:
        return False
    f = g.factors[0]
    return f.simple_type.letter == "A" and f.simple_type.rank % 2 == 0 and f.twist_order == 2


def special_only_bound(lat: CoinvariantLattice) -> CoinvariantClass:
    """Smallest class known to give a non-normal Schubert variety at the special-only vertex."""
    n = lat.rank
    m = [0] * n
    if n == 1:
        m[0] = 4
    else:
        m[0], m[-1] = 1, 2
    return lat.class_of_weight(m)


def verdict_special(mu: CoinvariantClass, vertex_kind: VertexKind | str = VertexKind.ABSOLUTELY_SPECIAL) -> Verdict:
    if not mu.is_dominant():
        raise NotDominant(f"{mu.name} is not dominant")
    kind = VertexKind(vertex_kind)
    base = verdict_abs_special(mu)
    if base.is_normal or kind is VertexKind.ABSOLUTELY_SPECIAL:
        return base
    g = mu.lattice.group
    if not is_odd_unitary(g):
        raise UnsupportedLevel(f"{g.label()} has no special vertex that is not absolutely special")
    ad = coinvariants(g.adjoint())
    mu_ad = adjoint_image(mu.lattice, mu)
    common = {"pi1_order": base.pi1_order, "support": base.support}
    if mu_ad == ad.zero or mu_ad == factorwise_qm(ad):
        return normal(Provenance.SPECIAL_ONLY_SMOOTH, **common)
    bound = special_only_bound(ad)
    if leq(bound, mu_ad):
        return non_normal(Provenance.SPECIAL_ONLY_BOUND, witness={"bound": bound.name}, **common)
    return unknown(**common)


def special_only_unknowns(g: GroupDatum) -> list[CoinvariantClass]:
    """Adjoint classes left undecided at the special-only vertex."""
    ad = coinvariants(g.adjoint())
    bound = special_only_bound(ad)
    out = []
    for mu in down_set(bound):
        if mu != bound and verdict_special(mu, VertexKind.SPECIAL_ONLY).status == Status.UNKNOWN:
            out.append(mu)
    return out
