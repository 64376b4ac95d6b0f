"""Whether a flag variety has only finitely many normal Schubert varieties."""

from __future__ import annotations

from schubert_normality.coinvariants.group import GroupDatum
from schubert_normality.coinvariants.lattice import coinvariants
from schubert_normality.normality.criterion import LeviSupport, pi1_order


def factor_orders(g: GroupDatum) -> list[int]:
    """pi_1 order of the full-support Levi of each almost simple factor."""
    lat = coinvariants(g)
    return [pi1_order(lat, LeviSupport.of(lat.sigma_indices(j))) for j in range(len(g.factors))]


def finitely_many_normal(g: GroupDatum, facet_kind: str = "special") -> bool:
    """True iff char(k) divides the pi_1 order of every factor's full-support Levi.

    The answer does not depend on the facet or on the connected component.
    """
    p = g.char
    if p == 0:
        return False
    return all(order % p == 0 for order in factor_orders(g))
