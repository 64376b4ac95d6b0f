"""The support Levi of a dominant class and the pi_1 criterion.

Normality at an absolutely special vertex is decided by one number: the
order of pi_1 of the derived group of the Levi spanned by the support. It is
the index of the lattice spanned by the Levi's absolute simple coroots in its
saturation inside X_*(T).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from math import prod
from typing import Sequence

from schubert_normality.coinvariants.group import GroupDatum
from schubert_normality.coinvariants.lattice import CoinvariantClass, CoinvariantLattice, coinvariants
from schubert_normality.dominance.order import dominantize, minuscule_below, support
from schubert_normality.exceptions import NotDominant
from schubert_normality.lattice.normalforms import invariant_factors, saturation_index
from schubert_normality.normality.verdict import Provenance, Verdict, non_normal, normal
from schubert_normality.rootdata.cartan import RootSystem

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LeviSupport:
    """A set of simple échelonnage indices (0-based)."""

    indices: frozenset[int]

    @classmethod
    def of(cls, indices: Sequence[int]) -> LeviSupport:
        return cls(frozenset(indices))

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> LeviSupport:
        return cls(frozenset(i - 1 for i in labels))

    def labels(self) -> list[int]:
        return sorted(i + 1 for i in self.indices)

    def absolute(self, lat: CoinvariantLattice) -> list[int]:
        """Absolute simple indices: the union of the orbits in the support."""
        return sorted(b for i in self.indices for b in lat.orbits[i].indices)

    def by_factor(self, lat: CoinvariantLattice) -> dict[int, LeviSupport]:
        out: dict[int, set[int]] = {}
        for i in self.indices:
            out.setdefault(lat.factor_of[i], set()).add(i)
        return {j: LeviSupport(frozenset(s)) for j, s in sorted(out.items())}

    def __len__(self):
        return len(self.indices)


def levi_of(mu: CoinvariantClass) -> LeviSupport:
    return LeviSupport(support(mu))


def pi1_order(lat: CoinvariantLattice, s: LeviSupport) -> int:
    """#pi_1(M_S^der) = [X cap Q Phi^vee_M : Z Phi^vee_M]."""
    idx = s.absolute(lat)
    if not idx:
        return 1
    d = lat.group.datum
    return saturation_index([d.coroots[i] for i in idx], d.cochar_rank)


def levi_connection_index(lat: CoinvariantLattice, s: LeviSupport) -> int:
    """Determinant of the Levi's absolute Cartan matrix."""
    idx = s.absolute(lat)
    if not idx:
        return 1
    c = lat.group.datum.cartan
    sub = [[c[i][j] for j in idx] for i in idx]
    return prod(invariant_factors(sub, len(idx)))


def levi_qm(lat: CoinvariantLattice, s: LeviSupport) -> CoinvariantClass:
    """Factorwise quasi-minuscule class of the Levi M_S."""
    idx = sorted(s.indices)
    if not idx:
        return lat.zero
    sub = RootSystem([[lat.cartan[i][j] for j in idx] for i in idx])
    total = lat.zero
    for theta in sub.highest_roots:
        full = [0] * lat.rank
        for k, i in enumerate(idx):
            full[i] = theta.coroot[k]
        total = total + lat.coroot_class(full)
    return total


def split_form(g: GroupDatum) -> GroupDatum:
    """The same lattice with every twist removed."""
    return GroupDatum(tuple(replace(f, twist_order=1) for f in g.factors), g.char, g.basis, name=g.name)


def pi1_absolute_order(g: GroupDatum, mu: Sequence[int]) -> int:
    """pi_1 order of the Levi of the absolute support of a coweight of X."""
    lat = coinvariants(split_form(g))
    cls = dominantize(lat.class_of(mu))
    return pi1_order(lat, levi_of(cls))


def verdict_abs_special(mu: CoinvariantClass, group_lattice: CoinvariantLattice | None = None) -> Verdict:
    """Verdict for Gr_{<= mu} at an absolutely special vertex.

    ``group_lattice`` measures pi_1 in another group with the same adjoint
    group; ``mu`` is then an adjoint class. Only the derived lattice of that
    group matters.
    """
    if not mu.is_dominant():
        raise NotDominant(f"{mu.name} is not dominant")
    lat = group_lattice or mu.lattice
    p = lat.group.char
    s = levi_of(mu)
    order = pi1_order(lat, s)
    common = {"pi1_order": order, "support": s.labels()}
    if p == 0:
        return normal(Provenance.CHAR_ZERO, **common)
    if order % p:
        return normal(Provenance.CRITERION, **common)
    la = minuscule_below(mu)
    qm = levi_qm(mu.lattice, s)
    offending = [
        lat.group.factors[j].label()
        for j, part in s.by_factor(lat).items()
        if pi1_order(lat, part) % p == 0
    ]
    logger.debug("%s: char %d divides pi_1 order %d", mu.name, p, order)
    return non_normal(
        Provenance.CRITERION_NECESSITY,
        witness={"minuscule": la.name, "levi_qm": qm.name, "comparison": (la + qm).name, "factors": offending},
        **common,
    )
