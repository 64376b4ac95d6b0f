"""Classification of normal Schubert varieties at an absolutely special vertex.

For each connected component with minuscule class la, every class at or
above la + mu^qm has full support, so all of them share one verdict. The
classes below are finitely many for an almost simple group; they are
enumerated and decided one by one.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any

from schubert_normality.coinvariants.group import GroupDatum
from schubert_normality.coinvariants.lattice import (
    CoinvariantClass,
    coinvariants,
    realized_components,
)
from schubert_normality.dominance.order import (
    DEFAULT_MAX_NODES,
    add_weight,
    factorwise_qm,
    leq,
    minuscule_of_component,
    positive_coroot_weights,
    shift,
    weight_leq,
)
from schubert_normality.exceptions import CapExceeded, WrongType
from schubert_normality.normality.criterion import LeviSupport, pi1_order, verdict_abs_special
from schubert_normality.normality.verdict import Status, Verdict

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ClassificationRow:
    group: str
    component: int
    family: str
    verdict: str
    provenance: str

    def to_dict(self) -> dict[str, Any]:
        return {
            "group": self.group,
            "component": self.component,
            "family": self.family,
            "verdict": self.verdict,
            "provenance": self.provenance,
        }


@dataclass
class ComponentResult:
    index: int
    realized: bool
    included: bool
    minuscule: CoinvariantClass
    threshold: CoinvariantClass
    above_verdict: Verdict
    candidates: list[tuple[CoinvariantClass, Verdict]] = field(default_factory=list)

    @property
    def normal(self) -> list[CoinvariantClass]:
        return [mu for mu, v in self.candidates if v.is_normal]

    def normal_names(self) -> set[str]:
        return {mu.name for mu in self.normal}

    def maximal_normal(self) -> list[CoinvariantClass]:
        normal = self.normal
        return [mu for mu in normal if not any(mu != nu and leq(mu, nu) for nu in normal)]

    def is_order_ideal(self) -> bool:
        tops = self.maximal_normal()
        return all(v.is_normal == any(leq(mu, t) for t in tops) for mu, v in self.candidates)


@dataclass
class Classification:
    group: str
    char: int
    pi1_order: int
    components: list[ComponentResult]
    raw: bool = False

    def component(self, index: int) -> ComponentResult:
        return next(c for c in self.components if c.index == index)

    def rows(self) -> list[ClassificationRow]:
        out = []
        for comp in self.components:
            if not comp.included:
                continue
            out.extend(_rows_for(self.group, comp, self.raw))
        return out


def _rows_for(group: str, comp: ComponentResult, raw: bool) -> list[ClassificationRow]:
    def row(family: str, v: Verdict) -> ClassificationRow:
        return ClassificationRow(group, comp.index, family, v.status.value, v.provenance.value)

    rows = []
    normal_verdicts = {mu.name: v for mu, v in comp.candidates if v.is_normal}
    if raw or not comp.is_order_ideal():
        rows.extend(row(mu.name, normal_verdicts[mu.name]) for mu in comp.normal)
    else:
        rows.append(row(f"minuscule {comp.minuscule.name}", normal_verdicts[comp.minuscule.name]))
        rows.extend(
            row(f"<= {mu.name}", normal_verdicts[mu.name])
            for mu in comp.maximal_normal()
            if mu != comp.minuscule
        )
    if comp.above_verdict.is_normal:
        rows.append(row(f">= {comp.threshold.name}", comp.above_verdict))
    return rows


def candidates_below(bottom: CoinvariantClass, top: CoinvariantClass, max_nodes: int) -> list[CoinvariantClass]:
    """Dominant classes of bottom's component not above ``top``."""
    lat = bottom.lattice
    roots = [cw for _, cw in positive_coroot_weights(lat)]
    seen = {bottom.weight}
    frontier = [bottom.weight]
    while frontier:
        nxt = []
        for m in frontier:
            for cw in roots:
                w = add_weight(m, cw)
                if w in seen or any(x < 0 for x in w) or weight_leq(lat, top.weight, w):
                    continue
                seen.add(w)
                nxt.append(w)
                if len(seen) > max_nodes:
                    raise CapExceeded(f"more than {max_nodes} classes below {top.name}")
        frontier = nxt
    ordered = sorted(seen, key=lambda w: (lat.height_of_weight(w), w))
    return [shift(bottom, w) for w in ordered]


def classify(
    g: GroupDatum,
    all_components: bool = False,
    raw: bool = False,
    max_nodes: int = DEFAULT_MAX_NODES,
) -> Classification:
    """Normal Schubert varieties of an almost simple group, per connected component.

    Components are those of the adjoint group; a component not hit by the
    group's own lattice is skipped unless ``all_components`` is set (groups
    with the same derived group and a larger centre realize all of them).
    """
    if len(g.factors) != 1:
        raise WrongType("classification runs on one almost simple factor at a time")
    lat = coinvariants(g)
    ad = coinvariants(g.adjoint())
    full = LeviSupport.of(range(lat.rank))
    order = pi1_order(lat, full)
    realized = realized_components(lat)
    qm = factorwise_qm(ad)
    result = Classification(g.label(), g.char, order, [], raw)
    for k, comp in enumerate(ad.components):
        is_realized = comp in realized
        bottom = minuscule_of_component(ad, comp)
        top = bottom + qm
        above = verdict_abs_special(top, lat)
        included = is_realized or all_components
        entry = ComponentResult(k, is_realized, included, bottom, top, above)
        if included:
            entry.candidates = [(mu, verdict_abs_special(mu, lat)) for mu in candidates_below(bottom, top, max_nodes)]
        logger.debug("component %d of %s: %d candidates below %s",
                     k, g.label(), len(entry.candidates), top.name)
        result.components.append(entry)
    return result


def normal_count(c: Classification) -> dict[int, int]:
    """Number of normal classes below the threshold, per component."""
    return {comp.index: len(comp.normal) for comp in c.components if comp.included}


def no_normal_except_trivial(c: Classification) -> bool:
    """Only the minuscule class is normal in every realized component."""
    for comp in c.components:
        if not comp.included:
            continue
        if comp.above_verdict.status == Status.NORMAL:
            return False
        if [mu.name for mu in comp.normal] != [comp.minuscule.name]:
            return False
    return True


