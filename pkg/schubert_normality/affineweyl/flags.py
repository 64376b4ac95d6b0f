"""Schubert varieties in partial affine flag varieties.

A normal Gr_{x, <= mu} at a vertex x makes every S_v below the longest
element of W_x t_mu W_x normal; a non-normal one at an absolutely special
vertex makes every S_v above it non-normal. Both witness sets are closed
under the length-zero elements stabilizing the facet.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from schubert_normality.affineweyl.group import DEFAULT_LENGTH_CAP, AffineElement, IwahoriWeylGroup
from schubert_normality.dominance.order import DEFAULT_MAX_NODES, factorwise_qm, minuscule_of_component
from schubert_normality.exceptions import LengthCap, NotStabilizing
from schubert_normality.normality.classify import candidates_below
from schubert_normality.normality.criterion import LeviSupport, pi1_order, verdict_abs_special
from schubert_normality.normality.special import VertexKind, is_odd_unitary, verdict_special
from schubert_normality.normality.verdict import Provenance, Status, Verdict, non_normal, normal, unknown

logger = logging.getLogger(__name__)


@dataclass
class FlagWitnesses:
    facet: frozenset[int]
    all_normal: bool = False
    normal: list[AffineElement] = field(default_factory=list)
    non_normal: list[AffineElement] = field(default_factory=list)


def _close_under_omega(group: IwahoriWeylGroup, elements: Iterable[AffineElement], facet: frozenset[int]) -> list[AffineElement]:
    oms = [om for om in group.omega if group.stabilizes(om, facet)]
    out: dict[AffineElement, None] = {}
    for w in elements:
        for a in oms:
            aw = group.mul(a, w)
            for b in oms:
                out[group.mul(aw, b)] = None
    return list(out)


def flag_witnesses(
    group: IwahoriWeylGroup,
    facet: Iterable[int] = (),
    max_length: int = DEFAULT_LENGTH_CAP,
    max_nodes: int = DEFAULT_MAX_NODES,
) -> FlagWitnesses:
    lat = group.lattice
    g = lat.group
    nodes = frozenset(facet)
    out = FlagWitnesses(nodes)
    p = g.char
    if p == 0 or pi1_order(lat, LeviSupport.of(range(lat.rank))) % p:
        out.all_normal = True
        return out

    base = frozenset(range(1, group.rank + 1))
    special_only = group.nodes - {group.rank} if is_odd_unitary(g) else None
    qm = factorwise_qm(lat)
    normal_w, non_normal_w = [], []
    for comp in lat.components:
        bottom = minuscule_of_component(lat, comp)
        top = bottom + qm
        classes = candidates_below(bottom, top, max_nodes) + [top]
        for mu in classes:
            t = group.translation(mu)
            if nodes <= base:
                v = verdict_abs_special(mu)
                w = group.double_coset_max(base, t)
                if v.is_normal:
                    normal_w.append(w)
                elif v.status == Status.NON_NORMAL and group.length(w) <= max_length:
                    non_normal_w.append(w)
            if special_only is not None and nodes <= special_only:
                if verdict_special(mu, VertexKind.SPECIAL_ONLY).is_normal:
                    normal_w.append(group.double_coset_max(special_only, t))
    out.normal = _close_under_omega(group, normal_w, nodes)
    out.non_normal = _close_under_omega(group, non_normal_w, nodes)
    logger.debug("facet %s: %d normal and %d non-normal witnesses",
                 sorted(nodes), len(out.normal), len(out.non_normal))
    return out


def flag_verdict(
    group: IwahoriWeylGroup,
    v: AffineElement,
    facet: Iterable[int] = (),
    witnesses: FlagWitnesses | None = None,
    length_cap: int = DEFAULT_LENGTH_CAP,
) -> Verdict:
    """Verdict for S_v in the partial flag variety of the facet with nodes J."""
    nodes = frozenset(facet)
    vbar = group.double_coset_max(nodes, v) if nodes else v
    if group.length(vbar) > length_cap:
        raise LengthCap(f"{group.name(vbar)} is longer than {length_cap}")
    witnesses = witnesses or flag_witnesses(group, nodes, length_cap)
    if witnesses.all_normal:
        return normal(Provenance.CRITERION, witness={"element": group.name(vbar)})
    lv = group.length(vbar)
    for w in witnesses.normal:
        if group.length(w) >= lv and group._leq(vbar, w):
            return normal(Provenance.FACET_PROPAGATION, witness={"element": group.name(vbar), "below": group.name(w)})
    for w in witnesses.non_normal:
        if group.length(w) <= lv and group._leq(w, vbar):
            return non_normal(Provenance.FACET_PROPAGATION, witness={"element": group.name(vbar), "above": group.name(w)})
    return unknown(witness={"element": group.name(vbar)})


def flag_summary(
    group: IwahoriWeylGroup,
    max_length: int,
    facet: Iterable[int] = (),
) -> dict[int, Counter]:
    """Verdict counts per component over elements of length at most ``max_length``.

    For a proper facet only the longest representative of each double coset counts.
    """
    nodes = frozenset(facet)
    witnesses = flag_witnesses(group, nodes, max(max_length, DEFAULT_LENGTH_CAP))
    out = {}
    for k, comp in enumerate(group.lattice.components):
        counts: Counter = Counter()
        seen = set()
        for v in group.elements(comp, max_length):
            vbar = group.double_coset_max(nodes, v) if nodes else v
            if vbar in seen or group.length(vbar) > max_length:
                continue
            seen.add(vbar)
            counts[flag_verdict(group, vbar, nodes, witnesses, max(max_length, DEFAULT_LENGTH_CAP)).status.value] += 1
        out[k] = counts
    return out


def flag_rows(group: IwahoriWeylGroup, max_length: int, facet: Iterable[int] = ()) -> list[dict]:
    nodes = frozenset(facet)
    witnesses = flag_witnesses(group, nodes, max(max_length, DEFAULT_LENGTH_CAP))
    rows = []
    for k, comp in enumerate(group.lattice.components):
        for v in group.elements(comp, max_length):
            if nodes and group.double_coset_max(nodes, v) != v:
                continue
            verdict = flag_verdict(group, v, nodes, witnesses, max(max_length, DEFAULT_LENGTH_CAP))
            rows.append({
                "component": k,
                "element": group.name(v),
                "length": group.length(v),
                "verdict": verdict.status.value,
                "provenance": verdict.provenance.value,
            })
    return rows


def omega_translate_flag(
    group: IwahoriWeylGroup,
    om: AffineElement,
    v: AffineElement,
    facet: Iterable[int] = (),
) -> AffineElement:
    """Left translate by a length-zero element; S_v and S_{om v} are isomorphic."""
    nodes = frozenset(facet)
    if group.length(om) != 0:
        raise NotStabilizing(f"{group.name(om)} has positive length")
    if not group.stabilizes(om, nodes):
        raise NotStabilizing(f"{group.name(om)} moves the facet {sorted(nodes)}")
    return group.mul(om, v)
