"""Moving verdicts along central isogenies and product decompositions."""

from __future__ import annotations

from math import prod
from typing import Callable

from schubert_normality.coinvariants.group import GroupDatum
from schubert_normality.coinvariants.lattice import CoinvariantClass, adjoint_image, coinvariants
from schubert_normality.exceptions import NoRelation
from schubert_normality.lattice.normalforms import invariant_factors
from schubert_normality.normality.criterion import LeviSupport, pi1_order, verdict_abs_special
from schubert_normality.normality.verdict import Provenance, Status, Verdict, non_normal, normal, unknown

VerdictFn = Callable[[CoinvariantClass], Verdict]


def isogeny_degree(g: GroupDatum) -> int:
    """Degree of G^der -> G^ad, that is [P^vee : X cap Q Phi^vee]."""
    lat = coinvariants(g)
    d = g.datum
    connection = prod(invariant_factors([list(r) for r in d.cartan], d.rank))
    return connection // pi1_order(lat, LeviSupport.of(range(lat.rank)))


def is_etale_to_adjoint(g: GroupDatum) -> bool:
    p = g.char
    return p == 0 or isogeny_degree(g) % p != 0


def factor_part(g: GroupDatum, mu: CoinvariantClass, j: int) -> CoinvariantClass:
    """Component of ``mu`` in the j-th factor; requires factorwise coordinates."""
    if g.basis is not None:
        raise NoRelation("a shared lattice basis does not split into factors")
    offset = sum(f.datum.cochar_rank for f in g.factors[:j])
    n = g.factors[j].datum.cochar_rank
    x = mu.lift()[offset:offset + n]
    return coinvariants(g.factor_group(j)).class_of(x)


def verdict_product(g: GroupDatum, mu: CoinvariantClass, verdict_fn: VerdictFn = verdict_abs_special) -> Verdict:
    """Normal iff every factor is; non-normal as soon as one factor is."""
    verdicts = [verdict_fn(factor_part(g, mu, j)) for j in range(len(g.factors))]
    witness = {"factors": [v.status.value for v in verdicts]}
    if all(v.is_normal for v in verdicts):
        return normal(Provenance.PRODUCT, witness=witness)
    if any(v.status == Status.NON_NORMAL for v in verdicts):
        return non_normal(Provenance.PRODUCT, witness=witness)
    return unknown(witness=witness)


def verdict_transfer(
    source: GroupDatum,
    target: GroupDatum,
    mu: CoinvariantClass,
    verdict_fn: VerdictFn = verdict_abs_special,
) -> Verdict:
    """Verdict for ``mu`` in ``source`` read off from ``target``.

    Supported relations: target is the adjoint group of source, or target is
    one factor of source (then only that factor's part is decided).
    """
    if target == source.adjoint():
        mu_ad = adjoint_image(mu.lattice, mu)
        v = verdict_fn(mu_ad)
        witness = {"adjoint": mu_ad.name, "adjoint_status": v.status.value}
        if is_etale_to_adjoint(source):
            return Verdict(status=v.status, provenance=Provenance.ISOGENY, witness=witness)
        if v.is_normal:
            return normal(Provenance.ISOGENY, witness=witness)
        # a finite birational homeomorphism onto a non-normal target says nothing more
        return unknown(witness=witness)
    for j in range(len(source.factors)):
        if source.basis is None and target == source.factor_group(j):
            v = verdict_fn(factor_part(source, mu, j))
            return v.model_copy(update={"witness": {"factor": j + 1, **(v.witness or {})}})
    raise NoRelation(f"no isogeny or product relation from {source.label()} to {target.label()}")
