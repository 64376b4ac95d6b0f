"""Iwahori orbits in the affine Grassmannian of split type A_n.

Coweights are given in epsilon coordinates (mu_0, ..., mu_n) of the
simply connected group, so they sum to zero. When char(k) divides n+1 the
Iwahori orbit of mu has a normal closure exactly when mu lies below a
length-zero translate of d*w1 or d*wn in the Besson-Hong order, and a
non-normal one exactly when it lies above the quasi-minuscule coweight.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import Sequence

from schubert_normality.coinvariants.group import GroupDatum, TwistedFactor
from schubert_normality.coinvariants.lattice import CoinvariantClass, CoinvariantLattice, coinvariants
from schubert_normality.dominance.besson_hong import besson_hong_down_set, besson_hong_leq
from schubert_normality.exceptions import InvalidCoweight, WrongType
from schubert_normality.normality.verdict import Provenance, Verdict, non_normal, normal, unknown
from schubert_normality.lattice.normalforms import Vector
from schubert_normality.rootdata.cartan import SimpleType
from schubert_normality.rootdata.datum import IsogenyLattice, from_epsilon

logger = logging.getLogger(__name__)


def _check_group(g: GroupDatum) -> int:
    if len(g.factors) != 1:
        raise WrongType("expected a single type A factor")
    f = g.factors[0]
    if f.simple_type.letter != "A" or f.twist_order != 1:
        raise WrongType(f"{f.label()} is not split of type A")
    n = f.simple_type.rank
    if g.char == 0 or (n + 1) % g.char:
        raise WrongType(f"char {g.char} does not divide {n + 1}")
    return n


def sl_lattice(n: int, char: int = 0) -> CoinvariantLattice:
    return coinvariants(GroupDatum((TwistedFactor(SimpleType("A", n), IsogenyLattice("sc")),), char))


def epsilon_class(lat: CoinvariantLattice, mu: Sequence[int]) -> CoinvariantClass:
    if sum(mu) != 0:
        raise InvalidCoweight(f"{tuple(mu)} does not sum to zero")
    return lat.class_of(from_epsilon(lat.group.datum, mu))


def normal_bounds(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The translates (-n, 1, ..., 1) of n*wn and (-1, ..., -1, n) of n*w1."""
    return (-n,) + (1,) * n, (-1,) * n + (n,)


@lru_cache(maxsize=None)
def normal_region(n: int, char: int) -> dict[Vector, tuple[int, ...]]:
    """Weights below one of the two bounds, mapped to the first bound they lie below."""
    lat = sl_lattice(n, char)
    region: dict[Vector, tuple[int, ...]] = {}
    for bound in normal_bounds(n):
        for cls in besson_hong_down_set(epsilon_class(lat, bound)):
            region.setdefault(cls.weight, bound)
    return region


def quasi_minuscule_eps(n: int) -> tuple[int, ...]:
    return (1,) + (0,) * (n - 1) + (-1,)


def typeA_iwahori_grassmannian(g: GroupDatum, mu: Sequence[int]) -> Verdict:
    n = _check_group(g)
    if len(mu) != n + 1:
        raise InvalidCoweight(f"expected {n + 1} epsilon coordinates, got {len(mu)}")
    lat = sl_lattice(n, g.char)
    cls = epsilon_class(lat, mu)
    witness = {"mu": list(mu)}
    bound = normal_region(n, g.char).get(cls.weight)
    if bound is not None:
        return normal(Provenance.TYPEA_IWAHORI, witness={**witness, "below": list(bound)})
    qm = quasi_minuscule_eps(n)
    if besson_hong_leq(epsilon_class(lat, qm), cls):
        return non_normal(Provenance.QM_BOUND, witness={**witness, "above": list(qm)})
    logger.debug("%s escaped both branches", tuple(mu))
    return unknown(witness=witness)


def omega_translate_typeA(mu: Sequence[int], k: int = 1) -> tuple[int, ...]:
    """Apply the length-zero element k times: (mu_0, ..., mu_n) -> (mu_1, ..., mu_n, mu_0 + 1)."""
    v = list(mu)
    for _ in range(k):
        v = v[1:] + [v[0] + 1]
    for _ in range(-k):
        v = [v[-1] - 1] + v[:-1]
    return tuple(v)


def normalize_eps(mu: Sequence[int]) -> tuple[int, ...]:
    """Representative summing to zero, when one exists in Z^{n+1} mod (1, ..., 1)."""
    s = sum(mu)
    if s % len(mu):
        raise InvalidCoweight(f"{tuple(mu)} is not in the neutral component")
    shift = s // len(mu)
    return tuple(x - shift for x in mu)
