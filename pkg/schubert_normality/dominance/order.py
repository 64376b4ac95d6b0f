"""The dominance (Bruhat) order on X_*(T)_I^+.

All searches run on weights, the pairings of a class with the simple
échelonnage roots: inside one connected component a class is determined by
its weight, and moving by a coroot changes the weight by a row combination
of the échelonnage Cartan matrix. Results are turned back into classes at
the end.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Iterable, Sequence

import networkx as nx

from schubert_normality.coinvariants.lattice import CoinvariantClass, CoinvariantLattice
from schubert_normality.exceptions import CapExceeded, MixedGroups, NotComparable, NotDominant
from schubert_normality.lattice.normalforms import Vector, dot
from schubert_normality.rootdata.cartan import Root

logger = logging.getLogger(__name__)

DEFAULT_MAX_NODES = 20000
DEFAULT_HEIGHT_CAP = 40


def same_group(*classes: CoinvariantClass) -> CoinvariantLattice:
    lat = classes[0].lattice
    for c in classes[1:]:
        if c.lattice.group != lat.group:
            raise MixedGroups(f"{lat.group.label()} and {c.lattice.group.label()}")
    return lat


def _is_dominant(m: Sequence[int]) -> bool:
    return all(x >= 0 for x in m)


def _require_dominant(mu: CoinvariantClass) -> None:
    if not mu.is_dominant():
        raise NotDominant(f"{mu.name} is not dominant")


def add_weight(m: Sequence[int], v: Sequence[int], k: int = 1) -> Vector:
    return tuple(a + k * b for a, b in zip(m, v))


def positive_coroot_weights(lat: CoinvariantLattice) -> list[tuple[Root, Vector]]:
    """Positive échelonnage roots with the weight of their coroots."""
    return [(r, lat.coroot_weight(r.coroot)) for r in lat.root_system.positive_roots]


def shift(mu: CoinvariantClass, m: Sequence[int]) -> CoinvariantClass:
    """The class in the component of ``mu`` with weight ``m``."""
    lat = mu.lattice
    c = lat.coroot_coefficients([a - b for a, b in zip(m, mu.weight)])
    return mu + lat.coroot_class([int(x) for x in c])


def coroot_difference(la: CoinvariantClass, mu: CoinvariantClass) -> tuple[Fraction, ...] | None:
    """Coefficients c with mu - la = sum c_i (simple coroot i), or None across components."""
    lat = same_group(la, mu)
    if la.component != mu.component:
        return None
    return lat.coroot_coefficients([a - b for a, b in zip(mu.weight, la.weight)])


def leq(la: CoinvariantClass, mu: CoinvariantClass) -> bool:
    """la <= mu: mu - la is a non-negative integral sum of simple coroots."""
    c = coroot_difference(la, mu)
    return c is not None and all(x >= 0 and x.denominator == 1 for x in c)


def weight_leq(lat: CoinvariantLattice, a: Sequence[int], b: Sequence[int]) -> bool:
    """Order on weights of one component."""
    c = lat.coroot_coefficients([y - x for x, y in zip(a, b)])
    return all(x >= 0 for x in c)


def _pairings(m: Sequence[int], roots: Iterable[Root]) -> Iterable[int]:
    for r in roots:
        yield dot(m, r.root)


def is_minuscule(mu: CoinvariantClass) -> bool:
    """<mu, alpha> in {0, 1, -1} for every échelonnage root."""
    return all(abs(p) <= 1 for p in _pairings(mu.weight, mu.lattice.root_system.positive_roots))


def dominantize_weight(lat: CoinvariantLattice, m: Sequence[int]) -> Vector:
    m = tuple(m)
    while True:
        i = next((k for k, x in enumerate(m) if x < 0), None)
        if i is None:
            return m
        m = add_weight(m, lat.cartan[i], -m[i])


def dominantize(mu: CoinvariantClass) -> CoinvariantClass:
    """The dominant element of the Weyl orbit of ``mu``."""
    return shift(mu, dominantize_weight(mu.lattice, mu.weight))


def weyl_orbit(mu: CoinvariantClass) -> list[CoinvariantClass]:
    """The W_0-orbit of a class, dominant element first."""
    lat = mu.lattice
    start = dominantize_weight(lat, mu.weight)
    seen = {start}
    order = [start]
    frontier = [start]
    while frontier:
        nxt = []
        for m in frontier:
            for i in range(lat.rank):
                if m[i] == 0:
                    continue
                w = add_weight(m, lat.cartan[i], -m[i])
                if w not in seen:
                    seen.add(w)
                    order.append(w)
                    nxt.append(w)
        frontier = nxt
    return [shift(mu, m) for m in order]


def minuscule_below(mu: CoinvariantClass) -> CoinvariantClass:
    """The unique minuscule class below a dominant class."""
    _require_dominant(mu)
    lat = mu.lattice
    roots = positive_coroot_weights(lat)
    m = mu.weight
    while True:
        step = next((cw for r, cw in roots if dot(m, r.root) >= 2), None)
        if step is None:
            break
        m = dominantize_weight(lat, add_weight(m, step, -1))
    return shift(mu, m)


def support(mu: CoinvariantClass) -> frozenset[int]:
    """Indices (0-based) of simple coroots in mu - minuscule_below(mu)."""
    c = coroot_difference(minuscule_below(mu), mu)
    return frozenset(i for i, x in enumerate(c) if x > 0)


def quasi_minuscule(lat: CoinvariantLattice, factor: int) -> CoinvariantClass:
    """Coroot of the highest échelonnage root of one factor."""
    idx = lat.sigma_indices(factor)
    for theta in lat.root_system.highest_roots:
        if any(theta.root[i] for i in idx):
            return lat.coroot_class(theta.coroot)
    return lat.zero


def factorwise_qm(lat: CoinvariantLattice) -> CoinvariantClass:
    """Sum of the quasi-minuscule classes of all factors with roots."""
    total = lat.zero
    for j in range(len(lat.group.factors)):
        if lat.sigma_indices(j):
            total = total + quasi_minuscule(lat, j)
    return total


def height(mu: CoinvariantClass) -> int:
    return mu.lattice.height_of_weight(mu.weight)


def dimension(la: CoinvariantClass, mu: CoinvariantClass) -> int:
    """<2rho, mu - la>, the dimension of the Schubert variety of mu minus that of la."""
    if not leq(la, mu):
        raise NotComparable(f"{la.name} is not below {mu.name}")
    return height(mu) - height(la)


def _search(
    mu: CoinvariantClass,
    direction: int,
    height_cap: int | None,
    max_nodes: int,
) -> list[Vector]:
    lat = mu.lattice
    roots = [cw for _, cw in positive_coroot_weights(lat)]
    start = mu.weight
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for m in frontier:
            for cw in roots:
                w = add_weight(m, cw, direction)
                if w in seen or not _is_dominant(w):
                    continue
                if height_cap is not None and lat.height_of_weight(w) > height_cap:
                    continue
                seen.add(w)
                nxt.append(w)
                if len(seen) > max_nodes:
                    raise CapExceeded(f"more than {max_nodes} dominant classes around {mu.name}")
        frontier = nxt
    return sorted(seen, key=lambda w: (lat.height_of_weight(w), w))


def down_set(mu: CoinvariantClass, max_nodes: int = DEFAULT_MAX_NODES) -> list[CoinvariantClass]:
    """All dominant classes below a dominant class, sorted by height."""
    _require_dominant(mu)
    out = [shift(mu, m) for m in _search(mu, -1, None, max_nodes)]
    logger.debug("down-set of %s has %d elements", mu.name, len(out))
    return out


def up_set(
    mu: CoinvariantClass,
    height_cap: int = DEFAULT_HEIGHT_CAP,
    max_nodes: int = DEFAULT_MAX_NODES,
) -> list[CoinvariantClass]:
    """Dominant classes above ``mu`` of height at most ``height_cap``."""
    _require_dominant(mu)
    return [shift(mu, m) for m in _search(mu, 1, height_cap, max_nodes)]


def order_graph(classes: Sequence[CoinvariantClass]) -> nx.DiGraph:
    """Covering graph (edges la -> mu) of a set of classes."""
    g = nx.DiGraph()
    g.add_nodes_from(range(len(classes)))
    for a, la in enumerate(classes):
        for b, mu in enumerate(classes):
            if a != b and leq(la, mu):
                g.add_edge(a, b)
    return nx.transitive_reduction(g)


def support_label(la: CoinvariantClass, mu: CoinvariantClass) -> frozenset[int]:
    c = coroot_difference(la, mu)
    if c is None:
        raise NotComparable(f"{la.name} and {mu.name} lie in different components")
    return frozenset(i for i, x in enumerate(c) if x > 0)


def covers(mu: CoinvariantClass, max_nodes: int = DEFAULT_MAX_NODES) -> list[tuple[CoinvariantClass, frozenset[int]]]:
    """Classes covered by ``mu`` with the support of each minimal degeneration."""
    below = down_set(mu, max_nodes)
    top = below.index(mu)
    reduced = order_graph(below)
    return [(below[a], support_label(below[a], mu)) for a in sorted(reduced.predecessors(top))]


def minuscule_of_component(lat: CoinvariantLattice, component) -> CoinvariantClass:
    """The minuscule class of a component of pi_1(G)_I."""
    base = lat.class_of(lat.pi1.lift(*component))
    return minuscule_below(dominantize(base))
