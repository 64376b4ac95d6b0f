"""The Bruhat order on all of X_*(T)_I, through chains of root steps.

From mu one may move to mu - k alpha^vee for 0 < k <= <alpha, mu>, or, when
<alpha, mu> is negative, to mu + k alpha^vee for 0 < k < -<alpha, mu>; alpha
runs over the positive échelonnage roots. la <= mu when mu reaches la. In
every Weyl orbit the dominant element is the largest.
"""

from __future__ import annotations

from functools import lru_cache

from schubert_normality.coinvariants.lattice import CoinvariantClass
from schubert_normality.dominance.order import (
    DEFAULT_MAX_NODES,
    add_weight,
    dominantize_weight,
    positive_coroot_weights,
    same_group,
    shift,
    weight_leq,
)
from schubert_normality.exceptions import CapExceeded
from schubert_normality.lattice.normalforms import Vector, dot


def steps(mu: CoinvariantClass) -> list[CoinvariantClass]:
    """All classes reachable from ``mu`` in one step."""
    return [shift(mu, m) for m in _step_weights(mu.lattice, mu.weight)]


def _step_weights(lat, m: Vector) -> list[Vector]:
    out = []
    for r, cw in positive_coroot_weights(lat):
        p = dot(m, r.root)
        if p > 0:
            out.extend(add_weight(m, cw, -k) for k in range(1, p + 1))
        elif p < 0:
            out.extend(add_weight(m, cw, k) for k in range(1, -p))
    return out


@lru_cache(maxsize=None)
def _memo(lat, component, target: Vector) -> tuple[set[Vector], set[Vector]]:
    """Weights known to reach ``target``, and weights known not to."""
    return {target}, set()


def besson_hong_leq(la: CoinvariantClass, mu: CoinvariantClass, max_nodes: int = DEFAULT_MAX_NODES) -> bool:
    lat = same_group(la, mu)
    if la.component != mu.component:
        return False
    if la.weight == mu.weight:
        return True
    la_dom = dominantize_weight(lat, la.weight)
    if not weight_leq(lat, la_dom, dominantize_weight(lat, mu.weight)):
        return False
    above, below = _memo(lat, la.component, la.weight)
    if mu.weight in above:
        return True
    if mu.weight in below:
        return False
    seen = {mu.weight}
    frontier = [mu.weight]
    while frontier:
        nxt = []
        for m in frontier:
            for w in _step_weights(lat, m):
                if w in seen or w in below:
                    continue
                # anything above la dominates la's dominant representative
                if not weight_leq(lat, la_dom, dominantize_weight(lat, w)):
                    continue
                if w in above:
                    above.add(mu.weight)
                    return True
                seen.add(w)
                nxt.append(w)
                if len(seen) > max_nodes:
                    raise CapExceeded(f"more than {max_nodes} classes below {mu.name}")
        frontier = nxt
    below.update(seen)
    return False


def besson_hong_down_set(mu: CoinvariantClass, max_nodes: int = DEFAULT_MAX_NODES) -> list[CoinvariantClass]:
    """Every class reachable from ``mu``, ``mu`` included, in order of discovery."""
    lat = mu.lattice
    order = [mu.weight]
    seen = {mu.weight}
    frontier = [mu.weight]
    while frontier:
        nxt = []
        for m in frontier:
            for w in _step_weights(lat, m):
                if w in seen:
                    continue
                seen.add(w)
                order.append(w)
                nxt.append(w)
                if len(seen) > max_nodes:
                    raise CapExceeded(f"more than {max_nodes} classes below {mu.name}")
        frontier = nxt
    return [shift(mu, m) for m in order]
