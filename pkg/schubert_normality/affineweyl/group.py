"""Iwahori-Weyl groups of small rank.

An element t_la u is stored as (component, weight of la, matrix of u), where
u acts on weights from the right: u(m) = m U. Products follow
(la, u)(mu, v) = (la + u(mu), uv). The base alcove lies in the negative
chamber with the special vertex 0 in its closure, so its walls are
<x, a_i> = 0 and <x, theta> = -1, and s_0 = t_{-theta^vee} s_theta.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from schubert_normality.coinvariants.lattice import CoinvariantClass, CoinvariantLattice, Key
from schubert_normality.dominance.order import minuscule_of_component, weyl_orbit
from schubert_normality.exceptions import InvalidCoweight, LengthCap, RankCap, WrongType
from schubert_normality.lattice.normalforms import IntMatrix, Vector, dot, identity, mat_mul, vec_mat

logger = logging.getLogger(__name__)

DEFAULT_MAX_RANK = 3
DEFAULT_LENGTH_CAP = 14

Matrix = tuple[tuple[int, ...], ...]


def _freeze(m: IntMatrix) -> Matrix:
    return tuple(tuple(r) for r in m)


@dataclass(frozen=True)
class AffineElement:
    component: Key
    weight: Vector
    finite: Matrix


class IwahoriWeylGroup:
    """W = X_*(T)_I x| W_0 for a group with irreducible échelonnage system."""

    def __init__(self, lat: CoinvariantLattice, max_rank: int = DEFAULT_MAX_RANK):
        if lat.rank > max_rank:
            raise RankCap(f"affine Weyl groups are built up to rank {max_rank}, not {lat.rank}")
        if lat.rank == 0 or len(lat.root_system.components()) != 1:
            raise WrongType("the échelonnage root system must be irreducible")
        if lat.components is None:
            raise WrongType("pi_1(G)_I must be finite")
        self.lattice = lat
        self.rank = lat.rank
        r = self.rank
        c = lat.cartan
        self._positive = [r_.root for r_ in lat.root_system.positive_roots]
        self._simple_finite = []
        for i in range(r):
            u = identity(r)
            for j in range(r):
                u[i][j] -= c[i][j]
            self._simple_finite.append(_freeze(u))
        theta = lat.root_system.highest_roots[0]
        self.theta = theta
        theta_cw = lat.coroot_weight(theta.coroot)
        u_theta = identity(r)
        for i in range(r):
            for j in range(r):
                u_theta[i][j] -= theta.root[i] * theta_cw[j]
        zero = lat.pi1.zero
        s0 = AffineElement(zero, tuple(-x for x in theta_cw), _freeze(u_theta))
        self.generators: tuple[AffineElement, ...] = (s0,) + tuple(
            AffineElement(zero, (0,) * r, u) for u in self._simple_finite
        )
        self.identity = AffineElement(zero, (0,) * r, _freeze(identity(r)))
        self._leq_cache: dict[tuple[AffineElement, AffineElement], bool] = {}
        logger.debug("Iwahori-Weyl group of %s: rank %d, |Omega| = %d",
                     lat.group.label(), r, len(lat.components))

    @property
    def nodes(self) -> frozenset[int]:
        return frozenset(range(self.rank + 1))

    # ------------------------------------------------------------------
    # group law

    def mul(self, a: AffineElement, b: AffineElement) -> AffineElement:
        comp = self.lattice.pi1.add(a.component, b.component)
        weight = tuple(x + y for x, y in zip(a.weight, vec_mat(b.weight, a.finite)))
        return AffineElement(comp, weight, _freeze(mat_mul(b.finite, a.finite)))

    def product(self, elements: Iterable[AffineElement]) -> AffineElement:
        out = self.identity
        for e in elements:
            out = self.mul(out, e)
        return out

    def inverse(self, a: AffineElement) -> AffineElement:
        u_inv = self._finite_inverse(a.finite)
        weight = tuple(-x for x in vec_mat(a.weight, u_inv))
        return AffineElement(self.lattice.pi1.negate(a.component), weight, u_inv)

    def _finite_inverse(self, u: Matrix) -> Matrix:
        # W_0 is finite: u^{-1} is the last power before the identity
        power, prev = u, self.identity.finite
        while power != self.identity.finite:
            prev = power
            power = _freeze(mat_mul(power, u))
        return prev

    def translation(self, cls: CoinvariantClass) -> AffineElement:
        return AffineElement(cls.component, cls.weight, self.identity.finite)

    def translation_class(self, a: AffineElement) -> CoinvariantClass:
        return self.lattice.from_weight(a.weight, a.component)

    def word(self, indices: Sequence[int], omega: AffineElement | None = None) -> AffineElement:
        w = self.product(self.generators[i] for i in indices)
        return self.mul(w, omega) if omega is not None else w

    # ------------------------------------------------------------------
    # length and Omega

    def length(self, a: AffineElement) -> int:
        total = 0
        for k in self._positive:
            pair = dot(a.weight, k)
            moved = [sum(a.finite[i][j] * k[j] for j in range(self.rank)) for i in range(self.rank)]
            total += abs(pair) if all(x >= 0 for x in moved) else abs(pair + 1)
        return total

    @cached_property
    def finite_weyl_group(self) -> tuple[Matrix, ...]:
        seen = {self.identity.finite}
        frontier = [self.identity.finite]
        while frontier:
            nxt = []
            for u in frontier:
                for s in self._simple_finite:
                    v = _freeze(mat_mul(u, s))
                    if v not in seen:
                        seen.add(v)
                        nxt.append(v)
            frontier = nxt
        return tuple(sorted(seen))

    @cached_property
    def omega(self) -> tuple[AffineElement, ...]:
        """Length-zero elements, one per component, in component order."""
        out = []
        lat = self.lattice
        for comp in lat.components:
            found = None
            for la in weyl_orbit(minuscule_of_component(lat, comp)):
                for u in self.finite_weyl_group:
                    e = AffineElement(comp, la.weight, u)
                    if self.length(e) == 0:
                        found = e
                        break
                if found:
                    break
            if found is None:
                raise WrongType(f"no length-zero element in component {comp}")
            out.append(found)
        return tuple(out)

    def omega_index(self, a: AffineElement) -> int:
        return self.lattice.component_index(a.component)

    def omega_permutation(self, om: AffineElement) -> tuple[int, ...]:
        """Permutation of affine Dynkin nodes induced by conjugation with ``om``."""
        inv = self.inverse(om)
        perm = []
        for s in self.generators:
            conj = self.mul(self.mul(om, s), inv)
            perm.append(self.generators.index(conj))
        return tuple(perm)

    def stabilizes(self, om: AffineElement, facet: Iterable[int]) -> bool:
        nodes = frozenset(facet)
        perm = self.omega_permutation(om)
        return frozenset(perm[i] for i in nodes) == nodes

    # ------------------------------------------------------------------
    # words and Bruhat order

    def left_descent(self, a: AffineElement) -> int | None:
        la = self.length(a)
        for i, s in enumerate(self.generators):
            if self.length(self.mul(s, a)) < la:
                return i
        return None

    def right_descents(self, a: AffineElement) -> list[int]:
        la = self.length(a)
        return [i for i, s in enumerate(self.generators) if self.length(self.mul(a, s)) < la]

    def reduced_word(self, a: AffineElement) -> tuple[int, list[int]]:
        """(Omega index, word) with a = s_{w[0]} ... s_{w[-1]} * omega."""
        word = []
        while True:
            i = self.left_descent(a)
            if i is None:
                return self.omega_index(a), word
            word.append(i)
            a = self.mul(self.generators[i], a)

    def name(self, a: AffineElement) -> str:
        k, word = self.reduced_word(a)
        base = "".join(f"s{i}" for i in word) or "1"
        return f"{base}.omega{k}" if k else base

    def to_dict(self, a: AffineElement) -> dict:
        k, word = self.reduced_word(a)
        return {"omega": k, "word": word, "length": len(word)}

    def from_dict(self, data: dict) -> AffineElement:
        k = int(data.get("omega", 0))
        if not 0 <= k < len(self.omega):
            raise InvalidCoweight(f"omega index {k} out of range")
        return self.word([int(i) for i in data.get("word", [])], self.omega[k])

    def parse(self, text: str) -> AffineElement:
        """Read ``s0s1s0`` or ``s1s2.omega1``."""
        base, _, om = text.strip().partition(".omega")
        k = int(om) if om else 0
        indices = [] if base in ("", "1") else [int(x) for x in base.split("s")[1:]]
        if any(not 0 <= i <= self.rank for i in indices):
            raise InvalidCoweight(f"cannot read {text!r}")
        return self.from_dict({"omega": k, "word": indices})

    def bruhat_leq(self, v: AffineElement, w: AffineElement, length_cap: int = DEFAULT_LENGTH_CAP) -> bool:
        if self.length(w) > length_cap:
            raise LengthCap(f"length {self.length(w)} exceeds the cap {length_cap}")
        return self._leq(v, w)

    def _leq(self, v: AffineElement, w: AffineElement) -> bool:
        if v.component != w.component:
            return False
        key = (v, w)
        if key in self._leq_cache:
            return self._leq_cache[key]
        lv, lw = self.length(v), self.length(w)
        if lv > lw:
            result = False
        elif lw == 0:
            result = v == w
        else:
            s = self.generators[self.left_descent(w)]
            sw, sv = self.mul(s, w), self.mul(s, v)
            result = self._leq(sv, sw) if self.length(sv) < lv else self._leq(v, sw)
        self._leq_cache[key] = result
        return result

    # ------------------------------------------------------------------
    # parabolic subgroups

    def parabolic(self, nodes: Iterable[int]) -> list[AffineElement]:
        """Elements of the finite subgroup W_J generated by s_j, j in J."""
        gens = [self.generators[j] for j in sorted(set(nodes))]
        if len(gens) > self.rank:
            raise WrongType("W_J is infinite when J contains every affine node")
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for a in frontier:
                for s in gens:
                    b = self.mul(a, s)
                    if b not in seen:
                        seen.add(b)
                        nxt.append(b)
            frontier = nxt
        return sorted(seen, key=lambda e: (self.length(e), self.reduced_word(e)[1]))

    def double_coset_max(self, nodes: Iterable[int], a: AffineElement) -> AffineElement:
        """Longest element of W_J a W_J."""
        sub = self.parabolic(nodes)
        best = a
        for x in sub:
            xa = self.mul(x, a)
            for y in sub:
                e = self.mul(xa, y)
                if self.length(e) > self.length(best):
                    best = e
        return best

    def elements(self, component: Key, max_length: int) -> list[AffineElement]:
        """All elements of one component with length at most ``max_length``, by length."""
        start = self.omega[self.lattice.component_index(component)]
        layer = [start]
        out = [start]
        for ell in range(1, max_length + 1):
            nxt = {}
            for a in layer:
                for s in self.generators:
                    b = self.mul(s, a)
                    if b not in nxt and self.length(b) == ell:
                        nxt[b] = None
            layer = sorted(nxt, key=lambda e: self.reduced_word(e)[1])
            out.extend(layer)
        return out


def length(group: IwahoriWeylGroup, a: AffineElement) -> int:
    return group.length(a)


def bruhat_leq_affine(
    group: IwahoriWeylGroup,
    v: AffineElement,
    w: AffineElement,
    length_cap: int = DEFAULT_LENGTH_CAP,
) -> bool:
    return group.bruhat_leq(v, w, length_cap)


def double_coset_max(group: IwahoriWeylGroup, nodes: Iterable[int], mu: CoinvariantClass) -> AffineElement:
    """Longest element of W_x t_mu W_x for the vertex (or facet) with nodes J."""
    return group.double_coset_max(nodes, group.translation(mu))


def enumerate_elements(group: IwahoriWeylGroup, component: Key, max_length: int) -> list[AffineElement]:
    return group.elements(component, max_length)
