"""The coinvariant lattice X_*(T)_I, échelonnage roots and coinvariant classes.

X_*(T)_I is X / (sigma - 1)X, computed once per group through a Smith
decomposition. A class is stored as its normal form (torsion residues, free
coordinates). Every class is determined by its component in pi_1(G)_I and
its weight, the vector of pairings with the simple échelonnage roots; the
dominance machinery works on that pair.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Any, Sequence

from schubert_normality.coinvariants.group import GroupDatum
from schubert_normality.exceptions import DimensionMismatch, InvalidCoweight, MixedGroups, TableMismatch
from schubert_normality.lattice.normalforms import (
    QuotientLattice,
    Vector,
    dot,
    rational_inverse,
    vec_mat,
)
from schubert_normality.rootdata.cartan import RootSystem, cartan_matrix

logger = logging.getLogger(__name__)

Key = tuple[Vector, Vector]


def weight_name(m: Sequence[int]) -> str:
    """Fundamental-coweight expression for a weight vector, e.g. ``w1+2w3``."""
    parts = []
    for i, k in enumerate(m):
        if k == 0:
            continue
        coef = "" if abs(k) == 1 else str(abs(k))
        sign = "-" if k < 0 else "+"
        parts.append(f"{sign}{coef}w{i + 1}")
    if not parts:
        return "0"
    out = "".join(parts)
    return out[1:] if out.startswith("+") else out


@dataclass(frozen=True)
class CoinvariantClass:
    torsion: Vector
    free: Vector
    lattice: CoinvariantLattice = field(compare=False, repr=False, hash=False)

    @property
    def key(self) -> Key:
        return self.torsion, self.free

    @cached_property
    def weight(self) -> Vector:
        """Pairings with the simple échelonnage roots."""
        return self.lattice.weight_of(self.key)

    @cached_property
    def component(self) -> Key:
        return self.lattice.component_of(self.key)

    @cached_property
    def height(self) -> int:
        """<2rho, class> for the absolute 2rho."""
        return dot(self.lift(), self.lattice.group.datum.two_rho)

    @property
    def name(self) -> str:
        name = weight_name(self.weight)
        if name == "0" and self.key != self.lattice.quotient.zero:
            return f"0[{self.lattice.component_index(self.component)}]"
        return name

    def lift(self) -> Vector:
        return self.lattice.quotient.lift(self.torsion, self.free)

    def is_dominant(self) -> bool:
        return all(x >= 0 for x in self.weight)

    def _check(self, other: CoinvariantClass) -> None:
        if self.lattice.group != other.lattice.group:
            raise MixedGroups(f"{self.lattice.group.label()} and {other.lattice.group.label()}")

    def __add__(self, other: CoinvariantClass) -> CoinvariantClass:
        self._check(other)
        return self.lattice.from_key(self.lattice.quotient.add(self.key, other.key))

    def __neg__(self) -> CoinvariantClass:
        return self.lattice.from_key(self.lattice.quotient.negate(self.key))

    def __sub__(self, other: CoinvariantClass) -> CoinvariantClass:
        self._check(other)
        return self + (-other)

    def scale(self, k: int) -> CoinvariantClass:
        return self.lattice.from_key(self.lattice.quotient.scale(k, self.key))

    def to_dict(self) -> dict[str, Any]:
        return {
            "free": list(self.free),
            "torsion": list(self.torsion),
            "component": self.lattice.component_index(self.component),
            "name": self.name,
        }

    def __str__(self):
        return self.name


class CoinvariantLattice:
    """X_*(T)_I of a group together with its échelonnage root system."""

    def __init__(self, group: GroupDatum):
        group.check_tame()
        self.group = group
        d = group.datum
        n = d.cochar_rank
        self.ambient_rank = n
        s = group.sigma_matrix
        self.relations = [tuple(s[i][j] - (1 if i == j else 0) for j in range(n)) for i in range(n)]
        self.quotient = QuotientLattice(n, self.relations)
        self.pi1 = QuotientLattice(n, self.relations + [tuple(r) for r in d.coroots])
        self.orbits = group.orbits
        self._build_echelonnage()
        logger.debug(
            "coinvariants of %s: torsion %s, free rank %d, pi1_I torsion %s free %d",
            group.label(), self.quotient.torsion_invariants, self.quotient.free_rank,
            self.pi1.torsion_invariants, self.pi1.free_rank,
        )

    def _build_echelonnage(self) -> None:
        d = self.group.datum
        coroot_vectors, simple_roots, scale = [], [], []
        for orbit in self.orbits:
            cv = d.coroots[orbit.representative]
            norm = [sum(d.roots[b][k] for b in orbit.indices) for k in range(self.ambient_rank)]
            p = dot(cv, norm)
            if p not in (1, 2):
                raise TableMismatch(f"orbit {orbit.indices} pairs to {p} with its representative coroot")
            c = 2 // p
            coroot_vectors.append(tuple(cv))
            simple_roots.append(tuple(c * x for x in norm))
            scale.append(c)
        self.coroot_vectors = tuple(coroot_vectors)
        self.simple_roots = tuple(simple_roots)
        self.scale = tuple(scale)
        r = len(self.orbits)
        self.cartan = tuple(tuple(dot(coroot_vectors[i], simple_roots[j]) for j in range(r)) for i in range(r))
        self.factor_of = tuple(o.factor for o in self.orbits)
        for j, st in enumerate(self.group.sigma_types):
            idx = self.sigma_indices(j)
            block = [[self.cartan[a][b] for b in idx] for a in idx]
            if block != cartan_matrix(st):
                raise TableMismatch(f"échelonnage Cartan matrix {block} is not of type {st}")
        self.root_system = RootSystem([list(row) for row in self.cartan])
        self._cartan_inverse = rational_inverse([list(row) for row in self.cartan])
        # height = sum_i m_i * h_i / c_i with h the absolute 2rho coefficient on the orbit
        h = d.root_system.two_rho
        self._height_coeffs = tuple(Fraction(h[o.representative], c) for o, c in zip(self.orbits, self.scale))

    @property
    def rank(self) -> int:
        """Rank of the échelonnage root system."""
        return len(self.orbits)

    def sigma_indices(self, factor: int) -> list[int]:
        return [i for i, f in enumerate(self.factor_of) if f == factor]

    # ------------------------------------------------------------------
    # classes

    def from_key(self, key: Key) -> CoinvariantClass:
        return CoinvariantClass(tuple(key[0]), tuple(key[1]), self)

    def class_of(self, x: Sequence[int]) -> CoinvariantClass:
        if len(x) != self.ambient_rank:
            raise DimensionMismatch(f"coweight has length {len(x)}, lattice has rank {self.ambient_rank}")
        return self.from_key(self.quotient.reduce(x))

    @cached_property
    def zero(self) -> CoinvariantClass:
        return self.from_key(self.quotient.zero)

    def weight_of(self, key: Key) -> Vector:
        x = self.quotient.lift(*key)
        return tuple(dot(x, a) for a in self.simple_roots)

    def component_of(self, key: Key) -> Key:
        return self.pi1.reduce(self.quotient.lift(*key))

    def height_of_weight(self, m: Sequence[int]) -> int:
        return int(sum(k * h for k, h in zip(m, self._height_coeffs)))

    def coroot_class(self, coeffs: Sequence[int]) -> CoinvariantClass:
        """Class of sum_i coeffs[i] * (simple échelonnage coroot i)."""
        x = [sum(coeffs[i] * self.coroot_vectors[i][k] for i in range(self.rank)) for k in range(self.ambient_rank)]
        return self.class_of(x)

    def coroot_weight(self, coeffs: Sequence[int]) -> Vector:
        return vec_mat(coeffs, self.cartan)

    def coroot_coefficients(self, dm: Sequence[int]) -> tuple[Fraction, ...]:
        """Rational c with c * cartan = dm."""
        r = self.rank
        return tuple(sum(Fraction(dm[i]) * self._cartan_inverse[i][j] for i in range(r)) for j in range(r))

    def from_weight(self, m: Sequence[int], component: Key | None = None) -> CoinvariantClass:
        """The class with the given weight in the given component."""
        if len(m) != self.rank:
            raise DimensionMismatch(f"weight has length {len(m)}, échelonnage rank is {self.rank}")
        if component is None:
            component = self.pi1.zero
        base = self.class_of(self.pi1.lift(*component))
        dm = [a - b for a, b in zip(m, base.weight)]
        c = self.coroot_coefficients(dm)
        if any(x.denominator != 1 for x in c):
            raise InvalidCoweight(f"no class of weight {weight_name(m)} in component {component}")
        return base + self.coroot_class([int(x) for x in c])

    def classes_of_weight(self, m: Sequence[int]) -> list[CoinvariantClass]:
        """Every class with weight ``m``, one per component that has one."""
        out = []
        for comp in self.components or (self.pi1.zero,):
            try:
                out.append(self.from_weight(m, comp))
            except InvalidCoweight:
                continue
        return out

    def class_of_weight(self, m: Sequence[int]) -> CoinvariantClass:
        found = self.classes_of_weight(m)
        if len(found) != 1:
            raise InvalidCoweight(f"{len(found)} classes have weight {weight_name(m)}")
        return found[0]

    # ------------------------------------------------------------------
    # components

    @cached_property
    def components(self) -> tuple[Key, ...] | None:
        """All elements of pi_1(G)_I in a fixed order, or None if it is infinite."""
        if not self.pi1.is_finite:
            return None
        return tuple(self.pi1.elements())

    def component_index(self, component: Key) -> int | list[int]:
        comps = self.components
        if comps is None:
            return list(component[0]) + list(component[1])
        return comps.index(component)

    def component_from_index(self, k: int) -> Key:
        comps = self.components
        if comps is None:
            raise InvalidCoweight("pi_1(G)_I is infinite; components cannot be numbered")
        if not 0 <= k < len(comps):
            raise InvalidCoweight(f"component {k} out of range 0..{len(comps) - 1}")
        return comps[k]


@lru_cache(maxsize=None)
def coinvariants(g: GroupDatum) -> CoinvariantLattice:
    """X_*(T)_I of a group; cached per group datum."""
    return CoinvariantLattice(g)


@dataclass(frozen=True)
class EchelonnageSystem:
    types: tuple
    simple_roots: tuple[Vector, ...]
    simple_coroots: tuple[CoinvariantClass, ...]
    scale: tuple[int, ...]
    cartan: tuple[Vector, ...]
    root_system: RootSystem


def echelonnage_roots(lat: CoinvariantLattice) -> EchelonnageSystem:
    """Simple échelonnage roots a_i = c_i N(O_i), coroots and the full system."""
    return EchelonnageSystem(
        types=lat.group.sigma_types,
        simple_roots=lat.simple_roots,
        simple_coroots=tuple(lat.class_of(v) for v in lat.coroot_vectors),
        scale=lat.scale,
        cartan=lat.cartan,
        root_system=lat.root_system,
    )


def project(lat: CoinvariantLattice, mu: Sequence[int] | Sequence[Sequence[int]]) -> CoinvariantClass:
    """Image in X_*(T)_I; a tuple of coweights (one per embedding) is summed."""
    if mu and not isinstance(mu[0], int):
        total = lat.zero
        for part in mu:
            total = total + lat.class_of(part)
        return total
    return lat.class_of(mu)


def norm_map(lat: CoinvariantLattice, cls: CoinvariantClass) -> Vector:
    """N_I(class) = sum over k < e of sigma^k(lift), an invariant coweight."""
    s = lat.group.sigma_matrix
    x = cls.lift()
    total = list(x)
    for _ in range(lat.group.twist_exponent - 1):
        x = vec_mat(x, s)
        total = [a + b for a, b in zip(total, x)]
    return tuple(total)


@dataclass(frozen=True)
class Pi1Coinvariants:
    lattice: CoinvariantLattice

    @property
    def torsion_invariants(self) -> tuple[int, ...]:
        return self.lattice.pi1.torsion_invariants

    @property
    def free_rank(self) -> int:
        return self.lattice.pi1.free_rank

    @property
    def order(self) -> int | None:
        return self.lattice.pi1.order

    def elements(self) -> tuple[Key, ...]:
        comps = self.lattice.components
        if comps is None:
            raise InvalidCoweight("pi_1(G)_I has a free part")
        return comps

    def component_of(self, cls: CoinvariantClass) -> Key:
        return cls.component


def pi1_coinvariants(g: GroupDatum) -> Pi1Coinvariants:
    """pi_1(G)_I = X_*(T)_I / (image of the coroot lattice)."""
    return Pi1Coinvariants(coinvariants(g))


def adjoint_image(lat: CoinvariantLattice, cls: CoinvariantClass) -> CoinvariantClass:
    """Image in the coinvariants of the adjoint group."""
    ad = coinvariants(lat.group.adjoint())
    d = lat.group.datum
    x = cls.lift()
    omega = [dot(x, a) for a in d.roots]
    return ad.class_of(omega)


def realized_components(lat: CoinvariantLattice) -> set[Key]:
    """Components of the adjoint pi_1(G^ad)_I hit by the lattice of ``lat``."""
    ad = coinvariants(lat.group.adjoint())
    n = lat.ambient_rank
    gens = []
    for k in range(n):
        e = [0] * n
        e[k] = 1
        gens.append(adjoint_image(lat, lat.class_of(e)).component)
    reached = {ad.pi1.zero}
    frontier = list(reached)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = ad.pi1.add(a, g)
                if b not in reached:
                    reached.add(b)
                    nxt.append(b)
        frontier = nxt
    return reached
