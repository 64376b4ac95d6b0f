"""Tamely twisted factors and group data.

A group is a product of restrictions of scalars of absolutely almost simple
factors, each split over a tamely ramified extension. A restriction of
scalars factor is stored once: its coinvariants collapse to one copy of the
factor's coinvariants, and tuples of coweights are summed by ``project``.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import cached_property
from math import lcm

from schubert_normality.coinvariants.twist import check_twist, diagram_automorphism, orbits, sigma_type
from schubert_normality.exceptions import InvalidLattice, WildRamification
from schubert_normality.lattice.normalforms import IntMatrix, identity, integral_or_none, rational_inverse
from schubert_normality.rootdata.cartan import SimpleType
from schubert_normality.rootdata.datum import IsogenyLattice, RootDatumAbs, build_root_datum, product_datum


@dataclass(frozen=True)
class TwistedFactor:
    simple_type: SimpleType
    lattice: IsogenyLattice = IsogenyLattice("ad")
    twist_order: int = 1
    central_rank: int = 0
    restriction_degree: int = 1

    def __post_init__(self):
        check_twist(self.simple_type, self.twist_order)
        if self.restriction_degree < 1:
            raise InvalidLattice("restriction degree must be at least 1")

    @cached_property
    def datum(self) -> RootDatumAbs:
        return build_root_datum(self.simple_type, self.lattice, self.central_rank)

    @property
    def permutation(self) -> tuple[int, ...]:
        return diagram_automorphism(self.simple_type, self.twist_order)

    @property
    def sigma_type(self) -> SimpleType:
        return sigma_type(self.simple_type, self.twist_order)

    def label(self) -> str:
        twist = f"^{self.twist_order}" if self.twist_order > 1 else ""
        res = f" x{self.restriction_degree}" if self.restriction_degree > 1 else ""
        return f"{self.simple_type}{twist}[{self.lattice}]{res}"


@dataclass(frozen=True)
class Orbit:
    """A sigma_0-orbit of absolute simple indices, in global numbering."""

    factor: int
    indices: tuple[int, ...]

    @property
    def representative(self) -> int:
        return self.indices[0]


def _conjugated_permutation(basis: IntMatrix, perm: tuple[int, ...]) -> IntMatrix | None:
    r = len(basis)
    p = [[1 if perm[i] == j else 0 for j in range(r)] for i in range(r)]
    b_inv = rational_inverse(basis)
    bp = [[sum(basis[i][k] * p[k][j] for k in range(r)) for j in range(r)] for i in range(r)]
    return integral_or_none(
        [[sum(Fraction(bp[i][k]) * b_inv[k][j] for k in range(r)) for j in range(r)] for i in range(r)]
    )


def _place(out: IntMatrix, block: IntMatrix, offset: int) -> None:
    for i, row in enumerate(block):
        for j, x in enumerate(row):
            out[offset + i][offset + j] = x


def _factor_sigma(d: RootDatumAbs, perm: tuple[int, ...]) -> IntMatrix:
    n = d.cochar_rank
    out = identity(n)
    if all(perm[i] == i for i in range(len(perm))):
        return out
    if d.basis is None:
        # gl: x -> -rev(x) on the first n+1 coordinates
        m = d.rank + 1
        for k in range(m):
            out[k][k] = 0
        for k in range(m):
            out[k][m - 1 - k] = -1
        return out
    block = _conjugated_permutation([list(r) for r in d.basis], perm)
    if block is None:
        raise InvalidLattice(f"the {d.lattice} lattice of {d.types[0]} is not stable under the twist")
    _place(out, block, 0)
    return out


@dataclass(frozen=True)
class GroupDatum:
    """A reductive group presented by its twisted factors and a characteristic.

    ``basis`` optionally replaces the factor lattices by one lattice for the
    whole semisimple part, in concatenated fundamental-coweight coordinates.
    """

    factors: tuple[TwistedFactor, ...]
    char: int = 0
    basis: tuple[tuple[int, ...], ...] | None = None
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if self.basis is not None:
            object.__setattr__(self, "basis", tuple(tuple(int(x) for x in row) for row in self.basis))

    @cached_property
    def datum(self) -> RootDatumAbs:
        return product_datum([f.datum for f in self.factors], self.basis)

    @property
    def rank(self) -> int:
        return self.datum.rank

    @cached_property
    def factor_offsets(self) -> tuple[int, ...]:
        """Global index of the first absolute simple root of each factor."""
        out, k = [], 0
        for f in self.factors:
            out.append(k)
            k += f.simple_type.rank
        return tuple(out)

    @cached_property
    def permutation(self) -> tuple[int, ...]:
        perm = []
        for f, off in zip(self.factors, self.factor_offsets):
            perm.extend(off + i for i in f.permutation)
        return tuple(perm)

    @cached_property
    def orbits(self) -> tuple[Orbit, ...]:
        out = []
        for j, (f, off) in enumerate(zip(self.factors, self.factor_offsets)):
            for o in orbits(f.simple_type, f.twist_order):
                out.append(Orbit(j, tuple(off + i for i in o)))
        return tuple(out)

    @property
    def sigma_types(self) -> tuple[SimpleType, ...]:
        return tuple(f.sigma_type for f in self.factors)

    @cached_property
    def sigma_matrix(self) -> tuple[tuple[int, ...], ...]:
        """Action of the twist on X, on row vectors."""
        d = self.datum
        if self.basis is not None:
            out = identity(d.cochar_rank)
            block = _conjugated_permutation([list(r) for r in d.basis], self.permutation)
            if block is None:
                raise InvalidLattice("the shared lattice is not stable under the twist")
            _place(out, block, 0)
            return tuple(tuple(r) for r in out)
        out = identity(d.cochar_rank)
        offset = 0
        for f in self.factors:
            block = _factor_sigma(f.datum, f.permutation)
            _place(out, block, offset)
            offset += f.datum.cochar_rank
        return tuple(tuple(r) for r in out)

    @property
    def twist_exponent(self) -> int:
        return lcm(*(f.twist_order for f in self.factors))

    def check_tame(self) -> None:
        p = self.char
        for f in self.factors:
            if p and f.twist_order % p == 0:
                raise WildRamification(f"characteristic {p} divides the twist order of {f.label()}")

    def adjoint(self) -> GroupDatum:
        """Adjoint group with the same twisted factors."""
        factors = tuple(
            replace(f, lattice=IsogenyLattice("ad"), central_rank=0, restriction_degree=f.restriction_degree)
            for f in self.factors
        )
        return GroupDatum(factors, self.char, None, name=f"{self.name}^ad" if self.name else "")

    def with_char(self, p: int) -> GroupDatum:
        return GroupDatum(self.factors, p, self.basis, name=self.name)

    def factor_group(self, j: int) -> GroupDatum:
        """The j-th factor alone; only meaningful without a shared basis."""
        return GroupDatum((self.factors[j],), self.char, None, name=self.factors[j].label())

    def label(self) -> str:
        if self.name:
            return self.name
        return " x ".join(f.label() for f in self.factors)
