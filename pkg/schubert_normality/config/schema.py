"""Pydantic schema for group specs, LM-triples and enumeration caps.

Files, presets and CLI flags all converge on these models. A ``GroupSpec``
turns into the immutable ``GroupDatum`` the engine computes with.
"""

from __future__ import annotations

import os
from enum import Enum
from typing import Optional, Union

from pydantic import BaseModel, Field, model_validator
from sympy import isprime

from schubert_normality.coinvariants.group import GroupDatum, TwistedFactor
from schubert_normality.rootdata.cartan import SimpleType
from schubert_normality.rootdata.datum import IsogenyLattice

CAP_ENV_VAR = "SCHUBERT_CAP"


class AbsType(str, Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"
    F = "F"
    G = "G"


class LatticeBasis(BaseModel):
    basis: list[list[int]] = Field(..., description="Rows in fundamental-coweight coordinates")


class FactorSpec(BaseModel):
    abs_type: AbsType = Field(..., description="Dynkin letter of the absolute root system")
    rank: int = Field(..., ge=1, description="Rank of the absolute root system")
    twist_order: int = Field(default=1, description="Order of the diagram automorphism (1, 2 or 3)")
    lattice: Union[str, LatticeBasis] = Field(default="ad", description="Named isogeny lattice or explicit basis")
    central_rank: int = Field(default=0, ge=0, description="Rank of the central torus")
    restriction_degree: int = Field(default=1, ge=1, description="Degree of the restriction of scalars")

    @model_validator(mode="after")
    def _check_twist(self) -> FactorSpec:
        if self.twist_order not in (1, 2, 3):
            raise ValueError(f"twist_order must be 1, 2 or 3, not {self.twist_order}")
        return self

    def to_factor(self) -> TwistedFactor:
        if isinstance(self.lattice, LatticeBasis):
            lat = IsogenyLattice(basis=tuple(tuple(r) for r in self.lattice.basis))
        else:
            lat = IsogenyLattice(self.lattice)
        return TwistedFactor(
            SimpleType(self.abs_type.value, self.rank),
            lat,
            self.twist_order,
            self.central_rank,
            self.restriction_degree,
        )


class GroupSpec(BaseModel):
    name: str = Field(default="", description="Display name")
    char: int = Field(default=0, ge=0, description="Characteristic of the residue field: 0 or a prime")
    factors: list[FactorSpec] = Field(..., min_length=1)
    basis: Optional[list[list[int]]] = Field(
        default=None,
        description="Shared lattice for the semisimple part, in concatenated fundamental-coweight coordinates",
    )

    @model_validator(mode="after")
    def _check_char(self) -> GroupSpec:
        if self.char and not isprime(self.char):
            raise ValueError(f"char must be 0 or a prime, not {self.char}")
        return self

    def to_datum(self) -> GroupDatum:
        basis = tuple(tuple(r) for r in self.basis) if self.basis is not None else None
        return GroupDatum(tuple(f.to_factor() for f in self.factors), self.char, basis, name=self.name)

    @classmethod
    def from_datum(cls, g: GroupDatum) -> GroupSpec:
        factors = []
        for f in g.factors:
            lat: Union[str, LatticeBasis]
            if f.lattice.basis is not None:
                lat = LatticeBasis(basis=[list(r) for r in f.lattice.basis])
            else:
                lat = f.lattice.name
            factors.append(FactorSpec(
                abs_type=AbsType(f.simple_type.letter),
                rank=f.simple_type.rank,
                twist_order=f.twist_order,
                lattice=lat,
                central_rank=f.central_rank,
                restriction_degree=f.restriction_degree,
            ))
        basis = [list(r) for r in g.basis] if g.basis is not None else None
        return cls(name=g.name, char=g.char, factors=factors, basis=basis)


class LMTripleSpec(BaseModel):
    group: GroupSpec
    mu: Union[str, list[int], list[list[int]]] = Field(..., description="Dominant absolute coweight, or one per embedding")
    level: str = Field(default="abs-special", description="abs-special, special, iwahori or facet")
    facet: list[int] = Field(default_factory=list, description="Affine Dynkin nodes fixing the facet")
    char_F: int = Field(default=0, ge=0, description="Characteristic of the generic fiber")
    residue_char: Optional[int] = Field(default=None, description="Residue characteristic; defaults to group.char")

    @model_validator(mode="after")
    def _check_chars(self) -> LMTripleSpec:
        p = self.residue_char if self.residue_char is not None else self.group.char
        if self.residue_char is not None and self.group.char not in (0, self.residue_char):
            raise ValueError("residue_char disagrees with group.char")
        if not p:
            raise ValueError("an LM-triple needs a positive residue characteristic")
        if self.char_F not in (0, p):
            raise ValueError(f"char_F must be 0 or {p}, not {self.char_F}")
        self.residue_char = p
        self.group = self.group.model_copy(update={"char": p})
        return self


class Caps(BaseModel):
    height: int = Field(default=40, ge=0, description="Height cap for Hasse segments")
    nodes: int = Field(default=20000, ge=1, description="Node cap for exhaustive enumerations")
    length: int = Field(default=14, ge=0, description="Length cap for affine Bruhat queries")
    rank: int = Field(default=3, ge=1, description="Rank cap for affine Weyl groups")

    @classmethod
    def resolve(cls, cap: int | None = None) -> Caps:
        """Defaults, then SCHUBERT_CAP, then an explicit ``cap``; the last two set height and length."""
        caps = cls()
        env = os.environ.get(CAP_ENV_VAR)
        if env:
            try:
                value = int(env)
            except ValueError as exc:
                raise ValueError(f"{CAP_ENV_VAR} must be an integer, got {env!r}") from exc
            caps = caps.model_copy(update={"height": value, "length": value})
        if cap is not None:
            caps = caps.model_copy(update={"height": cap, "length": cap})
        return caps
