"""LM-triples: a group, a conjugacy class of cocharacters and a level."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from schubert_normality.coinvariants.group import GroupDatum
from schubert_normality.coinvariants.lattice import CoinvariantClass, coinvariants, project
from schubert_normality.config.schema import LMTripleSpec
from schubert_normality.exceptions import InvalidCoweight, NotDominant
from schubert_normality.levels.base import Level
from schubert_normality.levels.resolver import resolve_level
from schubert_normality.lattice.normalforms import Vector
from schubert_normality.rootdata.datum import is_dominant_abs, parse_coweight


@dataclass(frozen=True)
class LMTriple:
    """``group.char`` is the residue characteristic p; ``char_F`` is 0 or p.

    ``parts`` holds one dominant absolute coweight per embedding of a
    restriction of scalars, or a single coweight.
    """

    group: GroupDatum
    parts: tuple[Vector, ...]
    level: Level = Level.ABS_SPECIAL
    char_F: int = 0
    facet: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        p = self.group.char
        if not p:
            raise InvalidCoweight("an LM-triple needs a positive residue characteristic")
        if self.char_F not in (0, p):
            raise InvalidCoweight(f"char(F) must be 0 or {p}, not {self.char_F}")
        d = self.group.datum
        for part in self.parts:
            if len(part) != d.cochar_rank:
                raise InvalidCoweight(f"coweight {part} has the wrong length for {self.group.label()}")
            if not is_dominant_abs(d, part):
                raise NotDominant(f"{part} is not dominant")

    @property
    def residue_char(self) -> int:
        return self.group.char

    @property
    def mu_bar(self) -> CoinvariantClass:
        lat = coinvariants(self.group)
        return project(lat, list(self.parts)) if len(self.parts) > 1 else lat.class_of(self.parts[0])

    @classmethod
    def build(
        cls,
        group: GroupDatum,
        mu: Sequence[int] | Sequence[Sequence[int]] | str,
        level: str | Level = Level.ABS_SPECIAL,
        char_F: int = 0,
        facet: Iterable[int] = (),
    ) -> LMTriple:
        d = group.datum
        if isinstance(mu, str):
            parts = tuple(parse_coweight(d, chunk) for chunk in mu.split(";"))
        elif mu and not isinstance(mu[0], int):
            parts = tuple(parse_coweight(d, list(m)) for m in mu)
        else:
            parts = (parse_coweight(d, list(mu)),)
        return cls(group, parts, resolve_level(level), char_F, frozenset(facet))

    @classmethod
    def from_spec(cls, spec: LMTripleSpec) -> LMTriple:
        return cls.build(spec.group.to_datum(), spec.mu, spec.level, spec.char_F, spec.facet)
