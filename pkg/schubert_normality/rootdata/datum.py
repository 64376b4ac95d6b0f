"""Absolute root data: isogeny lattices, pairings and coweight input.

A cocharacter lattice X is stored in its own integer coordinates y in Z^N.
For lattices given by a basis B (rows in fundamental-coweight coordinates,
Z Phi^vee <= span(B) <= P^vee) a vector y sits in P^vee as y * B, so the
simple coroots are the rows of C * B^-1 and the simple roots are the columns
of B. Central directions are appended as extra coordinates on which every
root vanishes.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import prod
from typing import Sequence

from schubert_normality.exceptions import DimensionMismatch, InvalidCoweight, InvalidLattice, NotComparable
from schubert_normality.lattice.normalforms import (
    IntMatrix,
    QuotientLattice,
    Vector,
    dot,
    identity,
    integral_or_none,
    matrix_rank,
    rational_inverse,
    row_basis,
    transpose,
)
from schubert_normality.rootdata.cartan import RootSystem, SimpleType, block_diagonal, cartan_matrix

logger = logging.getLogger(__name__)

NAMED_LATTICES = ("sc", "ad", "SO", "half_spin", "half_spin_prime", "gl")

_SYNONYMS = {
    "simply_connected": "sc",
    "adjoint": "ad",
    "so": "SO",
    "halfspin": "half_spin",
    "half-spin": "half_spin",
}


@dataclass(frozen=True)
class IsogenyLattice:
    """A named lattice or an explicit basis in fundamental-coweight coordinates."""

    name: str = "ad"
    basis: tuple[Vector, ...] | None = None

    def __post_init__(self):
        if self.basis is not None:
            object.__setattr__(self, "name", "basis")
            object.__setattr__(self, "basis", tuple(tuple(int(x) for x in row) for row in self.basis))
            return
        name = _SYNONYMS.get(self.name, self.name)
        if name not in NAMED_LATTICES:
            raise InvalidLattice(f"unknown lattice {self.name!r}")
        object.__setattr__(self, "name", name)

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class RootDatumAbs:
    """Absolute root datum in lattice coordinates.

    ``coroots`` and ``roots`` are r x N integer matrices (one row per simple
    index); ``basis`` is the r x r matrix B when the semisimple part is given
    by a basis, and None for gl-type blocks.
    """

    types: tuple[SimpleType, ...]
    cartan: tuple[Vector, ...]
    coroots: tuple[Vector, ...]
    roots: tuple[Vector, ...]
    central_rank: int
    lattice: str
    basis: tuple[Vector, ...] | None
    coweights: tuple[tuple[Fraction, ...], ...]

    @property
    def rank(self) -> int:
        """Number of simple roots."""
        return len(self.cartan)

    @property
    def cochar_rank(self) -> int:
        return len(self.coroots[0])

    @cached_property
    def root_system(self) -> RootSystem:
        return RootSystem([list(r) for r in self.cartan])

    @cached_property
    def two_rho(self) -> Vector:
        """Sum of the positive roots as a covector on X."""
        h = self.root_system.two_rho
        n = self.cochar_rank
        return tuple(sum(h[j] * self.roots[j][k] for j in range(self.rank)) for k in range(n))

    @cached_property
    def index_over_coroots(self) -> int:
        """Order of the torsion of X / Z Phi^vee."""
        return prod(QuotientLattice(self.cochar_rank, self.coroots).torsion_invariants)


def lattice_basis(t: SimpleType, lat: IsogenyLattice) -> IntMatrix:
    """Basis rows of the lattice in fundamental-coweight coordinates."""
    c = cartan_matrix(t)
    n = t.rank
    if lat.name == "sc":
        return [list(r) for r in c]
    if lat.name == "ad":
        return identity(n)
    if lat.name in ("SO", "half_spin", "half_spin_prime"):
        if t.letter != "D":
            raise InvalidLattice(f"lattice {lat.name} only exists in type D, not {t}")
        if lat.name != "SO" and n % 2:
            raise InvalidLattice(f"half-spin lattices need D_n with n even, got {t}")
        extra = {"SO": 0, "half_spin": n - 1, "half_spin_prime": n - 2}[lat.name]
        gen = [0] * n
        gen[extra] = 1
        return row_basis([list(r) for r in c] + [gen], n)
    if lat.name == "basis":
        rows = [list(r) for r in lat.basis]
        if any(len(r) != n for r in rows):
            raise InvalidLattice(f"basis rows must have length {n} for {t}")
        return rows
    raise InvalidLattice(f"lattice {lat.name} has no basis description")


def _datum_from_basis(
    types: tuple[SimpleType, ...],
    cartan: IntMatrix,
    basis: IntMatrix,
    central_rank: int,
    label: str,
) -> RootDatumAbs:
    r = len(cartan)
    if len(basis) != r or matrix_rank(basis, r) != r:
        raise InvalidLattice(f"lattice basis must be {r} independent rows")
    b_inv = rational_inverse(basis)
    coroot_rows = integral_or_none(
        [[sum(Fraction(cartan[i][k]) * b_inv[k][j] for k in range(r)) for j in range(r)] for i in range(r)]
    )
    if coroot_rows is None:
        raise InvalidLattice(f"lattice {label} does not contain the coroot lattice")
    pad = [0] * central_rank
    coroots = tuple(tuple(row + pad) for row in coroot_rows)
    roots = tuple(tuple(col + pad) for col in transpose(basis))
    zero = [Fraction(0)] * central_rank
    coweights = tuple(tuple(list(row) + zero) for row in b_inv)
    return RootDatumAbs(
        types=types,
        cartan=tuple(tuple(r_) for r_ in cartan),
        coroots=coroots,
        roots=roots,
        central_rank=central_rank,
        lattice=label,
        basis=tuple(tuple(r_) for r_ in basis),
        coweights=coweights,
    )


def _gl_datum(t: SimpleType, central_rank: int) -> RootDatumAbs:
    if t.letter != "A":
        raise InvalidLattice(f"lattice gl only exists in type A, not {t}")
    n = t.rank
    big = n + 1 + central_rank
    rows = []
    for i in range(n):
        v = [0] * big
        v[i], v[i + 1] = 1, -1
        rows.append(tuple(v))
    coweights = tuple(
        tuple(Fraction(1 if k <= i else 0) for k in range(n + 1)) + (Fraction(0),) * central_rank
        for i in range(n)
    )
    return RootDatumAbs(
        types=(t,),
        cartan=tuple(tuple(r) for r in cartan_matrix(t)),
        coroots=tuple(rows),
        roots=tuple(rows),
        central_rank=central_rank + 1,
        lattice="gl",
        basis=None,
        coweights=coweights,
    )


def build_root_datum(t: SimpleType, lat: IsogenyLattice, central_rank: int = 0) -> RootDatumAbs:
    """Root datum of the group of type ``t`` with cocharacter lattice ``lat``."""
    if central_rank < 0:
        raise InvalidLattice("central rank must be nonnegative")
    if lat.name == "gl":
        return _gl_datum(t, central_rank)
    basis = lattice_basis(t, lat)
    d = _datum_from_basis((t,), cartan_matrix(t), basis, central_rank, lat.name)
    logger.debug("built %s datum %s: [X : Q^vee] = %d", t, lat.name, d.index_over_coroots)
    return d


def product_datum(data: Sequence[RootDatumAbs], basis: Sequence[Sequence[int]] | None = None) -> RootDatumAbs:
    """Direct product of root data, or the product types with a shared lattice.

    With ``basis`` the semisimple coordinates of all factors are replaced by
    one lattice given in the concatenated fundamental-coweight coordinates;
    central coordinates of the factors are kept, after the semisimple block.
    """
    types = tuple(t for d in data for t in d.types)
    cartan = block_diagonal([[list(r) for r in d.cartan] for d in data])
    if basis is not None:
        if any(d.basis is None for d in data):
            raise InvalidLattice("a shared lattice basis cannot be combined with gl factors")
        central = sum(d.central_rank for d in data)
        return _datum_from_basis(types, cartan, [list(r) for r in basis], central, "basis")
    if len(data) == 1:
        return data[0]
    total = sum(d.cochar_rank for d in data)
    coroots, roots, coweights = [], [], []
    offset = 0
    for d in data:
        n = d.cochar_rank
        for row in d.coroots:
            coroots.append((0,) * offset + tuple(row) + (0,) * (total - offset - n))
        for row in d.roots:
            roots.append((0,) * offset + tuple(row) + (0,) * (total - offset - n))
        for row in d.coweights:
            coweights.append((Fraction(0),) * offset + tuple(row) + (Fraction(0),) * (total - offset - n))
        offset += n
    return RootDatumAbs(
        types=types,
        cartan=tuple(tuple(r) for r in cartan),
        coroots=tuple(coroots),
        roots=tuple(roots),
        central_rank=sum(d.central_rank for d in data),
        lattice="x".join(d.lattice for d in data),
        basis=None,
        coweights=tuple(coweights),
    )


def pairing(mu: Sequence[int], chi: Sequence[int]) -> int:
    """Natural pairing between a coweight vector and a character covector."""
    if len(mu) != len(chi):
        raise DimensionMismatch(f"coweight has length {len(mu)}, character has length {len(chi)}")
    return dot(mu, chi)


def omega_coords(d: RootDatumAbs, mu: Sequence[int]) -> Vector:
    """Pairings of ``mu`` with the simple roots."""
    return tuple(pairing(mu, a) for a in d.roots)


@dataclass(frozen=True)
class FundamentalCoweight:
    index: int
    coords: tuple[Fraction, ...]
    in_lattice: bool

    def as_vector(self) -> Vector:
        if not self.in_lattice:
            raise InvalidCoweight(f"w{self.index} is not a cocharacter of this lattice")
        return tuple(int(x) for x in self.coords)


def fundamental_coweights(d: RootDatumAbs) -> list[FundamentalCoweight]:
    """omega_i^vee in lattice coordinates, flagged when outside X."""
    return [
        FundamentalCoweight(i + 1, row, all(x.denominator == 1 for x in row))
        for i, row in enumerate(d.coweights)
    ]


def coroot_coefficients(d: RootDatumAbs, la: Sequence[int], mu: Sequence[int]) -> tuple[int, ...] | None:
    """Integer c with mu - la = sum c_i alpha_i^vee, or None if no such c."""
    diff = [m - l for m, l in zip(mu, la)]
    w = omega_coords(d, diff)
    c_inv = rational_inverse([list(r) for r in d.cartan])
    coeffs = [sum(Fraction(w[i]) * c_inv[i][j] for i in range(d.rank)) for j in range(d.rank)]
    if any(x.denominator != 1 for x in coeffs):
        return None
    ints = tuple(int(x) for x in coeffs)
    rebuilt = [sum(ints[i] * d.coroots[i][k] for i in range(d.rank)) for k in range(d.cochar_rank)]
    if rebuilt != diff:
        return None
    return ints


def abs_leq(d: RootDatumAbs, la: Sequence[int], mu: Sequence[int]) -> bool:
    """Absolute dominance order: mu - la is a nonnegative sum of simple coroots."""
    c = coroot_coefficients(d, la, mu)
    return c is not None and all(x >= 0 for x in c)


def is_dominant_abs(d: RootDatumAbs, mu: Sequence[int]) -> bool:
    return all(x >= 0 for x in omega_coords(d, mu))


def schubert_dimension(d: RootDatumAbs, la: Sequence[int], mu: Sequence[int]) -> int:
    """<2rho, mu - la>, the dimension of the open cell of Gr_{<= mu} over la."""
    if len(la) != d.cochar_rank or len(mu) != d.cochar_rank:
        raise DimensionMismatch(f"coweights must have length {d.cochar_rank}")
    if not abs_leq(d, la, mu):
        raise NotComparable(f"{tuple(la)} is not below {tuple(mu)}")
    return pairing([m - l for m, l in zip(mu, la)], d.two_rho)


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*([wc])(\d+)")


def parse_coweight(d: RootDatumAbs, text: str | Sequence[int]) -> Vector:
    """Read a coweight.

    Accepted forms: a sequence or comma list of integers in lattice
    coordinates; for a single type A_n factor without centre, n+1 integers in
    epsilon coordinates; or a sum of terms ``k*wi`` over fundamental coweights
    and ``k*ci`` over central coordinates, e.g. ``w1+2*w3``.
    """
    if not isinstance(text, str):
        return _from_vector(d, [int(x) for x in text])
    s = text.replace(" ", "")
    if not s or s == "0":
        return (0,) * d.cochar_rank
    if "w" not in s and "c" not in s:
        try:
            return _from_vector(d, [int(x) for x in s.split(",") if x != ""])
        except ValueError as exc:
            raise InvalidCoweight(f"cannot read coweight {text!r}") from exc
    pos = 0
    total = [Fraction(0)] * d.cochar_rank
    coweights = d.coweights
    semisimple = d.rank
    for m in _TERM.finditer(s):
        if m.start() != pos:
            raise InvalidCoweight(f"cannot read coweight {text!r} near {s[pos:]!r}")
        pos = m.end()
        k = int(m.group(2) or "1") * (-1 if m.group(1) == "-" else 1)
        idx = int(m.group(4))
        if m.group(3) == "w":
            if not 1 <= idx <= semisimple:
                raise InvalidCoweight(f"w{idx} out of range 1..{semisimple}")
            row = coweights[idx - 1]
        else:
            if not 1 <= idx <= d.central_rank:
                raise InvalidCoweight(f"c{idx} out of range 1..{d.central_rank}")
            row = [Fraction(0)] * d.cochar_rank
            row[d.cochar_rank - d.central_rank + idx - 1] = Fraction(1)
        total = [a + k * b for a, b in zip(total, row)]
    if pos != len(s):
        raise InvalidCoweight(f"cannot read coweight {text!r} near {s[pos:]!r}")
    if any(x.denominator != 1 for x in total):
        raise InvalidCoweight(f"{text} is not a cocharacter of the {d.lattice} lattice")
    return tuple(int(x) for x in total)


def _from_vector(d: RootDatumAbs, v: list[int]) -> Vector:
    if len(v) == d.cochar_rank:
        return tuple(v)
    if len(d.types) == 1 and d.types[0].letter == "A" and d.central_rank == 0 and len(v) == d.rank + 1:
        return from_epsilon(d, v)
    raise DimensionMismatch(f"coweight has length {len(v)}, lattice has rank {d.cochar_rank}")


def from_epsilon(d: RootDatumAbs, eps: Sequence[int]) -> Vector:
    """Type A epsilon coordinates (mod (1,...,1)) to lattice coordinates."""
    w = [eps[i] - eps[i + 1] for i in range(len(eps) - 1)]
    b_inv = rational_inverse([list(r) for r in d.basis])
    y = [sum(Fraction(w[i]) * b_inv[i][j] for i in range(d.rank)) for j in range(d.rank)]
    if any(x.denominator != 1 for x in y):
        raise InvalidCoweight(f"{tuple(eps)} is not a cocharacter of the {d.lattice} lattice")
    return tuple(int(x) for x in y)
