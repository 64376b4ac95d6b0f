"""Exact integer normal forms and finitely generated quotient lattices.

All lattices are row-vector lattices: a vector x in Z^n is a tuple of ints,
a matrix is a list of rows, and x acts on a matrix from the left (x * M).
Smith decompositions come from sympy; everything downstream works on plain
Python ints.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product
from math import prod
from typing import Iterator, Sequence

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_decomp

logger = logging.getLogger(__name__)

Vector = tuple[int, ...]
IntMatrix = list[list[int]]


def vec_mat(v: Sequence[int], m: Sequence[Sequence[int]]) -> Vector:
    """Row vector times matrix."""
    if not m:
        return ()
    cols = len(m[0])
    return tuple(sum(v[i] * m[i][j] for i in range(len(v))) for j in range(cols))


def mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> IntMatrix:
    return [list(vec_mat(row, b)) for row in a]


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(u, v))


def identity(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(m: Sequence[Sequence[int]], ncols: int | None = None) -> IntMatrix:
    if not m:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*m)]


def to_matrix(rows: Sequence[Sequence[int]], ncols: int) -> Matrix:
    if not rows:
        return Matrix.zeros(0, ncols)
    return Matrix([list(r) for r in rows])


def _to_int_rows(m: Matrix) -> IntMatrix:
    return [[int(m[i, j]) for j in range(m.cols)] for i in range(m.rows)]


def rational_inverse(m: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    """Exact inverse of a square integer matrix over Q."""
    inv = Matrix([list(r) for r in m]).inv()
    return [[Fraction(int(inv[i, j].p), int(inv[i, j].q)) for j in range(inv.cols)] for i in range(inv.rows)]


def integral_or_none(m: Sequence[Sequence[Fraction]]) -> IntMatrix | None:
    """Return m as an int matrix, or None if some entry is not an integer."""
    out: IntMatrix = []
    for row in m:
        if any(x.denominator != 1 for x in row):
            return None
        out.append([int(x) for x in row])
    return out


@dataclass(frozen=True)
class SmithDecomposition:
    """D = S * M * T with S, T unimodular; ``diagonal`` holds |D_ii|."""

    diagonal: tuple[int, ...]
    s: IntMatrix
    t: IntMatrix
    t_inverse: IntMatrix


def smith_decomposition(rows: Sequence[Sequence[int]], ncols: int) -> SmithDecomposition:
    if not rows or all(all(x == 0 for x in r) for r in rows):
        n = len(rows)
        return SmithDecomposition((0,) * min(n, ncols), identity(n), identity(ncols), identity(ncols))
    d, s, t = smith_normal_decomp(to_matrix(rows, ncols), domain=ZZ)
    diagonal = tuple(abs(int(d[i, i])) for i in range(min(d.rows, d.cols)))
    t_inv = t.inv()
    return SmithDecomposition(diagonal, _to_int_rows(s), _to_int_rows(t), _to_int_rows(t_inv))


def invariant_factors(rows: Sequence[Sequence[int]], ncols: int) -> list[int]:
    """Nonzero elementary divisors of the row module, in Smith order."""
    return [d for d in smith_decomposition(rows, ncols).diagonal if d != 0]


def matrix_rank(rows: Sequence[Sequence[int]], ncols: int) -> int:
    return len(invariant_factors(rows, ncols))


def saturation_index(rows: Sequence[Sequence[int]], ncols: int) -> int:
    """Index of the row span in its saturation inside Z^ncols."""
    return prod(invariant_factors(rows, ncols))


def row_basis(rows: Sequence[Sequence[int]], ncols: int) -> IntMatrix:
    """A basis of the Z-span of ``rows``.

    From S M T = D we get M = S^-1 D T^-1, so the span of M is spanned by
    d_i times row i of T^-1 for the nonzero d_i.
    """
    snf = smith_decomposition(rows, ncols)
    basis = []
    for i, d in enumerate(snf.diagonal):
        if d != 0:
            basis.append([d * x for x in snf.t_inverse[i]])
    return basis


class QuotientLattice:
    """The finitely generated abelian group Z^n / span(relations).

    Elements are stored in Smith coordinates as a pair
    (torsion residues, free coordinates). Two vectors have the same class
    iff their pairs agree, so the pair is a normal form.
    """

    def __init__(self, ambient_rank: int, relations: Sequence[Sequence[int]]):
        self.ambient_rank = ambient_rank
        self.relations = [tuple(r) for r in relations]
        snf = smith_decomposition(self.relations, ambient_rank)
        self._t = snf.t
        self._t_inverse = snf.t_inverse
        moduli = list(snf.diagonal) + [0] * (ambient_rank - len(snf.diagonal))
        self._torsion_index = [i for i, d in enumerate(moduli) if d > 1]
        self._free_index = [i for i, d in enumerate(moduli) if d == 0]
        self.torsion_invariants: tuple[int, ...] = tuple(moduli[i] for i in self._torsion_index)
        self.free_rank = len(self._free_index)
        logger.debug(
            "quotient of Z^%d: torsion %s, free rank %d",
            ambient_rank, self.torsion_invariants, self.free_rank,
        )

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int | None:
        return prod(self.torsion_invariants) if self.is_finite else None

    def reduce(self, x: Sequence[int]) -> tuple[Vector, Vector]:
        y = vec_mat(x, self._t)
        torsion = tuple(y[i] % d for i, d in zip(self._torsion_index, self.torsion_invariants))
        free = tuple(y[i] for i in self._free_index)
        return torsion, free

    def lift(self, torsion: Sequence[int], free: Sequence[int]) -> Vector:
        y = [0] * self.ambient_rank
        for i, v in zip(self._torsion_index, torsion):
            y[i] = v
        for i, v in zip(self._free_index, free):
            y[i] = v
        return vec_mat(y, self._t_inverse)

    def add(self, a: tuple[Vector, Vector], b: tuple[Vector, Vector]) -> tuple[Vector, Vector]:
        torsion = tuple((x + y) % d for x, y, d in zip(a[0], b[0], self.torsion_invariants))
        free = tuple(x + y for x, y in zip(a[1], b[1]))
        return torsion, free

    def negate(self, a: tuple[Vector, Vector]) -> tuple[Vector, Vector]:
        return tuple((-x) % d for x, d in zip(a[0], self.torsion_invariants)), tuple(-x for x in a[1])

    def scale(self, k: int, a: tuple[Vector, Vector]) -> tuple[Vector, Vector]:
        return tuple((k * x) % d for x, d in zip(a[0], self.torsion_invariants)), tuple(k * x for x in a[1])

    @cached_property
    def zero(self) -> tuple[Vector, Vector]:
        return (0,) * len(self.torsion_invariants), (0,) * self.free_rank

    def elements(self) -> Iterator[tuple[Vector, Vector]]:
        """All elements of a finite quotient, in lexicographic order."""
        if not self.is_finite:
            raise ValueError("quotient has a free part")
        for torsion in product(*(range(d) for d in self.torsion_invariants)):
            yield tuple(torsion), ()

    def is_relation(self, x: Sequence[int]) -> bool:
        return self.reduce(x) == self.zero
