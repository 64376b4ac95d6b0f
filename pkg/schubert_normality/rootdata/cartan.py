"""Cartan matrices in Bourbaki numbering and finite root systems.

Convention: C[i][j] = <alpha_i^vee, alpha_j>, indices 0-based internally and
1-based in every user-facing label.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import prod

from schubert_normality.exceptions import InvalidType
from schubert_normality.lattice.normalforms import IntMatrix, Vector, dot, invariant_factors

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4, "E": 6, "F": 4, "G": 2}

CONNECTION_INDEX = {"B": 2, "C": 2, "D": 4, "F": 1, "G": 1}


@dataclass(frozen=True, order=True)
class SimpleType:
    letter: str
    rank: int

    def __post_init__(self):
        letter = self.letter.upper()
        object.__setattr__(self, "letter", letter)
        if letter not in _MIN_RANK:
            raise InvalidType(f"unknown Dynkin letter {self.letter!r}")
        if self.rank < _MIN_RANK[letter]:
            raise InvalidType(f"{letter}{self.rank}: rank must be at least {_MIN_RANK[letter]}")
        if letter == "E" and self.rank not in (6, 7, 8):
            raise InvalidType(f"E{self.rank}: rank must be 6, 7 or 8")
        if letter == "F" and self.rank != 4:
            raise InvalidType("F: rank must be 4")
        if letter == "G" and self.rank != 2:
            raise InvalidType("G: rank must be 2")

    def __str__(self):
        return f"{self.letter}{self.rank}"

    @property
    def connection_index(self) -> int:
        if self.letter == "A":
            return self.rank + 1
        if self.letter == "E":
            return {6: 3, 7: 2, 8: 1}[self.rank]
        return CONNECTION_INDEX[self.letter]


def _chain(n: int) -> IntMatrix:
    c = [[0] * n for _ in range(n)]
    for i in range(n):
        c[i][i] = 2
        if i + 1 < n:
            c[i][i + 1] = c[i + 1][i] = -1
    return c


def _link(c: IntMatrix, i: int, j: int) -> None:
    c[i][j] = c[j][i] = -1


def cartan_matrix(t: SimpleType) -> IntMatrix:
    """Bourbaki Cartan matrix of a simple type."""
    n = t.rank
    if t.letter == "A":
        return _chain(n)
    if t.letter == "B":
        c = _chain(n)
        c[n - 1][n - 2] = -2
        return c
    if t.letter == "C":
        c = _chain(n)
        c[n - 2][n - 1] = -2
        return c
    if t.letter == "D":
        c = _chain(n)
        # nodes n-1 and n both hang off node n-2
        c[n - 2][n - 1] = c[n - 1][n - 2] = 0
        _link(c, n - 3, n - 1)
        return c
    if t.letter == "E":
        c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        _link(c, 0, 2)
        _link(c, 1, 3)
        for i in range(2, n - 1):
            _link(c, i, i + 1)
        return c
    if t.letter == "F":
        c = _chain(4)
        c[2][1] = -2
        return c
    return [[2, -3], [-1, 2]]


def block_diagonal(blocks: list[IntMatrix]) -> IntMatrix:
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    k = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[k + i][k + j] = x
        k += len(b)
    return out


@dataclass(frozen=True)
class Root:
    """A root with its coroot, both in simple coordinates.

    ``root`` holds coefficients on the simple roots, ``coroot`` on the simple
    coroots; the coroot of w(alpha_i) is w(alpha_i^vee).
    """

    root: Vector
    coroot: Vector

    @property
    def height(self) -> int:
        return sum(self.root)


class RootSystem:
    """Finite (possibly reducible) root system given by a Cartan matrix."""

    def __init__(self, cartan: IntMatrix):
        self.cartan = [list(r) for r in cartan]
        self.rank = len(cartan)

    def _reflect(self, i: int, r: Root) -> Root:
        c = self.cartan
        n = self.rank
        # <alpha_i^vee, beta> and <beta^vee, alpha_i>
        root_pair = sum(r.root[j] * c[i][j] for j in range(n))
        coroot_pair = sum(r.coroot[j] * c[j][i] for j in range(n))
        root = list(r.root)
        root[i] -= root_pair
        coroot = list(r.coroot)
        coroot[i] -= coroot_pair
        return Root(tuple(root), tuple(coroot))

    @cached_property
    def roots(self) -> tuple[Root, ...]:
        n = self.rank
        simple = [Root(tuple(int(i == j) for j in range(n)), tuple(int(i == j) for j in range(n))) for i in range(n)]
        seen = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for r in frontier:
                for i in range(n):
                    s = self._reflect(i, r)
                    if s not in seen:
                        seen.add(s)
                        nxt.append(s)
            frontier = nxt
        return tuple(sorted(seen, key=lambda r: (r.height, tuple(-x for x in r.root))))

    @cached_property
    def positive_roots(self) -> tuple[Root, ...]:
        return tuple(r for r in self.roots if all(x >= 0 for x in r.root))

    @cached_property
    def highest_roots(self) -> tuple[Root, ...]:
        """Highest root of each irreducible component."""
        out = []
        for comp in self.components():
            inside = [r for r in self.positive_roots if all(r.root[i] == 0 for i in range(self.rank) if i not in comp)]
            out.append(max(inside, key=lambda r: r.height))
        return tuple(out)

    @cached_property
    def two_rho(self) -> Vector:
        """Sum of positive roots, in simple-root coordinates."""
        n = self.rank
        return tuple(sum(r.root[i] for r in self.positive_roots) for i in range(n))

    def coroot_in_weight_coords(self, coroot: Vector) -> Vector:
        """m-vector (pairings with the simple roots) of a coroot combination."""
        n = self.rank
        return tuple(sum(coroot[i] * self.cartan[i][j] for i in range(n)) for j in range(n))

    def pair(self, m: Vector, root: Vector) -> int:
        return dot(m, root)

    @cached_property
    def determinant(self) -> int:
        return prod(invariant_factors(self.cartan, self.rank))

    def components(self) -> list[list[int]]:
        """Connected components of the Dynkin diagram, as sorted index lists."""
        n = self.rank
        seen: set[int] = set()
        comps = []
        for start in range(n):
            if start in seen:
                continue
            comp, stack = [], [start]
            seen.add(start)
            while stack:
                i = stack.pop()
                comp.append(i)
                for j in range(n):
                    if j not in seen and self.cartan[i][j] != 0:
                        seen.add(j)
                        stack.append(j)
            comps.append(sorted(comp))
        return comps
