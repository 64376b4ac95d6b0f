"""Diagram automorphisms, their orbits and the échelonnage type table."""

from __future__ import annotations

from schubert_normality.exceptions import InvalidType
from schubert_normality.rootdata.cartan import SimpleType

VALID_TWISTS = {
    ("A", 2): lambda n: n >= 2,
    ("D", 2): lambda n: n >= 4,
    ("D", 3): lambda n: n == 4,
    ("E", 2): lambda n: n == 6,
}


def check_twist(t: SimpleType, e: int) -> None:
    if e == 1:
        return
    ok = VALID_TWISTS.get((t.letter, e))
    if ok is None or not ok(t.rank):
        raise InvalidType(f"no diagram automorphism of order {e} on {t}")


def diagram_automorphism(t: SimpleType, e: int) -> tuple[int, ...]:
    """The permutation sigma_0 of simple indices (0-based), of order e."""
    check_twist(t, e)
    n = t.rank
    perm = list(range(n))
    if e == 1:
        return tuple(perm)
    if t.letter == "A":
        return tuple(n - 1 - i for i in range(n))
    if t.letter == "D" and e == 2:
        perm[n - 2], perm[n - 1] = n - 1, n - 2
        return tuple(perm)
    if t.letter == "D":
        # 1 -> 3 -> 4 -> 1
        perm[0], perm[2], perm[3] = 2, 3, 0
        return tuple(perm)
    # E6: 1 <-> 6, 3 <-> 5
    perm[0], perm[5], perm[2], perm[4] = 5, 0, 4, 2
    return tuple(perm)


def orbits(t: SimpleType, e: int) -> list[tuple[int, ...]]:
    """sigma_0-orbits on simple indices, in the order of the échelonnage simple roots."""
    perm = diagram_automorphism(t, e)
    seen: set[int] = set()
    out = []
    for i in range(t.rank):
        if i in seen:
            continue
        orbit = [i]
        j = perm[i]
        while j != i:
            orbit.append(j)
            j = perm[j]
        seen.update(orbit)
        out.append(tuple(sorted(orbit)))
    if (t.letter, t.rank, e) == ("D", 4, 3):
        return [(1,), (0, 2, 3)]
    if (t.letter, e) == ("E", 2):
        return [(0, 5), (2, 4), (3,), (1,)]
    return out


def sigma_type(t: SimpleType, e: int) -> SimpleType:
    """Type of the échelonnage root system of the twisted form."""
    check_twist(t, e)
    if e == 1:
        return t
    n = t.rank
    if t.letter == "A" and n % 2:
        return SimpleType("B", (n + 1) // 2)
    if t.letter == "A":
        return SimpleType("C", n // 2) if n > 2 else SimpleType("A", 1)
    if t.letter == "D" and e == 2:
        return SimpleType("C", n - 1)
    if t.letter == "D":
        return SimpleType("G", 2)
    return SimpleType("F", 4)
