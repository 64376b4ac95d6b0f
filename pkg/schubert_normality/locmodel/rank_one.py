"""Local models for adjoint groups of semisimple rank one.

Only two adjoint groups have échelonnage rank one with a non-trivial
answer: split PGL_2 in residue characteristic 2 and ramified PU_3 in
residue characteristic 3. For them the verdict depends only on the
embedding parts of mu and on the level, and is never Unknown.
"""

from __future__ import annotations

from schubert_normality.coinvariants.group import GroupDatum
from schubert_normality.levels.base import Level
from schubert_normality.locmodel.triple import LMTriple
from schubert_normality.normality.verdict import Provenance, Verdict, non_normal, normal
from schubert_normality.rootdata.datum import omega_coords

PGL2 = "PGL2"
PU3 = "PU3"


def rank_one_kind(g: GroupDatum) -> str | None:
    if len(g.factors) != 1 or g.basis is not None:
        return None
    f = g.factors[0]
    if f.lattice.name != "ad" or f.central_rank:
        return None
    t = f.simple_type
    if (t.letter, t.rank, f.twist_order, g.char) == ("A", 1, 1, 2):
        return PGL2
    if (t.letter, t.rank, f.twist_order, g.char) == ("A", 2, 2, 3):
        return PU3
    return None


def _vertex_kind(t: LMTriple, kind: str) -> Level:
    """Name the level of a facet given by affine nodes."""
    if t.level is not Level.FACET:
        return t.level
    if not t.facet:
        return Level.IWAHORI
    # PU_3: W_0 = <s1> fixes the absolutely special vertex, <s0> the special-only one
    if kind == PU3 and t.facet == frozenset({0}):
        return Level.SPECIAL
    return Level.ABS_SPECIAL


def rank_one_verdict(t: LMTriple) -> Verdict:
    kind = rank_one_kind(t.group)
    if kind is None:
        raise ValueError(f"{t.group.label()} is not a rank one group with a non-trivial table")
    d = t.group.datum
    heights = [sum(omega_coords(d, part)) for part in t.parts]
    nonzero = sorted(h for h in heights if h)
    level = _vertex_kind(t, kind)
    witness = {"group": kind, "parts": nonzero, "level": level.value, "char_F": t.char_F}
    if not nonzero:
        return normal(Provenance.RANK_ONE, witness=witness)
    if kind == PGL2:
        if nonzero == [1]:
            return normal(Provenance.RANK_ONE, witness=witness)
        if nonzero == [1, 1] and level is Level.IWAHORI:
            return normal(Provenance.RANK_ONE, witness=witness)
        if nonzero == [2] and level is Level.IWAHORI and t.char_F == 0:
            return normal(Provenance.RANK_ONE, witness=witness)
        return non_normal(Provenance.RANK_ONE, witness=witness)
    if nonzero == [1] and level in (Level.SPECIAL, Level.IWAHORI):
        return normal(Provenance.RANK_ONE, witness=witness)
    return non_normal(Provenance.RANK_ONE, witness=witness)
