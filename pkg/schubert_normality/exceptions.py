"""Exception hierarchy for schubert-normality.

Every error raised on purpose by the library derives from SchubertError.
Errors that mean "the question is too big for the configured caps" derive
from CapError so the CLI can map them to their own exit code.
"""

from __future__ import annotations


class SchubertError(Exception):
    """Base class for all library errors."""


class InvalidType(SchubertError):
    """Unknown Dynkin letter or a rank outside the letter's valid range."""


class InvalidLattice(SchubertError):
    """Cocharacter lattice not between the coroot and coweight lattices."""


class InvalidCoweight(SchubertError):
    """A coweight string or vector that cannot be read in the lattice."""


class WildRamification(SchubertError):
    """The characteristic divides the twist order."""


class DimensionMismatch(SchubertError):
    """Vector length does not match the lattice rank."""


class TableMismatch(SchubertError):
    """Computed échelonnage Cartan matrix disagrees with the type table."""


class NotComparable(SchubertError):
    """Two classes are not comparable in the dominance order."""


class MixedGroups(SchubertError):
    """Classes from different group data were combined."""


class NotDominant(SchubertError):
    """A dominant class was required."""


class WrongType(SchubertError):
    """The operation only applies to a different kind of group."""


class NoRelation(SchubertError):
    """No isogeny or product relation links the two groups."""


class UnsupportedLevel(SchubertError):
    """The parahoric level is not available for this group."""


class NotStabilizing(SchubertError):
    """A length-zero element does not stabilize the facet."""


class CapError(SchubertError):
    """Base class for enumeration limits."""


class CapExceeded(CapError):
    """An exhaustive enumeration grew past the configured cap."""


class RankCap(CapError):
    """The affine Weyl group is only built for small ranks."""


class LengthCap(CapError):
    """An affine Bruhat query exceeds the configured length cap."""
