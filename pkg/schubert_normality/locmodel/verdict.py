"""Normality of local models.

The generic fiber is a Schubert variety in the affine Grassmannian of the
split group over F, so it is decided by the absolute support of mu. The
special fiber is the admissible locus: a single Schubert variety at a
special vertex, a union of Schubert varieties S_w for w maximal among
max(W_f t_la W_f) elsewhere.
"""

from __future__ import annotations

import logging

from schubert_normality.coinvariants.lattice import adjoint_image, coinvariants
from schubert_normality.config.schema import Caps
from schubert_normality.exceptions import CapError, UnsupportedLevel, WrongType
from schubert_normality.levels.base import Level
from schubert_normality.levels.flag import FlagStrategy
from schubert_normality.levels.resolver import get_strategy
from schubert_normality.locmodel.rank_one import rank_one_kind, rank_one_verdict
from schubert_normality.locmodel.triple import LMTriple
from schubert_normality.normality.criterion import levi_of, pi1_absolute_order, pi1_order
from schubert_normality.normality.special import is_odd_unitary
from schubert_normality.normality.verdict import Provenance, Status, Verdict, non_normal, normal, unknown

logger = logging.getLogger(__name__)


def generic_fiber_verdict(t: LMTriple) -> Verdict:
    if t.char_F == 0:
        return normal(Provenance.CHAR_ZERO)
    orders = [pi1_absolute_order(t.group, part) for part in t.parts]
    witness = {"char_F": t.char_F, "orders": orders}
    if any(o % t.char_F == 0 for o in orders):
        return non_normal(Provenance.GENERIC_FIBER, witness=witness)
    return normal(Provenance.GENERIC_FIBER, witness=witness)


def _is_central(t: LMTriple) -> bool:
    mu = t.mu_bar
    ad = coinvariants(t.group.adjoint())
    return adjoint_image(mu.lattice, mu) == ad.zero


def _strategy(t: LMTriple, caps: Caps | None):
    level = t.level
    if level is Level.SPECIAL and not is_odd_unitary(t.group):
        raise UnsupportedLevel(f"{t.group.label()} has no special vertex that is not absolutely special")
    return get_strategy(level, t.group, caps, t.facet)


def locmodel_verdict(t: LMTriple, caps: Caps | None = None) -> Verdict:
    mu = t.mu_bar
    if _is_central(t):
        return normal(Provenance.CENTRAL, witness={"mu_bar": mu.name})
    if rank_one_kind(t.group) is not None:
        return rank_one_verdict(t)

    strategy = _strategy(t, caps)
    generic = generic_fiber_verdict(t)
    s = levi_of(mu)
    order = pi1_order(mu.lattice, s)
    p = t.residue_char
    common = {"pi1_order": order, "support": s.labels()}
    witness = {"mu_bar": mu.name, "generic_fiber": generic.status.value}

    if generic.status == Status.NON_NORMAL:
        return non_normal(Provenance.GENERIC_FIBER, witness={**witness, **(generic.witness or {})}, **common)
    if order % p:
        return normal(Provenance.LOCAL_MODEL, witness=witness, **common)

    if t.level is Level.ABS_SPECIAL:
        return non_normal(Provenance.LOCAL_MODEL, witness=witness, **common)
    if t.level is Level.SPECIAL:
        special = strategy.verdict(mu)
        if special.status == Status.UNKNOWN:
            return unknown(witness=witness, **common)
        return Verdict(status=special.status, provenance=Provenance.LOCAL_MODEL, witness=witness, **common)

    # Iwahori or another facet: every maximal admissible Schubert variety must be normal
    if not isinstance(strategy, FlagStrategy):
        return unknown(witness=witness, **common)
    try:
        maxima = strategy.admissible_max(mu)
        verdicts = [strategy.element_verdict(w) for w in maxima]
    except (CapError, WrongType) as exc:
        logger.debug("no flag verdict for %s: %s", mu.name, exc)
        return unknown(witness=witness, **common)
    names = [strategy.weyl_group.name(w) for w in maxima]
    witness["admissible_max"] = names
    if all(v.is_normal for v in verdicts):
        return normal(Provenance.FACET_PROPAGATION, witness=witness, **common)
    return unknown(witness=witness, **common)


def admissible_max(t: LMTriple, caps: Caps | None = None) -> list[dict]:
    """Maximal admissible Schubert varieties, serialized."""
    mu = t.mu_bar
    if _is_central(t):
        return [{"class": mu.to_dict()}]
    if t.level in (Level.ABS_SPECIAL, Level.SPECIAL):
        return [{"class": m.to_dict()} for m in _strategy(t, caps).admissible_max(mu)]
    strategy = _strategy(t, caps)
    if not isinstance(strategy, FlagStrategy):
        raise UnsupportedLevel(f"no admissible set description at level {t.level.value}")
    try:
        maxima = strategy.admissible_max(mu)
    except (CapError, WrongType) as exc:
        raise UnsupportedLevel(f"admissible sets at level {t.level.value} need a small irreducible group: {exc}") from exc
    w = strategy.weyl_group
    return [{**w.to_dict(a), "name": w.name(a)} for a in maxima]
