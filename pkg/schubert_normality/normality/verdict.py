"""Verdicts and the rules that produce them."""

from __future__ import annotations

from enum import Enum
from typing import Any, Optional

from pydantic import BaseModel, Field, model_validator


class Status(str, Enum):
    NORMAL = "Normal"
    NON_NORMAL = "NonNormal"
    UNKNOWN = "Unknown"


class Provenance(str, Enum):
    """Identifier of the rule behind a verdict."""

    NONE = "none"
    CHAR_ZERO = "char-zero"
    CRITERION = "pi1-criterion"
    CRITERION_NECESSITY = "pi1-criterion-necessity"
    QM_BOUND = "quasi-minuscule-bound"
    SPECIAL_ONLY_SMOOTH = "special-only-smooth"
    SPECIAL_ONLY_BOUND = "special-only-bound"
    TYPEA_IWAHORI = "typeA-iwahori-translate"
    FACET_PROPAGATION = "facet-propagation"
    OMEGA_TRANSLATE = "omega-translate"
    PRODUCT = "product"
    ISOGENY = "central-isogeny"
    GENERIC_FIBER = "generic-fiber"
    LOCAL_MODEL = "local-model"
    RANK_ONE = "rank-one-local-model"
    CENTRAL = "central"


CITATIONS = {
    Provenance.NONE: "",
    Provenance.CHAR_ZERO: "characteristic 0: every Schubert variety is normal",
    Provenance.CRITERION: "normal since char(k) does not divide #pi_1(M^der) of the support Levi",
    Provenance.CRITERION_NECESSITY: "at an absolutely special vertex char(k) | #pi_1(M^der) forces non-normality",
    Provenance.QM_BOUND: "non-normal above la + mu^qm_M when char(k) divides #pi_1(M^der)",
    Provenance.SPECIAL_ONLY_SMOOTH: "0 and the quasi-minuscule class are smooth at the special-only vertex",
    Provenance.SPECIAL_ONLY_BOUND: "non-normal above the special-only bound of the odd unitary group",
    Provenance.TYPEA_IWAHORI: "Iwahori orbit comparable to a translate of d*w1 or d*wn (Besson-Hong order)",
    Provenance.FACET_PROPAGATION: "below a normal (or above a non-normal) maximal double coset element",
    Provenance.OMEGA_TRANSLATE: "length-zero translate of a Schubert variety with known verdict",
    Provenance.PRODUCT: "a product of Schubert varieties is normal iff every factor is",
    Provenance.ISOGENY: "the map to the adjoint Schubert variety is an isomorphism",
    Provenance.GENERIC_FIBER: "generic fiber normal iff char(F) does not divide #pi_1 of the absolute support Levi",
    Provenance.LOCAL_MODEL: "special fiber criterion together with the generic fiber",
    Provenance.RANK_ONE: "semisimple rank one local model table",
    Provenance.CENTRAL: "central cocharacter: the Schubert variety is a point",
}


class Verdict(BaseModel):
    status: Status
    provenance: Provenance = Provenance.NONE
    citation: str = ""
    pi1_order: Optional[int] = None
    support: list[int] = Field(default_factory=list, description="1-based échelonnage indices")
    witness: Optional[dict[str, Any]] = None

    @model_validator(mode="after")
    def _check_provenance(self) -> Verdict:
        if self.status != Status.UNKNOWN and self.provenance == Provenance.NONE:
            raise ValueError(f"a {self.status.value} verdict needs a provenance")
        if not self.citation:
            self.citation = CITATIONS[self.provenance]
        return self

    @property
    def is_normal(self) -> bool:
        return self.status == Status.NORMAL

    def to_json(self) -> dict[str, Any]:
        return self.model_dump(mode="json")


def normal(provenance: Provenance, **kw: Any) -> Verdict:
    return Verdict(status=Status.NORMAL, provenance=provenance, **kw)


def non_normal(provenance: Provenance, **kw: Any) -> Verdict:
    return Verdict(status=Status.NON_NORMAL, provenance=provenance, **kw)


def unknown(provenance: Provenance = Provenance.NONE, **kw: Any) -> Verdict:
    return Verdict(status=Status.UNKNOWN, provenance=provenance, **kw)
