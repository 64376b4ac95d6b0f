"""Semantic validation of group specs beyond pydantic type checking.

Catches issues like:
- invalid (letter, rank) pairs and twists without a diagram automorphism
- lattices that are not stable under the twist or not between Q^vee and P^vee
- wild ramification
- characteristics for which every Schubert variety is normal anyway
"""

from __future__ import annotations

from schubert_normality.coinvariants.twist import check_twist
from schubert_normality.config.schema import GroupSpec
from schubert_normality.exceptions import SchubertError
from schubert_normality.rootdata.cartan import SimpleType


class SpecIssue:
    def __init__(self, field: str, message: str, severity: str = "error"):
        self.field = field
        self.message = message
        self.severity = severity  # "error" or "warning"

    def __str__(self):
        return f"[{self.severity.upper()}] {self.field}: {self.message}"


def errors_only(issues: list[SpecIssue]) -> list[SpecIssue]:
    return [i for i in issues if i.severity == "error"]


def validate_group_spec(spec: GroupSpec) -> list[SpecIssue]:
    """Run semantic validation on a GroupSpec. An empty list means valid."""
    issues: list[SpecIssue] = []

    factors = []
    for i, f in enumerate(spec.factors):
        where = f"factors[{i}]"
        try:
            t = SimpleType(f.abs_type.value, f.rank)
        except SchubertError as exc:
            issues.append(SpecIssue(f"{where}.rank", str(exc)))
            continue
        try:
            check_twist(t, f.twist_order)
        except SchubertError as exc:
            issues.append(SpecIssue(f"{where}.twist_order", str(exc)))
            continue
        if isinstance(f.lattice, str) and f.lattice in ("SO", "half_spin", "half_spin_prime") and t.letter != "D":
            issues.append(SpecIssue(f"{where}.lattice", f"lattice {f.lattice} exists only in type D"))
            continue
        try:
            factor = f.to_factor()
            factor.datum
        except SchubertError as exc:
            issues.append(SpecIssue(f"{where}.lattice", str(exc)))
            continue
        if spec.char and f.twist_order % spec.char == 0:
            issues.append(SpecIssue("char", f"char {spec.char} divides the twist order of {factor.label()} (wild)"))
        factors.append(factor)

    if issues:
        return issues

    try:
        g = spec.to_datum()
        g.datum
        g.sigma_matrix
    except SchubertError as exc:
        issues.append(SpecIssue("basis" if spec.basis is not None else "factors", str(exc)))
        return issues

    if spec.char and all(f.simple_type.connection_index % spec.char for f in factors):
        issues.append(SpecIssue(
            "char",
            f"char {spec.char} divides no connection index: every Schubert variety is normal",
            severity="warning",
        ))
    if spec.basis is not None and len(spec.factors) == 1:
        issues.append(SpecIssue(
            "basis",
            "a shared basis on a single factor is the same as the factor's own lattice basis",
            severity="warning",
        ))
    return issues
