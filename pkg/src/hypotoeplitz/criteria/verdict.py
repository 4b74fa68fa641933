"""Verdicts, certificates and shared helpers for the decision procedures."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from ..arith import (DEFAULT_CHECK_LIMIT, PositivityVerdict, RationalFunction,
                     format_fraction, poly_nonneg_on_integer_ray)
from ..operator import Witness

PROVEN = "ProvenHyponormal"
REFUTED = "NotHyponormal"
INCONCLUSIVE = "Inconclusive"

THEOREM_IDS = ("Monomial32", "SumHypo33", "HypoCoHypo35", "Construct37", "LiuLu41",
               "QuarterPlane43", "QuarterPlane46", "HarmonicBinomial", "SelfAdjointDelta0")

EXIT_CODES = {PROVEN: 0, REFUTED: 1, INCONCLUSIVE: 2}


@dataclass(frozen=True)
class Certificate:
    """What was verified: the named result, the index ranges checked exactly,
    and the tail certificate for the infinite remainder (if any)."""

    theorem_id: str
    ranges_checked: tuple[tuple[int, int], ...] = ()
    tail: PositivityVerdict | None = None
    note: str = ""

    def to_json(self) -> dict:
        out: dict[str, Any] = {"theorem_id": self.theorem_id,
                               "ranges": [list(r) for r in self.ranges_checked]}
        if self.tail is not None:
            out["tail"] = self.tail.to_json()
        if self.note:
            out["note"] = self.note
        return out


@dataclass(frozen=True)
class CriterionViolation:
    """An iff-criterion failing exactly at ``index`` (``lhs < rhs``)."""

    criterion: str
    index: int
    lhs: Fraction | None = None
    rhs: Fraction | None = None

    def to_json(self) -> dict:
        out: dict[str, Any] = {"criterion": self.criterion, "index": self.index}
        if self.lhs is not None:
            out["lhs"] = format_fraction(self.lhs)
            out["rhs"] = format_fraction(self.rhs)
        return out


@dataclass
class Verdict:
    tag: str
    certificate: Certificate | None = None
    witness: Witness | None = None
    violation: CriterionViolation | None = None
    reason: str = ""
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.tag == PROVEN and self.certificate is None:
            raise ValueError("ProvenHyponormal needs a certificate")
        if self.tag == REFUTED and self.witness is None and self.violation is None:
            raise ValueError("NotHyponormal needs a witness or a criterion violation")

    @classmethod
    def proven(cls, theorem_id, ranges=(), tail=None, note="", **details) -> "Verdict":
        return cls(PROVEN, Certificate(theorem_id, tuple(ranges), tail, note), details=details)

    @classmethod
    def refuted(cls, *, witness=None, violation=None, reason="", **details) -> "Verdict":
        return cls(REFUTED, witness=witness, violation=violation, reason=reason, details=details)

    @classmethod
    def inconclusive(cls, reason, **details) -> "Verdict":
        return cls(INCONCLUSIVE, reason=reason, details=details)

    @property
    def proven_hyponormal(self) -> bool:
        return self.tag == PROVEN

    @property
    def not_hyponormal(self) -> bool:
        return self.tag == REFUTED

    @property
    def theorem_id(self) -> str | None:
        return self.certificate.theorem_id if self.certificate else None

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.tag]

    def to_json(self) -> dict:
        out: dict[str, Any] = {"tag": self.tag}
        if self.certificate is not None:
            cj = self.certificate.to_json()
            out["theorem_id"] = cj.pop("theorem_id")
            out.update(cj)
        if self.violation is not None:
            out["violation"] = self.violation.to_json()
            if self.violation.criterion == "LiuLu41":
                out["violation_alpha"] = self.violation.index
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        if self.reason:
            out["reason"] = self.reason
        for key in ("section_size", "symbol"):
            if key in self.details:
                out[key] = self.details[key]
        return out

    def summary(self) -> str:
        if self.tag == PROVEN:
            return f"{self.tag} [{self.theorem_id}]"
        if self.tag == REFUTED:
            if self.violation is not None:
                return f"{self.tag} [{self.violation.criterion} fails at index {self.violation.index}]"
            return f"{self.tag} [witness, form/pi = {_fmt_witness(self.witness)}]"
        return f"{self.tag} ({self.reason})"


def _fmt_witness(w: Witness) -> str:
    if w.exact:
        return format_fraction(w.exact_value)
    return f"{w.float_value:.12g} +- {w.float_error:.3g}"


def rf_sign_poly(rf: RationalFunction):
    """Polynomial with the same sign as ``rf`` wherever ``rf`` is defined."""
    return rf.num * rf.den


def rf_nonneg_on_ray(rf: RationalFunction, K: int, check_limit: int = DEFAULT_CHECK_LIMIT,
                     *, strict: bool = False) -> PositivityVerdict:
    return poly_nonneg_on_integer_ray(rf_sign_poly(rf), K, max(check_limit, K), strict=strict)


def rf_sign_on_ray(rf: RationalFunction, K: int, check_limit: int = DEFAULT_CHECK_LIMIT) -> int:
    """``+1`` / ``-1`` if ``rf`` is certified ``>= 0`` / ``<= 0`` on the
    integer ray ``k >= K``; ``0`` if neither could be certified."""
    p = rf_sign_poly(rf)
    limit = max(check_limit, K)
    if poly_nonneg_on_integer_ray(p, K, limit).positive:
        return 1
    if poly_nonneg_on_integer_ray(-p, K, limit).positive:
        return -1
    return 0
