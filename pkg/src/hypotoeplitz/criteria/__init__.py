"""Hyponormality decision procedures returning auditable verdicts."""

from .dispatch import check, rotate
from .harmonic import check_harmonic_binomial, harmonic_threshold_sq
from .mellin import (MellinCheckRow, PhaseAnalysis, PhaseAnalysisRow, binomial_phase_analysis,
                     check_liu_lu, check_quarter_plane, liu_lu_function, mellin_hat, mellin_row)
from .monomial import check_monomial, diag_value, monomial_numerator
from .two_term import (ConstructionReport, CrossTermBounds, TildeBounds, check_thm33, check_thm35,
                       construct_thm37, margin_rows, two_term_margin_function)
from .verdict import (INCONCLUSIVE, PROVEN, REFUTED, Certificate, CriterionViolation, Verdict)

__all__ = [
    "check", "rotate", "check_harmonic_binomial", "harmonic_threshold_sq", "MellinCheckRow",
    "PhaseAnalysis", "PhaseAnalysisRow", "binomial_phase_analysis", "check_liu_lu",
    "check_quarter_plane", "liu_lu_function", "mellin_hat", "mellin_row", "check_monomial",
    "diag_value", "monomial_numerator", "ConstructionReport", "CrossTermBounds", "TildeBounds",
    "check_thm33", "check_thm35", "construct_thm37", "margin_rows", "two_term_margin_function",
    "INCONCLUSIVE", "PROVEN", "REFUTED", "Certificate", "CriterionViolation", "Verdict",
]
