"""Hyponormality of Toeplitz operators with polynomial symbols on the Bergman space.

Typical use::

    >>> from hypotoeplitz import parse_symbol, check
    >>> check(parse_symbol("z^2 zb - z^3 zb^2")).summary()
    'NotHyponormal [LiuLu41 fails at index 2]'

Exact quantities are :class:`fractions.Fraction` (or
:class:`GaussianRational`) in units of ``pi``; floating-point results carry
explicit error bounds where they feed a verdict.
"""

from .arith import GaussianRational, PositivityVerdict, RationalFunction, RationalPoly, poly_nonneg_on_integer_ray
from .criteria import (Certificate, CriterionViolation, Verdict, binomial_phase_analysis, check,
                       check_harmonic_binomial, check_liu_lu, check_monomial, check_quarter_plane,
                       check_thm33, check_thm35, construct_thm37)
from .errors import HypoError, ParseError
from .kernels import BACKEND
from .operator import (CoefficientVector, HermitianMatrix, Witness, apply_toeplitz, commutator_form_exact,
                       commutator_form_float, commutator_matrix, find_refutation, project_monomial)
from .spectral import (monomial_commutator_norm, norm_report, projection_norm_sq, putnam_area_bound,
                       section_norm)
from .symbol import Monomial, Polar, SymbolPoly, classify, format_symbol, parse_symbol, radial_profile

__version__ = "0.1.0"

__all__ = [
    "GaussianRational", "PositivityVerdict", "RationalFunction", "RationalPoly", "poly_nonneg_on_integer_ray",
    "Certificate", "CriterionViolation", "Verdict", "binomial_phase_analysis", "check",
    "check_harmonic_binomial", "check_liu_lu", "check_monomial", "check_quarter_plane", "check_thm33",
    "check_thm35", "construct_thm37", "HypoError", "ParseError", "BACKEND", "CoefficientVector",
    "HermitianMatrix", "Witness", "apply_toeplitz", "commutator_form_exact", "commutator_form_float",
    "commutator_matrix", "find_refutation", "project_monomial", "monomial_commutator_norm", "norm_report",
    "projection_norm_sq", "putnam_area_bound", "section_norm", "Monomial", "Polar", "SymbolPoly",
    "classify", "format_symbol", "parse_symbol", "radial_profile",
]
