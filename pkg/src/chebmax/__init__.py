"""Maximal hyperelliptic curves built from Chebyshev polynomials.

Exact point counting over finite fields, L-polynomials and Newton polygons,
and scans that test maximality criteria over ranges of (d, q).
"""

from .chebyshev import IntPoly, cheb_poly, compose, is_separable, reduce_mod, sep_criterion
from .curve import CurveError, HCurve, count_points, count_series, make_curve
from .families import FamilyId, build, congruence_2d, congruence_4d, predicted, prime_powers
from .ff import BudgetExceeded, make_field, quadratic_character
from .verify import (ScanRecord, cm_slopes, verify_cm_against_newton, verify_conjecture,
                     verify_decompositions, verify_statement)
from .zeta import (LPolynomial, is_maximal, is_supersingular, l_polynomial, lpoly_divides,
                   newton_polygon, reconstruct_counts)

__version__ = "0.1.0"
