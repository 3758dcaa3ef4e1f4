"""Permutation statistics, the bijections Phi and Psi, generating polynomials
and their continued fractions, all checked by exhaustive exact computation."""

from .bijections import phi, phi_inverse, psi, word_from_embracings, InsertionMode
from .families import Family, build_polynomial, coeff_family, involution_descent_poly
from .paths import (
    ColoredMotzkinPath,
    Flavor,
    JFractionSpec,
    LaguerreHistory,
    Step,
    fv_map,
    fz_map,
    jfraction_series,
    weighted_path_sum,
)
from .perm import (
    Convention,
    Permutation,
    StatRecord,
    all_permutations,
    all_stats,
    crossing_nesting,
    cyclic_stats,
    linear_stats,
    parse_permutation,
    pattern_stats,
    predicates,
)
from .poly import MultiPoly, exact_divide, gamma_expand, parse_poly, pq_integer, specialize
from .series import TruncatedSeries
from .star import StarMap, star_map, star_stats
from .theorems import Bounds, VerificationReport, verify

__version__ = "0.1.0"
