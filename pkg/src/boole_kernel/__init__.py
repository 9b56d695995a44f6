"""Exact computation and verification toolkit for Boole-type number families.

Everything is exact: rational scalars, Laurent polynomials in one parameter,
and truncated power series over either.  See the README for the CLI.
"""

from .laurent import (
    LAMBDA,
    LAMBDA_INV,
    ExponentRangeError,
    LaurentPoly,
    NonInvertibleError,
    falling_factorial,
)
from .rationals import Rat, falling_factorial_rat, format_rat, parse_rat
from .series import (
    LAURENT_RING,
    RAT_RING,
    Series,
    binom_pow,
    compose_exp_minus_one,
    exponential,
    log1p,
)
from .special_numbers import (
    BooleTable,
    EulerTable,
    StirlingTriangle,
    boole_numbers,
    boole_polynomials,
    boole_series,
    euler_numbers,
    stirling1,
    stirling2,
)
from .triangle import (
    ATriangle,
    closed_form_entry,
    diagonal_closed_form,
    first_column_closed_form,
    matrix_view,
    triangle_by_recurrence,
)
from .verify import (
    IDENTITY_CATALOG,
    IDENTITY_IDS,
    Counterexample,
    VerifyReport,
    changhee_crosscheck,
    summary_table,
    verify_all,
    verify_eq32,
    verify_eq34,
    verify_eq36,
    verify_eq38,
    verify_ode,
    verify_thm3,
    verify_thm4,
)

__version__ = "0.1.0"

__all__ = [
    "ATriangle",
    "BooleTable",
    "Counterexample",
    "EulerTable",
    "ExponentRangeError",
    "IDENTITY_CATALOG",
    "IDENTITY_IDS",
    "LAMBDA",
    "LAMBDA_INV",
    "LAURENT_RING",
    "LaurentPoly",
    "NonInvertibleError",
    "RAT_RING",
    "Rat",
    "Series",
    "StirlingTriangle",
    "VerifyReport",
    "binom_pow",
    "boole_numbers",
    "boole_polynomials",
    "boole_series",
    "changhee_crosscheck",
    "closed_form_entry",
    "compose_exp_minus_one",
    "diagonal_closed_form",
    "euler_numbers",
    "exponential",
    "falling_factorial",
    "falling_factorial_rat",
    "first_column_closed_form",
    "format_rat",
    "log1p",
    "matrix_view",
    "parse_rat",
    "stirling1",
    "stirling2",
    "summary_table",
    "triangle_by_recurrence",
    "verify_all",
    "verify_eq32",
    "verify_eq34",
    "verify_eq36",
    "verify_eq38",
    "verify_ode",
    "verify_thm3",
    "verify_thm4",
]
