"""Exact rational scalars.

`fractions.Fraction` already provides arbitrary-precision rationals kept in
lowest terms with a positive denominator, so it is the scalar type of the
whole package (exported as :data:`Rat`).  This module adds the strict text
form used by the CLI and file formats -- ``"p"`` or ``"p/q"`` with integer
``p`` and positive integer ``q`` -- and the falling-factorial product on
scalars.
"""

from __future__ import annotations

import re
from fractions import Fraction

Rat = Fraction

_RAT_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def parse_rat(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"``.  Decimals, spaces and empty strings are rejected."""
    if not _RAT_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator: {text!r}") from None


def format_rat(value: Fraction) -> str:
    """Render as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    return str(value)


def falling_factorial_rat(x: Fraction | int, n: int) -> Fraction:
    """(x)_n = x(x-1)...(x-n+1) for n >= 0, extended by (x)_{-1} = 1/(x+1).

    The n = -1 extension mirrors the Laurent-polynomial version in
    :mod:`boole_kernel.laurent`; it exists so fixed-parameter cross-checks can
    evaluate the same sums the symbolic code does.
    """
    if n < -1:
        raise ValueError(f"falling factorial is defined for n >= -1, got {n}")
    x = Fraction(x)
    if n == -1:
        return 1 / (x + 1)
    out = Fraction(1)
    for i in range(n):
        out *= x - i
    return out
