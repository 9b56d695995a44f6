"""Shared hypothesis strategies and helpers for the test-suite."""

from __future__ import annotations

from fractions import Fraction

import hypothesis.strategies as st

from boole_kernel import LaurentPoly

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=8)


def laurent_polys(min_exp_low: int = -1, max_len: int = 5):
    """Random canonical LaurentPoly values with small support and coefficients."""
    return st.builds(
        LaurentPoly,
        st.lists(small_fractions, min_size=0, max_size=max_len),
        st.integers(min_value=min_exp_low, max_value=2),
    )


def polynomials(max_len: int = 5):
    """Laurent values with min_exp >= 0 (ordinary polynomials)."""
    return laurent_polys(min_exp_low=0, max_len=max_len)


def random_fraction(rng, nonzero: bool = False) -> Fraction:
    """Small random rational from a seeded random.Random."""
    while True:
        value = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        if not nonzero or value != 0:
            return value
