"""Laurent polynomials in a single symbol over exact rationals.

This is the coefficient domain everything downstream is generic over: dense
polynomials in one symbol (written ``l`` in text output) whose exponents may
reach -1 but no lower.  The lone negative power is not a convenience: the
coefficient triangle in :mod:`boole_kernel.triangle` is seeded by the
genuinely Laurent value 1/l, while every other quantity in the package is an
ordinary polynomial.  Capping exponents at -1 keeps arithmetic exact and
total without dragging in a full rational-function field; a product that
would need l^-2 signals a misposed computation and raises
:class:`ExponentRangeError`.

Values are immutable, hashable and canonical (no zero coefficients are
stored at either end of the support; the zero polynomial has empty support),
so ``==`` decides mathematical equality.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping

MIN_EXPONENT = -1


class ExponentRangeError(ValueError):
    """A result would need a power of the symbol below the supported minimum."""


class NonInvertibleError(ValueError):
    """The requested inverse does not exist in the coefficient domain."""


def _exact(value: object) -> Fraction:
    """Coerce to Fraction, refusing floats (which would silently lose exactness)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"exact rational required, got {type(value).__name__}")


class LaurentPoly:
    """Dense polynomial sum(c_e * l^e) with integer exponents e >= -1."""

    __slots__ = ("_min_exp", "_coeffs")

    def __init__(self, coeffs=(), min_exp: int = 0):
        values = [_exact(c) for c in coeffs]
        lo = min_exp
        while values and values[0] == 0:
            values.pop(0)
            lo += 1
        while values and values[-1] == 0:
            values.pop()
        if not values:
            lo = 0
        elif lo < MIN_EXPONENT:
            raise ExponentRangeError(
                f"exponent {lo} below the supported minimum {MIN_EXPONENT}"
            )
        self._min_exp = lo
        self._coeffs = tuple(values)

    @classmethod
    def constant(cls, value) -> "LaurentPoly":
        return cls((_exact(value),))

    @classmethod
    def from_terms(cls, terms: Mapping[int, object]) -> "LaurentPoly":
        """Build from an exponent -> coefficient mapping."""
        nonzero = {e: _exact(c) for e, c in terms.items() if _exact(c) != 0}
        if not nonzero:
            return ZERO
        lo = min(nonzero)
        hi = max(nonzero)
        dense = [nonzero.get(e, Fraction(0)) for e in range(lo, hi + 1)]
        return cls(dense, lo)

    # -- structure ----------------------------------------------------------

    @property
    def min_exp(self) -> int:
        return self._min_exp

    @property
    def degree(self) -> int | None:
        """Largest exponent with nonzero coefficient; None for the zero polynomial."""
        if not self._coeffs:
            return None
        return self._min_exp + len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def coeff(self, exponent: int) -> Fraction:
        idx = exponent - self._min_exp
        if 0 <= idx < len(self._coeffs):
            return self._coeffs[idx]
        return Fraction(0)

    def terms(self) -> Iterator[tuple[int, Fraction]]:
        """Nonzero (exponent, coefficient) pairs in ascending exponent order."""
        for i, c in enumerate(self._coeffs):
            if c != 0:
                yield self._min_exp + i, c

    def as_monomial(self) -> tuple[Fraction, int] | None:
        """(coefficient, exponent) if exactly one term is present, else None."""
        found = None
        for e, c in self.terms():
            if found is not None:
                return None
            found = (c, e)
        return found

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        lo = min(self._min_exp, other._min_exp)
        hi = max(self._min_exp + len(self._coeffs), other._min_exp + len(other._coeffs))
        out = [Fraction(0)] * (hi - lo)
        for i, c in enumerate(self._coeffs):
            out[self._min_exp - lo + i] += c
        for i, c in enumerate(other._coeffs):
            out[other._min_exp - lo + i] += c
        return LaurentPoly(out, lo)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly([-c for c in self._coeffs], self._min_exp)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return ZERO
        lo = self._min_exp + other._min_exp
        if lo < MIN_EXPONENT:
            raise ExponentRangeError(
                f"product would need exponent {lo}, below the supported minimum "
                f"{MIN_EXPONENT}"
            )
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                if b != 0:
                    out[i + j] += a * b
        return LaurentPoly(out, lo)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only nonnegative integer powers are supported")
        out = ONE
        for _ in range(exponent):
            out = out * self
        return out

    def inverse(self) -> "LaurentPoly":
        """Multiplicative inverse; exists only for monomials c*l^e with -e >= -1."""
        mono = self.as_monomial()
        if mono is None:
            raise NonInvertibleError(f"{self} is not invertible (not a monomial)")
        c, e = mono
        if -e < MIN_EXPONENT:
            raise ExponentRangeError(
                f"inverse of {self} would need exponent {-e}"
            )
        return LaurentPoly.from_terms({-e: 1 / c})

    def eval(self, point) -> Fraction:
        """Exact evaluation at a rational point (ZeroDivisionError at 0 with an l^-1 term)."""
        x = _exact(point)
        total = Fraction(0)
        for e, c in self.terms():
            total += c * x**e
        return total

    # -- comparisons / hashing -----------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self._min_exp == other._min_exp and self._coeffs == other._coeffs

    def __hash__(self):
        # Constants hash like their Fraction value so mixed containers behave.
        if not self._coeffs:
            return hash(Fraction(0))
        if self._min_exp == 0 and len(self._coeffs) == 1:
            return hash(self._coeffs[0])
        return hash((self._min_exp, self._coeffs))

    def __bool__(self):
        return not self.is_zero

    # -- rendering / serialization -------------------------------------------

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for e, c in self.terms():
            if e == 0:
                parts.append(str(c))
                continue
            name = "l" if e == 1 else f"l^{e}"
            if c == 1:
                parts.append(name)
            elif c == -1:
                parts.append(f"-{name}")
            else:
                parts.append(f"{c}*{name}")
        text = parts[0]
        for part in parts[1:]:
            text += part if part.startswith("-") else f"+{part}"
        return text

    def __repr__(self):
        return f"<LaurentPoly {self}>"

    def to_json(self) -> dict:
        return {
            "min_exp": self._min_exp,
            "coeffs": [str(c) for c in self._coeffs],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "LaurentPoly":
        return cls([Fraction(c) for c in obj["coeffs"]], int(obj["min_exp"]))


def _coerce(value: object) -> LaurentPoly | None:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return LaurentPoly((_exact(value),))
    return None


ZERO = LaurentPoly()
ONE = LaurentPoly((Fraction(1),))
LAMBDA = LaurentPoly((Fraction(1),), 1)
LAMBDA_INV = LaurentPoly((Fraction(1),), -1)


def falling_factorial(base: LaurentPoly, n: int) -> LaurentPoly:
    """(base)_n = base(base-1)...(base-n+1), extended by (base)_{-1} = 1/(base+1).

    The n = -1 extension is what the nested coefficient sums in
    :mod:`boole_kernel.triangle` rely on; it only exists when base+1 is an
    invertible monomial (in practice base+1 = l there, giving l^-1).
    """
    if not isinstance(n, int) or n < -1:
        raise ValueError(f"falling factorial is defined for n >= -1, got {n}")
    if n == -1:
        return (base + ONE).inverse()
    out = ONE
    for i in range(n):
        out = out * (base - i)
    return out
