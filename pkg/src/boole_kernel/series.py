"""Truncated formal power series over an exact coefficient ring.

A :class:`Series` is a known prefix of a formal power series in ``t``: the
truncation order M and the coefficients of t^0 .. t^(M-1); everything from
t^M on is unknown.  Operations never pretend to know more than they do:
binary operations on different orders truncate to the shorter operand, and
differentiation shortens the result by one.  That makes every "equal mod
t^M" claim in the test-suite an honest statement about computed data.

One implementation serves both coefficient domains (plain rationals and
Laurent polynomials); the ring adapters below provide the constants and the
few operations duck typing cannot (inversion, JSON form).
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Sequence

from .laurent import (
    LAMBDA,  # noqa: F401  (re-exported convenience for series-building callers)
    ExponentRangeError,
    LaurentPoly,
    NonInvertibleError,
)


class CoefficientRing:
    """Adapter for a coefficient domain: constants, coercion, inversion, JSON."""

    name: str = "?"
    zero: object = None
    one: object = None

    def coerce(self, value):
        """Return the value as a ring element, or None if it does not belong."""
        raise NotImplementedError

    def from_rational(self, value):
        raise NotImplementedError

    def invert(self, x):
        raise NotImplementedError

    def coeff_to_json(self, x):
        raise NotImplementedError

    def coeff_from_json(self, obj):
        raise NotImplementedError

    def __repr__(self):
        return f"<ring {self.name}>"


class _RationalRing(CoefficientRing):
    name = "rational"
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        return None

    def from_rational(self, value):
        return Fraction(value)

    def invert(self, x):
        if x == 0:
            raise NonInvertibleError("zero has no inverse")
        return 1 / Fraction(x)

    def coeff_to_json(self, x):
        return str(x)

    def coeff_from_json(self, obj):
        return Fraction(obj)


class _LaurentRing(CoefficientRing):
    name = "laurent"
    zero = LaurentPoly()
    one = LaurentPoly.constant(1)

    def coerce(self, value):
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, (int, Fraction)):
            return LaurentPoly.constant(value)
        return None

    def from_rational(self, value):
        return LaurentPoly.constant(value)

    def invert(self, x):
        return x.inverse()

    def coeff_to_json(self, x):
        return x.to_json()

    def coeff_from_json(self, obj):
        return LaurentPoly.from_json(obj)


RAT_RING = _RationalRing()
LAURENT_RING = _LaurentRing()


class Series:
    """Power series prefix: coefficients of t^0 .. t^(order-1) over a ring."""

    __slots__ = ("_ring", "_coeffs")

    def __init__(self, ring: CoefficientRing, coeffs: Sequence):
        values = []
        for c in coeffs:
            v = ring.coerce(c)
            if v is None:
                raise TypeError(f"{c!r} is not a {ring.name} coefficient")
            values.append(v)
        if not values:
            raise ValueError("a series needs order >= 1")
        self._ring = ring
        self._coeffs = tuple(values)

    @classmethod
    def constant(cls, ring: CoefficientRing, value, order: int) -> "Series":
        if order < 1:
            raise ValueError("a series needs order >= 1")
        return cls(ring, [value] + [ring.zero] * (order - 1))

    @classmethod
    def one(cls, ring: CoefficientRing, order: int) -> "Series":
        return cls.constant(ring, ring.one, order)

    @classmethod
    def zero(cls, ring: CoefficientRing, order: int) -> "Series":
        return cls.constant(ring, ring.zero, order)

    @property
    def ring(self) -> CoefficientRing:
        return self._ring

    @property
    def order(self) -> int:
        return len(self._coeffs)

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def coefficient(self, n: int):
        if not 0 <= n < self.order:
            raise IndexError(f"coefficient {n} unknown at order {self.order}")
        return self._coeffs[n]

    def egf_coefficient(self, n: int):
        """n! times the t^n coefficient (the value an exponential gf encodes)."""
        return self.coefficient(n) * factorial(n)

    def truncate(self, order: int) -> "Series":
        if not 1 <= order <= self.order:
            raise ValueError(f"cannot truncate order {self.order} to {order}")
        if order == self.order:
            return self
        return Series(self._ring, self._coeffs[:order])

    # -- arithmetic ----------------------------------------------------------

    def _aligned(self, other: "Series") -> tuple["Series", "Series"]:
        if self._ring is not other._ring:
            raise TypeError(
                f"mixed coefficient rings: {self._ring.name} vs {other._ring.name}"
            )
        m = min(self.order, other.order)
        return self.truncate(m), other.truncate(m)

    def __add__(self, other):
        if isinstance(other, Series):
            a, b = self._aligned(other)
            return Series(a._ring, [x + y for x, y in zip(a._coeffs, b._coeffs)])
        c = self._ring.coerce(other)
        if c is None:
            return NotImplemented
        out = list(self._coeffs)
        out[0] = out[0] + c
        return Series(self._ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Series(self._ring, [-c for c in self._coeffs])

    def __sub__(self, other):
        if isinstance(other, Series):
            a, b = self._aligned(other)
            return Series(a._ring, [x - y for x, y in zip(a._coeffs, b._coeffs)])
        c = self._ring.coerce(other)
        if c is None:
            return NotImplemented
        out = list(self._coeffs)
        out[0] = out[0] - c
        return Series(self._ring, out)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Series):
            a, b = self._aligned(other)
            m = a.order
            out = [a._ring.zero] * m
            for i, x in enumerate(a._coeffs):
                if x == a._ring.zero:
                    continue
                for j in range(m - i):
                    y = b._coeffs[j]
                    if y != a._ring.zero:
                        out[i + j] = out[i + j] + x * y
            return Series(a._ring, out)
        c = self._ring.coerce(other)
        if c is None:
            return NotImplemented
        return Series(self._ring, [c * x for x in self._coeffs])

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only nonnegative integer powers are supported")
        out = Series.one(self._ring, self.order)
        for _ in range(exponent):
            out = out * self
        return out

    def inverse(self) -> "Series":
        """Multiplicative inverse mod t^order; needs an invertible constant term."""
        c0inv = self._ring.invert(self._coeffs[0])
        out = [c0inv]
        for n in range(1, self.order):
            acc = self._ring.zero
            for k in range(1, n + 1):
                acc = acc + self._coeffs[k] * out[n - k]
            out.append(-(c0inv * acc))
        return Series(self._ring, out)

    def derivative(self) -> "Series":
        """Term-by-term d/dt; result order drops by one (order must be >= 2)."""
        if self.order < 2:
            raise ValueError("cannot differentiate a series of order < 2")
        return Series(
            self._ring, [self._coeffs[k] * k for k in range(1, self.order)]
        )

    def exp(self) -> "Series":
        """exp of a series with zero constant term, via (exp a)' = a' exp a."""
        if self._coeffs[0] != self._ring.zero:
            raise ValueError("exp needs a zero constant term")
        out = [self._ring.one]
        for n in range(1, self.order):
            acc = self._ring.zero
            for k in range(1, n + 1):
                acc = acc + (self._coeffs[k] * k) * out[n - k]
            out.append(acc * Fraction(1, n))
        return Series(self._ring, out)

    # -- comparisons / rendering ----------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return (
            self._ring is other._ring
            and self._coeffs == other._coeffs
        )

    def __hash__(self):
        return hash((self._ring.name, self._coeffs))

    def __str__(self):
        inner = ", ".join(str(c) for c in self._coeffs)
        return f"[{inner}] + O(t^{self.order})"

    def __repr__(self):
        return f"<Series/{self._ring.name} {self}>"

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "coeffs": [self._ring.coeff_to_json(c) for c in self._coeffs],
        }


def exponential(order: int, ring: CoefficientRing = RAT_RING) -> Series:
    """e^t truncated: coefficients 1/n!."""
    return Series(ring, [ring.from_rational(Fraction(1, factorial(n))) for n in range(order)])


def log1p(order: int, ring: CoefficientRing = RAT_RING) -> Series:
    """log(1+t) truncated: t - t^2/2 + t^3/3 - ..."""
    coeffs = [ring.zero]
    for k in range(1, order):
        sign = 1 if k % 2 else -1
        coeffs.append(ring.from_rational(Fraction(sign, k)))
    return Series(ring, coeffs)


def binom_pow(alpha, order: int, ring: CoefficientRing | None = None) -> Series:
    """(1+t)^alpha: the t^n coefficient is the falling factorial (alpha)_n / n!.

    alpha may be a rational (series over RAT_RING) or a genuine polynomial
    (series over LAURENT_RING); a Laurent alpha with an l^-1 term is rejected.
    """
    if ring is None:
        ring = LAURENT_RING if isinstance(alpha, LaurentPoly) else RAT_RING
    a = ring.coerce(alpha)
    if a is None:
        raise TypeError(f"{alpha!r} is not a {ring.name} exponent")
    if isinstance(a, LaurentPoly) and not a.is_zero and a.min_exp < 0:
        raise ExponentRangeError("binomial exponent must be a polynomial (min_exp >= 0)")
    coeffs = []
    ff = ring.one
    for n in range(order):
        if n > 0:
            ff = ff * (a - (n - 1))
        coeffs.append(ff * Fraction(1, factorial(n)))
    return Series(ring, coeffs)


def compose_exp_minus_one(a: Series) -> Series:
    """a(e^t - 1), truncated to a's order (Horner over series)."""
    g = exponential(a.order, a.ring) - Series.one(a.ring, a.order)
    acc = Series.constant(a.ring, a.coeffs[-1], a.order)
    for k in range(a.order - 2, -1, -1):
        acc = acc * g + Series.constant(a.ring, a.coeffs[k], a.order)
    return acc
