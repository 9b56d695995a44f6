"""Number families read off exponential generating functions.

Everything here is produced by one engine: build the generating series to
the required truncation order over the right coefficient ring, then read
off n! times the t^n coefficient.

  * Boole numbers Bl_n(l):            1/((1+t)^l + 1)
  * Boole polynomials Bl_n(x|l):      the same times (1+t)^x
  * order-r (Peters) variants:        r-th power of the base factor
  * Euler numbers E_n (E_n^(r)):      2/(e^t + 1), r-th power for order r
  * Stirling triangles:               (e^t-1)^k/k! and (log(1+t))^k/k!

The classical recurrences for the same families are deliberately not used
here; the test-suite implements them independently and cross-checks both
routes.  Two facts worth pinning down because they are easy to mis-copy:
the degree-1 entry of the order-r Boole table is -r*l/2^(r+1) (chain rule
on the r-th power of the base series), and the first-kind Stirling numbers
come out signed, as the log-power expansion forces.

Tables can be built symbolically (coefficients are Laurent polynomials in
``l``) or at a fixed nonzero rational parameter (plain rationals); the
symbolic route is authoritative and the fixed route exists as a fast,
independently checkable specialization.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .laurent import LAMBDA, LaurentPoly
from .rationals import format_rat
from .series import LAURENT_RING, RAT_RING, Series, binom_pow, exponential, log1p


def boole_series(
    order: int,
    r: int = 1,
    lam: Fraction | None = None,
    x: Fraction | None = None,
) -> Series:
    """(1/((1+t)^l + 1))^r * (1+t)^x truncated to the given order.

    ``lam=None`` builds over Laurent polynomials (symbolic parameter);
    a rational ``lam`` must be nonzero, since the base generating function
    degenerates at 0.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    if r < 1:
        raise ValueError("order r of the family must be >= 1")
    if lam is None:
        ring = LAURENT_RING
        alpha = LAMBDA
    else:
        lam = Fraction(lam)
        if lam == 0:
            raise ValueError("the parameter must be nonzero")
        ring = RAT_RING
        alpha = lam
    denom = binom_pow(alpha, order, ring) + Series.one(ring, order)
    f = denom.inverse() ** r
    if x is not None:
        shift = LaurentPoly.constant(x) if lam is None else Fraction(x)
        f = f * binom_pow(shift, order, ring)
    return f


@dataclass(frozen=True)
class BooleTable:
    """Values Bl_n^(r)(x|l) for n = 0..n_max, symbolic or at fixed rational l."""

    n_max: int
    r: int
    lam: Fraction | None
    x: Fraction | None
    values: tuple

    @property
    def mode(self) -> str:
        return "symbolic" if self.lam is None else format_rat(self.lam)

    def value(self, n: int):
        return self.values[n]

    def to_json_dict(self) -> dict:
        if self.lam is None:
            vals = [v.to_json() for v in self.values]
        else:
            vals = [format_rat(v) for v in self.values]
        out = {
            "family": "boole",
            "r": self.r,
            "mode": self.mode,
            "n_max": self.n_max,
            "values": vals,
        }
        if self.x is not None:
            out["x"] = format_rat(self.x)
        return out

    def csv_rows(self) -> list[str]:
        return [f"{n},{self.values[n]}" for n in range(self.n_max + 1)]


@dataclass(frozen=True)
class EulerTable:
    """Euler numbers E_n^(r) for n = 0..n_max (always plain rationals)."""

    n_max: int
    r: int
    values: tuple

    def value(self, n: int) -> Fraction:
        return self.values[n]

    def to_json_dict(self) -> dict:
        return {
            "family": "euler",
            "r": self.r,
            "mode": None,
            "n_max": self.n_max,
            "values": [format_rat(v) for v in self.values],
        }

    def csv_rows(self) -> list[str]:
        return [f"{n},{self.values[n]}" for n in range(self.n_max + 1)]


@dataclass(frozen=True)
class StirlingTriangle:
    """Triangle S(n,k), 0 <= k <= n <= n_max; kind 'first' (signed) or 'second'."""

    kind: str
    n_max: int
    values: tuple  # row n is a tuple of n+1 entries

    def value(self, n: int, k: int) -> Fraction:
        if k < 0 or k > n:
            return Fraction(0)
        return self.values[n][k]

    def to_json_dict(self) -> dict:
        return {
            "family": "stirling1" if self.kind == "first" else "stirling2",
            "r": None,
            "mode": None,
            "n_max": self.n_max,
            "values": [[format_rat(v) for v in row] for row in self.values],
        }

    def csv_rows(self) -> list[str]:
        return [
            ",".join([str(n)] + [format_rat(v) for v in row])
            for n, row in enumerate(self.values)
        ]


def boole_numbers(n_max: int, r: int = 1, lam: Fraction | None = None) -> BooleTable:
    """Boole numbers Bl_n^(r): n! times the t^n coefficient of the r-th power series."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    f = boole_series(n_max + 1, r=r, lam=lam)
    return BooleTable(
        n_max=n_max,
        r=r,
        lam=lam,
        x=None,
        values=tuple(f.egf_coefficient(n) for n in range(n_max + 1)),
    )


def boole_polynomials(
    n_max: int, x: Fraction, lam: Fraction | None = None, r: int = 1
) -> BooleTable:
    """Boole polynomials Bl_n^(r)(x|l) at a fixed rational shift x."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    x = Fraction(x)
    f = boole_series(n_max + 1, r=r, lam=lam, x=x)
    return BooleTable(
        n_max=n_max,
        r=r,
        lam=lam,
        x=x,
        values=tuple(f.egf_coefficient(n) for n in range(n_max + 1)),
    )


def euler_numbers(n_max: int, r: int = 1) -> EulerTable:
    """Euler numbers of order r: n! [t^n] (2/(e^t+1))^r."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if r < 1:
        raise ValueError("order r of the family must be >= 1")
    order = n_max + 1
    denom = exponential(order) + Series.one(RAT_RING, order)
    g = (2 * denom.inverse()) ** r
    return EulerTable(
        n_max=n_max,
        r=r,
        values=tuple(g.egf_coefficient(n) for n in range(n_max + 1)),
    )


def _power_triangle(base: Series, n_max: int) -> tuple:
    """Rows S(n,k) = n! [t^n] base^k / k! for 0 <= k <= n <= n_max."""
    order = n_max + 1
    rows = [[Fraction(0)] * (n + 1) for n in range(n_max + 1)]
    power = Series.one(RAT_RING, order)
    for k in range(n_max + 1):
        if k > 0:
            power = power * base
        inv_kfact = Fraction(1, factorial(k))
        for n in range(k, n_max + 1):
            rows[n][k] = power.egf_coefficient(n) * inv_kfact
    return tuple(tuple(row) for row in rows)


def stirling2(n_max: int) -> StirlingTriangle:
    """Second-kind Stirling triangle via powers of e^t - 1."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    base = exponential(n_max + 1) - Series.one(RAT_RING, n_max + 1)
    return StirlingTriangle(kind="second", n_max=n_max, values=_power_triangle(base, n_max))


def stirling1(n_max: int) -> StirlingTriangle:
    """Signed first-kind Stirling triangle via powers of log(1+t)."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    return StirlingTriangle(
        kind="first", n_max=n_max, values=_power_triangle(log1p(n_max + 1), n_max)
    )
