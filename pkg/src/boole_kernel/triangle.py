"""Coefficient triangle of the derivative expansion of F = 1/((1+t)^l + 1).

The N-th derivative of the base generating function can be written as

    F^(N) = (-1)^N * l * (1+t)^(-N) * sum_{i=1..N+1} a_{i-1}(N) * F^i

with coefficients a_k(N) that are polynomials in l of degree <= N-1 for
N >= 1; the seed a_0(0) = 1/l is the single Laurent value in the whole
table.  Two independent constructions are provided:

  * :func:`triangle_by_recurrence` grows the table row by row: differentiate
    the expansion once more and compare like powers of F.  This is the
    authoritative constructor.
  * :func:`closed_form_entry` evaluates the fully unrolled nested
    falling-factorial sums for one interior entry directly.  The innermost
    factor dips to falling-factorial subscript -1 exactly when the summation
    indices are maximal; the extension (x)_{-1} = 1/(x+1) then always
    receives x+1 = l, which keeps every term inside the Laurent domain (an
    assertion enforces this on every such term).

The closed form is validated entry-by-entry against the recurrence in the
test-suite; nothing downstream consumes it unchecked.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterator

from .laurent import LAMBDA, LAMBDA_INV, ONE, ZERO, LaurentPoly, falling_factorial


class ATriangle:
    """Immutable table a_k(N) for 0 <= k <= N <= n_max."""

    __slots__ = ("_rows",)

    def __init__(self, rows: tuple):
        self._rows = rows

    @property
    def n_max(self) -> int:
        return len(self._rows) - 1

    def row(self, n: int) -> tuple:
        return self._rows[n]

    def entry(self, n: int, k: int) -> LaurentPoly:
        return self._rows[n][k]

    def rows(self) -> Iterator[tuple]:
        return iter(self._rows)

    def extend(self, n_max: int) -> "ATriangle":
        """Triangle covering rows 0..n_max, reusing already-built rows."""
        if n_max <= self.n_max:
            return self
        rows = list(self._rows)
        _grow(rows, n_max)
        return ATriangle(tuple(rows))

    def __eq__(self, other):
        if not isinstance(other, ATriangle):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def to_json_dict(self) -> dict:
        return {
            "family": "triangle",
            "n_max": self.n_max,
            "rows": [[entry.to_json() for entry in row] for row in self._rows],
        }

    def csv_rows(self) -> list[str]:
        out = []
        for n, row in enumerate(self._rows):
            for k, entry in enumerate(row):
                out.append(f"{n},{k},{entry}")
        return out


def _grow(rows: list, upto: int) -> None:
    """Append rows via the one-step recurrence until row `upto` exists."""
    while len(rows) <= upto:
        n = len(rows) - 1
        prev = rows[-1]
        nxt = [(n + LAMBDA) * prev[0]]
        for i in range(2, n + 2):
            nxt.append(-((i - 1) * LAMBDA) * prev[i - 2] + (n + i * LAMBDA) * prev[i - 1])
        nxt.append(-((n + 1) * LAMBDA) * prev[n])
        rows.append(tuple(nxt))


def triangle_by_recurrence(n_max: int) -> ATriangle:
    """Build rows 0..n_max from the seed a_0(0) = 1/l.

    Row N+1 follows from row N by one differentiation:
      a_0(N+1)     = (N+l) a_0(N)
      a_{i-1}(N+1) = -(i-1) l a_{i-2}(N) + (N+il) a_{i-1}(N)   for 2 <= i <= N+1
      a_{N+1}(N+1) = -(N+1) l a_N(N)
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    rows = [(LAMBDA_INV,)]
    _grow(rows, n_max)
    return ATriangle(tuple(rows))


def first_column_closed_form(n: int) -> LaurentPoly:
    """a_0(n) = (n+l-1)_{n-1}; the n = 0 case lands on the 1/l seed."""
    if n < 0:
        raise ValueError("row index must be >= 0")
    return falling_factorial((n - 1) + LAMBDA, n - 1)


def diagonal_closed_form(n: int) -> LaurentPoly:
    """a_n(n) = (-1)^n l^(n-1) n!."""
    if n < 0:
        raise ValueError("row index must be >= 0")
    sign = -1 if n % 2 else 1
    return LaurentPoly.from_terms({n - 1: Fraction(sign * factorial(n))})


def closed_form_entry(j: int, n: int) -> LaurentPoly:
    """Interior entry a_j(n), 1 <= j <= n-1, by direct nested-sum evaluation.

    Writing m = n-1, the entry is

        (-1)^j j! l^j  *  sum over indices i_j, ..., i_1 >= 0
                          with i_j + ... + i_1 <= m-j+1
        of   prod_{v=j..1} (m + (v+1)l - s_v - (j-v))_{i_v}
           * (m + l - s - j)_{m - s - j}

    where s_v is the sum of the indices chosen above level v and s is the
    total.  The trailing factor has subscript -1 exactly when the indices
    exhaust the budget; its argument is then l - 1, so the (x)_{-1} = 1/(x+1)
    extension contributes 1/l.
    """
    if not 1 <= j <= n - 1:
        raise ValueError(f"closed form covers 1 <= j <= n-1, got j={j}, n={n}")
    m = n - 1
    budget = m - j + 1
    total = ZERO

    def descend(level: int, used: int, partial: LaurentPoly) -> None:
        nonlocal total
        base = (m - (j - level) - used) + (level + 1) * LAMBDA
        ff = ONE
        for i in range(budget - used + 1):
            if i:
                ff = ff * (base - (i - 1))
            branch = partial * ff
            if level > 1:
                descend(level - 1, used + i, branch)
            else:
                tail_n = m - (used + i) - j
                tail_base = tail_n + LAMBDA
                if tail_n == -1:
                    assert tail_base + 1 == LAMBDA
                total = total + branch * falling_factorial(tail_base, tail_n)

    descend(j, 0, ONE)
    sign = -1 if j % 2 else 1
    return LaurentPoly.from_terms({j: Fraction(sign * factorial(j))}) * total


def matrix_view(n_max: int, triangle: ATriangle | None = None) -> tuple:
    """Upper-triangular matrix M[i][j] = a_i(j), zero below the diagonal.

    Row 0 is the ascending falling-factorial sequence (n+l-1)_{n-1}; the
    diagonal is (-1)^n l^(n-1) n!.
    """
    if triangle is None or triangle.n_max < n_max:
        triangle = (triangle or triangle_by_recurrence(max(n_max, 1))).extend(n_max)
    return tuple(
        tuple(triangle.entry(col, row) if row <= col else ZERO for col in range(n_max + 1))
        for row in range(n_max + 1)
    )
