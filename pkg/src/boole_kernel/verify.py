"""Machine verification of the package's identity families.

Every identity is checked as an exact equality of Laurent polynomials in the
parameter, per index -- no sampling, no tolerances.  Each check produces a
:class:`VerifyReport` that either passes or carries the smallest failing
index together with both sides in canonical text form, so a regression is
immediately diagnosable.

The eight identity families (ids fixed by the report schema):

  ODE       the N-th derivative of F = 1/((1+t)^l + 1) equals
            (-1)^N l (1+t)^(-N) sum_{i=1..N+1} a_{i-1}(N) F^i, as truncated series
  THM3      Bl_{k+N} = (-1)^N l sum_i a_{i-1}(N)
                       sum_{v=0..k} C(k,v) (-1)^v (N+v-1)_v Bl_{k-v}^(i)
  EQ32      l^n E_n / 2 = sum_k Bl_k S2(n,k)
  EQ34      l^n E_n^(i) / 2^i = sum_k Bl_k^(i) S2(n,k)
  EQ36      Bl_n = (1/2) sum_k E_k l^k S1(n,k)
  EQ38      2^i Bl_n^(i) = sum_k E_k^(i) l^k S1(n,k)
  THM4      (1/2) sum_m E_m l^m S1(k+N,m) = (-1)^N l sum_i a_{i-1}(N)
            sum_v C(k,v)(-1)^v (N+v-1)_v sum_m 2^(-i) E_m^(i) l^m S1(k-v,m)
  CHANGHEE  Bl_n at l = 1 equals (-1)^n n! / 2^(n+1)

Checks for one report are pure and independent; when the environment
variable ``BOOLE_KERNEL_THREADS`` is set above 1, report construction fans
out across that many threads.  Results are always aggregated in index order,
so reports are byte-identical regardless of pool size.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, perm
from typing import Callable, Sequence

from .laurent import LaurentPoly, ZERO
from .special_numbers import (
    boole_numbers,
    boole_series,
    euler_numbers,
    stirling1,
    stirling2,
)
from .series import binom_pow
from .triangle import ATriangle, triangle_by_recurrence

IDENTITY_IDS = ("ODE", "THM3", "EQ32", "EQ34", "EQ36", "EQ38", "THM4", "CHANGHEE")

IDENTITY_CATALOG = {
    "ODE": "F^(N) = (-1)^N l (1+t)^-N sum_{i=1..N+1} a_{i-1}(N) F^i (series identity)",
    "THM3": "Bl_{k+N} expanded through order-i Boole numbers weighted by a_{i-1}(N)",
    "EQ32": "l^n E_n / 2 = sum_k Bl_k S2(n,k)",
    "EQ34": "l^n E_n^(i) / 2^i = sum_k Bl_k^(i) S2(n,k)",
    "EQ36": "Bl_n = (1/2) sum_k E_k l^k S1(n,k)",
    "EQ38": "2^i Bl_n^(i) = sum_k E_k^(i) l^k S1(n,k)",
    "THM4": "Euler/first-kind-Stirling form of the Bl_{k+N} expansion",
    "CHANGHEE": "Bl_n at l=1 equals (-1)^n n! / 2^(n+1)",
}


@dataclass(frozen=True)
class Counterexample:
    index: tuple
    lhs: str
    rhs: str

    def to_json_dict(self) -> dict:
        return {"index": list(self.index), "lhs": self.lhs, "rhs": self.rhs}


@dataclass(frozen=True)
class VerifyReport:
    identity: str
    params: dict
    passed: bool
    counterexample: Counterexample | None

    def to_json_dict(self) -> dict:
        return {
            "identity": self.identity,
            "params": self.params,
            "passed": self.passed,
            "counterexample": (
                None if self.counterexample is None else self.counterexample.to_json_dict()
            ),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


def _report(identity: str, params: dict, indexed_pairs) -> VerifyReport:
    """Compare (index, lhs, rhs) triples in order; first mismatch wins."""
    counterexample = None
    for index, lhs, rhs in indexed_pairs:
        if lhs != rhs:
            counterexample = Counterexample(index=tuple(index), lhs=str(lhs), rhs=str(rhs))
            break
    return VerifyReport(
        identity=identity,
        params=dict(params),
        passed=counterexample is None,
        counterexample=counterexample,
    )


def _merge(identity: str, params: dict, reports: Sequence[VerifyReport]) -> VerifyReport:
    counterexample = None
    for rep in reports:
        if not rep.passed:
            counterexample = rep.counterexample
            break
    return VerifyReport(
        identity=identity,
        params=dict(params),
        passed=counterexample is None,
        counterexample=counterexample,
    )


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


def _lambda_monomial(value: Fraction, power: int) -> LaurentPoly:
    return LaurentPoly.from_terms({power: value})


def verify_ode(n: int, order: int, triangle: ATriangle | None = None) -> VerifyReport:
    """Differentiate F n times and compare against the coefficient-triangle form."""
    if order < n + 2:
        raise ValueError(f"order must be at least N+2, got N={n}, order={order}")
    if triangle is None or triangle.n_max < n:
        triangle = triangle_by_recurrence(max(n, 1))
    f = boole_series(order)
    lhs = f
    for _ in range(n):
        lhs = lhs.derivative()
    rhs_sum = None
    power = f
    for k in range(n + 1):
        if k > 0:
            power = power * f
        term = triangle.entry(n, k) * power
        rhs_sum = term if rhs_sum is None else rhs_sum + term
    rhs = binom_pow(LaurentPoly.constant(-n), order) * rhs_sum
    rhs = (_lambda_monomial(Fraction(_sign(n)), 1) * rhs).truncate(order - n)
    pairs = [
        ((n, m), lhs.coefficient(m), rhs.coefficient(m)) for m in range(order - n)
    ]
    return _report("ODE", {"N": n, "order": order}, pairs)


def verify_thm3(n: int, k_max: int, triangle: ATriangle | None = None) -> VerifyReport:
    """Expansion of Bl_{k+N} through the order-i tables, exact in the parameter."""
    if n < 1:
        raise ValueError("N must be >= 1")
    if triangle is None or triangle.n_max < n:
        triangle = triangle_by_recurrence(n)
    row = triangle.row(n)
    lhs_table = boole_numbers(k_max + n)
    side = [boole_numbers(k_max, r=i) for i in range(1, n + 2)]
    pairs = []
    for k in range(k_max + 1):
        acc = ZERO
        for i in range(1, n + 2):
            inner = ZERO
            for v in range(k + 1):
                weight = comb(k, v) * perm(n + v - 1, v) * _sign(v)
                inner = inner + side[i - 1].value(k - v) * weight
            acc = acc + row[i - 1] * inner
        rhs = _lambda_monomial(Fraction(_sign(n)), 1) * acc
        pairs.append(((n, k), lhs_table.value(k + n), rhs))
    return _report("THM3", {"N": n, "k_max": k_max}, pairs)


def verify_eq32(n_max: int) -> VerifyReport:
    """Second-kind Stirling transform of the Boole numbers against Euler numbers."""
    bl = boole_numbers(n_max)
    e = euler_numbers(n_max)
    s2 = stirling2(n_max)
    pairs = []
    for n in range(n_max + 1):
        lhs = _lambda_monomial(e.value(n) / 2, n)
        rhs = ZERO
        for k in range(n + 1):
            rhs = rhs + bl.value(k) * s2.value(n, k)
        pairs.append(((n,), lhs, rhs))
    return _report("EQ32", {"n_max": n_max}, pairs)


def verify_eq34(i_max: int, n_max: int) -> VerifyReport:
    """Order-i version of the second-kind Stirling bridge."""
    if i_max < 1:
        raise ValueError("i_max must be >= 1")
    s2 = stirling2(n_max)
    pairs = []
    for i in range(1, i_max + 1):
        bl = boole_numbers(n_max, r=i)
        e = euler_numbers(n_max, r=i)
        scale = Fraction(1, 2**i)
        for n in range(n_max + 1):
            lhs = _lambda_monomial(e.value(n) * scale, n)
            rhs = ZERO
            for k in range(n + 1):
                rhs = rhs + bl.value(k) * s2.value(n, k)
            pairs.append(((i, n), lhs, rhs))
    return _report("EQ34", {"i_max": i_max, "n_max": n_max}, pairs)


def verify_eq36(n_max: int) -> VerifyReport:
    """First-kind Stirling expansion of the Boole numbers in Euler numbers."""
    bl = boole_numbers(n_max)
    e = euler_numbers(n_max)
    s1 = stirling1(n_max)
    pairs = []
    for n in range(n_max + 1):
        rhs = LaurentPoly.from_terms(
            {k: e.value(k) * s1.value(n, k) / 2 for k in range(n + 1)}
        )
        pairs.append(((n,), bl.value(n), rhs))
    return _report("EQ36", {"n_max": n_max}, pairs)


def verify_eq38(i_max: int, n_max: int) -> VerifyReport:
    """Order-i version of the first-kind Stirling bridge."""
    if i_max < 1:
        raise ValueError("i_max must be >= 1")
    s1 = stirling1(n_max)
    pairs = []
    for i in range(1, i_max + 1):
        bl = boole_numbers(n_max, r=i)
        e = euler_numbers(n_max, r=i)
        for n in range(n_max + 1):
            lhs = bl.value(n) * (2**i)
            rhs = LaurentPoly.from_terms(
                {k: e.value(k) * s1.value(n, k) for k in range(n + 1)}
            )
            pairs.append(((i, n), lhs, rhs))
    return _report("EQ38", {"i_max": i_max, "n_max": n_max}, pairs)


def verify_thm4(n: int, k_max: int, triangle: ATriangle | None = None) -> VerifyReport:
    """Euler/first-kind-Stirling restatement of the Bl_{k+N} expansion."""
    if n < 1:
        raise ValueError("N must be >= 1")
    if triangle is None or triangle.n_max < n:
        triangle = triangle_by_recurrence(n)
    row = triangle.row(n)
    e_plain = euler_numbers(k_max + n)
    s1 = stirling1(k_max + n)
    e_side = [euler_numbers(k_max, r=i) for i in range(1, n + 2)]

    def euler_stirling_poly(i: int, m: int) -> LaurentPoly:
        # sum_{v=0..m} 2^(-i) E_v^(i) l^v S1(m, v)
        scale = Fraction(1, 2**i)
        return LaurentPoly.from_terms(
            {v: e_side[i - 1].value(v) * s1.value(m, v) * scale for v in range(m + 1)}
        )

    pairs = []
    for k in range(k_max + 1):
        lhs = LaurentPoly.from_terms(
            {m: e_plain.value(m) * s1.value(k + n, m) / 2 for m in range(k + n + 1)}
        )
        acc = ZERO
        for i in range(1, n + 2):
            inner = ZERO
            for v in range(k + 1):
                weight = comb(k, v) * perm(n + v - 1, v) * _sign(v)
                inner = inner + euler_stirling_poly(i, k - v) * weight
            acc = acc + row[i - 1] * inner
        rhs = _lambda_monomial(Fraction(_sign(n)), 1) * acc
        pairs.append(((n, k), lhs, rhs))
    return _report("THM4", {"N": n, "k_max": k_max}, pairs)


def changhee_crosscheck(n_max: int) -> VerifyReport:
    """Independent oracle at parameter 1: Bl_n(1) = (-1)^n n! / 2^(n+1)."""
    bl = boole_numbers(n_max)
    pairs = []
    for n in range(n_max + 1):
        lhs = bl.value(n).eval(1)
        rhs = Fraction(_sign(n) * factorial(n), 2 ** (n + 1))
        pairs.append(((n,), lhs, rhs))
    return _report("CHANGHEE", {"n_max": n_max}, pairs)


# -- whole-suite runner -------------------------------------------------------


def _max_workers() -> int:
    raw = os.environ.get("BOOLE_KERNEL_THREADS")
    if raw is None:
        return 1
    workers = int(raw)
    if workers < 1:
        raise ValueError(f"BOOLE_KERNEL_THREADS must be >= 1, got {raw!r}")
    return workers


def _run_tasks(tasks: Sequence[Callable[[], VerifyReport]]) -> list[VerifyReport]:
    workers = _max_workers()
    if workers == 1 or len(tasks) <= 1:
        return [task() for task in tasks]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda task: task(), tasks))


def verify_all(
    *,
    ode_n_max: int = 8,
    ode_order: int = 16,
    thm3_n_max: int = 6,
    thm3_k_max: int = 8,
    eq32_n_max: int = 12,
    eq34_i_max: int = 4,
    eq34_n_max: int = 10,
    eq36_n_max: int = 12,
    eq38_i_max: int = 4,
    eq38_n_max: int = 10,
    thm4_n_max: int = 4,
    thm4_k_max: int = 6,
    changhee_n_max: int = 15,
) -> list[VerifyReport]:
    """Run all eight identity families; one merged report per family.

    Defaults are the package's acceptance grid and finish in seconds.
    """
    triangle = triangle_by_recurrence(max(ode_n_max, thm3_n_max, thm4_n_max, 1))
    ode_tasks = [
        (lambda n=n: verify_ode(n, ode_order, triangle)) for n in range(1, ode_n_max + 1)
    ]
    thm3_tasks = [
        (lambda n=n: verify_thm3(n, thm3_k_max, triangle))
        for n in range(1, thm3_n_max + 1)
    ]
    thm4_tasks = [
        (lambda n=n: verify_thm4(n, thm4_k_max, triangle))
        for n in range(1, thm4_n_max + 1)
    ]
    single_tasks = [
        lambda: verify_eq32(eq32_n_max),
        lambda: verify_eq34(eq34_i_max, eq34_n_max),
        lambda: verify_eq36(eq36_n_max),
        lambda: verify_eq38(eq38_i_max, eq38_n_max),
        lambda: changhee_crosscheck(changhee_n_max),
    ]
    results = _run_tasks(ode_tasks + thm3_tasks + thm4_tasks + single_tasks)
    n_ode, n_thm3, n_thm4 = len(ode_tasks), len(thm3_tasks), len(thm4_tasks)
    ode_reports = results[:n_ode]
    thm3_reports = results[n_ode : n_ode + n_thm3]
    thm4_reports = results[n_ode + n_thm3 : n_ode + n_thm3 + n_thm4]
    eq32_report, eq34_report, eq36_report, eq38_report, changhee_report = results[
        n_ode + n_thm3 + n_thm4 :
    ]
    return [
        _merge("ODE", {"N_max": ode_n_max, "order": ode_order}, ode_reports),
        _merge("THM3", {"N_max": thm3_n_max, "k_max": thm3_k_max}, thm3_reports),
        eq32_report,
        eq34_report,
        eq36_report,
        eq38_report,
        _merge("THM4", {"N_max": thm4_n_max, "k_max": thm4_k_max}, thm4_reports),
        changhee_report,
    ]


def summary_table(reports: Sequence[VerifyReport]) -> str:
    """Fixed-width terminal summary, one line per report."""
    rows = []
    for rep in reports:
        grid = " ".join(f"{key}={val}" for key, val in rep.params.items())
        if rep.passed:
            outcome = "pass"
        else:
            ce = rep.counterexample
            outcome = f"FAIL at {ce.index}: {ce.lhs} != {ce.rhs}"
        rows.append((rep.identity, grid, outcome))
    id_w = max(len("identity"), *(len(r[0]) for r in rows))
    grid_w = max(len("grid"), *(len(r[1]) for r in rows))
    lines = [f"{'identity':<{id_w}}  {'grid':<{grid_w}}  result"]
    for identity, grid, outcome in rows:
        lines.append(f"{identity:<{id_w}}  {grid:<{grid_w}}  {outcome}")
    passed = sum(1 for rep in reports if rep.passed)
    lines.append(f"{passed}/{len(reports)} identity families passed")
    return "\n".join(lines)
