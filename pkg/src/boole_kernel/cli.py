"""Command-line front end.

Subcommands:
  numbers    generate one number family (boole / euler / stirling1 / stirling2)
  triangle   the ODE coefficient triangle, row view or matrix view
  series     the base generating series (1/((1+t)^l + 1))^r, optionally differentiated
  verify     run identity verification, print a summary table
  all        tables plus the full verification grid in one go

Output formats: ``pretty`` (human), ``json`` (structured, exact, re-parseable)
and ``csv`` (flat rows, polynomials rendered with ``l`` for the parameter).
Exit codes: 0 success / all identities pass, 1 some identity failed,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .rationals import format_rat, parse_rat
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
from .triangle import matrix_view, triangle_by_recurrence
from .verify import (
    IDENTITY_IDS,
    summary_table,
    verify_all,
)

_FAMILIES = ("boole", "euler", "stirling1", "stirling2")


class UsageError(Exception):
    """Bad flags or flag values; mapped to exit code 2."""


@dataclass(frozen=True)
class CliConfig:
    command: str
    n_max: int | None = None  # None: each consumer falls back to its own default
    N_max: int | None = None
    k_max: int | None = None
    i_max: int | None = None
    order: int = 16
    lam: Fraction | None = None  # None = symbolic parameter
    fmt: str = "pretty"
    out: str | None = None
    family: str | None = None
    r: int = 1
    x: Fraction | None = None
    deriv: int = 0
    view: str = "rows"
    identities: tuple = IDENTITY_IDS


def _parse_lambda(text: str) -> Fraction | None:
    if text == "symbolic":
        return None
    try:
        value = parse_rat(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if value == 0:
        raise UsageError("--lambda must be nonzero")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boole-kernel",
        description="Exact tables and identity verification for Boole-type numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", dest="fmt", choices=("pretty", "json", "csv"),
                       default="pretty")
        p.add_argument("--out", default=None, help="write output to this file")

    p_numbers = sub.add_parser("numbers", help="generate a number family")
    p_numbers.add_argument("--family", choices=_FAMILIES, required=True)
    p_numbers.add_argument("--n-max", dest="n_max", type=int, default=16)
    p_numbers.add_argument("--r", type=int, default=1,
                           help="order of the family (boole/euler)")
    p_numbers.add_argument("--x", default=None,
                           help="rational shift: emit Boole polynomial values")
    p_numbers.add_argument("--lambda", dest="lam", default="symbolic")
    common(p_numbers)

    p_triangle = sub.add_parser("triangle", help="ODE coefficient triangle")
    p_triangle.add_argument("--N-max", dest="N_max", type=int, default=8)
    p_triangle.add_argument("--view", choices=("rows", "matrix"), default="rows")
    common(p_triangle)

    p_series = sub.add_parser("series", help="base generating series")
    p_series.add_argument("--order", type=int, default=16)
    p_series.add_argument("--r", type=int, default=1)
    p_series.add_argument("--deriv", type=int, default=0,
                          help="differentiate this many times")
    p_series.add_argument("--lambda", dest="lam", default="symbolic")
    common(p_series)

    p_verify = sub.add_parser("verify", help="run identity verification")
    p_verify.add_argument("--all", action="store_true",
                          help="verify every identity family (the default)")
    p_verify.add_argument("--identity", action="append", choices=IDENTITY_IDS,
                          help="restrict to one family (repeatable)")
    p_verify.add_argument("--N-max", dest="N_max", type=int, default=None)
    p_verify.add_argument("--k-max", dest="k_max", type=int, default=None)
    p_verify.add_argument("--n-max", dest="n_max", type=int, default=None)
    p_verify.add_argument("--i-max", dest="i_max", type=int, default=None)
    p_verify.add_argument("--order", type=int, default=16)
    common(p_verify)

    p_all = sub.add_parser("all", help="tables plus full verification")
    p_all.add_argument("--n-max", dest="n_max", type=int, default=12)
    p_all.add_argument("--N-max", dest="N_max", type=int, default=8)
    common(p_all)

    return parser


def _config_from_args(args: argparse.Namespace) -> CliConfig:
    kwargs = {"command": args.command, "fmt": args.fmt, "out": args.out}
    if hasattr(args, "n_max") and args.n_max is not None:
        kwargs["n_max"] = args.n_max
    for name in ("N_max", "k_max", "i_max", "order", "family", "r", "deriv", "view"):
        if hasattr(args, name) and getattr(args, name) is not None:
            kwargs[name] = getattr(args, name)
    if getattr(args, "lam", None) is not None:
        kwargs["lam"] = _parse_lambda(args.lam)
    if getattr(args, "x", None) is not None:
        try:
            kwargs["x"] = parse_rat(args.x)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if args.command == "verify":
        chosen = getattr(args, "identity", None)
        if chosen:
            if args.all:
                raise UsageError("--all and --identity are mutually exclusive")
            kwargs["identities"] = tuple(chosen)
    return CliConfig(**kwargs)


def _validate(cfg: CliConfig) -> None:
    for name in ("n_max", "order", "r"):
        value = getattr(cfg, name)
        if value is not None and value < 0:
            raise UsageError(f"--{name.replace('_', '-')} must be nonnegative")
    for name in ("N_max", "k_max", "i_max"):
        value = getattr(cfg, name)
        if value is not None and value < 1:
            raise UsageError(f"--{name.replace('_', '-')} must be >= 1")
    if cfg.command in ("numbers", "series") and cfg.r < 1:
        raise UsageError("--r must be >= 1")
    if cfg.command == "series" and cfg.order < cfg.deriv + 1:
        raise UsageError("--order must exceed --deriv")
    if cfg.command == "verify" and "ODE" in cfg.identities:
        n_cap = cfg.N_max if cfg.N_max is not None else 8
        if cfg.order < n_cap + 2:
            raise UsageError(
                f"--order must be at least N_max+2 = {n_cap + 2} when verifying ODE"
            )
    if cfg.command == "numbers":
        if cfg.family in ("euler", "stirling1", "stirling2") and cfg.lam is not None:
            raise UsageError(f"--lambda does not apply to family {cfg.family!r}")
        if cfg.family != "boole" and cfg.x is not None:
            raise UsageError("--x applies to the boole family only")
        if cfg.family in ("stirling1", "stirling2") and cfg.r != 1:
            raise UsageError("--r does not apply to Stirling triangles")


# -- rendering -----------------------------------------------------------------


def _render_table(table, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(table.to_json_dict(), sort_keys=True)
    if fmt == "csv":
        return "\n".join(table.csv_rows())
    return _pretty_table(table)


def _pretty_table(table) -> str:
    if isinstance(table, BooleTable):
        kind = "boole numbers" if table.x is None else (
            f"boole polynomials at x={format_rat(table.x)}"
        )
        lines = [f"{kind}, r={table.r}, lambda={table.mode}"]
        for n in range(table.n_max + 1):
            value = table.value(n)
            line = f"  n={n}: {value}"
            if table.lam is not None:
                line += f"   (~ {float(value):.6g})"
            lines.append(line)
        return "\n".join(lines)
    if isinstance(table, EulerTable):
        lines = [f"euler numbers, r={table.r}"]
        for n in range(table.n_max + 1):
            value = table.value(n)
            lines.append(f"  n={n}: {format_rat(value)}   (~ {float(value):.6g})")
        return "\n".join(lines)
    if isinstance(table, StirlingTriangle):
        label = "stirling (first kind, signed)" if table.kind == "first" else "stirling (second kind)"
        lines = [label]
        for n, row in enumerate(table.values):
            lines.append(f"  n={n}: " + " ".join(format_rat(v) for v in row))
        return "\n".join(lines)
    raise TypeError(f"cannot pretty-print {type(table).__name__}")


def _run_numbers(cfg: CliConfig) -> tuple[str, int]:
    if cfg.family == "boole":
        if cfg.x is not None:
            table = boole_polynomials(cfg.n_max, cfg.x, lam=cfg.lam, r=cfg.r)
        else:
            table = boole_numbers(cfg.n_max, r=cfg.r, lam=cfg.lam)
    elif cfg.family == "euler":
        table = euler_numbers(cfg.n_max, r=cfg.r)
    elif cfg.family == "stirling1":
        table = stirling1(cfg.n_max)
    else:
        table = stirling2(cfg.n_max)
    return _render_table(table, cfg.fmt), 0


def _run_triangle(cfg: CliConfig) -> tuple[str, int]:
    n_max = cfg.N_max if cfg.N_max is not None else 8
    tri = triangle_by_recurrence(max(n_max, 1))
    if cfg.view == "matrix":
        matrix = matrix_view(n_max, tri)
        if cfg.fmt == "json":
            payload = {
                "family": "triangle-matrix",
                "N_max": n_max,
                "rows": [[entry.to_json() for entry in row] for row in matrix],
            }
            return json.dumps(payload, sort_keys=True), 0
        if cfg.fmt == "csv":
            rows = [f"{i},{j},{entry}" for i, row in enumerate(matrix)
                    for j, entry in enumerate(row)]
            return "\n".join(rows), 0
        widths = [max(len(str(matrix[i][j])) for i in range(n_max + 1))
                  for j in range(n_max + 1)]
        lines = []
        for row in matrix:
            lines.append("  ".join(f"{str(e):<{widths[j]}}" for j, e in enumerate(row)))
        return "\n".join(lines), 0
    if cfg.fmt == "json":
        return json.dumps(tri.to_json_dict(), sort_keys=True), 0
    if cfg.fmt == "csv":
        return "\n".join(tri.csv_rows()), 0
    lines = [f"coefficient triangle, rows 0..{n_max}"]
    for n in range(n_max + 1):
        lines.append(f"  N={n}: " + " | ".join(str(e) for e in tri.row(n)))
    return "\n".join(lines), 0


def _run_series(cfg: CliConfig) -> tuple[str, int]:
    s = boole_series(cfg.order, r=cfg.r, lam=cfg.lam)
    for _ in range(cfg.deriv):
        s = s.derivative()
    if cfg.fmt == "json":
        return json.dumps(s.to_json(), sort_keys=True), 0
    if cfg.fmt == "csv":
        return "\n".join(f"{n},{s.coefficient(n)}" for n in range(s.order)), 0
    lines = [f"series mod t^{s.order} (r={cfg.r}, lambda="
             f"{'symbolic' if cfg.lam is None else format_rat(cfg.lam)}, deriv={cfg.deriv})"]
    for n in range(s.order):
        lines.append(f"  t^{n}: {s.coefficient(n)}")
    return "\n".join(lines), 0


def _verify_kwargs(cfg: CliConfig) -> dict:
    kwargs = {}
    if cfg.N_max is not None:
        kwargs.update(ode_n_max=cfg.N_max, thm3_n_max=cfg.N_max, thm4_n_max=cfg.N_max)
    if cfg.k_max is not None:
        kwargs.update(thm3_k_max=cfg.k_max, thm4_k_max=cfg.k_max)
    if cfg.i_max is not None:
        kwargs.update(eq34_i_max=cfg.i_max, eq38_i_max=cfg.i_max)
    if cfg.n_max is not None:
        kwargs.update(
            eq32_n_max=cfg.n_max,
            eq34_n_max=cfg.n_max,
            eq36_n_max=cfg.n_max,
            eq38_n_max=cfg.n_max,
            changhee_n_max=cfg.n_max,
        )
    kwargs.update(ode_order=cfg.order)
    return kwargs


def _run_verify(cfg: CliConfig) -> tuple[str, int]:
    reports = verify_all(**_verify_kwargs(cfg))
    reports = [rep for rep in reports if rep.identity in cfg.identities]
    code = 0 if all(rep.passed for rep in reports) else 1
    if cfg.fmt == "json":
        return json.dumps([rep.to_json_dict() for rep in reports], sort_keys=True), code
    if cfg.fmt == "csv":
        rows = ["identity,passed,counterexample"]
        for rep in reports:
            ce = "" if rep.counterexample is None else str(rep.counterexample.index)
            rows.append(f"{rep.identity},{str(rep.passed).lower()},{ce}")
        return "\n".join(rows), code
    return summary_table(reports), code


def _run_all(cfg: CliConfig) -> tuple[str, int]:
    n_max = cfg.n_max
    tri_n_max = cfg.N_max if cfg.N_max is not None else 8
    tables = {
        "boole": boole_numbers(n_max),
        "euler": euler_numbers(n_max),
        "stirling1": stirling1(n_max),
        "stirling2": stirling2(n_max),
    }
    tri = triangle_by_recurrence(max(tri_n_max, 1))
    reports = verify_all()
    code = 0 if all(rep.passed for rep in reports) else 1
    if cfg.fmt == "json":
        payload = {
            "numbers": {name: t.to_json_dict() for name, t in tables.items()},
            "triangle": tri.to_json_dict(),
            "verify": [rep.to_json_dict() for rep in reports],
        }
        return json.dumps(payload, sort_keys=True), code
    if cfg.fmt == "csv":
        raise UsageError("csv output is not available for 'all'; pick a single table")
    sections = [_pretty_table(t) for t in tables.values()]
    tri_lines = [f"coefficient triangle, rows 0..{tri_n_max}"]
    for n in range(tri_n_max + 1):
        tri_lines.append(f"  N={n}: " + " | ".join(str(e) for e in tri.row(n)))
    sections.append("\n".join(tri_lines))
    sections.append(summary_table(reports))
    return "\n\n".join(sections), code


_RUNNERS = {
    "numbers": _run_numbers,
    "triangle": _run_triangle,
    "series": _run_series,
    "verify": _run_verify,
    "all": _run_all,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = _config_from_args(args)
        _validate(cfg)
        text, code = _RUNNERS[cfg.command](cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if cfg.out:
        Path(cfg.out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
