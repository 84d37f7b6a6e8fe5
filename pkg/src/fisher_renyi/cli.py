"""Command-line entry point ``cfr``.

    cfr gaussian --lambda 2 --dim 3
    cfr hydrogenic -n 2 -l 1 -m 1 --lambda 1.5 --method both
    cfr sweep --config sweep.json
    cfr verify [suite]

Exit codes: 0 success, 1 domain or usage error, 2 divergence or convergence
failure, 3 verification failure.  ``CFR_TOL`` overrides the default relative
quadrature tolerance.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass

from .complexity import ComplexityReport, cfr_complexity
from .densities import gaussian, make_generalized_gaussian
from .errors import ConvergenceError, DomainError, UnsupportedInputError
from .functionals import LambdaParam
from .hydrogenic import QuantumNumbers, hydrogenic_report
from .quadrature import QuadratureSpec
from .verify import SUITES, run_suite

EXIT_OK, EXIT_USAGE, EXIT_DIVERGENCE, EXIT_VERIFY = 0, 1, 2, 3

SIG_DIGITS = 12
REPORT_COLUMNS = ["lambda", "dim", "fisher_lambda", "renyi_power", "d_norm", "cfr", "method", "discrepancy"]
SWEEP_COLUMNS = ["lambda", "n", "l", "m", "fisher_lambda", "renyi_power", "d_norm", "cfr", "method",
                 "discrepancy", "error"]


class UsageError(ValueError):
    pass


def _round(x):
    if isinstance(x, float) and math.isfinite(x):
        return float(f"{x:.{SIG_DIGITS}g}")
    return x


def _cell(x) -> str:
    if x is None:
        return ""
    if isinstance(x, float):
        return f"{x:.{SIG_DIGITS}g}"
    return str(x)


def _rounded(row: dict) -> dict:
    return {k: _round(v) for k, v in row.items()}


def format_rows(rows: list[dict], columns: list[str], fmt: str) -> str:
    if fmt == "json":
        payload = [_rounded({c: r.get(c) for c in columns}) for r in rows]
        return json.dumps(payload[0] if len(payload) == 1 else payload, indent=2)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([_cell(r.get(c)) for c in columns])
    return buf.getvalue().rstrip("\n")


def default_spec() -> QuadratureSpec:
    tol = os.environ.get("CFR_TOL")
    if not tol:
        return QuadratureSpec()
    try:
        return QuadratureSpec(rel_tol=float(tol))
    except ValueError as exc:
        raise UsageError(f"CFR_TOL must be a positive number, got {tol!r}") from exc


@dataclass
class RunConfig:
    """Validated configuration for a sweep (mirrors the JSON config file)."""

    lambdas: list[float]
    states: list[tuple[int, int, int]]
    Z: float = 1.0
    method: str = "both"
    format: str = "csv"
    output: str | None = None
    rel_tol: float | None = None

    @classmethod
    def from_dict(cls, data: dict) -> "RunConfig":
        lams = data.get("lambdas", data.get("lambda"))
        if isinstance(lams, dict):
            try:
                start, stop, step = float(lams["start"]), float(lams["stop"]), float(lams["step"])
            except (KeyError, TypeError, ValueError) as exc:
                raise UsageError("lambda range needs numeric start, stop and step") from exc
            if step <= 0 or stop < start:
                raise UsageError("lambda range needs step > 0 and stop >= start")
            count = int(round((stop - start) / step)) + 1
            lams = [round(start + i * step, 12) for i in range(count)]
        elif isinstance(lams, (int, float)):
            lams = [lams]
        if not lams:
            raise UsageError("the lambda list is empty")
        states = []
        for s in data.get("states", []):
            if isinstance(s, dict):
                states.append((int(s["n"]), int(s["l"]), int(s.get("m", 0))))
            else:
                states.append(tuple(int(v) for v in s))
        if not states:
            raise UsageError("the sweep needs at least one state (n, l, m)")
        cfg = cls(
            lambdas=[float(x) for x in lams],
            states=states,
            Z=float(data.get("Z", 1.0)),
            method=str(data.get("method", "both")),
            format=str(data.get("format", "csv")),
            output=data.get("output"),
            rel_tol=data.get("rel_tol"),
        )
        cfg.validate()
        return cfg

    def validate(self):
        if self.method not in ("closed", "quadrature", "both"):
            raise UsageError(f"method must be closed, quadrature or both, got {self.method!r}")
        if self.format not in ("json", "csv"):
            raise UsageError(f"format must be json or csv, got {self.format!r}")
        for n, l, m in self.states:
            QuantumNumbers(n, l, m, self.Z)
        for lam in self.lambdas:
            LambdaParam(lam, 3)

    def spec(self) -> QuadratureSpec:
        return QuadratureSpec(rel_tol=float(self.rel_tol)) if self.rel_tol else default_spec()


def cmd_gaussian(lam: float, dim: int, spec: QuadratureSpec | None = None) -> ComplexityReport:
    lp = LambdaParam(lam, dim)
    # the extremal family tends to the normal density as lambda -> 1
    rho = gaussian(dim) if lp.is_shannon_limit else make_generalized_gaussian(lp, dim)
    return cfr_complexity(rho, lp, method="quadrature", spec=spec)


def cmd_hydrogenic(n: int, l: int, m: int, Z: float, lam: float, method: str = "both",
                   spec: QuadratureSpec | None = None) -> ComplexityReport:
    qn = QuantumNumbers(n, l, m, Z)
    return hydrogenic_report(qn, LambdaParam(lam, 3), method, spec)


def cmd_sweep(cfg: RunConfig) -> list[dict]:
    """One row per (state, lambda), state-major; failures are recorded in-row."""
    spec = cfg.spec()
    rows = []
    for n, l, m in cfg.states:
        for lam in cfg.lambdas:
            row = {"lambda": lam, "n": n, "l": l, "m": m}
            try:
                rep = cmd_hydrogenic(n, l, m, cfg.Z, lam, cfg.method, spec)
                row.update({k: v for k, v in rep.to_dict().items() if k not in ("lambda", "dim")})
            except (DomainError, UnsupportedInputError, ConvergenceError) as exc:
                row["error"] = f"{type(exc).__name__}: {exc}"
            rows.append(row)
    return rows


def cmd_verify(suite: str = "all", out=None) -> int:
    out = out or sys.stdout
    results = run_suite(suite)
    for r in results:
        print(r.line(), file=out)
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} checks passed", file=out)
    return EXIT_OK if failed == 0 else EXIT_VERIFY


def _emit(text: str, path: str | None):
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cfr", description="Fisher-Renyi complexity calculator")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output(p):
        p.add_argument("--format", choices=["json", "csv"], default="json")
        p.add_argument("-o", "--output", help="write to this file instead of stdout")

    g = sub.add_parser("gaussian", help="complexity of the extremal density B_lambda")
    g.add_argument("--lambda", dest="lam", type=float, required=True)
    g.add_argument("--dim", type=int, required=True)
    add_output(g)

    h = sub.add_parser("hydrogenic", help="complexity of a hydrogenic state")
    h.add_argument("-n", type=int, required=True)
    h.add_argument("-l", type=int, required=True)
    h.add_argument("-m", type=int, default=0)
    h.add_argument("--Z", type=float, default=1.0)
    h.add_argument("--lambda", dest="lam", type=float, required=True)
    h.add_argument("--method", choices=["closed", "quadrature", "both"], default="both")
    add_output(h)

    s = sub.add_parser("sweep", help="batch over states and lambda values from a JSON config")
    s.add_argument("--config", required=True)
    s.add_argument("--format", choices=["json", "csv"], default=None)
    s.add_argument("-o", "--output", default=None)

    v = sub.add_parser("verify", help="run property checks")
    v.add_argument("suite", nargs="?", default="all", choices=["all", *SUITES])
    return parser


def _run(args) -> int:
    if args.command == "gaussian":
        rep = cmd_gaussian(args.lam, args.dim, default_spec())
        _emit(format_rows([rep.to_dict()], REPORT_COLUMNS, args.format), args.output)
        return EXIT_OK
    if args.command == "hydrogenic":
        rep = cmd_hydrogenic(args.n, args.l, args.m, args.Z, args.lam, args.method, default_spec())
        for note in rep.notes:
            print(f"note: {note}", file=sys.stderr)
        if rep.suspect:
            print(f"warning: closed form and quadrature differ by {rep.discrepancy:.3e}", file=sys.stderr)
        _emit(format_rows([rep.to_dict()], REPORT_COLUMNS, args.format), args.output)
        return EXIT_OK
    if args.command == "sweep":
        try:
            with open(args.config) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {args.config}: {exc}") from exc
        cfg = RunConfig.from_dict(data)
        fmt = args.format or cfg.format
        rows = cmd_sweep(cfg)
        _emit(format_rows(rows, SWEEP_COLUMNS, fmt), args.output or cfg.output)
        return EXIT_OK
    return cmd_verify(args.suite)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except (UsageError, DomainError, UnsupportedInputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIVERGENCE


if __name__ == "__main__":
    sys.exit(main())
