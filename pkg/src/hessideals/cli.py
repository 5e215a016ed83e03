"""Command-line front end.

Exit status: 0 on success, 1 when a computation fails (a JSON error object is
printed in json mode), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import HessError
from .fixtures import load_fixtures, run_fixture
from .hessalg import (
    count_weighted_homogeneous,
    hessian_algebra_series,
    milnor_series,
    reconcile_global_local,
    thresholds,
)
from .localalg import ADE_CATALOG, chi_invariants, normal_form
from .polytext import PolyText, parse_polynomial
from .strata import (
    evaluate_family,
    hasse_covers,
    hasse_dot,
    partition_by_series,
    random_rational_points,
    read_assignments_csv,
)

COMMANDS = ("milnor", "series", "chi", "thresholds", "count-wh", "reconcile", "strata", "check")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    vars: tuple = ()
    poly: Optional[str] = None
    germ: list = field(default_factory=list)
    germ_vars: tuple = ()
    mult: list = field(default_factory=list)
    family: Optional[str] = None
    params: tuple = ()
    assignments: Optional[str] = None
    random: int = 0
    k: list = field(default_factory=list)
    compare_k: list = field(default_factory=list)
    m_max: Optional[int] = None
    m_eval: Optional[int] = None
    n_max: Optional[int] = None
    output: str = "text"
    seed: int = 0
    threads: int = 1
    only: list = field(default_factory=list)

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        needs_poly = {"milnor", "series", "thresholds", "count-wh", "reconcile"}
        if self.command in needs_poly and not self.poly:
            raise UsageError(f"{self.command} requires --poly")
        if self.command in needs_poly | {"strata"} and not self.vars:
            raise UsageError(f"{self.command} requires --vars")
        if self.command == "series" and len(self.k) != 1:
            raise UsageError("series requires exactly one --k")
        if self.command == "chi" and len(self.germ) != 1:
            raise UsageError("chi requires exactly one --germ")
        if self.command == "reconcile" and self.mult and len(self.mult) != len(self.germ):
            raise UsageError("give one --mult per --germ (or none)")
        if self.command == "strata":
            if not self.family or not self.params:
                raise UsageError("strata requires --family and --params")
            if bool(self.assignments) == bool(self.random):
                raise UsageError("strata requires exactly one of --assignments FILE or --random COUNT")
        if self.output == "dot" and self.command != "strata":
            raise UsageError("--output dot is only available for strata")


def _split(names: Optional[str]) -> tuple:
    return tuple(n.strip() for n in names.split(",") if n.strip()) if names else ()


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--vars", help="comma-separated variable names, e.g. x,y,z")
    common.add_argument("--output", choices=("text", "json", "dot"), default="text")
    common.add_argument("--json", dest="output", action="store_const", const="json", help="same as --output json")
    common.add_argument("--m-max", type=int, dest="m_max", help="highest degree to compute")
    common.add_argument("--threads", type=int, default=1, help="worker processes for strata sampling")
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="hessideals", description="Graded and local Hessian algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("milnor", parents=[common], help="Hilbert series of the Milnor algebra")
    p.add_argument("--poly", help="homogeneous polynomial, or - to read stdin")

    p = sub.add_parser("series", parents=[common], help="Hilbert series of H_k(f)")
    p.add_argument("--poly")
    p.add_argument("--k", type=int, action="append", default=[])

    p = sub.add_parser("chi", parents=[common], help="local Hessian numbers of a germ")
    p.add_argument("--germ", action="append", default=[], help="germ equation or catalog name (A2, D4, E6, ...)")
    p.add_argument("--n-max", type=int, dest="n_max", help="jet truncation bound")

    p = sub.add_parser("thresholds", parents=[common], help="ct, st, mdr and stabilization bounds")
    p.add_argument("--poly")

    p = sub.add_parser("count-wh", parents=[common], help="number of weighted homogeneous singularities")
    p.add_argument("--poly")
    p.add_argument("--m-eval", type=int, dest="m_eval")

    p = sub.add_parser("reconcile", parents=[common], help="compare stable values with local invariants")
    p.add_argument("--poly")
    p.add_argument("--germ", action="append", default=[])
    p.add_argument("--germ-vars", dest="germ_vars", help="germ variables (default y1,...,yn)")
    p.add_argument("--mult", type=int, action="append", default=[])
    p.add_argument("--n-max", type=int, dest="n_max")

    p = sub.add_parser("strata", parents=[common], help="Hessian partition of a family")
    p.add_argument("--family")
    p.add_argument("--params", help="comma-separated parameter names")
    p.add_argument("--assignments", help="CSV file of parameter tuples, or - for stdin")
    p.add_argument("--random", type=int, default=0, help="sample COUNT random rational points")
    p.add_argument("--k", type=int, action="append", default=[])
    p.add_argument("--compare-k", type=int, action="append", dest="compare_k", default=[],
                   help="series used for the Hasse order (repeat to compare several jointly)")

    p = sub.add_parser("check", parents=[common], help="run the bundled example corpus")
    p.add_argument("--only", action="append", default=[], help="fixture id prefix to run")
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=ns.command, vars=_split(ns.vars), output=ns.output, m_max=ns.m_max,
                    seed=ns.seed, threads=ns.threads)
    for name in ("poly", "family", "assignments", "n_max", "m_eval"):
        if hasattr(ns, name):
            setattr(cfg, name, getattr(ns, name))
    if hasattr(ns, "germ"):
        cfg.germ = list(ns.germ)
    if hasattr(ns, "k"):
        cfg.k = list(ns.k)
    if hasattr(ns, "mult"):
        cfg.mult = list(ns.mult)
    if hasattr(ns, "compare_k"):
        cfg.compare_k = list(ns.compare_k)
    if hasattr(ns, "only"):
        cfg.only = list(ns.only)
    if hasattr(ns, "random"):
        cfg.random = ns.random
    if getattr(ns, "params", None):
        cfg.params = _split(ns.params)
    if getattr(ns, "germ_vars", None):
        cfg.germ_vars = _split(ns.germ_vars)
    return cfg


def _read(value: str, stdin) -> str:
    return stdin.read() if value == "-" else value


def _germ_poly(text: str, names: Sequence[str]):
    if text.upper() in ADE_CATALOG and text not in names:
        return normal_form(text, len(names) if names else 2)
    return parse_polynomial(PolyText(text, tuple(names)))


def _execute(cfg: RunConfig, stdin) -> tuple[object, str]:
    """Return (json-able result, text rendering)."""
    if cfg.command == "check":
        results = []
        lines = []
        for fx in load_fixtures():
            if cfg.only and not any(fx.id.startswith(p) for p in cfg.only):
                continue
            try:
                ok, got = run_fixture(fx)
            except HessError as exc:
                ok, got = False, f"{type(exc).__name__}: {exc}"
            results.append({"id": fx.id, "source": fx.source, "pass": ok, "observed": got})
            lines.append(f"{'PASS' if ok else 'FAIL'}  {fx.id}")
        failed = sum(not r["pass"] for r in results)
        lines.append(f"{len(results) - failed}/{len(results)} fixtures passed")
        return {"fixtures": results, "failed": failed}, "\n".join(lines)

    if cfg.command == "chi":
        names = cfg.vars or tuple(f"y{i + 1}" for i in range(2))
        g = _germ_poly(_read(cfg.germ[0], stdin), names)
        inv = chi_invariants(g, cfg.n_max, with_mu=True)
        data = inv.to_json()
        text = (f"chi = {list(inv.chi)}\ntau = {inv.tau}\nmu = {inv.mu}\n"
                f"weighted_homogeneous = {str(inv.weighted_homogeneous).lower()}")
        return data, text

    if cfg.command == "strata":
        tpl = PolyText(cfg.family, cfg.vars, cfg.params)
        if cfg.assignments:
            raw = stdin.read() if cfg.assignments == "-" else open(cfg.assignments).read()
            points = read_assignments_csv(raw)
        else:
            points = random_rational_points(cfg.random, len(cfg.params), cfg.seed)
        ks = cfg.k or [1]
        compare = cfg.compare_k or [ks[0]]
        report = partition_by_series(evaluate_family(tpl, points, ks, cfg.m_max, workers=cfg.threads))
        dot = hasse_dot(report, compare)
        if cfg.output == "dot":
            return None, dot
        hasse_covers(report, compare)
        lines = []
        for s, members in enumerate(report.strata):
            rep = report.representative(s)
            series = "; ".join(rep.series[k].format() for k in compare)
            lines.append(f"S{s + 1}: {series}  ({len(members)} samples)")
        for s in report.samples:
            if s.failed:
                lines.append(f"failed {tuple(str(v) for v in s.params)}: {s.error}")
        lines.append("covers: " + ", ".join(f"S{i + 1}>S{j + 1}" for i, j in report.covers))
        return report.to_json(), "\n".join(lines)

    f = parse_polynomial(PolyText(_read(cfg.poly, stdin), cfg.vars))
    if cfg.command == "milnor":
        n = f.nvars - 1
        m_max = cfg.m_max if cfg.m_max is not None else (n + 1) * (f.degree - 2) + 2
        s = milnor_series(f, m_max)
        return s.to_json(m_max), s.format() + f"\n(m_max = {m_max})"
    if cfg.command == "series":
        rep = hessian_algebra_series(f, cfg.k[0], cfg.m_max)
        return rep.to_json(), rep.series.format() + f"\n(k = {rep.k}, m_max = {rep.m_max})"
    if cfg.command == "thresholds":
        th = thresholds(f, cfg.m_max)
        data = th.to_json()
        return data, "\n".join(f"{k} = {v}" for k, v in data.items())
    if cfg.command == "count-wh":
        res = count_weighted_homogeneous(f, cfg.m_eval)
        text = str(res.count) + ("  (smooth hypersurface)" if res.smooth else "")
        return res.to_json(), text
    if cfg.command == "reconcile":
        n = f.nvars - 1
        gv = cfg.germ_vars or tuple(f"y{i + 1}" for i in range(n))
        mults = cfg.mult or [1] * len(cfg.germ)
        germs = [(_germ_poly(g, gv), m) for g, m in zip(cfg.germ, mults)]
        verdict = reconcile_global_local(f, germs, cfg.m_max, cfg.n_max)
        lines = [f"k={r.k}: global {r.global_value}, local {r.local_sum}  {'ok' if r.ok else 'MISMATCH'}"
                 for r in verdict.rows]
        return verdict.to_json(), "\n".join(lines)
    raise UsageError(f"unhandled command {cfg.command}")


def run(cfg: RunConfig, stdin=None, stdout=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    try:
        cfg.validate()
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    try:
        data, text = _execute(cfg, stdin)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (HessError, ValueError, OSError) as exc:
        if cfg.output == "json":
            json.dump({"error": type(exc).__name__, "message": str(exc)}, stdout)
            stdout.write("\n")
        else:
            print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if cfg.output == "json":
        json.dump(data, stdout)
        stdout.write("\n")
    else:
        stdout.write(text if text.endswith("\n") else text + "\n")
    if cfg.command == "check" and data["failed"]:
        return 1
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    return run(config_from_args(ns))


if __name__ == "__main__":
    sys.exit(main())
