"""Hessian partitions of polynomial families and their Hasse diagrams.

A family template with parameters is evaluated at rational sample points; the
samples are grouped by their vector of Hessian series, and the strata are
ordered by coefficientwise comparison of one designated series.
"""

from __future__ import annotations

import csv
import io
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import CompareKMissing, HessError, MixedDegrees
from .hessalg import hessian_algebra_series
from .polytext import PolyText, parse_family, parse_rational

CAVEAT = (
    "coefficientwise comparison is necessary for one stratum to meet the closure "
    "of another but not sufficient"
)


@dataclass
class Sample:
    params: tuple
    series: dict = field(default_factory=dict)
    error: Optional[str] = None

    @property
    def failed(self) -> bool:
        return self.error is not None

    def key(self, ks: Sequence[int]) -> tuple:
        return tuple(self.series[k].canonical() for k in ks)


@dataclass
class StrataReport:
    family_source: PolyText
    ks: tuple
    samples: list = field(default_factory=list)
    strata: list = field(default_factory=list)  # lists of sample indices
    covers: list = field(default_factory=list)  # (upper stratum, lower stratum)
    compare_k: Optional[int] = None

    def stratum_of(self, sample_index: int) -> int:
        for s, members in enumerate(self.strata):
            if sample_index in members:
                return s
        raise KeyError(sample_index)

    def representative(self, stratum: int) -> Sample:
        return self.samples[self.strata[stratum][0]]

    def to_json(self) -> dict:
        def fmt(v):
            return str(v)

        return {
            "family": self.family_source.source,
            "variables": list(self.family_source.variable_names),
            "parameters": list(self.family_source.parameter_names),
            "ks": list(self.ks),
            "samples": [
                {
                    "params": [fmt(v) for v in s.params],
                    "series": {str(k): v.to_json() for k, v in s.series.items()},
                    "error": s.error,
                }
                for s in self.samples
            ],
            "strata": [list(m) for m in self.strata],
            "covers": [list(c) for c in self.covers],
            "compare_k": self.compare_k,
            "caveat": CAVEAT,
        }


def _series_for(args):
    poly, ks, m_max = args
    try:
        return {k: hessian_algebra_series(poly, k, m_max).series for k in ks}, None
    except HessError as exc:
        return {}, f"{type(exc).__name__}: {exc}"


def evaluate_family(
    template: PolyText,
    assignments: Sequence[Sequence],
    ks: Iterable[int],
    m_max: int | None = None,
    workers: int = 1,
) -> StrataReport:
    """Compute HP(H_k) for every sample and every requested k.

    A sample whose computation fails is kept with its error message and
    excluded from the partition.
    """
    if not assignments:
        raise ValueError("at least one assignment is required")
    ks = tuple(sorted(set(ks)))
    params = [tuple(Fraction(v) for v in a) for a in assignments]
    polys = parse_family(template, params)
    degrees = {p.degree for p in polys if not p.is_zero}
    if len(degrees) > 1 or any(not p.is_homogeneous for p in polys):
        raise MixedDegrees(f"family instances have degrees {sorted(degrees)}")
    jobs = [(p, ks, m_max) for p in polys]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_series_for, jobs))
    else:
        results = [_series_for(j) for j in jobs]
    report = StrataReport(template, ks)
    for par, (series, err) in zip(params, results):
        if err is None and any(s.tail is None for s in series.values()):
            err = "series did not stabilize within m_max"
        report.samples.append(Sample(par, series, err))
    return report


def partition_by_series(report: StrataReport) -> StrataReport:
    """Group successful samples with identical series vectors, first-seen order."""
    groups: dict = {}
    report.strata = []
    for i, s in enumerate(report.samples):
        if s.failed:
            continue
        key = s.key(report.ks)
        if key not in groups:
            groups[key] = len(report.strata)
            report.strata.append([])
        report.strata[groups[key]].append(i)
    return report


def _transitive_reduction(n: int, above: set) -> list:
    covers = []
    for i, j in sorted(above):
        if not any((i, m) in above and (m, j) in above for m in range(n) if m not in (i, j)):
            covers.append((i, j))
    return covers


def _compare_ks(report: StrataReport, compare_k) -> tuple:
    ks = (compare_k,) if isinstance(compare_k, int) else tuple(compare_k)
    missing = [k for k in ks if k not in report.ks]
    if not ks or missing:
        raise CompareKMissing(f"k={missing or compare_k} was not computed (have {list(report.ks)})")
    return ks


def hasse_covers(report: StrataReport, compare_k) -> list:
    """Cover relations (upper, lower) of the coefficientwise order on strata.

    ``compare_k`` is one k or a sequence of them; with several, a stratum is
    above another when every chosen series dominates.
    """
    ks = _compare_ks(report, compare_k)
    if not report.strata:
        partition_by_series(report)
    reps = [report.representative(s).series for s in range(len(report.strata))]
    above = set()
    for i, a in enumerate(reps):
        for j, b in enumerate(reps):
            if i == j:
                continue
            if all(a[k].dominates(b[k]) for k in ks) and not all(a[k].same_series(b[k]) for k in ks):
                above.add((i, j))
    report.compare_k = compare_k
    report.covers = _transitive_reduction(len(reps), above)
    return report.covers


def hasse_dot(report: StrataReport, compare_k) -> str:
    """DOT digraph of the Hasse diagram, edges from larger series to smaller."""
    ks = _compare_ks(report, compare_k)
    covers = hasse_covers(report, compare_k)
    names = ", ".join(f"HP(H_{k})" for k in ks)
    lines = [
        "digraph hessian_poset {",
        f'  graph [label="{names} strata; {CAVEAT}"];',
        "  node [shape=box];",
    ]
    for s in range(len(report.strata)):
        rep = report.representative(s)
        series = "\\n".join(rep.series[k].format() for k in ks)
        params = ", ".join(str(v) for v in rep.params)
        lines.append(f'  S{s + 1} [label="S{s + 1}\\n{series}\\n({params})"];')
    for i, j in covers:
        lines.append(f"  S{i + 1} -> S{j + 1};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def random_rational_points(count: int, nparams: int, seed: int, height: int = 97) -> list[tuple]:
    """Pseudo-random nonzero rational points p/q with |p|, q <= height."""
    rng = random.Random(seed)
    pts = []
    for _ in range(count):
        pt = []
        for _ in range(nparams):
            num = rng.choice([-1, 1]) * rng.randint(1, height)
            pt.append(Fraction(num, rng.randint(1, height)))
        pts.append(tuple(pt))
    return pts


def read_assignments_csv(text: str) -> list[tuple]:
    """One tuple per non-empty line; fields are integers or p/q fractions."""
    rows = []
    for rec in csv.reader(io.StringIO(text)):
        fields = [f for f in (x.strip() for x in rec) if f]
        if not fields or fields[0].startswith("#"):
            continue
        rows.append(tuple(parse_rational(f) for f in fields))
    return rows
