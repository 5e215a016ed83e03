"""Bundled corpus of worked examples with their expected outputs.

Each fixture has a stable identifier such as ``"excusp.H2"``, a ``kind`` that
selects the computation, its inputs and the expected result.  ``source`` is
``"published"`` for values taken from the literature and ``"derived"`` for
values obtained by an independent hand computation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from typing import Callable

from .errors import CorruptFixture
from .gradedla import HilbertSeq
from .hessalg import (
    count_weighted_homogeneous,
    hessian_algebra_series,
    milnor_series,
    reconcile_global_local,
    thresholds,
    verify_prop_A,
)
from .localalg import chi_invariants
from .polytext import PolyText, parse_polynomial
from .strata import evaluate_family, hasse_covers, partition_by_series

KINDS = {"milnor", "series", "count_wh", "thresholds", "reconcile", "prop_a", "chi", "chi1", "strata"}


@dataclass(frozen=True)
class Fixture:
    id: str
    kind: str
    source: str
    data: dict

    @property
    def expected(self):
        return self.data.get("expected")


def _validate(raw: dict) -> Fixture:
    try:
        fid, kind, source = raw["id"], raw["kind"], raw["source"]
    except KeyError as exc:
        raise CorruptFixture(f"fixture missing field {exc}") from None
    if not fid or kind not in KINDS:
        raise CorruptFixture(f"bad fixture header {fid!r}/{kind!r}")
    if "vars" not in raw:
        raise CorruptFixture(f"{fid}: no variable list")
    return Fixture(fid, kind, source, raw)


def load_fixtures(text: str | None = None) -> list[Fixture]:
    """Parse the bundled corpus (or ``text``, in the same JSON format)."""
    if text is None:
        text = resources.files("hessideals").joinpath("data/fixtures.json").read_text()
    try:
        doc = json.loads(text)
        entries = doc["fixtures"]
    except (ValueError, KeyError, TypeError) as exc:
        raise CorruptFixture(f"unreadable fixture file: {exc}") from None
    out = [_validate(e) for e in entries]
    ids = [f.id for f in out]
    if len(set(ids)) != len(ids):
        raise CorruptFixture("duplicate fixture identifiers")
    return out


def get_fixture(name: str, fixtures: list[Fixture] | None = None) -> Fixture:
    if not name:
        raise CorruptFixture("empty fixture name")
    for f in fixtures if fixtures is not None else load_fixtures():
        if f.id == name:
            return f
    raise CorruptFixture(f"no fixture named {name!r}")


# ---------------------------------------------------------------- runners


def _poly(fx: Fixture):
    return parse_polynomial(PolyText(fx.data["poly"], tuple(fx.data["vars"])))


def _germ(fx: Fixture):
    return parse_polynomial(PolyText(fx.data["germ"], tuple(fx.data["vars"])))


def _check_series(got: HilbertSeq, fx: Fixture):
    want = HilbertSeq.from_json(fx.expected)
    return got.same_series(want), got.to_json()


def _run_milnor(fx):
    return _check_series(milnor_series(_poly(fx)), fx)


def _run_series(fx):
    return _check_series(hessian_algebra_series(_poly(fx), fx.data["k"]).series, fx)


def _run_count(fx):
    got = count_weighted_homogeneous(_poly(fx)).count
    return got == fx.expected, got


def _run_thresholds(fx):
    got = thresholds(_poly(fx)).to_json()
    return all(got[k] == v for k, v in fx.expected.items()), {k: got[k] for k in fx.expected}


def _run_reconcile(fx):
    gv = tuple(fx.data["germ_vars"])
    germs = [(parse_polynomial(PolyText(g, gv)), int(m)) for g, m in fx.data["germs"]]
    verdict = reconcile_global_local(_poly(fx), germs)
    return verdict.ok, verdict.to_json()


def _run_prop_a(fx):
    v = verify_prop_A(_poly(fx))
    return v.holds and v.case == fx.expected, {"case": v.case, "holds": v.holds}


def _run_chi(fx):
    got = list(chi_invariants(_germ(fx)).chi)
    return got == fx.expected, got


def _run_chi1(fx):
    got = chi_invariants(_germ(fx)).chi[0]
    return got == fx.expected, got


def _run_strata(fx):
    tpl = PolyText(fx.data["family"], tuple(fx.data["vars"]), tuple(fx.data["params"]))
    report = partition_by_series(evaluate_family(tpl, fx.data["assignments"], [fx.data["k"]]))
    covers = [list(c) for c in hasse_covers(report, fx.data["k"])]
    series = [list(report.representative(s).series[fx.data["k"]].head()) for s in range(len(report.strata))]
    got = {"series": series, "covers": covers}
    return got == fx.expected, got


RUNNERS: dict[str, Callable] = {
    "milnor": _run_milnor,
    "series": _run_series,
    "count_wh": _run_count,
    "thresholds": _run_thresholds,
    "reconcile": _run_reconcile,
    "prop_a": _run_prop_a,
    "chi": _run_chi,
    "chi1": _run_chi1,
    "strata": _run_strata,
}


def run_fixture(fx: Fixture) -> tuple[bool, object]:
    """Run one fixture; returns (passed, observed value)."""
    return RUNNERS[fx.kind](fx)
