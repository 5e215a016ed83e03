"""Graded Milnor and Hessian algebras of a homogeneous polynomial.

For f in S_d with n+1 variables, H_k(f) = S/(J_f + h_k(f)) where h_k(f) is
generated by the k x k minors of the Hessian matrix.  This module computes
their Hilbert functions with certified stable tails, the coincidence and
stability thresholds, the count of weighted homogeneous singularities and the
comparison of stable values with sums of local Hessian numbers.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import (
    InconsistentThresholds,
    InsufficientRange,
    KOutOfRange,
    NotHomogeneous,
    StabilizationNotCertified,
)
from .gradedla import (
    GradedIdeal,
    HilbertSeq,
    mdr as minimal_syzygy_degree,
    quotient_hilbert,
    quotient_piece_dim,
)
from .localalg import chi_invariants
from .polycore import Polynomial, hessian_matrix, jacobian_generators, k_minors

log = logging.getLogger(__name__)


def _form_data(f: Polynomial) -> tuple[int, int]:
    """(n, d) of a homogeneous form of degree >= 2."""
    if f.is_zero or not f.is_homogeneous:
        raise NotHomogeneous("a nonzero homogeneous polynomial is required")
    if f.degree < 2:
        raise NotHomogeneous("degree must be at least 2")
    return f.nvars - 1, f.degree


def socle_degree(n: int, d: int) -> int:
    """T = (n+1)(d-2)."""
    return (n + 1) * (d - 2)


def tilde_bound(n: int, d: int, k: int) -> int:
    """Unconditional stabilization degree (n+k+1)(d-2) for H_k(f)."""
    return (n + k + 1) * (d - 2)


def smooth_reference_series(n: int, d: int, m_max: int) -> HilbertSeq:
    """Hilbert series of M(f) for a smooth hypersurface: ((1-t^(d-1))/(1-t))^(n+1)."""
    if d < 2:
        raise ValueError("d must be at least 2")
    poly = [1]
    block = [1] * (d - 1)
    for _ in range(n + 1):
        nxt = [0] * (len(poly) + len(block) - 1)
        for i, a in enumerate(poly):
            for j, b in enumerate(block):
                nxt[i + j] += a * b
        poly = nxt
    coeffs = [poly[m] if m < len(poly) else 0 for m in range(m_max + 1)]
    return HilbertSeq(tuple(coeffs), (socle_degree(n, d) + 1, 0))


def jacobian_ideal(f: Polynomial) -> GradedIdeal:
    return GradedIdeal(f.nvars, tuple(jacobian_generators(f)))


def hessian_ideal(f: Polynomial, k: int) -> GradedIdeal:
    """J_f + h_k(f)."""
    n, _ = _form_data(f)
    if not 1 <= k <= n + 1:
        raise KOutOfRange(f"k={k} outside 1..{n + 1}")
    minors = k_minors(hessian_matrix(f), k)
    return GradedIdeal(f.nvars, tuple(jacobian_generators(f)) + tuple(minors))


def milnor_series(f: Polynomial, m_max: int | None = None) -> HilbertSeq:
    """HP(M(f); t), with the tail certified from T+1 on when m_max allows."""
    n, d = _form_data(f)
    T = socle_degree(n, d)
    if m_max is None:
        m_max = T + 2
    return quotient_hilbert(jacobian_ideal(f), m_max, certified_from=T + 1)


@dataclass(frozen=True)
class HessianReport:
    f: Polynomial
    k: int
    series: HilbertSeq
    m_max: int

    def to_json(self) -> dict:
        out = self.series.to_json(self.m_max)
        out["k"] = self.k
        return out


def hessian_algebra_series(f: Polynomial, k: int, m_max: int | None = None) -> HessianReport:
    """HP(H_k(f); t); the tail is certified once m_max reaches (n+k+1)(d-2)."""
    n, d = _form_data(f)
    bound = tilde_bound(n, d, k)
    if m_max is None:
        m_max = bound + 1
    series = quotient_hilbert(hessian_ideal(f, k), m_max, certified_from=bound)
    return HessianReport(f, k, series, m_max)


@dataclass(frozen=True)
class Thresholds:
    n: int
    d: int
    T: int
    ct: Optional[int]
    mdr: Optional[int]
    st: Optional[int]
    tau_total: Optional[int]
    T_k: tuple
    tilde_T_k: tuple
    hat_T_k: tuple

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "T": self.T,
            "ct": self.ct,
            "mdr": self.mdr,
            "st": self.st,
            "tau_total": self.tau_total,
            "T_k": list(self.T_k),
            "tilde_T_k": list(self.tilde_T_k),
            "hat_T_k": list(self.hat_T_k),
        }


def coincidence_threshold(series: HilbertSeq, n: int, d: int) -> Optional[int]:
    """Last degree up to which ``series`` matches the smooth reference; None if never differs."""
    m_max = len(series.coeffs) - 1
    ref = smooth_reference_series(n, d, m_max)
    for m in range(m_max + 1):
        if series.coeffs[m] != ref.coeffs[m]:
            return m - 1
    return None


def thresholds(f: Polynomial, m_max: int | None = None) -> Thresholds:
    """ct, st, mdr, total Tjurina number and the stabilization bounds T_k.

    ``hat_T_k`` is T + max(k(d-2) - ct, 0); ``T_k`` is
    max(T - ct + k(d-2), st).  Both are None for smooth f, where ct is absent.
    """
    n, d = _form_data(f)
    T = socle_degree(n, d)
    if m_max is None:
        m_max = T + 2
    if m_max <= T:
        raise InsufficientRange(f"m_max={m_max} must exceed T={T}")
    series = milnor_series(f, m_max)
    if series.tail is None:
        raise StabilizationNotCertified("Milnor algebra did not stabilize; singularities not isolated?")
    tau_total = series.stable_value
    st = series.stable_from
    ct = coincidence_threshold(series, n, d)
    # for singular f, ct <= T forces mdr <= T - d + 2
    found_mdr = minimal_syzygy_degree(f, max(T - d + 2, 0))
    if ct is not None and found_mdr is not None and ct != found_mdr + d - 2:
        raise InconsistentThresholds(f"ct={ct} but mdr={found_mdr}, d={d}")
    ks = range(1, n + 2)
    tilde = tuple(tilde_bound(n, d, k) for k in ks)
    if ct is None:
        t_k = hat = tuple(None for _ in ks)
    else:
        t_k = tuple(max(T - ct + k * (d - 2), st) for k in ks)
        hat = tuple(T + max(k * (d - 2) - ct, 0) for k in ks)
        log.debug("hat_T_k computed with k*(d-2); the k*(d-1) variant is not used")
    return Thresholds(n, d, T, ct, found_mdr, st, tau_total, t_k, tilde, hat)


@dataclass(frozen=True)
class WeightedHomogeneousCount:
    count: int
    smooth: bool
    m_eval: int

    def to_json(self) -> dict:
        return {"count": self.count, "smooth": self.smooth, "m_eval": self.m_eval}


def count_weighted_homogeneous(f: Polynomial, m_eval: int | None = None) -> WeightedHomogeneousCount:
    """dim M(f)_m - dim H_n(f)_m at m = (2n+1)(d-2) (or ``m_eval``)."""
    n, d = _form_data(f)
    if m_eval is None:
        m_eval = (2 * n + 1) * (d - 2)
    T = socle_degree(n, d)
    jac = jacobian_ideal(f)
    tau_total = quotient_piece_dim(jac, max(m_eval, T + 1))
    if tau_total == 0:
        return WeightedHomogeneousCount(0, True, m_eval)
    count = quotient_piece_dim(jac, m_eval) - quotient_piece_dim(hessian_ideal(f, n), m_eval)
    return WeightedHomogeneousCount(count, False, m_eval)


@dataclass(frozen=True)
class PropAVerdict:
    smooth: bool
    holds: bool
    offending_degree: Optional[int]
    milnor: HilbertSeq
    top_hessian: HilbertSeq

    @property
    def case(self) -> str:
        return "smooth" if self.smooth else "isolated"


def verify_prop_A(f: Polynomial, m_max: int | None = None) -> PropAVerdict:
    """Compare HP(H_{n+1}(f)) with HP(M(f)).

    Smooth f: the Hessian spans the one-dimensional socle of M(f), in degree
    T, so the series must differ exactly by t^T.  Singular f with isolated
    singularities: the series must coincide.
    """
    n, d = _form_data(f)
    T = socle_degree(n, d)
    if m_max is None:
        m_max = T + 2
    if m_max <= T:
        raise InsufficientRange(f"m_max={m_max} must exceed T={T}")
    milnor = milnor_series(f, m_max)
    top = quotient_hilbert(hessian_ideal(f, n + 1), m_max, certified_from=T + 1)
    ref = smooth_reference_series(n, d, m_max)
    smooth = milnor.coeffs == ref.coeffs
    offending = None
    for m in range(m_max + 1):
        expected = milnor.coeffs[m] - (1 if smooth and m == T else 0)
        if top.coeffs[m] != expected:
            offending = m
            break
    return PropAVerdict(smooth, offending is None, offending, milnor, top)


@dataclass(frozen=True)
class ReconcileRow:
    k: int
    global_value: int
    local_sum: int

    @property
    def ok(self) -> bool:
        return self.global_value == self.local_sum


@dataclass(frozen=True)
class ReconcileVerdict:
    rows: tuple = field(default=())

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "rows": [
                {"k": r.k, "global": r.global_value, "local": r.local_sum, "ok": r.ok} for r in self.rows
            ],
        }


def reconcile_global_local(
    f: Polynomial,
    germs: Sequence[tuple[Polynomial, int]],
    m_max: int | None = None,
    N_max: int | None = None,
) -> ReconcileVerdict:
    """Stable dim H_k(f)_m against sum of multiplicity * chi_k over the germs."""
    n, d = _form_data(f)
    local = [0] * (n + 1)
    for germ, mult in germs:
        if germ.nvars != n:
            raise ValueError(f"germ has {germ.nvars} variables, expected {n}")
        inv = chi_invariants(germ, N_max)
        for k in range(n + 1):
            local[k] += mult * inv.chi[k]
    rows = []
    for k in range(1, n + 2):
        bound = tilde_bound(n, d, k)
        if m_max is not None and m_max < bound:
            raise StabilizationNotCertified(f"m_max={m_max} below the bound {bound} for k={k}")
        report = hessian_algebra_series(f, k, m_max)
        if report.series.tail is None:
            raise StabilizationNotCertified(f"H_{k} series did not stabilize")
        rows.append(ReconcileRow(k, report.series.stable_value, local[k - 1]))
    return ReconcileVerdict(tuple(rows))
