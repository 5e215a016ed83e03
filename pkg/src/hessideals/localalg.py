"""Local algebras of isolated hypersurface germs at the origin.

Colengths dim O_n/I are computed on jets: for each N the quotient
k[y]/(I + m^N) is a finite linear algebra problem.  Once two consecutive
truncations give the same dimension, I + m^N = I + m^(N+1), and Nakayama's
lemma in the local ring puts m^N inside the localized ideal, so the value is
the true local colength.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import NotALocalIsomorphism, NotArtinianUpToBound, NotAUnit
from .gradedla import EchelonBasis, integer_row
from .polycore import (
    Polynomial,
    hessian_matrix,
    is_invertible,
    k_minors,
    linear_part_matrix,
    partial_derivative,
    substitute,
)

log = logging.getLogger(__name__)


def _monomials_below(nvars: int, N: int) -> list[tuple]:
    """Monomials of total degree < N, lowest degree first."""
    if N <= 0:
        return []
    layers = [[(0,) * nvars]]
    for _ in range(1, N):
        nxt = set()
        for mono in layers[-1]:
            for i in range(nvars):
                nxt.add(mono[:i] + (mono[i] + 1,) + mono[i + 1:])
        layers.append(sorted(nxt, reverse=True))
    return [m for layer in layers for m in layer]


def jet_colength(gens: Sequence[Polynomial], N: int) -> int:
    """dim k[y]/(I + m^N) for I generated by ``gens``."""
    if N < 1:
        raise ValueError("N must be positive")
    gens = [g for g in gens if not g.is_zero]
    if not gens:
        raise ValueError("at least one nonzero generator is required")
    basis = _monomials_below(gens[0].nvars, N)
    index = {m: i for i, m in enumerate(basis)}
    eb = EchelonBasis()
    for g in gens:
        order = g.min_degree
        if order >= N:
            continue
        low = {m: c for m, c in g.items() if sum(m) < N}
        for alpha in basis:
            if sum(alpha) + order >= N:
                break
            row = {}
            for mono, c in low.items():
                prod = tuple(a + b for a, b in zip(mono, alpha))
                j = index.get(prod)
                if j is not None:
                    row[j] = c
            if row:
                eb.add(integer_row(row))
                if eb.rank == len(basis):
                    return 0
    return len(basis) - eb.rank


def local_colength(gens: Sequence[Polynomial], N_max: int) -> int:
    """Certified dim O_n/I for a zero-dimensional ideal at the origin."""
    if N_max < 2:
        raise ValueError("N_max must be at least 2")
    prev = jet_colength(gens, 1)
    for N in range(1, N_max):
        cur = jet_colength(gens, N + 1)
        if cur == prev:
            return cur
        prev = cur
    raise NotArtinianUpToBound(f"jet colengths still growing at N={N_max}")


@dataclass(frozen=True)
class LocalInvariants:
    """Hessian numbers chi_1..chi_{n+1} of a germ; ``chi[k-1]`` is chi_k."""

    n: int
    chi: tuple
    tau: int
    mu: Optional[int] = None
    smooth: bool = False

    def chi_k(self, k: int) -> int:
        return self.chi[k - 1]

    @property
    def weighted_homogeneous(self) -> Optional[bool]:
        if self.smooth:
            return None
        return self.chi[self.n - 1] == self.tau - 1

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "chi": list(self.chi),
            "tau": self.tau,
            "mu": self.mu,
            "weighted_homogeneous": self.weighted_homogeneous,
            "smooth": self.smooth,
        }


def default_jet_bound(g: Polynomial) -> int:
    # mu <= (d-1)^n for an isolated singularity of a degree-d polynomial
    d = max(g.degree, 2)
    return max(4 * (d - 1) ** g.nvars, 4)


def _check_germ(g: Polynomial) -> None:
    if g.nvars < 1:
        raise ValueError("germ needs at least one variable")
    if g.constant_term != 0:
        raise ValueError("germ must vanish at the origin")


def tjurina_generators(g: Polynomial) -> list[Polynomial]:
    return [g] + [partial_derivative(g, i) for i in range(g.nvars)]


def hessian_ideal_generators(g: Polynomial, k: int) -> list[Polynomial]:
    """Generators of (g) + J_g + h_k(g); for k = n+1 the minors are omitted."""
    gens = tjurina_generators(g)
    if k <= g.nvars:
        gens += k_minors(hessian_matrix(g, require_homogeneous=False), k)
    return gens


def chi_invariants(g: Polynomial, N_max: int | None = None, with_mu: bool = False) -> LocalInvariants:
    """Hessian numbers of a germ with an isolated singularity at 0."""
    _check_germ(g)
    n = g.nvars
    N_max = N_max or default_jet_bound(g)
    tau = local_colength(tjurina_generators(g), N_max)
    if tau == 0:
        return LocalInvariants(n, (0,) * (n + 1), 0, 0 if with_mu else None, smooth=True)
    chi = [local_colength(hessian_ideal_generators(g, k), N_max) for k in range(1, n + 1)]
    chi.append(tau)
    mu = milnor_number(g, N_max) if with_mu else None
    return LocalInvariants(n, tuple(chi), tau, mu)


def milnor_number(g: Polynomial, N_max: int | None = None) -> int:
    _check_germ(g)
    N_max = N_max or default_jet_bound(g)
    return local_colength([partial_derivative(g, i) for i in range(g.nvars)], N_max)


def tjurina_number(g: Polynomial, N_max: int | None = None) -> int:
    _check_germ(g)
    return local_colength(tjurina_generators(g), N_max or default_jet_bound(g))


def is_weighted_homogeneous(g: Polynomial, N_max: int | None = None) -> bool:
    """True iff chi_n = tau - 1 (otherwise chi_n = tau)."""
    inv = chi_invariants(g, N_max)
    if inv.smooth:
        raise ValueError("smooth germ: weighted homogeneity of a singularity is undefined")
    chi_n = inv.chi_k(inv.n)
    if chi_n not in (inv.tau - 1, inv.tau):
        log.warning("chi_n=%d outside {tau-1, tau} for tau=%d", chi_n, inv.tau)
    return chi_n == inv.tau - 1


def right_left_transform(g: Polynomial, unit: Polynomial, phi: Sequence[Polynomial]) -> Polynomial:
    """u * (g o phi) for a unit u and a local isomorphism phi fixing 0."""
    if unit.nvars != g.nvars:
        raise NotAUnit("unit lives in a different ring")
    if unit.constant_term == 0:
        raise NotAUnit("unit must not vanish at the origin")
    if len(phi) != g.nvars:
        raise NotALocalIsomorphism(f"phi has {len(phi)} components, need {g.nvars}")
    if any(q.constant_term != 0 for q in phi):
        raise NotALocalIsomorphism("phi must fix the origin")
    if not is_invertible(linear_part_matrix(phi)):
        raise NotALocalIsomorphism("linear part of phi is singular")
    return unit * substitute(g, list(phi))


# ---------------------------------------------------------------- ADE catalog


def _sum_squares(vars_: Sequence[Polynomial]) -> Polynomial:
    total = Polynomial.zero(vars_[0].nvars)
    for y in vars_:
        total = total + y * y
    return total


def normal_form(kind: str, n: int = 2) -> Polynomial:
    """Normal form of a simple singularity in n variables.

    ``kind`` is ``"A<q>"``, ``"D<q>"``, ``"E6"``, ``"E7"`` or ``"E8"``.  For
    n > 2 the plane-curve form is stabilized by adding squares; A-types also
    exist for n = 1.
    """
    kind = kind.upper()
    family, q = kind[0], int(kind[1:])
    if n < 1:
        raise ValueError("n must be positive")
    ys = [Polynomial.variable(i, n) for i in range(n)]
    if family == "A":
        if q < 1:
            raise ValueError("A_q needs q >= 1")
        if n == 1:
            return ys[0] ** (q + 1)
        return _sum_squares(ys[:-1]) + ys[-1] ** (q + 1)
    if n < 2:
        raise ValueError(f"{kind} needs at least two variables")
    y1, y2, rest = ys[0], ys[1], ys[2:]
    extra = _sum_squares(rest) if rest else Polynomial.zero(n)
    if family == "D":
        if q < 4:
            raise ValueError("D_q needs q >= 4")
        return y1 * y1 * y2 + y2 ** (q - 1) + extra
    if family == "E":
        forms = {6: y1**3 + y2**4, 7: y1**3 + y1 * y2**3, 8: y1**3 + y2**5}
        if q not in forms:
            raise ValueError(f"unknown E-type {kind}")
        return forms[q] + extra
    raise ValueError(f"unknown singularity type {kind!r}")


#: Catalog used by tests and the CLI: name -> plane-curve normal form.
ADE_CATALOG = {
    name: normal_form(name)
    for name in ["A1", "A2", "A3", "A4", "A5", "D4", "D5", "D6", "E6", "E7", "E8"]
}
