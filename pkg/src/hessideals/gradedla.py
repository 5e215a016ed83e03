"""Exact linear algebra on graded pieces of polynomial ideals.

Everything here reduces to ranks of explicit sparse integer matrices, computed
by fraction-free elimination with row-content removal.  No Groebner bases and
no modular shortcuts: every dimension returned is exact over the rationals
(hence over any extension field).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, gcd
from typing import Iterable, Optional, Sequence

from .errors import NotHomogeneous
from .polycore import Polynomial, jacobian_generators, grevlex_key

Row = dict  # sparse row: column index -> nonzero int


# ---------------------------------------------------------------- rank core


def _content_free(row: Row) -> Row:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {k: v // g for k, v in row.items()}
    return row


def integer_row(coeffs: dict) -> Row:
    """Scale a sparse row of Fractions to a primitive integer row."""
    den = 1
    for c in coeffs.values():
        d = c.denominator if isinstance(c, Fraction) else 1
        den = den * d // gcd(den, d)
    out = {}
    for k, c in coeffs.items():
        v = int(c * den)
        if v:
            out[k] = v
    return _content_free(out)


class EchelonBasis:
    """Incrementally maintained row echelon form over the integers.

    Pivots are keyed by leading (smallest) column index.  ``add`` reduces a new
    row against the current pivots with the two-term fraction-free update
    ``row <- a*row - b*pivot`` and strips the content after every step, which
    keeps the integers small on the sparse matrices produced by monomial
    multiples of generators.
    """

    def __init__(self):
        self.pivots: dict[int, Row] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: Row) -> Row:
        row = dict(row)
        pivots = self.pivots
        while row:
            lead = min(row)
            p = pivots.get(lead)
            if p is None:
                return row
            a, b = p[lead], row[lead]
            g = gcd(a, b)
            a //= g
            b //= g
            if a != 1:
                row = {k: v * a for k, v in row.items()}
            for k, v in p.items():
                w = row.get(k, 0) - b * v
                if w:
                    row[k] = w
                else:
                    row.pop(k, None)
            row = _content_free(row)
        return row

    def add(self, row: Row) -> bool:
        """Insert ``row``; return True if it increased the rank."""
        r = self.reduce(row)
        if not r:
            return False
        r = _content_free(r)
        lead = min(r)
        if r[lead] < 0:
            r = {k: -v for k, v in r.items()}
        self.pivots[lead] = r
        return True


def exact_rank(rows: Iterable[Row]) -> int:
    """Rank over Q of a sparse integer (or Fraction) matrix given by rows."""
    prepared = []
    for row in rows:
        if not row:
            continue
        if any(isinstance(v, Fraction) and v.denominator != 1 for v in row.values()):
            row = integer_row(row)
        else:
            row = {k: int(v) for k, v in row.items() if v}
        if row:
            prepared.append(row)
    prepared.sort(key=len)
    eb = EchelonBasis()
    for row in prepared:
        eb.add(row)
    return eb.rank


# ---------------------------------------------------------------- monomials


@lru_cache(maxsize=None)
def _monomials(nvars: int, m: int) -> tuple:
    if nvars == 0:
        return ((),) if m == 0 else ()
    if nvars == 1:
        return ((m,),)
    out = []
    for e in range(m, -1, -1):
        for rest in _monomials(nvars - 1, m - e):
            out.append((e,) + rest)
    out.sort(key=grevlex_key, reverse=True)
    return tuple(out)


def monomial_basis(nvars: int, m: int) -> list[tuple]:
    """Monomials of total degree ``m`` in decreasing grevlex order."""
    if m < 0:
        return []
    return list(_monomials(nvars, m))


@lru_cache(maxsize=None)
def _monomial_index(nvars: int, m: int) -> dict:
    return {mono: i for i, mono in enumerate(_monomials(nvars, m))}


def space_dim(nvars: int, m: int) -> int:
    """dim S_m for a polynomial ring in ``nvars`` variables."""
    if m < 0:
        return 0
    return comb(m + nvars - 1, nvars - 1) if nvars else int(m == 0)


# ---------------------------------------------------------------- Hilbert sequences


@dataclass(frozen=True)
class HilbertSeq:
    """Coefficients dim A_0, dim A_1, ... of a graded algebra.

    ``tail`` is ``(stable_from, stable_value)`` once it has been certified;
    beyond the recorded coefficients the value is then ``stable_value``.
    """

    coeffs: tuple
    tail: Optional[tuple] = None

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if self.tail is not None:
            s, v = self.tail
            object.__setattr__(self, "tail", (int(s), int(v)))
            if any(c != v for c in self.coeffs[s:]):
                raise ValueError("recorded coefficients contradict the stable tail")

    @property
    def stable_from(self):
        return self.tail[0] if self.tail else None

    @property
    def stable_value(self):
        return self.tail[1] if self.tail else None

    def coefficient(self, m: int) -> Optional[int]:
        """dim in degree m, or None when m is beyond what is known."""
        if m < 0:
            return 0
        if self.tail and m >= self.tail[0]:
            return self.tail[1]
        if m < len(self.coeffs):
            return self.coeffs[m]
        return None

    def head(self) -> tuple:
        """Coefficients before the tail (all coefficients if no tail)."""
        if self.tail is None:
            return self.coeffs
        return tuple(self.coefficient(m) for m in range(self.tail[0]))

    def extended(self, length: int) -> tuple:
        vals = tuple(self.coefficient(m) for m in range(length))
        if None in vals:
            raise ValueError(f"series unknown beyond degree {len(self.coeffs) - 1}")
        return vals

    def canonical(self) -> tuple:
        """Hashable normal form: equal series give equal keys."""
        if not self.tail:
            return (self.coeffs, None)
        s, v = self.tail
        while s > 0 and self.coefficient(s - 1) == v:
            s -= 1
        return (tuple(self.coefficient(m) for m in range(s)), (s, v))

    def same_series(self, other: "HilbertSeq") -> bool:
        return self.canonical() == other.canonical()

    def dominates(self, other: "HilbertSeq") -> bool:
        """Coefficientwise ``self >= other``; False if either is not fully known."""
        if self.tail is None or other.tail is None:
            if self.tail is None and other.tail is None and len(self.coeffs) == len(other.coeffs):
                return all(a >= b for a, b in zip(self.coeffs, other.coeffs))
            return False
        n = max(self.tail[0], other.tail[0]) + 1
        return all(a >= b for a, b in zip(self.extended(n), other.extended(n)))

    def to_json(self, m_max: int | None = None) -> dict:
        out = {
            "coeffs": list(self.head()),
            "stable_from": self.stable_from,
            "stable_value": self.stable_value,
        }
        if m_max is not None:
            out["m_max"] = m_max
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "HilbertSeq":
        coeffs = list(obj["coeffs"])
        tail = None
        if obj.get("stable_from") is not None:
            tail = (obj["stable_from"], obj["stable_value"])
            if len(coeffs) < tail[0]:
                raise ValueError("coefficients stop before the stable tail starts")
            m_max = obj.get("m_max")
            if m_max is not None:
                coeffs += [tail[1]] * (m_max + 1 - len(coeffs))
        return cls(tuple(coeffs), tail)

    def format(self, var: str = "t") -> str:
        """Human-readable series such as ``1 + 3t + 6t^2 + 3(t^4 + t^5 + ...)``."""

        def mono(m):
            return "1" if m == 0 else (var if m == 1 else f"{var}^{m}")

        def term(c, m):
            if m == 0:
                return str(c)
            return mono(m) if c == 1 else f"{c}{mono(m)}"

        head = self.head()
        parts = [term(c, m) for m, c in enumerate(head) if c]
        if self.tail and self.tail[1]:
            s, v = self.tail
            parts.append(f"{v}({mono(s)} + {mono(s + 1)} + ...)")
        elif self.tail is None:
            parts.append("...")
        return " + ".join(parts) if parts else "0"


def detect_stable_tail(seq: Sequence[int], certified_from: int) -> Optional[tuple]:
    """Tail ``(s, value)`` if ``seq`` is constant from ``certified_from`` on.

    ``certified_from`` must come from a theoretical stabilization bound; ``s``
    is then pushed back to the smallest index from which ``seq`` is constant.
    """
    if not 0 <= certified_from < len(seq):
        raise ValueError("certified_from must index into seq")
    value = seq[certified_from]
    if any(c != value for c in seq[certified_from:]):
        return None
    s = certified_from
    while s > 0 and seq[s - 1] == value:
        s -= 1
    return (s, value)


# ---------------------------------------------------------------- graded ideals


@dataclass(frozen=True)
class GradedIdeal:
    nvars: int
    generators: tuple = field(default=())

    def __post_init__(self):
        gens = []
        for g in self.generators:
            if g.nvars != self.nvars:
                raise ValueError("generator lives in a different ring")
            if g.is_zero:
                continue
            if not g.is_homogeneous:
                raise NotHomogeneous("graded ideals need homogeneous generators")
            gens.append(g)
        object.__setattr__(self, "generators", tuple(gens))

    @property
    def degrees(self) -> tuple:
        return tuple(g.degree for g in self.generators)

    def __add__(self, other: "GradedIdeal") -> "GradedIdeal":
        return GradedIdeal(self.nvars, self.generators + other.generators)


def _piece_rows(ideal: GradedIdeal, m: int):
    index = _monomial_index(ideal.nvars, m)
    for g in ideal.generators:
        e = g.degree
        if e > m:
            continue
        base = integer_row({mono: c for mono, c in g.items()})
        for alpha in _monomials(ideal.nvars, m - e):
            yield {index[tuple(a + b for a, b in zip(mono, alpha))]: c for mono, c in base.items()}


def ideal_piece_dim(ideal: GradedIdeal, m: int) -> int:
    """dim_Q of the degree-m piece of the ideal."""
    if m < 0:
        return 0
    return exact_rank(_piece_rows(ideal, m))


def quotient_piece_dim(ideal: GradedIdeal, m: int) -> int:
    return space_dim(ideal.nvars, m) - ideal_piece_dim(ideal, m)


def quotient_hilbert(ideal: GradedIdeal, m_max: int, certified_from: int | None = None) -> HilbertSeq:
    """Hilbert function of S/I in degrees 0..m_max.

    A tail is attached when ``certified_from`` (a proven stabilization degree)
    is at most ``m_max`` and the values agree from there on.  Independently, a
    vanishing piece certifies the zero tail: S_m in I forces S_{m+1} in I.
    """
    if m_max < 0:
        raise ValueError("m_max must be nonnegative")
    coeffs = []
    for m in range(m_max + 1):
        q = quotient_piece_dim(ideal, m)
        coeffs.append(q)
        if q == 0:
            coeffs.extend([0] * (m_max - m))
            return HilbertSeq(tuple(coeffs), detect_stable_tail(coeffs, m))
    tail = None
    if certified_from is not None and certified_from <= m_max:
        tail = detect_stable_tail(coeffs, max(certified_from, 0))
    return HilbertSeq(tuple(coeffs), tail)


# ---------------------------------------------------------------- syzygies


def _require_form(f: Polynomial) -> None:
    if f.is_zero or not f.is_homogeneous:
        raise NotHomogeneous("a nonzero homogeneous polynomial is required")


def syzygy_dim(f: Polynomial, q: int) -> int:
    """dim of {(a_i) in S_q^(n+1) : sum a_i f_i = 0}."""
    _require_form(f)
    if q < 0:
        return 0
    gens = jacobian_generators(f)
    ideal = GradedIdeal(f.nvars, tuple(gens))
    # the map (a_i) -> sum a_i f_i has image J_{q+d-1}; zero partials add kernel
    return f.nvars * space_dim(f.nvars, q) - ideal_piece_dim(ideal, q + f.degree - 1)


def koszul_syzygy_dim(f: Polynomial, q: int) -> int:
    """dim of the span of x^alpha (f_j e_i - f_i e_j) inside S_q^(n+1)."""
    _require_form(f)
    d = f.degree
    shift = q - (d - 1)
    if shift < 0:
        return 0
    gens = jacobian_generators(f)
    v = f.nvars
    index = _monomial_index(v, q)
    width = len(index)
    # f_i and f_j must keep their relative scale inside one row
    fr = [dict(g.items()) for g in gens]
    rows = []
    for i, j in combinations(range(v), 2):
        for alpha in _monomials(v, shift):
            row = {}
            for mono, c in fr[j].items():
                row[i * width + index[tuple(a + b for a, b in zip(mono, alpha))]] = c
            for mono, c in fr[i].items():
                col = j * width + index[tuple(a + b for a, b in zip(mono, alpha))]
                row[col] = row.get(col, 0) - c
            row = {k: c for k, c in row.items() if c}
            if row:
                rows.append(integer_row(row))
    return exact_rank(rows)


def essential_syzygy_dim(f: Polynomial, q: int) -> int:
    """Syzygies of degree q among the partials modulo the Koszul ones."""
    return syzygy_dim(f, q) - koszul_syzygy_dim(f, q)


def mdr(f: Polynomial, q_max: int) -> Optional[int]:
    """Smallest q <= q_max carrying an essential syzygy, or None."""
    _require_form(f)
    for q in range(q_max + 1):
        if essential_syzygy_dim(f, q) > 0:
            return q
    return None
