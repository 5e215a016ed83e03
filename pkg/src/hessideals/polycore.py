"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`Polynomial` is an immutable map from exponent tuples to nonzero
:class:`fractions.Fraction` coefficients.  On top of the ring operations this
module provides the differential constructions needed downstream: partial
derivatives, Jacobian generators, Hessian matrices, their k x k minors,
de-homogenization to affine charts and substitution.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from numbers import Rational
from typing import Iterable, Mapping, Sequence

from .errors import (
    ArityMismatch,
    DegreeTooLow,
    IndexOutOfRange,
    KOutOfRange,
    NotHomogeneous,
    NotSquare,
    SingularChangeMatrix,
    VariableCountMismatch,
)

Monomial = tuple


def grevlex_key(exponents: Sequence[int]) -> tuple:
    """Sort key for graded reverse lexicographic order (larger key = larger monomial)."""
    return (sum(exponents), tuple(-e for e in reversed(exponents)))


def _coerce(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"exact rational coefficient expected, got {type(c).__name__}")


class Polynomial:
    """Immutable sparse polynomial in ``nvars`` variables over the rationals."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Monomial, object] | None = None):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        clean: dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != nvars or any(e < 0 for e in mono):
                raise ValueError(f"bad exponent vector {mono} for {nvars} variables")
            c = _coerce(c)
            if c:
                clean[mono] = clean.get(mono, Fraction(0)) + c
                if not clean[mono]:
                    del clean[mono]
        self.nvars = nvars
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "Polynomial":
        # trusted constructor: terms already canonical
        p = cls.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, c, nvars: int) -> "Polynomial":
        c = _coerce(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def variable(cls, i: int, nvars: int) -> "Polynomial":
        if not 0 <= i < nvars:
            raise IndexOutOfRange(f"variable index {i} outside 0..{nvars - 1}")
        mono = tuple(1 if j == i else 0 for j in range(nvars))
        return cls._raw(nvars, {mono: Fraction(1)})

    @classmethod
    def monomial(cls, exponents: Sequence[int], coeff=1) -> "Polynomial":
        return cls(len(exponents), {tuple(exponents): coeff})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return self._terms

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def support(self) -> list[Monomial]:
        """Monomials with nonzero coefficient, largest first in grevlex order."""
        return sorted(self._terms, key=grevlex_key, reverse=True)

    def coefficient(self, mono: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    @property
    def min_degree(self) -> int:
        """Order at the origin (lowest total degree present); -1 for zero."""
        return min((sum(m) for m in self._terms), default=-1)

    @property
    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    @property
    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.nvars, Fraction(0))

    def homogeneous_part(self, deg: int) -> "Polynomial":
        return Polynomial._raw(self.nvars, {m: c for m, c in self._terms.items() if sum(m) == deg})

    def truncate(self, below: int) -> "Polynomial":
        """Drop every term of total degree >= ``below``."""
        return Polynomial._raw(self.nvars, {m: c for m, c in self._terms.items() if sum(m) < below})

    def leading_term(self) -> tuple[Monomial, Fraction]:
        mono = max(self._terms, key=grevlex_key)
        return mono, self._terms[mono]

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if self.nvars != other.nvars:
            raise VariableCountMismatch(f"{self.nvars} vs {other.nvars} variables")

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(other, self.nvars)

    def __add__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.nvars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            try:
                c = _coerce(other)
            except TypeError:
                return NotImplemented
            if not c:
                return Polynomial.zero(self.nvars)
            return Polynomial._raw(self.nvars, {m: v * c for m, v in self._terms.items()})
        self._check(other)
        out: dict[Monomial, Fraction] = {}
        for a, c in self._terms.items():
            for b, e in other._terms.items():
                m = tuple(x + y for x, y in zip(a, b))
                out[m] = out.get(m, 0) + c * e
        return Polynomial._raw(self.nvars, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.constant(1, self.nvars)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        try:
            return self == Polynomial.constant(other, self.nvars)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        from .polytext import render_polynomial

        return f"Polynomial({self.nvars}, {render_polynomial(self)!r})"

    def __str__(self):
        from .polytext import render_polynomial

        return render_polynomial(self)

    # -- evaluation -------------------------------------------------------

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise ArityMismatch(f"point has {len(point)} coordinates, need {self.nvars}")
        point = [_coerce(x) for x in point]
        total = Fraction(0)
        for m, c in self._terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v *= x**e
            total += v
        return total


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    p._check(q)
    return p + q


def sub(p: Polynomial, q: Polynomial) -> Polynomial:
    p._check(q)
    return p - q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    p._check(q)
    return p * q


def partial_derivative(p: Polynomial, i: int) -> Polynomial:
    if not 0 <= i < p.nvars:
        raise IndexOutOfRange(f"variable index {i} outside 0..{p.nvars - 1}")
    out = {}
    for m, c in p.items():
        e = m[i]
        if e:
            out[m[:i] + (e - 1,) + m[i + 1:]] = c * e
    return Polynomial._raw(p.nvars, out)


def jacobian_generators(f: Polynomial) -> list[Polynomial]:
    """The partial derivatives (f_0, ..., f_n) of a homogeneous form."""
    if not f.is_homogeneous or f.is_zero:
        raise NotHomogeneous("jacobian_generators needs a nonzero homogeneous polynomial")
    if f.degree < 1:
        raise DegreeTooLow("constant polynomial has no Jacobian ideal")
    return [partial_derivative(f, i) for i in range(f.nvars)]


class PolyMatrix:
    """Dense matrix of polynomials sharing one variable count."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[Polynomial]]):
        self.entries = tuple(tuple(row) for row in entries)
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        if any(len(r) != self.cols for r in self.entries):
            raise ValueError("ragged matrix")

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.entries == other.entries

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.entries)
        return f"PolyMatrix([{body}])"

    @property
    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )


def hessian_matrix(f: Polynomial, require_homogeneous: bool = True) -> PolyMatrix:
    """Matrix of second partial derivatives.

    Germs are not homogeneous, so local callers pass ``require_homogeneous=False``.
    """
    if require_homogeneous:
        if not f.is_homogeneous or f.is_zero:
            raise NotHomogeneous("hessian_matrix needs a nonzero homogeneous polynomial")
        if f.degree < 2:
            raise DegreeTooLow("Hessian of a form of degree < 2 vanishes identically")
    first = [partial_derivative(f, i) for i in range(f.nvars)]
    grid = [[None] * f.nvars for _ in range(f.nvars)]
    for i in range(f.nvars):
        for j in range(i, f.nvars):
            grid[i][j] = grid[j][i] = partial_derivative(first[i], j)
    return PolyMatrix(grid)


class _Minors:
    """Memoized Laplace expansion along the first row of each submatrix."""

    def __init__(self, m: PolyMatrix):
        self.m = m
        self.nvars = m.entries[0][0].nvars
        self.memo: dict[tuple, Polynomial] = {}

    def det(self, rows: tuple, cols: tuple) -> Polynomial:
        if len(rows) == 1:
            return self.m.entries[rows[0]][cols[0]]
        key = (rows, cols)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        r0, rest = rows[0], rows[1:]
        total = Polynomial.zero(self.nvars)
        for j, c in enumerate(cols):
            a = self.m.entries[r0][c]
            if a.is_zero:
                continue
            sub_det = self.det(rest, cols[:j] + cols[j + 1:])
            if sub_det.is_zero:
                continue
            term = a * sub_det
            total = total - term if j % 2 else total + term
        self.memo[key] = total
        return total


def determinant(m: PolyMatrix) -> Polynomial:
    if m.rows != m.cols:
        raise NotSquare(f"{m.rows}x{m.cols} matrix")
    idx = tuple(range(m.rows))
    return _Minors(m).det(idx, idx)


def _sign_normal(p: Polynomial) -> Polynomial:
    _, c = p.leading_term()
    return -p if c < 0 else p


def k_minors(m: PolyMatrix, k: int) -> list[Polynomial]:
    """All nonzero k x k minors, deduplicated up to sign.

    Row and column subsets are enumerated in lexicographic order and the first
    occurrence of each minor (with its own sign) is kept.
    """
    if m.rows != m.cols:
        raise NotSquare(f"{m.rows}x{m.cols} matrix")
    if not 1 <= k <= m.rows:
        raise KOutOfRange(f"k={k} outside 1..{m.rows}")
    engine = _Minors(m)
    seen = set()
    out = []
    for rows in combinations(range(m.rows), k):
        for cols in combinations(range(m.cols), k):
            d = engine.det(rows, cols)
            if d.is_zero:
                continue
            key = _sign_normal(d)
            if key in seen:
                continue
            seen.add(key)
            out.append(d)
    return out


def substitute(p: Polynomial, images: Sequence[Polynomial]) -> Polynomial:
    """Ring homomorphism sending variable i to ``images[i]``."""
    if len(images) != p.nvars:
        raise ArityMismatch(f"{len(images)} images for {p.nvars} variables")
    if not images:
        return p
    target = images[0].nvars
    if any(q.nvars != target for q in images):
        raise VariableCountMismatch("substitution images live in different rings")
    powers: list[dict[int, Polynomial]] = [{0: Polynomial.constant(1, target)} for _ in images]

    def power(i: int, e: int) -> Polynomial:
        cache = powers[i]
        if e not in cache:
            best = max(k for k in cache if k < e)
            q = cache[best]
            for j in range(best + 1, e + 1):
                q = q * images[i]
                cache[j] = q
        return cache[e]

    acc: dict[Monomial, Fraction] = {}
    for mono, c in p.items():
        term = Polynomial.constant(c, target)
        for i, e in enumerate(mono):
            if e:
                term = term * power(i, e)
        for m, v in term.items():
            s = acc.get(m, 0) + v
            if s:
                acc[m] = s
            else:
                acc.pop(m, None)
    return Polynomial._raw(target, acc)


def _rational_det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    a = [[_coerce(x) for x in r] for r in rows]
    n = len(a)
    if any(len(r) != n for r in a):
        raise NotSquare("change matrix must be square")
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            if a[r][c]:
                t = a[r][c] / a[c][c]
                for j in range(c, n):
                    a[r][j] -= t * a[c][j]
    return det


def linear_change(f: Polynomial, change: Sequence[Sequence]) -> Polynomial:
    """Return f(A x), i.e. substitute x_i -> sum_j A[i][j] x_j."""
    n = f.nvars
    if len(change) != n or any(len(r) != n for r in change):
        raise SingularChangeMatrix(f"change matrix must be {n}x{n}")
    if _rational_det(change) == 0:
        raise SingularChangeMatrix("change matrix is not invertible")
    xs = [Polynomial.variable(j, n) for j in range(n)]
    images = []
    for row in change:
        q = Polynomial.zero(n)
        for a, x in zip(row, xs):
            if a:
                q = q + x * _coerce(a)
        images.append(q)
    return substitute(f, images)


def chart_change_for_point(point: Sequence, chart: int = 0) -> list[list[Fraction]]:
    """An invertible matrix whose column ``chart`` is ``point``.

    With this matrix, ``dehomogenize(f, chart, change)`` is the local equation of
    V(f) at ``point``.  The other columns are standard basis vectors, chosen so
    the matrix stays invertible.
    """
    n = len(point)
    p = [_coerce(x) for x in point]
    if not 0 <= chart < n:
        raise IndexOutOfRange(f"chart {chart} outside 0..{n - 1}")
    if p[chart]:
        free = [j for j in range(n) if j != chart]
    else:
        pivot = next((j for j in range(n) if p[j]), None)
        if pivot is None:
            raise SingularChangeMatrix("the zero vector is not a projective point")
        free = [j for j in range(n) if j != pivot]
    it = iter(free)
    cols = []
    for c in range(n):
        if c == chart:
            cols.append(p)
        else:
            e = next(it)
            cols.append([Fraction(int(r == e)) for r in range(n)])
    return [[cols[c][r] for c in range(n)] for r in range(n)]


def dehomogenize(f: Polynomial, chart: int = 0, change: Sequence[Sequence] | None = None) -> Polynomial:
    """Local equation in n variables obtained by setting x_chart = 1.

    When ``change`` is given the form is first replaced by f(A x), so the germ
    returned is the one of V(f) at the point A e_chart.
    """
    if not f.is_homogeneous:
        raise NotHomogeneous("dehomogenize needs a homogeneous polynomial")
    if not 0 <= chart < f.nvars:
        raise IndexOutOfRange(f"chart {chart} outside 0..{f.nvars - 1}")
    if change is not None:
        f = linear_change(f, change)
    out: dict[Monomial, Fraction] = {}
    for m, c in f.items():
        key = m[:chart] + m[chart + 1:]
        s = out.get(key, 0) + c
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return Polynomial._raw(f.nvars - 1, out)


def linear_part_matrix(images: Sequence[Polynomial]) -> list[list[Fraction]]:
    """Jacobian at the origin of a polynomial map given by its components."""
    n = images[0].nvars if images else 0
    rows = []
    for q in images:
        rows.append([q.coefficient(tuple(int(i == j) for i in range(n))) for j in range(n)])
    return rows


def is_invertible(matrix: Sequence[Sequence]) -> bool:
    return bool(matrix) and _rational_det(matrix) != 0


def variables(nvars: int) -> list[Polynomial]:
    return [Polynomial.variable(i, nvars) for i in range(nvars)]


def from_terms(nvars: int, terms: Iterable[tuple[Sequence[int], object]]) -> Polynomial:
    acc: dict = {}
    for m, c in terms:
        acc[tuple(m)] = acc.get(tuple(m), 0) + _coerce(c)
    return Polynomial(nvars, acc)
