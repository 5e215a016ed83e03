import random
from itertools import combinations

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from hessideals.errors import NotHomogeneous
from hessideals.gradedla import (
    GradedIdeal,
    HilbertSeq,
    detect_stable_tail,
    essential_syzygy_dim,
    exact_rank,
    ideal_piece_dim,
    integer_row,
    koszul_syzygy_dim,
    mdr,
    monomial_basis,
    quotient_hilbert,
    quotient_piece_dim,
    space_dim,
    syzygy_dim,
)
from hessideals.hessalg import jacobian_ideal, smooth_reference_series
from hessideals.polycore import Polynomial, jacobian_generators

from conftest import CUSP_QUARTIC, FERMAT_SEXTIC, xyz


def _monos(nvars, m):
    if nvars == 1:
        return [(m,)]
    return [(a,) + rest for a in range(m, -1, -1) for rest in _monos(nvars - 1, m - a)]


def _sympy_piece_dim(gens, nvars, m):
    """Rank of the Macaulay matrix of the degree-m piece, computed by sympy."""
    cols = {mono: i for i, mono in enumerate(_monos(nvars, m))}
    rows = []
    for g in gens:
        shift = m - g.degree
        if shift < 0:
            continue
        for alpha in _monos(nvars, shift):
            row = [0] * len(cols)
            for mono, c in g.items():
                row[cols[tuple(a + b for a, b in zip(mono, alpha))]] += sympy.Rational(c.numerator, c.denominator)
            rows.append(row)
    return sympy.Matrix(rows).rank() if rows else 0


def test_monomial_basis_and_space_dim():
    assert monomial_basis(3, 2) == [(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2)]
    assert [space_dim(3, m) for m in range(5)] == [1, 3, 6, 10, 15]
    assert monomial_basis(2, 0) == [(0, 0)]


def test_fermat_jacobian_piece():
    J = jacobian_ideal(xyz(FERMAT_SEXTIC))
    assert ideal_piece_dim(J, 6) == 9
    assert ideal_piece_dim(J, 6) == _sympy_piece_dim(J.generators, 3, 6)


def test_cusp_quotient_piece():
    J = jacobian_ideal(xyz(CUSP_QUARTIC))
    assert quotient_piece_dim(J, 3) == 7
    for m in range(6):
        assert ideal_piece_dim(J, m) == _sympy_piece_dim(J.generators, 3, m)


def test_graded_ideal_rejects_inhomogeneous():
    with pytest.raises(NotHomogeneous):
        GradedIdeal(3, (xyz("x^2 + y"),))
    assert GradedIdeal(3, (xyz("0"), xyz("x"))).generators == (xyz("x"),)


def test_quotient_hilbert_zero_rule():
    s = quotient_hilbert(GradedIdeal(3, (xyz("x"), xyz("y"), xyz("z^2"))), 5)
    assert s.coeffs == (1, 1, 0, 0, 0, 0)
    assert s.tail == (2, 0)


def test_quotient_hilbert_uncertified_has_no_tail():
    s = quotient_hilbert(jacobian_ideal(xyz(CUSP_QUARTIC)), 5)
    assert s.tail is None
    t = quotient_hilbert(jacobian_ideal(xyz(CUSP_QUARTIC)), 7, certified_from=4)
    assert t.head() == (1, 3, 6, 7) and t.tail == (4, 6)


def test_detect_stable_tail():
    assert detect_stable_tail([1, 3, 6, 6, 6], 3) == (2, 6)
    assert detect_stable_tail([1, 3, 6, 7, 6], 3) is None
    assert detect_stable_tail([1, 3, 3, 3], 3) == (1, 3)
    with pytest.raises(ValueError):
        detect_stable_tail([1, 2], 5)


def test_hilbert_seq_notation():
    a = HilbertSeq((1, 3, 6, 7, 6, 3, 3), (6, 3))
    b = HilbertSeq((1, 3, 6, 7, 6, 3), (5, 3))
    assert a.same_series(b) and a.canonical() == b.canonical()
    assert a.coefficient(100) == 3
    assert HilbertSeq((1, 2, 3)).coefficient(9) is None
    assert b.format() == "1 + 3t + 6t^2 + 7t^3 + 6t^4 + 3(t^5 + t^6 + ...)"
    assert a.format() == "1 + 3t + 6t^2 + 7t^3 + 6t^4 + 3t^5 + 3(t^6 + t^7 + ...)"
    assert HilbertSeq.from_json(a.to_json(8)).same_series(a)
    with pytest.raises(ValueError):
        HilbertSeq((1, 3, 5), (1, 3))
    with pytest.raises(ValueError):
        HilbertSeq.from_json({"coeffs": [1], "stable_from": 3, "stable_value": 2})


def test_dominates():
    big = HilbertSeq((1, 3, 6), (2, 6))
    small = HilbertSeq((1, 3, 5), (2, 5))
    assert big.dominates(small) and not small.dominates(big)
    assert big.dominates(big)


def test_smooth_reference_is_palindromic():
    for n, d in [(1, 4), (2, 3), (2, 4), (2, 6), (3, 4)]:
        T = (n + 1) * (d - 2)
        coeffs = smooth_reference_series(n, d, T).coeffs
        assert coeffs == coeffs[::-1]
        assert sum(coeffs) == (d - 1) ** (n + 1)


def test_smooth_reference_quartic():
    assert smooth_reference_series(2, 4, 8).coeffs == (1, 3, 6, 7, 6, 3, 1, 0, 0)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 6), st.integers(1, 6))
def test_exact_rank_matches_sympy_and_ignores_order(seed, nrows, ncols):
    rng = random.Random(seed)
    mat = [[rng.choice([0, 0, 1, -1, 2, 3, -7]) for _ in range(ncols)] for _ in range(nrows)]
    rank = sympy.Matrix(mat).rank()

    def rows_of(m):
        return [integer_row({j: c for j, c in enumerate(r) if c}) for r in m]

    assert exact_rank(rows_of(mat)) == rank
    perm_r = rng.sample(range(nrows), nrows)
    perm_c = rng.sample(range(ncols), ncols)
    shuffled = [[mat[i][j] for j in perm_c] for i in perm_r]
    assert exact_rank(rows_of(shuffled)) == rank


def test_quotient_monotone_under_inclusion():
    f = xyz(CUSP_QUARTIC)
    J = jacobian_ideal(f)
    bigger = GradedIdeal(3, J.generators + (xyz("x*y*z"),))
    for m in range(7):
        assert quotient_piece_dim(bigger, m) <= quotient_piece_dim(J, m)


def _sympy_syzygy_dims(f, q):
    """(all syzygies, Koszul span) in degree q by explicit linear algebra."""
    grads = jacobian_generators(f)
    v, d = f.nvars, f.degree
    src = _monos(v, q)
    tgt = {m: i for i, m in enumerate(_monos(v, q + d - 1))}
    cols = []
    for i in range(v):
        for alpha in src:
            col = [0] * len(tgt)
            for mono, c in grads[i].items():
                col[tgt[tuple(a + b for a, b in zip(mono, alpha))]] += sympy.Rational(c.numerator, c.denominator)
            cols.append(col)
    full = len(cols) - sympy.Matrix(cols).rank()
    src_idx = {m: i for i, m in enumerate(src)}
    kos = []
    if q >= d - 1:
        for i, j in combinations(range(v), 2):
            for alpha in _monos(v, q - d + 1):
                vec = [0] * (v * len(src))
                for mono, c in grads[j].items():
                    vec[i * len(src) + src_idx[tuple(a + b for a, b in zip(mono, alpha))]] += c
                for mono, c in grads[i].items():
                    vec[j * len(src) + src_idx[tuple(a + b for a, b in zip(mono, alpha))]] -= c
                kos.append([sympy.Rational(x.numerator, x.denominator) if hasattr(x, "numerator") else x for x in vec])
    k = sympy.Matrix(kos).rank() if kos else 0
    return full, k


@pytest.mark.parametrize("text, q", [(CUSP_QUARTIC, 1), (CUSP_QUARTIC, 2), (CUSP_QUARTIC, 3), ("x^4+y^4+z^4", 3)])
def test_syzygies_against_linear_algebra(text, q):
    f = xyz(text)
    full, kos = _sympy_syzygy_dims(f, q)
    assert syzygy_dim(f, q) == full
    assert koszul_syzygy_dim(f, q) == kos
    assert essential_syzygy_dim(f, q) == full - kos


def test_mdr_examples():
    assert mdr(xyz(CUSP_QUARTIC), 3) == 2
    assert mdr(xyz("x^4+y^4+z^4"), 3) is None
    with pytest.raises(NotHomogeneous):
        mdr(Polynomial.zero(3), 2)
