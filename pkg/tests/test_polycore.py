from fractions import Fraction
from itertools import permutations, product

import pytest

from hessideals.errors import (
    IndexOutOfRange,
    KOutOfRange,
    NotHomogeneous,
    NotSquare,
    SingularChangeMatrix,
    VariableCountMismatch,
)
from hessideals.polycore import (
    PolyMatrix,
    Polynomial,
    chart_change_for_point,
    dehomogenize,
    determinant,
    hessian_matrix,
    k_minors,
    linear_change,
    partial_derivative,
    substitute,
)

from conftest import SIX_LINES, xyz


def _expand_binomial_product(factors):
    """Expand a product of binomials by choosing one term from each factor."""
    out = {}
    for choice in product(*factors):
        coeff, mono = 1, (0, 0, 0)
        for c, m in choice:
            coeff *= c
            mono = tuple(a + b for a, b in zip(mono, m))
        out[mono] = out.get(mono, 0) + coeff
    return {m: c for m, c in out.items() if c}


def test_six_lines_expansion_matches_term_enumeration():
    factors = [
        [(1, (2, 0, 0)), (-1, (0, 2, 0))],
        [(1, (0, 2, 0)), (-1, (0, 0, 2))],
        [(1, (2, 0, 0)), (-1, (0, 0, 2))],
    ]
    oracle = _expand_binomial_product(factors)
    f = xyz(SIX_LINES)
    assert len(oracle) == 6
    assert dict(f.terms) == oracle
    assert f.degree == 6 and f.is_homogeneous


def test_arithmetic():
    x, y = Polynomial.variable(0, 2), Polynomial.variable(1, 2)
    assert (x + y) ** 2 == x * x + 2 * x * y + y * y
    assert (x + y) * (x - y) == x**2 - y**2
    assert (x - x).is_zero
    assert (3 - x).constant_term == 3
    assert Fraction(1, 2) * x == x * Fraction(1, 2)
    with pytest.raises(VariableCountMismatch):
        _ = x + Polynomial.variable(0, 3)


def test_support_is_grevlex_descending():
    p = xyz("x*z + y^2 + x^2 + z^2 + x*y + y*z")
    assert p.support() == [(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2)]
    assert p.leading_term() == ((2, 0, 0), 1)


def test_partial_derivative():
    f = xyz("x^3*y + 2*y*z^2 - 5")
    assert partial_derivative(f, 0) == xyz("3*x^2*y")
    assert partial_derivative(f, 2) == xyz("4*y*z")
    with pytest.raises(IndexOutOfRange):
        partial_derivative(f, 3)


def test_hessian_is_symmetric_and_checks_homogeneity():
    h = hessian_matrix(xyz("x^2*y^2 + y^2*z^2 + x^2*z^2 - 2*x*y*z*(x+y+z)"))
    assert h.is_symmetric
    with pytest.raises(NotHomogeneous):
        hessian_matrix(xyz("x^3 + y^2"))
    assert hessian_matrix(xyz("x^3 + y^2"), require_homogeneous=False)[1, 1] == xyz("2")


def test_k_minors_of_fermat_cubic():
    h = hessian_matrix(xyz("x^3 + y^3 + z^3"))
    assert k_minors(h, 3) == [xyz("216*x*y*z")]
    assert len(k_minors(h, 2)) == 3
    assert {str(m) for m in k_minors(h, 1)} == {str(xyz(t)) for t in ("6*x", "6*y", "6*z")}


def test_symmetric_three_by_three_has_at_most_six_two_minors():
    h = hessian_matrix(xyz("x^2*y^2 + y^2*z^2 + x^2*z^2 - 2*x*y*z*(x+y+z)"))
    assert len(k_minors(h, 2)) <= 6


def test_k_minors_identity_and_errors():
    one, zero = Polynomial.constant(1, 1), Polynomial.zero(1)
    ident = PolyMatrix([[one if i == j else zero for j in range(3)] for i in range(3)])
    assert k_minors(ident, 2) == [one]
    with pytest.raises(KOutOfRange):
        k_minors(ident, 4)
    with pytest.raises(NotSquare):
        k_minors(PolyMatrix([[one, zero]]), 1)


def _leibniz(m):
    n = m.rows
    total = Polynomial.zero(m[0, 0].nvars)
    for perm in permutations(range(n)):
        inversions = sum(perm[i] > perm[j] for i in range(n) for j in range(i + 1, n))
        term = Polynomial.constant(-1 if inversions % 2 else 1, total.nvars)
        for i in range(n):
            term = term * m[i, perm[i]]
        total = total + term
    return total


@pytest.mark.parametrize("text", ["x^2*y^2 + y^2*z^2 + x^2*z^2 - 2*x*y*z*(x+y+z)", SIX_LINES, "x^4 + y^3*z + x*y*z^2"])
def test_determinant_matches_leibniz(text):
    h = hessian_matrix(xyz(text))
    assert determinant(h) == _leibniz(h)


def test_substitute():
    y1, y2 = Polynomial.variable(0, 2), Polynomial.variable(1, 2)
    g = y1**2 + y2**3
    assert substitute(g, [y1 + y2**2, y2]) == y1**2 + 2 * y1 * y2**2 + y2**4 + y2**3


def test_dehomogenize_cusp_quartic_at_x_chart():
    f = xyz("x^2*y^2 + y^2*z^2 + x^2*z^2 - 2*x*y*z*(x+y+z)")
    y, z = Polynomial.variable(0, 2), Polynomial.variable(1, 2)
    assert dehomogenize(f, 0) == y**2 + y**2 * z**2 + z**2 - 2 * y * z * (1 + y + z)


def test_dehomogenize_at_point_moves_point_to_origin():
    f = xyz("(x^2-y^2)*(y^2-z^2)*(x^2-z^2)")
    g = dehomogenize(f, 0, chart_change_for_point((1, 1, 1), 0))
    assert g.constant_term == 0
    assert g.min_degree == 3  # x=y, y=z, x=z meet at [1:1:1]
    with pytest.raises(NotHomogeneous):
        dehomogenize(xyz("x + 1"))
    with pytest.raises(IndexOutOfRange):
        dehomogenize(f, 5)


def test_linear_change_rejects_singular_matrix():
    with pytest.raises(SingularChangeMatrix):
        linear_change(xyz("x^2"), [[1, 0, 0], [1, 0, 0], [0, 0, 1]])
