from fractions import Fraction

import pytest

from hessideals.errors import CompareKMissing, MixedDegrees
from hessideals.polytext import PolyText
from hessideals.strata import (
    CAVEAT,
    evaluate_family,
    hasse_covers,
    hasse_dot,
    partition_by_series,
    random_rational_points,
    read_assignments_csv,
)

from conftest import XYZ

THREE_PARA = PolyText("x^6+y^6+z^6+a*x^4*y*z+b*x*y^4*z+c*x*y*z^4", XYZ, ("a", "b", "c"))


def strata(points, ks=(1,)):
    return partition_by_series(evaluate_family(THREE_PARA, points, ks))


def test_series_at_named_points():
    report = evaluate_family(THREE_PARA, [(0, 0, 0), (2, 2, 2), (1, 2, 5)], [1])
    heads = [s.series[1].head() for s in report.samples]
    assert heads == [(1, 3, 6, 10, 12, 12, 10, 6, 3, 1), (1, 3, 6, 10, 9, 6, 2), (1, 3, 6, 10, 9, 3)]
    assert all(s.series[1].stable_value == 0 for s in report.samples)


def test_two_generic_points_share_a_stratum():
    report = strata([(0, 0, 0), (1, 2, 5), (2, 3, 7)])
    assert report.strata == [[0], [1, 2]]


def test_single_sample():
    report = strata([(1, 2, 5)])
    assert report.strata == [[0]]
    assert hasse_covers(report, 1) == []
    dot = hasse_dot(report, 1)
    assert "S1 [" in dot and "->" not in dot


def test_permuted_parameters_share_a_stratum():
    report = strata([(1, 1, 5), (5, 5, 1)])
    assert report.strata == [[0, 1]]


def test_refinement_by_more_ks():
    points = [(0, 0, 0), (1, 2, 5), (1, 1, 5), (2, 2, 2)]
    coarse = strata(points, (1,))
    fine = strata(points, (1, 2))
    for members in fine.strata:
        assert len({coarse.stratum_of(i) for i in members}) == 1


def test_compare_k_missing():
    report = strata([(1, 2, 5)])
    with pytest.raises(CompareKMissing):
        hasse_covers(report, 2)
    with pytest.raises(CompareKMissing):
        hasse_dot(report, [1, 3])


def test_incomparable_pair_has_no_edge():
    # H_1 puts the first curve above, H_2 puts it below
    family = PolyText("x^6+y^6+z^6+3*x^2*y^2*z^2+a*x*y*z^4", XYZ, ("a",))
    report = partition_by_series(evaluate_family(family, [(0,), (3,)], [1, 2]))
    assert len(report.strata) == 2
    assert hasse_covers(report, 1) == [(0, 1)]
    assert hasse_covers(report, 2) == [(1, 0)]
    assert hasse_covers(report, [1, 2]) == []
    assert "->" not in hasse_dot(report, [1, 2])


def test_dot_output_shape():
    report = strata([(1, 2, 5), (0, 0, 0)])
    dot = hasse_dot(report, 1)
    assert dot.startswith("digraph hessian_poset {") and dot.rstrip().endswith("}")
    assert "S2 -> S1;" in dot
    assert CAVEAT in dot


def test_failed_samples_are_quarantined():
    # at a = 0 the quartic contains a double line, so the series never stabilizes
    family = PolyText("(x+y+z)^2*(x^2+y^2+z^2) + a*(x^4+y^4+z^4)", XYZ, ("a",))
    report = partition_by_series(evaluate_family(family, [(0,), (1,)], [3]))
    assert report.samples[0].failed and "stabilize" in report.samples[0].error
    assert not report.samples[1].failed
    assert report.strata == [[1]]


def test_mixed_degrees():
    family = PolyText("x^2 + a*y^3", XYZ, ("a",))
    with pytest.raises(MixedDegrees):
        evaluate_family(family, [(0,), (1,)], [1])


def test_parallel_matches_serial():
    points = [(0, 0, 0), (1, 2, 5), (2, 2, 2)]
    serial = evaluate_family(THREE_PARA, points, [1])
    parallel = evaluate_family(THREE_PARA, points, [1], workers=2)
    assert [s.series[1] for s in serial.samples] == [s.series[1] for s in parallel.samples]


def test_random_points_are_reproducible():
    a = random_rational_points(3, 2, seed=7)
    assert a == random_rational_points(3, 2, seed=7)
    assert all(v != 0 and isinstance(v, Fraction) for p in a for v in p)


def test_read_assignments_csv():
    rows = read_assignments_csv("# a,b\n1, 2/3\n\n-4,0\n")
    assert rows == [(1, Fraction(2, 3)), (-4, 0)]


def test_report_json():
    report = strata([(1, 2, 5), (0, 0, 0)])
    hasse_covers(report, 1)
    data = report.to_json()
    assert data["parameters"] == ["a", "b", "c"]
    assert data["covers"] == [[1, 0]]
    assert data["samples"][0]["series"]["1"]["coeffs"] == [1, 3, 6, 10, 9, 3]
