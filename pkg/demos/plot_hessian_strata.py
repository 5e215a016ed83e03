"""
Hessian strata of a three-parameter family of sextics
=====================================================

x^6+y^6+z^6 + a x^4yz + b xy^4z + c xyz^4 sampled at a handful of points,
grouped by HP(H_1) and ordered coefficientwise.
"""

from hessideals import PolyText, evaluate_family, hasse_dot, partition_by_series, random_rational_points

family = PolyText("x^6+y^6+z^6+a*x^4*y*z+b*x*y^4*z+c*x*y*z^4", ("x", "y", "z"), ("a", "b", "c"))

points = random_rational_points(1, 3, seed=2014)
points += [(1, 1, 5), (3, 3, 3), (1, 1, 0), (2, 2, 2), (0, 0, 1), (0, 0, 0)]

report = partition_by_series(evaluate_family(family, points, [1]))
for s in range(len(report.strata)):
    rep = report.representative(s)
    print(f"S{s + 1}:", rep.series[1].format(), " at", tuple(str(v) for v in rep.params))

# pipe this into `dot -Tpng` to draw the diagram
print(hasse_dot(report, 1))
