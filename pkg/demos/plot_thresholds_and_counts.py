"""
Thresholds and the count of weighted homogeneous points
=======================================================

Six lines through four points: three ordinary nodes and four triple points.
"""

from hessideals import (
    count_weighted_homogeneous,
    normal_form,
    parse_polynomial,
    reconcile_global_local,
    thresholds,
)

f = parse_polynomial("(x^2-y^2)*(y^2-z^2)*(x^2-z^2)", ("x", "y", "z"))

th = thresholds(f)
for key, value in th.to_json().items():
    print(f"{key:10s} {value}")

# every singular point of a line arrangement is weighted homogeneous
print("weighted homogeneous points:", count_weighted_homogeneous(f).count)

# stable dimensions of H_k(f) against the local Hessian numbers
verdict = reconcile_global_local(f, [(normal_form("A1"), 3), (normal_form("D4"), 4)])
for row in verdict.rows:
    print(f"k={row.k}: global {row.global_value}, local {row.local_sum}")
