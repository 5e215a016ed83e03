"""
Milnor and Hessian algebras of a plane quartic
==============================================

The quartic below has three cusps.  Its Milnor algebra and the three Hessian
algebras H_1, H_2, H_3 are computed degree by degree.
"""

from hessideals import hessian_algebra_series, milnor_series, parse_polynomial, render_polynomial

f = parse_polynomial("x^2*y^2 + y^2*z^2 + x^2*z^2 - 2*x*y*z*(x+y+z)", ("x", "y", "z"))
print("f =", render_polynomial(f))

# M(f) stabilizes at the total Tjurina number, 3 cusps x tau(A2) = 6
print("M(f):  ", milnor_series(f).format())

# minors of size k have degree 2k here, so H_k agrees with M(f) below that
for k in (1, 2, 3):
    print(f"H_{k}(f):", hessian_algebra_series(f, k).series.format())
