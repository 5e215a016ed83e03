"""
Hessian numbers of simple singularities
=======================================

chi_k of a germ is the colength of (g) + J_g + (k x k Hessian minors).  For
weighted homogeneous germs chi_n = tau - 1; otherwise chi_n = tau.
"""

from hessideals import ADE_CATALOG, chi_invariants, parse_polynomial

for name, g in ADE_CATALOG.items():
    inv = chi_invariants(g, with_mu=True)
    print(f"{name:3s} chi = {inv.chi}  tau = {inv.tau}  mu = {inv.mu}")

# a germ that is not weighted homogeneous: mu > tau and chi_2 = tau
g = parse_polynomial("y1^5 + y2^5 + y1^3*y2^3", ("y1", "y2"))
inv = chi_invariants(g, with_mu=True)
print("y1^5 + y2^5 + y1^3*y2^3:", inv.chi, "tau =", inv.tau, "mu =", inv.mu)
