"""
Eigenbasis of the probability-sum operator
==========================================

The sum of the three error projectors has eigenvalues 0, 1/2, 1, 3/2.
Writing |a,a> in its eigenbasis turns P_WW(a,a) into an interference
between the phi0 component and the nu2/nu3 components.
"""

import numpy as np

from consistency_paradox import build_pi_s, hermitian_eigen, nu_basis, product_state, to_nu

pi_s = build_pi_s()
print("Pi_S =")
print(np.round(pi_s.real, 4))

dec = hermitian_eigen(pi_s)
print("eigenvalues (Jacobi):", np.round(dec.eigenvalues, 12))
for k, v in enumerate(nu_basis()):
    print(f"  |<solver_{k}|{v.label}>| = {abs(np.vdot(dec.vector(k), v.amplitudes)):.12f}")

c = to_nu(product_state("a", "a"))
print("|a,a> in (phi0, nu1, nu2, nu3):", np.round(c.as_array().real, 6))
print("expected                      :",
      np.round([-1 / (2 * np.sqrt(3)), 0, 0.5, np.sqrt(2 / 3)], 6))
