"""
Certifying the violation from shot data
=======================================

Each context is measured on its own preparations. With 10^6 shots per
context the slack P_WW(a,a) - P_S is hundreds of standard errors above
zero for phi0, while eigenstates of the probability sum satisfy the
inequality comfortably.
"""

from consistency_paradox import estimate, frontier_theta_family, nu_basis, phi0

print("phi0")
print(estimate(phi0(), 1_000_000, seed=7).format())

print("\nnu1 (orthogonal to |a,a>)")
print(estimate(nu_basis()[1], 100_000, seed=7).format())

# a state on the frontier at P_S = 0.01 still violates
pt = frontier_theta_family(0.01)
print(f"\nfrontier state at P_S = 0.01 (exact P_WW = {pt.p_ww_min:.5f})")
print(estimate(pt.argmin.to_state(), 200_000, seed=7).format())
