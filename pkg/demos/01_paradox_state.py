"""
The state that satisfies all three statements
=============================================

Three zero-probability statements pin down a single two-system state.
Non-contextual reasoning says that state should never show (a,a);
the Born rule says otherwise.
"""

import numpy as np

from consistency_paradox import context_probabilities, phi0, product_state
from consistency_paradox.hilbert import constraint_matrix

# The three outcome vectors |a,0>, |0,a>, |1,1> as rows of a 3x4 system.
# Its null space is one-dimensional.
a = constraint_matrix()
_, s, vh = np.linalg.svd(a)
print("singular values of the constraint system:", np.round(s, 6))
null = vh[-1].conj()
null *= abs(null[0]) / null[0]
print("null vector:", np.round(null.real, 6))
print("phi0       :", np.round(phi0().amplitudes.real, 6))

# Probabilities in the four measurement contexts
cp = context_probabilities(phi0())
print(f"P_WF(a,0) = {cp.p_wf_a0:.3g}")
print(f"P_FW(0,a) = {cp.p_fw_0a:.3g}")
print(f"P_FF(1,1) = {cp.p_ff_11:.3g}")
print(f"P_WW(a,a) = {cp.p_ww_aa:.10f}   (1/12 = {1 / 12:.10f})")

# <a,0| and <0,a| are not orthogonal, which is where the logic breaks
overlap = np.vdot(product_state("a", "0").amplitudes, product_state("0", "a").amplitudes)
print(f"<a,0|0,a> = {overlap.real:.3f}")
