"""
Lower bounds and the forbidden region
=====================================

Compares the two closed-form lower bounds on P_WW(a,a) with the numerical
frontier, and locates the critical probability sum below which every state
violates P_WW(a,a) <= P_S. Saves ``forbidden_region.png`` if matplotlib is
available.
"""

import numpy as np

from consistency_paradox import bounds, optimizer

grid = np.linspace(0, 0.12, 241)
front = np.array([p.p_ww_min for p in optimizer.frontier_sweep(grid)])
b19 = bounds.bound_eq19(grid, clamp=True)
b24 = bounds.bound_eq24(grid, clamp=True)

for p in (0.0, 0.01, 0.0243, 0.05, 0.1, 0.1071, 0.1095, 0.11):
    i = int(np.argmin(np.abs(grid - p)))
    print(f"P_S={grid[i]:.4f}  frontier={front[i]:.6f}  eq19={b19[i]:.6f}  eq24={b24[i]:.6f}")

print(f"P_cr from the tighter bound : {bounds.critical_p_s():.6f}")
print(f"P_cr from the frontier      : {optimizer.critical_p_s_numeric():.6f}")
print(f"frontier reaches zero at    : {optimizer.frontier_zero():.6f}")
print(f"1/(5 + sqrt 17)             : {bounds.PS_TIGHT:.6f}")

# optimal mixing angle drifts from sin(theta)=0.8 down to 0.7882
for p in (1e-6, 0.05, 0.1, bounds.PS_TIGHT):
    print(f"P_S={p:.6f}  sin(theta_opt)={np.sin(optimizer.frontier_theta_family(p).theta_opt):.4f}")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, ax = plt.subplots(figsize=(5, 4))
    ax.fill_between(grid, 0, front, color="0.85", label="forbidden")
    ax.plot(grid, front, "k", label="numerical frontier")
    ax.plot(grid, b24, "--", label="tighter bound")
    ax.plot(grid, b19, ":", label="first bound")
    ax.plot(grid, grid, color="tab:red", lw=0.8, label="P_WW = P_S")
    ax.axvline(bounds.critical_p_s(), color="tab:red", ls=":", lw=0.8)
    ax.set_xlabel("P_S")
    ax.set_ylabel("min P_WW(a,a)")
    ax.set_ylim(0, 0.09)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig("forbidden_region.png", dpi=120)
    print("saved forbidden_region.png")
