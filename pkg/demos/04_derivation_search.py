# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#   kernelspec:
#     display_name: Python 3
#     language: python
#     name: python3
# ---

# %% [markdown]
# # Recovering the equally-distant construction numerically
#
# Fix the first generator to the identity and let the other three roam over
# U(2).  Minimise the worst pairwise overlap and look at what comes out.

# %%
import numpy as np

from densecode.search import search_min_max_overlap

# %%
for d2 in (0.0, 0.25, 0.5, 0.9):
    res = search_min_max_overlap(d2, restarts=10, seed=0)
    print(f"Delta^2={d2:.2f}  best {res.achieved_overlap:.6f}  target {res.target_overlap:.6f}")
    print("   cos^2 theta:", np.round(res.cos2_theta, 4), "  cos^2 psi:", np.round(res.cos2_psi, 4))

# %% [markdown]
# For `Delta^2 > 0` the optimum has `cos^2 psi = 0`, so each generator is
# `n . sigma` up to phase, and every axis sits at `cos^2 theta = 1/3`.  For a
# Bell pair any orthonormal triad reaches zero overlap, so the tilt is free.

# %%
res = search_min_max_overlap(0.25, restarts=10, seed=0)
axes = np.array(
    [[np.sin(t) * np.cos(p), np.sin(t) * np.sin(p), np.cos(t)] for _, t, p in res.angles]
)
print(np.round(axes @ axes.T, 4))
