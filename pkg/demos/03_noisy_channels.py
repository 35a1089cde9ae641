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
# # Noisy channels
#
# Alice's qubit travels through a Pauli channel and Bob's stays home.  Two
# cases follow: equal flip probabilities `q` (depolarizing), and bit flips
# only (x-Pauli).

# %%
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from densecode import SchmidtState, noisy_capacity_uniform
from densecode.alphabets import equally_distant_alphabet
from densecode.capacity import (
    depolarizing_capacity_grid,
    depolarizing_spectrum_closed_form,
    xpauli_difference_grid,
    xpauli_spectrum,
)
from densecode.channels import apply_pauli_channel, depolarizing, x_pauli
from densecode.linalg import hermitian_eigenvalues
from densecode.states import BELL

OUT = Path(__file__).resolve().parent / "out"
OUT.mkdir(exist_ok=True)

# %% [markdown]
# ## Depolarizing surface
# Both alphabets share the same letter spectra, so one surface covers them.
# Capacity falls to zero at `q = 1/4`, where every letter becomes
# `1/2 (x) rho_B`.  Past that point the weight on the original letter,
# `1 - 4q`, turns negative.  The letters pull apart again and capacity
# climbs back to about 0.415 bits at `q = 1/3` for a Bell pair.

# %%
qs = np.linspace(0, 1 / 3, 61)
a2s = np.linspace(0, 1, 51)
cap = depolarizing_capacity_grid(qs, a2s)
print("C(q=0.25, 1/2) =", cap[45, 25], "  C(q=1/3, 1/2) =", cap[-1, 25])

Q, A = np.meshgrid(qs, a2s, indexing="ij")
fig = plt.figure(figsize=(6, 4.5))
ax = fig.add_subplot(projection="3d")
ax.plot_surface(A, Q, cap, cmap="viridis")
ax.set_xlabel("|alpha|^2")
ax.set_ylabel("q")
ax.set_zlabel("C [bits]")
fig.savefig(OUT / "depolarizing_surface.png", dpi=120)

# %%
s = SchmidtState.from_alpha_sq(0.3)
letters = equally_distant_alphabet(s).densities()
q = 0.1
direct = hermitian_eigenvalues(apply_pauli_channel(depolarizing(q), letters))
print(direct)
print(depolarizing_spectrum_closed_form(q, s))

# %% [markdown]
# ## Bit-flip channel
# Under x-Pauli noise each letter keeps two nonzero eigenvalues,
# `(1 +- sqrt(1 - 4 px (1 - px) delta_k^2)) / 2`.  The square root matters.
# At `px = 1/2`, `delta = 1` the linear form gives `{1, 0}`, but the true
# spectrum is `{1/2, 1/2}`.

# %%
print(hermitian_eigenvalues(apply_pauli_channel(x_pauli(0.5), BELL.density()))[:2], xpauli_spectrum(0.5, 1.0))

# %% [markdown]
# The equally-distant alphabet never does worse than the Pauli set.

# %%
pxs = np.linspace(0, 1, 51)
c_std, c_ed, diff = xpauli_difference_grid(pxs, a2s)
print("largest difference", diff.max(), " smallest", diff.min())

fig, ax = plt.subplots(figsize=(5, 4))
im = ax.contourf(a2s, pxs, diff, levels=20, cmap="magma")
fig.colorbar(im, label="C_standard - C_equally_distant")
ax.set_xlabel("|alpha|^2")
ax.set_ylabel("px")
fig.savefig(OUT / "xpauli_difference.png", dpi=120)

# %%
s = SchmidtState.from_alpha_sq(0.9)
rep = noisy_capacity_uniform(equally_distant_alphabet(s), x_pauli(0.3))
print("letter entropies differ:", np.round(rep.letter_entropies, 4))
