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
# # Ideal channel capacity
#
# Without noise both alphabets give `1 + S(rho_A)` bits per letter at the
# uniform prior.  So do all other alphabets built from an orthonormal triad
# of axes.

# %%
import numpy as np
from scipy.spatial.transform import Rotation

from densecode import SchmidtState, SpectralMixture, holevo_quantity, optimize_prior
from densecode.alphabets import EQUIDISTANT_AXES, generate_alphabet, generators_from_axes, make_alphabet
from densecode.capacity import ideal_capacity_mixed, ideal_capacity_pure
from densecode.states import spectral_mixture_density

# %%
for a2 in (0.5, 0.25, 0.1, 1.0):
    s = SchmidtState.from_alpha_sq(a2)
    chis = [holevo_quantity(make_alphabet(k, s)).chi for k in ("standard", "equally-distant")]
    print(f"|alpha|^2={a2:.2f}  formula {ideal_capacity_pure(s):.6f}  standard {chis[0]:.6f}  equally-distant {chis[1]:.6f}")

# %% [markdown]
# Rotating the triad does not change the capacity.

# %%
rng = np.random.default_rng(1)
s = SchmidtState.from_alpha_sq(0.3)
gaps = []
for rot in Rotation.random(200, random_state=rng).as_matrix():
    a = generate_alphabet(generators_from_axes(EQUIDISTANT_AXES @ rot.T), s)
    gaps.append(holevo_quantity(a).chi - ideal_capacity_pure(s))
print("largest gap over 200 rotated triads:", np.abs(gaps).max())

# %% [markdown]
# The uniform prior is already optimal here.

# %%
rep = optimize_prior(make_alphabet("equally-distant", s))
print(rep.prior, rep.chi)

# %% [markdown]
# ## Mixed reference states
# For a reference diagonal in the four `chi_j` vectors, the capacity is
# `1 + S(Bob) - S(rho_AB)`.  Compare it against the Holevo quantity of the
# explicit mixed letters.

# %%
for lam in [(1, 0, 0, 0), (0.7, 0.2, 0.1, 0.0), (0.5, 0.5, 0, 0), (0.25,) * 4]:
    m = SpectralMixture(lam, np.sqrt(0.25), np.sqrt(0.75), 0.6, 0.8)
    explicit = holevo_quantity(make_alphabet("equally-distant", spectral_mixture_density(m))).chi
    print(lam, f"closed form {ideal_capacity_mixed(m):.6f}  explicit {explicit:.6f}")
