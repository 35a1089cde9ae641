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
# # Two four-letter alphabets
#
# Alice and Bob share a Schmidt state `alpha|00> + beta|11>`.  Alice encodes
# two bits by applying one of four local unitaries to her qubit.  The Pauli
# set is perfect for a Bell state but leaves some letter pairs overlapping
# once the state is only partially entangled.  The equally-distant set keeps
# every pair at the same overlap.

# %%
import numpy as np

from densecode import SchmidtState, closure_table, overlap_matrix
from densecode.alphabets import (
    EQUIDISTANT_AXES,
    equally_distant_alphabet,
    equally_distant_generators,
    standard_alphabet,
    standard_generators,
)

np.set_printoptions(precision=4, suppress=True)

# %%
s = SchmidtState.from_alpha_sq(0.25)
print("Delta^2 =", s.delta**2)
print("standard overlaps\n", overlap_matrix(standard_alphabet(s)))
print("equally-distant overlaps\n", overlap_matrix(equally_distant_alphabet(s)))

# %% [markdown]
# The equally-distant axes form an orthonormal triad.  Each axis is tilted
# by the same polar angle, with `cos^2 theta = 1/3`.

# %%
print(EQUIDISTANT_AXES @ EQUIDISTANT_AXES.T)
print("cos^2 theta:", EQUIDISTANT_AXES[:, 2] ** 2)

# %% [markdown]
# ## Letter amplitudes
# Basis order is `|00>, |10>, |01>, |11>`.

# %%
for k, v in enumerate(equally_distant_alphabet(s).letters):
    print(k, np.round(v, 4))

# %% [markdown]
# ## Closure
# A product of two generators is again a generator times a phase.  For the
# equally-distant set that phase is `+-i` off the diagonal, because a product
# of two anticommuting Hermitian involutions is anti-Hermitian.

# %%
for name, gens in [("standard", standard_generators()), ("equally-distant", equally_distant_generators())]:
    print(name)
    for row in closure_table(gens):
        print("   ", ["%d:%s" % (m, np.round(c, 3)) for m, c in row])

# %% [markdown]
# Overlap against entanglement for both sets.  The equally-distant value
# `Delta^2/3` is the smallest possible worst-case overlap.

# %%
for a2 in np.linspace(0, 1, 6):
    s = SchmidtState.from_alpha_sq(a2)
    o_std = overlap_matrix(standard_alphabet(s))
    o_ed = overlap_matrix(equally_distant_alphabet(s))
    off = ~np.eye(4, dtype=bool)
    print(f"|alpha|^2={a2:.1f}  worst standard {o_std[off].max():.4f}  equally-distant {o_ed[off].max():.4f}")
