"""Holevo quantities and channel capacities of four-letter alphabets (all in bits)."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .alphabets import Alphabet, make_alphabet
from .channels import (
    PauliChannelParams,
    apply_pauli_channel,
    apply_pauli_channel_batch,
    as_prior,
    x_pauli,
)
from .errors import IndexOutOfRange, ParameterOutOfRange
from .linalg import hermitian_eigenvalues, von_neumann_entropy
from .states import SchmidtState, SpectralMixture, projector


@dataclass(frozen=True)
class CapacityReport:
    chi: float
    prior: np.ndarray
    avg_entropy: float
    letter_entropies: np.ndarray
    letter_spectra: np.ndarray

    def to_dict(self) -> dict:
        return {
            "chi": float(self.chi),
            "prior": [float(p) for p in self.prior],
            "avg_entropy": float(self.avg_entropy),
            "letter_entropies": [float(s) for s in self.letter_entropies],
            "letter_spectra": [[float(x) for x in row] for row in self.letter_spectra],
        }


def _letters(letters) -> np.ndarray:
    if isinstance(letters, Alphabet):
        return letters.densities()
    arr = np.asarray(letters, dtype=complex)
    if arr.ndim == 2:  # four pure letters as rows
        arr = projector(arr)
    if arr.shape != (4, 4, 4):
        raise ValueError(f"expected four 4x4 letters, got shape {arr.shape}")
    return arr


def _holevo_from_spectra(prior, avg, spectra) -> CapacityReport:
    entropies = von_neumann_entropy(spectra)
    avg_entropy = von_neumann_entropy(hermitian_eigenvalues(avg))
    chi = avg_entropy - float(prior @ entropies)
    return CapacityReport(chi, prior, avg_entropy, entropies, spectra)


def holevo_quantity(letters, prior=None) -> CapacityReport:
    """``S(sum_k pi_k rho_k) - sum_k pi_k S(rho_k)`` for a fixed prior (uniform if omitted)."""
    rho = _letters(letters)
    pi = as_prior(prior)
    spectra = hermitian_eigenvalues(rho)
    return _holevo_from_spectra(pi, np.einsum("k,kab->ab", pi, rho), spectra)


def binary_entropy(p: float) -> float:
    return von_neumann_entropy([p, 1.0 - p])


def ideal_capacity_pure(s: SchmidtState) -> float:
    """``1 + S(rho_A)`` for letters generated from a pure Schmidt state."""
    return 1.0 + von_neumann_entropy([s.alpha_sq, s.beta_sq])


def bob_marginal_weights(m: SpectralMixture) -> tuple[float, float]:
    """Diagonal ``(x, y)`` of Bob's reduced state for a spectral mixture.

    The uniformly averaged alphabet state is ``1/2 (x) diag(x, y)`` on
    Alice (x) Bob.  ``chi_3`` puts weight ``|delta|^2`` (not ``|gamma|^2``) on
    Bob's ``|0>``.
    """
    lam = np.asarray(m.lambdas, dtype=float)
    a2, b2, g2, d2 = (abs(v) ** 2 for v in (m.alpha, m.beta, m.gamma, m.delta))
    x = a2 * lam[0] + b2 * lam[1] + d2 * lam[2] + g2 * lam[3]
    y = b2 * lam[0] + a2 * lam[1] + g2 * lam[2] + d2 * lam[3]
    return float(x), float(y)


def ideal_capacity_mixed(m: SpectralMixture) -> float:
    """``1 + S(diag(x, y)) - S(rho_AB)`` for a mixed reference, uniform prior."""
    x, y = bob_marginal_weights(m)
    return 1.0 + von_neumann_entropy([x, y]) - von_neumann_entropy(m.lambdas)


def depolarizing_spectrum_closed_form(q: float, s: SchmidtState) -> np.ndarray:
    """The four eigenvalues of a depolarised letter, sorted descending."""
    if not 0.0 <= q <= 1.0 / 3.0 + 1e-15:
        raise ParameterOutOfRange(f"q={q!r} must lie in [0, 1/3]")
    a2, b2 = s.alpha_sq, s.beta_sq
    disc = (1 - 2 * q) ** 2 - 16 * q * a2 * b2 * (1 - 3 * q)
    root = np.sqrt(max(disc, 0.0))
    eta = np.array([2 * q * a2, 2 * q * b2, 0.5 * (1 - 2 * q + root), 0.5 * (1 - 2 * q - root)])
    return -np.sort(-eta)


def xpauli_delta_sq_from_axis(axis, delta: float) -> float:
    """``1 - <sx>^2`` for the letter made by ``n . sigma``; ``<sx> = 2 n_z n_x Delta``."""
    n = np.asarray(axis, dtype=float)
    return 1.0 - (2.0 * n[2] * n[0] * delta) ** 2


def xpauli_delta_sq(k: int, delta: float) -> float:
    """Bit-flip visibility of letter ``k`` (0-based) of the equally-distant alphabet."""
    if k not in (0, 1, 2, 3):
        raise IndexOutOfRange(f"letter index {k!r} must be 0..3")
    if abs(delta) > 1.0:
        raise ParameterOutOfRange(f"delta={delta!r} must satisfy |delta| <= 1")
    return (1.0, 1.0 - 8.0 * delta**2 / 9.0, 1.0 - 2.0 * delta**2 / 9.0, 1.0 - 2.0 * delta**2 / 9.0)[k]


def xpauli_spectrum(px: float, delta_sq: float) -> np.ndarray:
    """Two non-zero eigenvalues ``(1 +- sqrt(1 - 4 px (1 - px) delta_sq)) / 2``."""
    root = np.sqrt(max(1.0 - 4.0 * px * (1.0 - px) * delta_sq, 0.0))
    return np.array([0.5 * (1 + root), 0.5 * (1 - root)])


def noisy_capacity_uniform(a: Alphabet, params: PauliChannelParams) -> CapacityReport:
    """Holevo quantity of the channel outputs at the uniform prior.

    Letter spectra come from direct diagonalisation of each noisy letter.
    """
    return holevo_quantity(apply_pauli_channel(params, a.densities()))


def optimize_prior(letters, resolution: int = 50, min_step: float = 1e-7) -> CapacityReport:
    """Maximise the Holevo quantity over the prior.

    A full simplex grid with spacing ``1/resolution`` is followed by pairwise
    mass-transfer ascent with step halving down to ``min_step``.  The
    objective is concave, so the result is the global optimum.
    """
    rho = _letters(letters)
    spectra = hermitian_eigenvalues(rho)
    entropies = von_neumann_entropy(spectra)

    def chi_batch(priors):
        avg = np.einsum("nk,kab->nab", priors, rho)
        return von_neumann_entropy(hermitian_eigenvalues(avg)) - priors @ entropies

    counts = [
        (i, j, k, resolution - i - j - k)
        for i in range(resolution + 1)
        for j in range(resolution + 1 - i)
        for k in range(resolution + 1 - i - j)
    ]
    grid = np.array(counts, dtype=float) / resolution
    values = chi_batch(grid)
    best = int(np.argmax(values))
    pi, chi = grid[best].copy(), float(values[best])

    moves = list(itertools.permutations(range(4), 2))
    step = 1.0 / resolution
    while step >= min_step:
        cands = []
        for i, j in moves:
            h = min(step, pi[j])
            if h <= 0:
                continue
            c = pi.copy()
            c[i] += h
            c[j] -= h
            cands.append(c)
        if cands:
            cands = np.array(cands)
            vals = chi_batch(cands)
            top = int(np.argmax(vals))
            if vals[top] > chi + 1e-15:
                pi, chi = cands[top], float(vals[top])
                continue
        step /= 2
    pi = np.clip(pi, 0.0, None)
    pi /= pi.sum()
    return _holevo_from_spectra(pi, np.einsum("k,kab->ab", pi, rho), spectra)


def capacity_difference_xpauli(alpha_sq: float, px: float) -> float:
    """Uniform-prior capacity of the standard minus the equally-distant alphabet."""
    s = SchmidtState.from_alpha_sq(alpha_sq)
    params = x_pauli(px)
    c_std = noisy_capacity_uniform(make_alphabet("standard", s), params).chi
    c_ed = noisy_capacity_uniform(make_alphabet("equally-distant", s), params).chi
    return c_std - c_ed


def uniform_capacity_grid(kind: str, channel_points, alpha_sqs) -> np.ndarray:
    """Uniform-prior Holevo quantity over a grid, shape ``(len(channel_points), len(alpha_sqs))``.

    ``channel_points`` is a sequence of ``(px, py, pz)`` triples.
    """
    pts = np.asarray(channel_points, dtype=float).reshape(-1, 3)
    letters = np.stack([make_alphabet(kind, SchmidtState.from_alpha_sq(a)).densities() for a in alpha_sqs])
    px, py, pz = (pts[:, i][:, None, None] for i in range(3))
    out = apply_pauli_channel_batch(px, py, pz, letters[None])  # (P, A, 4, 4, 4)
    letter_h = von_neumann_entropy(hermitian_eigenvalues(out))
    avg_h = von_neumann_entropy(hermitian_eigenvalues(out.mean(axis=2)))
    return avg_h - letter_h.mean(axis=-1)


def depolarizing_capacity_grid(qs, alpha_sqs, kind: str = "equally-distant") -> np.ndarray:
    return uniform_capacity_grid(kind, [(q, q, q) for q in qs], alpha_sqs)


def xpauli_difference_grid(pxs, alpha_sqs) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """``(c_standard, c_equally_distant, difference)``, each of shape ``(len(pxs), len(alpha_sqs))``."""
    pts = [(p, 0.0, 0.0) for p in pxs]
    c_std = uniform_capacity_grid("standard", pts, alpha_sqs)
    c_ed = uniform_capacity_grid("equally-distant", pts, alpha_sqs)
    return c_std, c_ed, c_std - c_ed

