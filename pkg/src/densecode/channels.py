"""Pauli noise on Alice's (travelling) qubit; Bob's qubit is left untouched."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .alphabets import PAULIS, Alphabet, pauli_dot
from .errors import InvalidChannelParams, InvalidPrior, ParameterOutOfRange
from .linalg import check_state, tensor_with_identity_on_B

PRIOR_TOL = 1e-12

_LIFTED_PAULIS = np.stack([tensor_with_identity_on_B(s) for s in PAULIS])


@dataclass(frozen=True)
class PauliChannelParams:
    """Flip probabilities; the state is untouched with probability ``1 - p``."""

    px: float
    py: float
    pz: float

    def __post_init__(self):
        probs = (self.px, self.py, self.pz)
        if not all(np.isfinite(probs)) or min(probs) < 0:
            raise InvalidChannelParams(f"(px, py, pz)={probs} must be non-negative")
        if sum(probs) > 1.0 + 1e-12:
            raise InvalidChannelParams(f"px + py + pz = {sum(probs)!r} exceeds 1")

    @property
    def p(self) -> float:
        return self.px + self.py + self.pz

    def as_array(self) -> np.ndarray:
        return np.array([self.px, self.py, self.pz])


NOISELESS = PauliChannelParams(0.0, 0.0, 0.0)


def depolarizing(q: float) -> PauliChannelParams:
    if not 0.0 <= q <= 1.0 / 3.0 + 1e-15:
        raise ParameterOutOfRange(f"q={q!r} must lie in [0, 1/3]")
    return PauliChannelParams(q, q, q)


def x_pauli(px: float) -> PauliChannelParams:
    if not 0.0 <= px <= 1.0:
        raise ParameterOutOfRange(f"px={px!r} must lie in [0, 1]")
    return PauliChannelParams(px, 0.0, 0.0)


def apply_pauli_channel(params: PauliChannelParams, rho: np.ndarray) -> np.ndarray:
    """``(1 - p) rho + sum_mu p_mu (s_mu x 1) rho (s_mu x 1)``.

    ``rho`` may be a single 4x4 matrix or a stack of them.
    """
    rho = check_state(rho)
    if rho.shape[-2:] != (4, 4):
        raise ValueError(f"rho must be 4x4, got {rho.shape}")
    out = (1.0 - params.p) * rho
    for p_mu, s in zip(params.as_array(), _LIFTED_PAULIS):
        if p_mu:
            out = out + p_mu * (s @ rho @ s)
    return out


def apply_pauli_channel_batch(px, py, pz, rho: np.ndarray) -> np.ndarray:
    """Vectorised channel: ``px, py, pz`` broadcast against the leading axes of ``rho``."""
    px, py, pz = (np.asarray(v, dtype=float)[..., None, None] for v in (px, py, pz))
    rho = np.asarray(rho, dtype=complex)
    sx, sy, sz = _LIFTED_PAULIS
    return (1.0 - px - py - pz) * rho + px * (sx @ rho @ sx) + py * (sy @ rho @ sy) + pz * (sz @ rho @ sz)


def channel_output_from_axis(axis, rho0: np.ndarray, params: PauliChannelParams) -> np.ndarray:
    """Noisy letter for the generator ``n . sigma`` written through the axis ``n``.

    Uses ``s_mu (n . sigma) = n_mu 1 - i (e_mu x n) . sigma``, so each flip
    term becomes ``n_mu^2 rho0 - i n_mu [A, rho0] + A rho0 A`` with
    ``A = (e_mu x n) . sigma``.  Serves as a cross-check on
    :func:`apply_pauli_channel`.
    """
    n = np.asarray(axis, dtype=float)
    rho0 = np.asarray(rho0, dtype=complex)
    s = _LIFTED_PAULIS
    out = (1.0 - params.p) * np.einsum("m,n,mab,bc,ncd->ad", n, n, s, rho0, s)
    for mu, p_mu in enumerate(params.as_array()):
        a = tensor_with_identity_on_B(pauli_dot(np.cross(np.eye(3)[mu], n)))
        out = out + p_mu * (n[mu] ** 2 * rho0 - 1j * n[mu] * (a @ rho0 - rho0 @ a) + a @ rho0 @ a)
    return out


def as_prior(prior, size: int = 4) -> np.ndarray:
    if prior is None:
        return np.full(size, 1.0 / size)
    pi = np.asarray(prior, dtype=float)
    if pi.shape != (size,) or not np.all(np.isfinite(pi)):
        raise InvalidPrior(f"prior must be {size} finite numbers")
    if np.any(pi < -PRIOR_TOL) or abs(pi.sum() - 1.0) > PRIOR_TOL:
        raise InvalidPrior(f"prior {tuple(pi)} is not on the probability simplex")
    return np.clip(pi, 0.0, None)


def averaged_state(a: Alphabet, prior=None) -> np.ndarray:
    """``sum_k prior[k] rho_k``; uniform prior when ``prior`` is None."""
    pi = as_prior(prior)
    return np.einsum("k,kab->ab", pi, a.densities())
