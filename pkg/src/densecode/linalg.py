"""Small dense complex linear algebra for one and two qubits.

Two-qubit operators use the basis ordering ``|00>, |10>, |01>, |11>``
(first label is Alice's qubit), i.e. ``index(a, b) = a + 2*b``.  Every other
module inherits this ordering.

Eigenvalues are computed with a cyclic complex Jacobi method that works on a
whole stack of Hermitian matrices at once, so parameter sweeps stay
vectorised.
"""

from __future__ import annotations

import numpy as np

from .errors import NonHermitianInput, NotAProbabilitySpectrum, NotUnitTrace

BASIS_LABELS = ("00", "10", "01", "11")

HERMITIAN_TOL = 1e-10
TRACE_TOL = 1e-9
CLAMP_TOL = 1e-12

JACOBI_TOL = 1e-14
JACOBI_MAX_SWEEPS = 100

IDENTITY2 = np.eye(2, dtype=complex)


def basis_index(a: int, b: int) -> int:
    """Position of ``|a>_A |b>_B`` in the fixed two-qubit ordering."""
    return a + 2 * b


def dagger(m: np.ndarray) -> np.ndarray:
    return np.conj(np.swapaxes(m, -1, -2))


def _require_finite(m: np.ndarray, name: str = "input") -> None:
    if not np.all(np.isfinite(m)):
        raise ValueError(f"{name} contains NaN or Inf")


def tensor_with_identity_on_B(u: np.ndarray) -> np.ndarray:
    """Lift a single-qubit operator on Alice to ``u (x) 1`` on both qubits."""
    u = np.asarray(u, dtype=complex)
    _require_finite(u, "u")
    # index = a + 2b, so Bob's label is the slow (outer) factor
    return np.kron(IDENTITY2, u)


def tensor_with_identity_on_A(u: np.ndarray) -> np.ndarray:
    """Lift a single-qubit operator on Bob to ``1 (x) u``."""
    u = np.asarray(u, dtype=complex)
    return np.kron(u, IDENTITY2)


def hermiticity_error(m: np.ndarray) -> float:
    m = np.asarray(m)
    return float(np.max(np.abs(m - dagger(m)))) if m.size else 0.0


def is_hermitian(m: np.ndarray, tol: float = HERMITIAN_TOL) -> bool:
    return hermiticity_error(m) <= tol


def is_unitary(u: np.ndarray, tol: float = 1e-12) -> bool:
    u = np.asarray(u, dtype=complex)
    eye = np.eye(u.shape[-1])
    return bool(np.max(np.abs(dagger(u) @ u - eye)) <= tol)


def _jacobi_diagonalize(a: np.ndarray) -> np.ndarray:
    """Reduce a stack ``(N, n, n)`` of Hermitian matrices to diagonal form in place.

    Each rotation first removes the phase of the pivot ``a[p, q]`` and then
    applies the classical real Jacobi rotation that annihilates it.
    """
    n = a.shape[-1]
    pairs = [(p, q) for p in range(n - 1) for q in range(p + 1, n)]
    offmask = ~np.eye(n, dtype=bool)
    scale = np.sqrt(np.sum(np.abs(a) ** 2, axis=(-2, -1)))
    for _ in range(JACOBI_MAX_SWEEPS):
        off = np.sqrt(np.sum(np.abs(a[:, offmask]) ** 2, axis=-1))
        if np.all(off <= JACOBI_TOL * scale):
            break
        for p, q in pairs:
            apq = a[:, p, q]
            mag = np.abs(apq)
            # pivots this small cannot move any eigenvalue; drop them
            negligible = mag <= 1e-30 * scale
            a[negligible, p, q] = 0.0
            a[negligible, q, p] = 0.0
            active = ~negligible
            if not np.any(active):
                continue
            safe = np.where(active, mag, 1.0)
            phase = np.where(active, apq / safe, 1.0)
            theta = (a[:, q, q].real - a[:, p, p].real) / (2.0 * safe)
            big = np.abs(theta) > 1e150
            theta_c = np.where(big, 1.0, theta)
            t = np.where(theta_c >= 0, 1.0, -1.0) / (np.abs(theta_c) + np.sqrt(theta_c**2 + 1.0))
            t = np.where(big, 0.5 / np.where(big, theta, 1.0), t)
            t = np.where(active, t, 0.0)
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = t * c
            # V = diag-phase * real rotation, restricted to (p, q)
            v_pp = c
            v_pq = s
            v_qp = -s * np.conj(phase)
            v_qq = c * np.conj(phase)
            col_p = a[:, :, p].copy()
            col_q = a[:, :, q].copy()
            a[:, :, p] = col_p * v_pp[:, None] + col_q * v_qp[:, None]
            a[:, :, q] = col_p * v_pq[:, None] + col_q * v_qq[:, None]
            row_p = a[:, p, :].copy()
            row_q = a[:, q, :].copy()
            a[:, p, :] = np.conj(v_pp)[:, None] * row_p + np.conj(v_qp)[:, None] * row_q
            a[:, q, :] = np.conj(v_pq)[:, None] * row_p + np.conj(v_qq)[:, None] * row_q
            a[active, p, q] = 0.0
            a[active, q, p] = 0.0
    return a


def hermitian_eigenvalues(m: np.ndarray) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, sorted in descending order.

    Accepts a single ``(n, n)`` matrix or a stack ``(..., n, n)``; the result
    has shape ``(..., n)``.  Raises :class:`NonHermitianInput` when any entry
    deviates from its adjoint by more than ``1e-10``.
    """
    m = np.asarray(m, dtype=complex)
    if m.ndim < 2 or m.shape[-1] != m.shape[-2]:
        raise ValueError(f"expected square matrices, got shape {m.shape}")
    _require_finite(m, "matrix")
    err = hermiticity_error(m)
    if err > HERMITIAN_TOL:
        raise NonHermitianInput(f"matrix deviates from its adjoint by {err:.3e}")
    batch_shape = m.shape[:-2]
    n = m.shape[-1]
    a = (0.5 * (m + dagger(m))).reshape(-1, n, n).copy()
    _jacobi_diagonalize(a)
    evals = np.real(np.diagonal(a, axis1=-2, axis2=-1))
    evals = -np.sort(-evals, axis=-1)
    return evals.reshape(*batch_shape, n)


def von_neumann_entropy(spectrum) -> float | np.ndarray:
    """Entropy ``-sum(l log2 l)`` in bits of one spectrum or a stack of them.

    Eigenvalues in ``[-1e-12, 0)`` are treated as zero and ``0 log 0 = 0``.
    """
    lam = np.asarray(spectrum, dtype=float)
    _require_finite(lam, "spectrum")
    if np.any(lam < -CLAMP_TOL):
        raise NotAProbabilitySpectrum(f"negative eigenvalue {lam.min():.3e}")
    total = lam.sum(axis=-1)
    if np.any(np.abs(total - 1.0) > TRACE_TOL):
        worst = np.ravel(total)[np.argmax(np.abs(np.ravel(total) - 1.0))]
        raise NotAProbabilitySpectrum(f"spectrum sums to {worst!r}, not 1")
    lam = np.clip(lam, 0.0, None)
    safe = np.where(lam > 0, lam, 1.0)
    h = -np.sum(lam * np.log2(safe), axis=-1)
    h = np.maximum(h, 0.0)
    return float(h) if h.ndim == 0 else h


def entropy(rho: np.ndarray) -> float | np.ndarray:
    """Von Neumann entropy (bits) of a density matrix or a stack of them."""
    return von_neumann_entropy(hermitian_eigenvalues(rho))


def check_state(rho: np.ndarray) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    _require_finite(rho, "rho")
    err = hermiticity_error(rho)
    if err > HERMITIAN_TOL:
        raise NonHermitianInput(f"rho deviates from its adjoint by {err:.3e}")
    tr = np.trace(rho, axis1=-2, axis2=-1).real
    if np.any(np.abs(tr - 1.0) > TRACE_TOL):
        raise NotUnitTrace(f"trace of rho is {np.ravel(tr)[0]!r}")
    return rho


def partial_trace_B(rho: np.ndarray) -> np.ndarray:
    """Alice's reduced state ``Tr_B rho`` (2x2) of a two-qubit density matrix."""
    rho = check_state(rho)
    t = rho.reshape(*rho.shape[:-2], 2, 2, 2, 2)  # (b, a, b', a')
    return np.einsum("...kikj->...ij", t)


def partial_trace_A(rho: np.ndarray) -> np.ndarray:
    """Bob's reduced state ``Tr_A rho`` (2x2) of a two-qubit density matrix."""
    rho = check_state(rho)
    t = rho.reshape(*rho.shape[:-2], 2, 2, 2, 2)
    return np.einsum("...ikjk->...ij", t)
