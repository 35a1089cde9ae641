"""Numerical search for the most distinguishable four-letter local-unitary alphabet.

With the first generator fixed to the identity, the remaining three are
parameterised by ``(psi_k, theta_k, phi_k)``; the global phase drops out of
every overlap.  For a Schmidt reference with weights ``a = |alpha|^2`` and
``b = |beta|^2`` the overlap of letters ``k, l`` is
``|a W_kl[0, 0] + b W_kl[1, 1]|^2`` with ``W_kl = U_k^dagger U_l``.

The minimax objective is non-smooth, so each restart descends the smooth
surrogate ``sum_{k != l} O_kl^2``.  Its global minima are exactly the
equal-overlap configurations (the sum of overlaps is bounded below by
``4 Delta^2`` and the squares by the mean), so nothing is lost by the swap.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ParameterOutOfRange

GOLDEN = (np.sqrt(5.0) - 1.0) / 2.0
_OFFDIAG = ~np.eye(4, dtype=bool)


def _columns(angles: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """First and second columns of the four generators, identity first.

    Rows of ``angles`` are ``(psi, theta, phi)``; uses
    ``n . sigma = [[nz, nx + i ny], [nx - i ny, -nz]]``.
    """
    psi, theta, phi = angles[:, 0], angles[:, 1], angles[:, 2]
    st = np.sin(theta)
    nx, ny, nz = st * np.cos(phi), st * np.sin(phi), np.cos(theta)
    c, s = np.cos(psi), 1j * np.sin(psi)
    col0 = np.empty((4, 2), dtype=complex)
    col1 = np.empty((4, 2), dtype=complex)
    col0[0], col1[0] = (1, 0), (0, 1)
    col0[1:, 0] = c + s * nz
    col0[1:, 1] = s * (nx - 1j * ny)
    col1[1:, 0] = s * (nx + 1j * ny)
    col1[1:, 1] = c - s * nz
    return col0, col1


def overlaps_from_angles(angles, delta_sq: float) -> np.ndarray:
    """Full 4x4 overlap matrix of the alphabet described by ``angles``."""
    angles = np.asarray(angles, dtype=float).reshape(3, 3)
    delta = np.sqrt(delta_sq)
    a, b = (1.0 + delta) / 2.0, (1.0 - delta) / 2.0
    col0, col1 = _columns(angles)
    gram = a * (np.conj(col0) @ col0.T) + b * (np.conj(col1) @ col1.T)
    return np.abs(gram) ** 2


def max_overlap(angles, delta_sq: float) -> float:
    return float(overlaps_from_angles(angles, delta_sq)[_OFFDIAG].max())


def _surrogate(angles, delta_sq: float) -> float:
    return float(np.sum(overlaps_from_angles(angles, delta_sq)[_OFFDIAG] ** 2))


def _golden_section(f, lo: float, hi: float, tol: float) -> float:
    x1 = hi - GOLDEN * (hi - lo)
    x2 = lo + GOLDEN * (hi - lo)
    f1, f2 = f(x1), f(x2)
    while hi - lo > tol:
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - GOLDEN * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + GOLDEN * (hi - lo)
            f2 = f(x2)
    return 0.5 * (lo + hi)


def _coordinate_descent(x: np.ndarray, objective, sweeps: int, tol: float) -> np.ndarray:
    x = x.copy()
    width = np.pi / 2
    best = objective(x)
    for _ in range(sweeps):
        start = best
        for i in range(x.size):
            def along(t, i=i):
                y = x.copy()
                y[i] = t
                return objective(y)

            t = _golden_section(along, x[i] - width, x[i] + width, max(tol, 1e-3 * width))
            val = along(t)
            if val <= best:
                x[i], best = t, val
        if start - best <= 1e-16 * max(1.0, start):
            width *= 0.5
            if width < tol:
                break
    return x


@dataclass(frozen=True)
class SearchResult:
    """Best alphabet found by :func:`search_min_max_overlap`.

    ``angles[k]`` holds ``(psi, theta, phi)`` for the generators 2..4.
    """

    delta_sq: float
    angles: np.ndarray
    achieved_overlap: float
    overlaps: np.ndarray
    seed: int
    restarts: int

    @property
    def target_overlap(self) -> float:
        return self.delta_sq / 3.0

    @property
    def cos2_theta(self) -> np.ndarray:
        return np.cos(self.angles[:, 1]) ** 2

    @property
    def cos2_psi(self) -> np.ndarray:
        return np.cos(self.angles[:, 0]) ** 2

    def to_dict(self) -> dict:
        return {
            "delta_sq": self.delta_sq,
            "achieved_overlap": self.achieved_overlap,
            "target_overlap": self.target_overlap,
            "angles": [
                {"psi": float(p), "theta": float(t), "phi": float(f)} for p, t, f in self.angles
            ],
            "cos2_theta": [float(c) for c in self.cos2_theta],
            "cos2_psi": [float(c) for c in self.cos2_psi],
            "overlaps": self.overlaps.tolist(),
            "seed": self.seed,
            "restarts": self.restarts,
        }


def search_min_max_overlap(
    delta_sq: float,
    restarts: int = 50,
    seed: int = 0,
    sweeps: int = 200,
    tol: float = 1e-9,
) -> SearchResult:
    """Minimise the largest pairwise overlap over the nine generator angles.

    Deterministic for a fixed ``seed``; ties between restarts go to the
    earliest one.
    """
    if not 0.0 <= delta_sq <= 1.0:
        raise ParameterOutOfRange(f"delta_sq={delta_sq!r} must lie in [0, 1]")
    if restarts < 1:
        raise ParameterOutOfRange(f"restarts={restarts!r} must be at least 1")
    rng = np.random.default_rng(seed)
    surrogate = lambda v: _surrogate(v, delta_sq)  # noqa: E731
    best_x, best_val = None, np.inf
    for _ in range(restarts):
        x0 = np.column_stack(
            [rng.uniform(0, np.pi, 3), np.arccos(rng.uniform(-1, 1, 3)), rng.uniform(0, 2 * np.pi, 3)]
        ).ravel()
        x = _coordinate_descent(x0, surrogate, sweeps, tol)
        val = max_overlap(x, delta_sq)
        if val < best_val:
            best_x, best_val = x, val
    angles = best_x.reshape(3, 3)
    return SearchResult(
        delta_sq=float(delta_sq),
        angles=angles,
        achieved_overlap=best_val,
        overlaps=overlaps_from_angles(angles, delta_sq),
        seed=seed,
        restarts=restarts,
    )
