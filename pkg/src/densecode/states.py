"""Reference states: Schmidt-form pure states, spectral mixtures, Werner-like mixtures."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ParameterOutOfRange
from .linalg import HERMITIAN_TOL, TRACE_TOL, hermiticity_error, hermitian_eigenvalues

NORM_TOL = 1e-12


@dataclass(frozen=True)
class SchmidtState:
    """Pure state ``alpha|00> + beta|11>``."""

    alpha: complex
    beta: complex

    def __post_init__(self):
        norm = abs(self.alpha) ** 2 + abs(self.beta) ** 2
        if not np.isfinite(norm) or abs(norm - 1.0) > NORM_TOL:
            raise ParameterOutOfRange(f"|alpha|^2 + |beta|^2 = {norm!r}, expected 1")

    @classmethod
    def from_alpha_sq(cls, alpha_sq: float) -> SchmidtState:
        """Real parameterisation ``alpha = sqrt(a)``, ``beta = sqrt(1 - a)``."""
        if not 0.0 <= alpha_sq <= 1.0:
            raise ParameterOutOfRange(f"alpha_sq={alpha_sq!r} must lie in [0, 1]")
        return cls(np.sqrt(alpha_sq), np.sqrt(1.0 - alpha_sq))

    @property
    def alpha_sq(self) -> float:
        return abs(self.alpha) ** 2

    @property
    def beta_sq(self) -> float:
        return abs(self.beta) ** 2

    @property
    def delta(self) -> float:
        """Entanglement degree ``|alpha|^2 - |beta|^2``; 0 for a Bell state."""
        return self.alpha_sq - self.beta_sq

    def vector(self) -> np.ndarray:
        return schmidt_to_vector(self)

    def density(self) -> np.ndarray:
        return projector(self.vector())


BELL = SchmidtState(1 / np.sqrt(2), 1 / np.sqrt(2))


def schmidt_to_vector(s: SchmidtState) -> np.ndarray:
    return np.array([s.alpha, 0.0, 0.0, s.beta], dtype=complex)


def projector(psi: np.ndarray) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex)
    return np.einsum("...i,...j->...ij", psi, np.conj(psi))


def bell_state() -> np.ndarray:
    return schmidt_to_vector(BELL)


def check_density(rho: np.ndarray, name: str = "rho") -> np.ndarray:
    """Validate a two-qubit density matrix and return it as a complex array."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape[-2:] != (4, 4):
        raise ValueError(f"{name} must be 4x4, got {rho.shape}")
    if hermiticity_error(rho) > HERMITIAN_TOL:
        raise ParameterOutOfRange(f"{name} is not Hermitian")
    tr = np.trace(rho, axis1=-2, axis2=-1).real
    if np.any(np.abs(tr - 1.0) > TRACE_TOL):
        raise ParameterOutOfRange(f"{name} has trace {np.ravel(tr)[0]!r}")
    if np.min(hermitian_eigenvalues(rho)) < -HERMITIAN_TOL:
        raise ParameterOutOfRange(f"{name} is not positive semidefinite")
    return rho


@dataclass(frozen=True)
class SpectralMixture:
    """Mixture ``sum_j lambdas[j] |chi_j><chi_j|`` over a Schmidt-aligned orthonormal basis.

    ``chi_1 = a|00> + b|11>``, ``chi_2 = b*|00> - a*|11>``,
    ``chi_3 = g|0_A 1_B> + d|1_A 0_B>``, ``chi_4 = d*|0_A 1_B> - g*|1_A 0_B>``
    with ``(a, b, g, d) = (alpha, beta, gamma, delta)``.
    """

    lambdas: tuple[float, float, float, float]
    alpha: complex
    beta: complex
    gamma: complex = 1.0
    delta: complex = 0.0

    def __post_init__(self):
        lam = np.asarray(self.lambdas, dtype=float)
        if lam.shape != (4,):
            raise ParameterOutOfRange("lambdas must have four entries")
        if np.any(lam < 0) or abs(lam.sum() - 1.0) > NORM_TOL:
            raise ParameterOutOfRange(f"lambdas={tuple(lam)} is not a probability vector")
        for x, y, label in ((self.alpha, self.beta, "alpha, beta"), (self.gamma, self.delta, "gamma, delta")):
            if abs(abs(x) ** 2 + abs(y) ** 2 - 1.0) > NORM_TOL:
                raise ParameterOutOfRange(f"({label}) is not normalised")

    def chi_vectors(self) -> np.ndarray:
        """The four eigenvectors as rows, in the fixed basis ordering."""
        a, b, g, d = (complex(v) for v in (self.alpha, self.beta, self.gamma, self.delta))
        # ordering |00>, |10>, |01>, |11>; |0_A 1_B> is index 2, |1_A 0_B> index 1
        return np.array(
            [
                [a, 0, 0, b],
                [b.conjugate(), 0, 0, -a.conjugate()],
                [0, d, g, 0],
                [0, -g.conjugate(), d.conjugate(), 0],
            ],
            dtype=complex,
        )


def spectral_mixture_density(m: SpectralMixture) -> np.ndarray:
    chi = m.chi_vectors()
    lam = np.asarray(m.lambdas, dtype=float)
    return np.einsum("j,ja,jb->ab", lam, chi, np.conj(chi))


def werner_like(s: float, ref: SchmidtState) -> np.ndarray:
    """``s |psi><psi| + (1 - s)/4 * 1`` for ``0 <= s <= 1``."""
    if not 0.0 <= s <= 1.0:
        raise ParameterOutOfRange(f"s={s!r} must lie in [0, 1]")
    return s * ref.density() + (1.0 - s) / 4.0 * np.eye(4, dtype=complex)
