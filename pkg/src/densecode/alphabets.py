"""Four-letter alphabets generated by local unitaries on Alice's qubit.

Two families are provided: the standard Pauli set ``{1, sx, sy, sz}`` and the
equally-distant set ``{1, n_k . sigma}`` whose three axes form an orthonormal
triad with ``cos^2(theta_k) = 1/3``.  The latter gives four letters with
identical pairwise overlap ``Delta^2 / 3`` for any Schmidt reference.

Note on ``sigma_y``: it is taken as ``i(|0><1| - |1><0|)``, the negative of
the most common convention.  No state or capacity computed here depends on
the sign, but the explicit letter amplitudes and closure phases do.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import MixedLettersUseMixedOverlap, NotClosed
from .linalg import IDENTITY2, dagger, is_unitary, tensor_with_identity_on_B
from .states import SchmidtState, projector

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, 1j], [-1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = np.stack([SIGMA_X, SIGMA_Y, SIGMA_Z])

EQUIDISTANT_AXES = np.array(
    [
        [2 / np.sqrt(6), 0.0, 1 / np.sqrt(3)],
        [-1 / np.sqrt(6), 1 / np.sqrt(2), 1 / np.sqrt(3)],
        [1 / np.sqrt(6), 1 / np.sqrt(2), -1 / np.sqrt(3)],
    ]
)
STANDARD_AXES = np.eye(3)


def pauli_dot(n) -> np.ndarray:
    """``n . sigma`` for a real 3-vector ``n``."""
    return np.tensordot(np.asarray(n, dtype=float), PAULIS, axes=1)


def unit_vector(theta: float, phi: float) -> np.ndarray:
    return np.array([np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)])


def levi_civita() -> np.ndarray:
    eps = np.zeros((3, 3, 3))
    for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        eps[i, j, k] = 1.0
        eps[i, k, j] = -1.0
    return eps


@dataclass(frozen=True)
class LocalUnitary:
    """``exp(i varphi) [cos(psi) 1 + i sin(psi) n . sigma]`` on one qubit."""

    varphi: float
    psi: float
    axis: tuple[float, float, float]

    def __post_init__(self):
        n = np.asarray(self.axis, dtype=float)
        if n.shape != (3,) or abs(np.linalg.norm(n) - 1.0) > 1e-12:
            raise ValueError(f"axis {self.axis!r} is not a unit 3-vector")

    @property
    def matrix(self) -> np.ndarray:
        rot = np.cos(self.psi) * IDENTITY2 + 1j * np.sin(self.psi) * pauli_dot(self.axis)
        return np.exp(1j * self.varphi) * rot

    @property
    def theta(self) -> float:
        return float(np.arccos(np.clip(self.axis[2], -1.0, 1.0)))

    @property
    def phi(self) -> float:
        return float(np.arctan2(self.axis[1], self.axis[0]))

    def lifted(self) -> np.ndarray:
        return tensor_with_identity_on_B(self.matrix)


IDENTITY_GENERATOR = LocalUnitary(0.0, 0.0, (0.0, 0.0, 1.0))


def general_u2(varphi: float, psi: float, theta: float, phi_axis: float) -> LocalUnitary:
    return LocalUnitary(varphi, psi, tuple(unit_vector(theta, phi_axis)))


def axis_generator(n) -> LocalUnitary:
    """The Hermitian unitary ``n . sigma`` written in parameter form."""
    return LocalUnitary(-np.pi / 2, np.pi / 2, tuple(float(x) for x in n))


def generators_from_axes(axes) -> tuple[LocalUnitary, ...]:
    """``{1, n_1 . sigma, n_2 . sigma, n_3 . sigma}`` for three given axes."""
    return (IDENTITY_GENERATOR,) + tuple(axis_generator(n) for n in np.asarray(axes, dtype=float))


def standard_generators() -> tuple[LocalUnitary, ...]:
    return generators_from_axes(STANDARD_AXES)


def equally_distant_generators() -> tuple[LocalUnitary, ...]:
    return generators_from_axes(EQUIDISTANT_AXES)


@dataclass(frozen=True)
class Alphabet:
    """Four letters obtained by applying ``generators[k] (x) 1`` to ``reference``.

    ``letters`` holds state vectors when the reference is pure and density
    matrices otherwise.
    """

    generators: tuple[LocalUnitary, ...]
    reference: np.ndarray = field(repr=False)
    letters: tuple[np.ndarray, ...] = field(repr=False)
    kind: str = "custom"

    @property
    def is_pure(self) -> bool:
        return self.reference.ndim == 1

    def densities(self) -> np.ndarray:
        """Letters as a ``(4, 4, 4)`` stack of density matrices."""
        if self.is_pure:
            return projector(np.stack(self.letters))
        return np.stack(self.letters)


def generate_alphabet(gens, ref, kind: str = "custom") -> Alphabet:
    """Apply each generator on Alice's side of ``ref``.

    ``ref`` may be a :class:`SchmidtState`, a 4-vector or a 4x4 density matrix.
    """
    if isinstance(ref, SchmidtState):
        ref = ref.vector()
    ref = np.asarray(ref, dtype=complex)
    gens = tuple(gens)
    if len(gens) != 4:
        raise ValueError("an alphabet needs exactly four generators")
    letters = []
    for g in gens:
        m = g.matrix if isinstance(g, LocalUnitary) else np.asarray(g, dtype=complex)
        if not is_unitary(m):
            raise ValueError("generator is not unitary")
        big = tensor_with_identity_on_B(m)
        letters.append(big @ ref if ref.ndim == 1 else big @ ref @ dagger(big))
    return Alphabet(gens, ref, tuple(letters), kind)


def standard_alphabet(ref) -> Alphabet:
    return generate_alphabet(standard_generators(), ref, "standard")


def equally_distant_alphabet(ref) -> Alphabet:
    return generate_alphabet(equally_distant_generators(), ref, "equally-distant")


ALPHABET_KINDS = {
    "standard": standard_alphabet,
    "equally-distant": equally_distant_alphabet,
}


def make_alphabet(kind: str, ref) -> Alphabet:
    try:
        return ALPHABET_KINDS[kind](ref)
    except KeyError:
        raise ValueError(f"unknown alphabet kind {kind!r}") from None


def overlap_matrix(a: Alphabet) -> np.ndarray:
    """``O[k, l] = |<psi_k|psi_l>|^2`` for an alphabet of pure letters."""
    if not a.is_pure:
        raise MixedLettersUseMixedOverlap("letters are mixed; use mixed_overlap")
    v = np.stack(a.letters)
    return np.abs(np.conj(v) @ v.T) ** 2


def mixed_overlap(rho_k: np.ndarray, rho_l: np.ndarray) -> float:
    return float(np.real(np.trace(np.asarray(rho_k) @ np.asarray(rho_l))))


def mixed_overlap_matrix(a: Alphabet) -> np.ndarray:
    r = a.densities()
    return np.real(np.einsum("kab,lba->kl", r, r))


def closure_table(gens, tol: float = 1e-9) -> list[list[tuple[int, complex]]]:
    """For every ordered pair ``(k, l)`` find ``(m, c)`` with ``g_k g_l = c g_m``.

    Indices are 0-based; on near-ties the smallest ``m`` wins.
    """
    mats = [g.matrix if isinstance(g, LocalUnitary) else np.asarray(g, dtype=complex) for g in gens]
    table = []
    for gk in mats:
        row = []
        for gl in mats:
            prod = gk @ gl
            for m, gm in enumerate(mats):
                c = np.trace(dagger(gm) @ prod) / 2
                if abs(abs(c) - 1.0) <= tol and np.max(np.abs(prod - c * gm)) <= tol:
                    row.append((m, complex(c)))
                    break
            else:
                raise NotClosed("product of generators is not proportional to a generator")
        table.append(row)
    return table
