import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from densecode.alphabets import (
    EQUIDISTANT_AXES,
    PAULIS,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    LocalUnitary,
    closure_table,
    equally_distant_alphabet,
    equally_distant_generators,
    general_u2,
    generate_alphabet,
    levi_civita,
    make_alphabet,
    mixed_overlap,
    mixed_overlap_matrix,
    overlap_matrix,
    standard_alphabet,
    standard_generators,
)
from densecode.errors import MixedLettersUseMixedOverlap, NotClosed
from densecode.linalg import tensor_with_identity_on_B
from densecode.states import BELL, SchmidtState, projector, werner_like

S3, S6 = np.sqrt(3), np.sqrt(6)
OFF = ~np.eye(4, dtype=bool)
ALPHA_GRID = np.round(np.linspace(0, 1, 11), 12)
EPS = levi_civita()


def schmidt_strategy():
    return st.tuples(st.floats(0, 1), st.floats(0, 2 * np.pi), st.floats(0, 2 * np.pi)).map(
        lambda t: SchmidtState(np.sqrt(t[0]) * np.exp(1j * t[1]), np.sqrt(1 - t[0]) * np.exp(1j * t[2]))
    )


def ed_matrices():
    return [g.matrix for g in equally_distant_generators()]


class TestStandard:
    def test_sigma_y_sign(self):
        np.testing.assert_array_equal(SIGMA_Y, [[0, 1j], [-1j, 0]])

    def test_sx_flips(self):
        np.testing.assert_allclose(standard_generators()[1].matrix @ [1, 0], [0, 1], atol=1e-15)

    def test_matrices_are_paulis(self):
        mats = [g.matrix for g in standard_generators()]
        for got, want in zip(mats, [np.eye(2), SIGMA_X, SIGMA_Y, SIGMA_Z]):
            np.testing.assert_allclose(got, want, atol=1e-15)

    def test_bell_basis(self):
        letters = np.stack(standard_alphabet(BELL).letters)
        r = 1 / np.sqrt(2)
        expected = np.array(
            [[r, 0, 0, r], [0, r, r, 0], [0, -1j * r, 1j * r, 0], [r, 0, 0, -r]]
        )
        np.testing.assert_allclose(letters, expected, atol=1e-15)
        np.testing.assert_allclose(overlap_matrix(standard_alphabet(BELL)), np.eye(4), atol=1e-15)

    @given(schmidt_strategy())
    def test_letters_explicit_amplitudes(self, s):
        a, b = s.alpha, s.beta
        expected = np.array(
            [[a, 0, 0, b], [0, a, b, 0], [0, -1j * a, 1j * b, 0], [a, 0, 0, -b]]
        )
        np.testing.assert_allclose(np.stack(standard_alphabet(s).letters), expected, atol=1e-14)

    def test_overlap_pattern_quarter(self):
        # letters 0/3 differ only in the sign of beta, as do 1/2
        o = overlap_matrix(standard_alphabet(SchmidtState.from_alpha_sq(0.25)))
        expected = np.eye(4)
        for k, l in [(0, 3), (3, 0), (1, 2), (2, 1)]:
            expected[k, l] = 0.25
        np.testing.assert_allclose(o, expected, atol=1e-12)


class TestEquallyDistantGenerators:
    def test_u2_matrix(self):
        u2 = equally_distant_generators()[1].matrix
        np.testing.assert_allclose(u2, [[1 / S3, 2 / S6], [2 / S6, -1 / S3]], atol=1e-15)

    def test_orthonormal_axes(self):
        np.testing.assert_allclose(EQUIDISTANT_AXES @ EQUIDISTANT_AXES.T, np.eye(3), atol=1e-15)

    def test_completeness(self):
        np.testing.assert_allclose(EQUIDISTANT_AXES.T @ EQUIDISTANT_AXES, np.eye(3), atol=1e-12)

    def test_cos2_theta(self):
        np.testing.assert_allclose(EQUIDISTANT_AXES[:, 2] ** 2, [1 / 3] * 3, atol=1e-15)

    def test_involutions(self):
        for u in ed_matrices()[1:]:
            np.testing.assert_allclose(u @ u, np.eye(2), atol=1e-15)
            np.testing.assert_allclose(u, u.conj().T, atol=1e-15)

    def test_cross_product_relation(self):
        n = EQUIDISTANT_AXES
        for k, l in itertools.product(range(3), repeat=2):
            expected = -np.einsum("m,mj->j", EPS[k, l], n)
            np.testing.assert_allclose(np.cross(n[k], n[l]), expected, atol=1e-12)

    def test_products_carry_phase_i(self):
        # U_k U_l = delta_kl + i eps_klm U_m; the i is forced because the
        # left side is anti-Hermitian for k != l
        u = ed_matrices()[1:]
        for k, l in itertools.product(range(3), repeat=2):
            rhs = (k == l) * np.eye(2) + 1j * sum(EPS[k, l, m] * u[m] for m in range(3))
            np.testing.assert_allclose(u[k] @ u[l], rhs, atol=1e-12)

    def test_products_without_phase_fail(self):
        u = ed_matrices()[1:]
        assert np.abs(u[0] @ u[1] - u[2]).max() > 0.5


class TestGeneralU2:
    def test_zero_rotation(self):
        np.testing.assert_allclose(general_u2(0.7, 0.0, 1.1, 2.3).matrix, np.exp(0.7j) * np.eye(2), atol=1e-15)

    def test_reproduces_u2(self):
        n = EQUIDISTANT_AXES[0]
        theta, phi = np.arccos(n[2]), np.arctan2(n[1], n[0])
        got = general_u2(-np.pi / 2, np.pi / 2, theta, phi).matrix
        np.testing.assert_allclose(got, ed_matrices()[1], atol=1e-15)

    def test_z_axis_gives_sigma_z(self):
        np.testing.assert_allclose(general_u2(-np.pi / 2, np.pi / 2, 0.0, 0.0).matrix, SIGMA_Z, atol=1e-15)

    @given(st.floats(-7, 7), st.floats(-7, 7), st.floats(0, np.pi), st.floats(-7, 7))
    def test_unitary(self, varphi, psi, theta, phi):
        g = general_u2(varphi, psi, theta, phi)
        np.testing.assert_allclose(g.matrix @ g.matrix.conj().T, np.eye(2), atol=1e-12)
        assert g.theta == pytest.approx(theta, abs=1e-7)

    def test_rejects_non_unit_axis(self):
        with pytest.raises(ValueError):
            LocalUnitary(0, 0, (1.0, 1.0, 0.0))


class TestEquallyDistantAlphabet:
    def test_product_reference(self):
        letters = equally_distant_alphabet(SchmidtState(1, 0)).letters
        np.testing.assert_allclose(letters[1], [1 / S3, np.sqrt(2 / 3), 0, 0], atol=1e-15)

    @given(schmidt_strategy())
    def test_letters_explicit_amplitudes(self, s):
        a, b = s.alpha, s.beta
        expected = np.array(
            [
                [a, 0, 0, b],
                [a / S3, np.sqrt(2 / 3) * a, np.sqrt(2 / 3) * b, -b / S3],
                [a / S3, (-1 - 1j * S3) / S6 * a, (-1 + 1j * S3) / S6 * b, -b / S3],
                [-a / S3, (1 - 1j * S3) / S6 * a, (1 + 1j * S3) / S6 * b, b / S3],
            ]
        )
        np.testing.assert_allclose(np.stack(equally_distant_alphabet(s).letters), expected, atol=1e-14)

    def test_bell_limit(self):
        np.testing.assert_allclose(overlap_matrix(equally_distant_alphabet(BELL)), np.eye(4), atol=1e-12)

    def test_quarter(self):
        o = overlap_matrix(equally_distant_alphabet(SchmidtState.from_alpha_sq(0.25)))
        np.testing.assert_allclose(o[OFF], 1 / 12, atol=1e-12)
        assert o[0, 1] == pytest.approx(0.083333, abs=1e-6)

    @given(schmidt_strategy())
    def test_equal_distance_law(self, s):
        o = overlap_matrix(equally_distant_alphabet(s))
        np.testing.assert_allclose(o[OFF], s.delta**2 / 3, atol=1e-12)
        np.testing.assert_allclose(np.diag(o), 1, atol=1e-12)

    @pytest.mark.parametrize("m", range(4))
    def test_permutation_invariance(self, m):
        s = SchmidtState.from_alpha_sq(0.3)
        base = equally_distant_alphabet(s)
        regenerated = generate_alphabet(equally_distant_generators(), base.letters[m])
        p_base = projector(np.stack(base.letters))
        p_new = projector(np.stack(regenerated.letters))
        dist = np.abs(p_new[:, None] - p_base[None]).max(axis=(-1, -2))
        assert np.all(dist.min(axis=1) < 1e-10)
        assert sorted(dist.argmin(axis=1)) == [0, 1, 2, 3]

    def test_make_alphabet_rejects_unknown(self):
        with pytest.raises(ValueError):
            make_alphabet("triangular", BELL)

    def test_generator_must_be_unitary(self):
        with pytest.raises(ValueError):
            generate_alphabet([np.eye(2)] * 3 + [2 * np.eye(2)], BELL)


class TestOperatorIdentity:
    def test_sigma_times_generator(self):
        # sigma_mu U_k = sum_nu n_nu [delta_mu_nu 1 - i eps_mu_nu_kappa sigma_kappa]
        for n in EQUIDISTANT_AXES:
            u = np.tensordot(n, PAULIS, axes=1)
            for mu in range(3):
                rhs = sum(
                    n[nu] * ((mu == nu) * np.eye(2) - 1j * np.tensordot(EPS[mu, nu], PAULIS, axes=1))
                    for nu in range(3)
                )
                np.testing.assert_allclose(PAULIS[mu] @ u, rhs, atol=1e-12)


class TestClosure:
    def test_equally_distant(self):
        table = closure_table(equally_distant_generators())
        for k in range(4):
            m, c = table[k][k]
            assert m == 0 and c == pytest.approx(1, abs=1e-12)
        m, c = table[1][2]
        assert m == 3 and c == pytest.approx(1j, abs=1e-12)
        m, c = table[2][1]
        assert m == 3 and c == pytest.approx(-1j, abs=1e-12)
        assert all(abs(abs(c) - 1) < 1e-12 for row in table for _, c in row)

    def test_standard(self):
        m, c = closure_table(standard_generators())[1][2]
        assert m == 3 and c == pytest.approx(-1j, abs=1e-12)

    def test_not_closed(self):
        gens = list(standard_generators())
        gens[3] = general_u2(0, 0.3, 0.4, 0.5)
        with pytest.raises(NotClosed):
            closure_table(gens)


class TestMixedOverlap:
    def test_pure_overlap_rejects_mixed(self):
        with pytest.raises(MixedLettersUseMixedOverlap):
            overlap_matrix(equally_distant_alphabet(werner_like(0.5, BELL)))

    def test_pure_limit(self):
        s = SchmidtState.from_alpha_sq(0.25)
        o = mixed_overlap_matrix(equally_distant_alphabet(werner_like(1.0, s)))
        np.testing.assert_allclose(o[OFF], s.delta**2 / 3, atol=1e-12)

    def test_fully_mixed(self):
        r = werner_like(0.0, BELL)
        assert mixed_overlap(r, r) == pytest.approx(0.25, abs=1e-15)

    def test_half_werner(self):
        a = equally_distant_alphabet(werner_like(0.5, SchmidtState.from_alpha_sq(0.25)))
        assert mixed_overlap(a.letters[0], a.letters[2]) == pytest.approx(0.208333, abs=1e-6)

    @settings(max_examples=30)
    @given(st.floats(0, 1), st.floats(0, 1))
    def test_werner_equal_distance(self, s, a2):
        ref = SchmidtState.from_alpha_sq(a2)
        o = mixed_overlap_matrix(equally_distant_alphabet(werner_like(s, ref)))
        np.testing.assert_allclose(o[OFF], s**2 * ref.delta**2 / 3 + (1 - s**2) / 4, atol=1e-12)

    @settings(max_examples=30)
    @given(st.lists(st.floats(0, 1), min_size=4, max_size=4), st.floats(0, 1))
    def test_letter_mixture_reference(self, raw, a2):
        # reference = sum_m lam_m |psi_m><psi_m| built from the pure alphabet itself
        if sum(raw) < 1e-3:
            return
        lam = np.array(raw) / sum(raw)
        s = SchmidtState.from_alpha_sq(a2)
        pure = equally_distant_alphabet(s).densities()
        ref = np.einsum("m,mab->ab", lam, pure)
        o = mixed_overlap_matrix(equally_distant_alphabet(ref))
        # each letter is the same mixture with its labels permuted by the
        # closure table; overlaps follow from the pure Gram matrix
        table = closure_table(equally_distant_generators())
        perm = np.array([[table[k][m][0] for m in range(4)] for k in range(4)])
        gram = np.full((4, 4), s.delta**2 / 3) + (1 - s.delta**2 / 3) * np.eye(4)
        expected = np.einsum("m,n,kmln->kl", lam, lam, gram[perm[:, :, None, None], perm[None, None]])
        np.testing.assert_allclose(o, expected, atol=1e-12)
