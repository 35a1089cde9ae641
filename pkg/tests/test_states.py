import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from densecode.errors import ParameterOutOfRange
from densecode.linalg import hermitian_eigenvalues, partial_trace_B
from densecode.states import (
    BELL,
    SchmidtState,
    SpectralMixture,
    bell_state,
    schmidt_to_vector,
    spectral_mixture_density,
    werner_like,
)


def random_mixture(rng):
    lam = rng.dirichlet(np.ones(4))
    z = rng.normal(size=4) + 1j * rng.normal(size=4)
    ab = z[:2] / np.linalg.norm(z[:2])
    gd = z[2:] / np.linalg.norm(z[2:])
    return SpectralMixture(tuple(lam / lam.sum()), ab[0], ab[1], gd[0], gd[1])


class TestSchmidt:
    def test_bell(self):
        np.testing.assert_allclose(schmidt_to_vector(BELL), np.array([1, 0, 0, 1]) / np.sqrt(2))

    def test_product(self):
        np.testing.assert_array_equal(schmidt_to_vector(SchmidtState(1, 0)), [1, 0, 0, 0])

    def test_real_parameterisation(self):
        v = schmidt_to_vector(SchmidtState(0.5, np.sqrt(0.75)))
        np.testing.assert_allclose(v, [0.5, 0, 0, 0.866025], atol=1e-6)

    def test_delta(self):
        assert SchmidtState.from_alpha_sq(0.25).delta == pytest.approx(-0.5)
        assert BELL.delta == pytest.approx(0.0, abs=1e-15)

    def test_rejects_unnormalised(self):
        with pytest.raises(ParameterOutOfRange):
            SchmidtState(1.0, 0.1)

    def test_rejects_alpha_sq_outside(self):
        with pytest.raises(ParameterOutOfRange):
            SchmidtState.from_alpha_sq(1.2)

    @given(st.floats(0, 1), st.floats(0, 2 * np.pi), st.floats(0, 2 * np.pi))
    def test_unit_norm(self, a, p1, p2):
        s = SchmidtState(np.sqrt(a) * np.exp(1j * p1), np.sqrt(1 - a) * np.exp(1j * p2))
        assert np.linalg.norm(s.vector()) == pytest.approx(1.0, abs=1e-12)

    def test_bell_helper(self):
        np.testing.assert_allclose(bell_state(), BELL.vector())


class TestSpectralMixture:
    def test_pure(self):
        s = SchmidtState.from_alpha_sq(0.3)
        m = SpectralMixture((1, 0, 0, 0), s.alpha, s.beta)
        np.testing.assert_allclose(spectral_mixture_density(m), s.density(), atol=1e-15)

    def test_uniform_is_maximally_mixed(self, rng):
        m = random_mixture(rng)
        m = SpectralMixture((0.25,) * 4, m.alpha, m.beta, m.gamma, m.delta)
        np.testing.assert_allclose(spectral_mixture_density(m), np.eye(4) / 4, atol=1e-15)

    def test_two_term_alice_marginal(self):
        s = SchmidtState.from_alpha_sq(0.25)
        rho = spectral_mixture_density(SpectralMixture((0.5, 0.5, 0, 0), s.alpha, s.beta))
        np.testing.assert_allclose(np.diag(rho).real, [0.5, 0, 0, 0.5], atol=1e-15)
        np.testing.assert_allclose(partial_trace_B(rho), np.eye(2) / 2, atol=1e-15)

    @settings(max_examples=50)
    @given(st.integers(0, 2**32 - 1))
    def test_chi_orthonormal_and_spectrum(self, seed):
        m = random_mixture(np.random.default_rng(seed))
        chi = m.chi_vectors()
        np.testing.assert_allclose(chi.conj() @ chi.T, np.eye(4), atol=1e-12)
        ev = hermitian_eigenvalues(spectral_mixture_density(m))
        np.testing.assert_allclose(ev, np.sort(m.lambdas)[::-1], atol=1e-10)

    def test_rejects_bad_lambdas(self):
        with pytest.raises(ParameterOutOfRange):
            SpectralMixture((0.5, 0.6, 0, 0), 1, 0)


class TestWerner:
    def test_limits(self):
        s = SchmidtState.from_alpha_sq(0.25)
        np.testing.assert_allclose(werner_like(1, s), s.density())
        np.testing.assert_allclose(werner_like(0, s), np.eye(4) / 4)

    def test_purity(self):
        rho = werner_like(0.5, SchmidtState.from_alpha_sq(0.25))
        assert np.trace(rho @ rho).real == pytest.approx(0.4375, abs=1e-15)

    @given(st.floats(0, 1), st.floats(0, 1))
    def test_spectrum(self, s, a):
        ev = hermitian_eigenvalues(werner_like(s, SchmidtState.from_alpha_sq(a)))
        expected = [s + (1 - s) / 4] + [(1 - s) / 4] * 3
        np.testing.assert_allclose(ev, expected, atol=1e-12)

    def test_rejects_out_of_range(self):
        with pytest.raises(ParameterOutOfRange):
            werner_like(1.5, BELL)
