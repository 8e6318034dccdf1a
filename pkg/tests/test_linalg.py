import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import complex_gaussian, random_hermitian, rng_for
from qreduce import (
    ConvergenceError,
    EigenSystem,
    anticommutator,
    frobenius_distance,
    hermitian_eigensystem,
    unitary_exp,
)
from qreduce import linalg

EIG_TOL = 1e-10


@pytest.mark.parametrize("dim", [1, 2, 3, 5, 8, 12])
def test_eigensystem_matches_numpy(dim):
    # np.linalg.eigh is the independent oracle for the in-house solver
    for case in range(6):
        m = random_hermitian(rng_for(101, dim, case), dim)
        es = hermitian_eigensystem(m)
        ref = np.linalg.eigvalsh(m)
        assert np.max(np.abs(es.eigenvalues - ref)) < EIG_TOL * max(1.0, np.abs(ref).max())


@pytest.mark.parametrize("dim", [2, 4, 7])
def test_eigensystem_reconstructs_input(dim):
    m = random_hermitian(rng_for(102, dim), dim)
    es = hermitian_eigensystem(m)
    assert frobenius_distance(es.reconstruct(), m) < 1e-10


def test_eigenvectors_are_orthonormal():
    m = random_hermitian(rng_for(103), 6)
    v = hermitian_eigensystem(m).eigenvectors
    assert np.max(np.abs(v.conj().T @ v - np.eye(6))) < 1e-12


def test_eigenvalues_sorted_ascending():
    m = random_hermitian(rng_for(104), 9)
    eigs = hermitian_eigensystem(m).eigenvalues
    assert np.all(np.diff(eigs) >= 0)


def test_degenerate_spectrum_reconstructs():
    # two exactly repeated eigenvalues; eigenvectors are basis-dependent
    # there, so only spectrum and reconstruction are contractual
    rng = rng_for(105)
    u = np.linalg.qr(complex_gaussian(rng, (4, 4)))[0]
    m = (u * np.array([1.0, 1.0, 2.0, 3.0])) @ u.conj().T
    m = 0.5 * (m + m.conj().T)
    es = hermitian_eigensystem(m)
    assert np.max(np.abs(es.eigenvalues - [1.0, 1.0, 2.0, 3.0])) < 1e-12
    assert frobenius_distance(es.reconstruct(), m) < 1e-12


def test_eigensystem_is_deterministic():
    m = random_hermitian(rng_for(106), 5)
    a = hermitian_eigensystem(m)
    b = hermitian_eigensystem(m.copy())
    assert np.array_equal(a.eigenvalues, b.eigenvalues)
    assert np.array_equal(a.eigenvectors, b.eigenvectors)


def test_phase_convention_first_component_real_positive():
    m = random_hermitian(rng_for(107), 4)
    v = hermitian_eigensystem(m).eigenvectors
    for k in range(4):
        col = v[:, k]
        lead = col[np.abs(col) > 1e-12 * np.abs(col).max()][0]
        assert abs(lead.imag) < 1e-12
        assert lead.real > 0


def test_diagonal_matrix_short_circuits():
    es = hermitian_eigensystem(np.diag([3.0, -1.0, 2.0]))
    assert np.array_equal(es.eigenvalues, [-1.0, 2.0, 3.0])


def test_non_hermitian_rejected():
    with pytest.raises(ValueError):
        hermitian_eigensystem(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_convergence_failure_raises(monkeypatch):
    monkeypatch.setattr(linalg, "_MAX_SWEEPS", 0)
    with pytest.raises(ConvergenceError):
        hermitian_eigensystem(random_hermitian(rng_for(108), 4))


def test_eigensystem_dataclass_fields():
    es = hermitian_eigensystem(np.eye(3))
    assert isinstance(es, EigenSystem)
    assert es.dim == 3


def test_unitary_exp_is_unitary():
    h = random_hermitian(rng_for(109), 5)
    u = unitary_exp(h, 0.7)
    assert np.max(np.abs(u @ u.conj().T - np.eye(5))) < 1e-12


def test_unitary_exp_diagonal_phases():
    u = unitary_exp(np.diag([1.0, -2.0]), 0.5)
    expected = np.diag([np.exp(-0.5j), np.exp(1.0j)])
    assert np.max(np.abs(u - expected)) < 1e-14


def test_unitary_exp_zero_hamiltonian():
    assert np.max(np.abs(unitary_exp(np.zeros((3, 3)), 2.0) - np.eye(3))) < 1e-14


def test_unitary_exp_composes_in_time():
    h = random_hermitian(rng_for(110), 3)
    u = unitary_exp(h, 0.3) @ unitary_exp(h, 0.4)
    assert np.max(np.abs(u - unitary_exp(h, 0.7))) < 1e-12


small_entries = st.floats(min_value=-5.0, max_value=5.0, allow_nan=False)


@st.composite
def hermitian_2x2(draw):
    a = draw(small_entries)
    d = draw(small_entries)
    re = draw(small_entries)
    im = draw(small_entries)
    return np.array([[a, re + 1j * im], [re - 1j * im, d]])


@settings(max_examples=60, deadline=None)
@given(hermitian_2x2(), hermitian_2x2())
def test_anticommutator_symmetric(a, b):
    assert np.array_equal(anticommutator(a, b), anticommutator(b, a))


@settings(max_examples=60, deadline=None)
@given(hermitian_2x2(), hermitian_2x2(), hermitian_2x2(), small_entries)
def test_anticommutator_linear_in_first_argument(a, b, c, scale):
    left = anticommutator(a + scale * b, c)
    right = anticommutator(a, c) + scale * anticommutator(b, c)
    assert np.max(np.abs(left - right)) < 1e-9


@settings(max_examples=60, deadline=None)
@given(hermitian_2x2(), hermitian_2x2())
def test_anticommutator_preserves_hermiticity(a, b):
    out = anticommutator(a, b)
    assert np.max(np.abs(out - out.conj().T)) < 1e-12


def test_anticommutator_dimension_mismatch():
    with pytest.raises(ValueError):
        anticommutator(np.eye(2), np.eye(3))


def test_frobenius_distance_basic():
    a = np.zeros((2, 2))
    b = np.array([[0.0, 3.0], [4.0, 0.0]])
    assert frobenius_distance(a, b) == pytest.approx(5.0)
    assert frobenius_distance(b, b) == 0.0
