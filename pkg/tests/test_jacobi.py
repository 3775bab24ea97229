"""The small Hermitian eigensolver against numpy's LAPACK route."""

import numpy as np
import pytest

from kicked_ising.jacobi import eigh_small


def random_hermitian(n, rng, scale=1.0):
    m = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return scale * (m + m.conj().T) / 2


def test_values_match_lapack():
    rng = np.random.default_rng(11)
    for n in (2, 3, 4, 6):
        for _ in range(30):
            a = random_hermitian(n, rng)
            w, _ = eigh_small(a)
            assert np.max(np.abs(w - np.linalg.eigvalsh(a))) < 1e-12


def test_eigenvectors_diagonalize():
    rng = np.random.default_rng(12)
    for n in (2, 4):
        for _ in range(20):
            a = random_hermitian(n, rng)
            w, v = eigh_small(a, vectors=True)
            assert np.max(np.abs(a @ v - v * w)) < 1e-12
            assert np.max(np.abs(v.conj().T @ v - np.eye(n))) < 1e-12


def test_degenerate_and_trivial_spectra():
    w, v = eigh_small(np.eye(4, dtype=complex), vectors=True)
    assert np.allclose(w, 1.0)
    assert np.max(np.abs(v.conj().T @ v - np.eye(4))) < 1e-14

    w, v = eigh_small(np.zeros((3, 3)), vectors=True)
    assert np.allclose(w, 0.0)

    proj = np.diag([1.0, 1.0, 0.0, 0.0]).astype(complex)
    w, _ = eigh_small(proj)
    assert np.allclose(w, [0, 0, 1, 1])


def test_density_matrix_scale():
    # spectra of actual density matrices land at the 1e-16 scale cleanly
    rng = np.random.default_rng(13)
    psi = rng.normal(size=4) + 1j * rng.normal(size=4)
    psi /= np.linalg.norm(psi)
    rho = np.outer(psi, psi.conj())
    w, _ = eigh_small(rho)
    assert np.max(np.abs(w - np.linalg.eigvalsh(rho))) < 1e-14


def test_rejects_non_square():
    with pytest.raises(ValueError):
        eigh_small(np.zeros((2, 3)))
