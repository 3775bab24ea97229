"""Independent brute-force oracles for the test suite.

Everything here is built from dense matrices and explicit index sums, on
purpose: none of it shares code paths with the package (no Walsh-Hadamard
trick, no reshape-based partial traces, no Jacobi eigensolver), so agreement
is meaningful.  Single-qubit and bond unitaries come from eigendecompositions
of their generators rather than trig closed forms.
"""

from __future__ import annotations

import numpy as np

SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, 1j], [-1j, 0]], dtype=complex)
SZ = np.array([[-1, 0], [0, 1]], dtype=complex)  # |1> is spin up
I2 = np.eye(2, dtype=complex)


def op_on(op: np.ndarray, k: int, L: int) -> np.ndarray:
    """Embed a one-qubit operator on qubit k (bit k of the basis index)."""
    out = np.array([[1.0 + 0j]])
    for pos in range(L - 1, -1, -1):
        out = np.kron(out, op if pos == k else I2)
    return out


def expm_herm(h: np.ndarray) -> np.ndarray:
    """exp(-i h) for Hermitian h, via eigendecomposition."""
    w, v = np.linalg.eigh(h)
    return (v * np.exp(-1j * w)) @ v.conj().T


def field_kick_dense(L: int, b: float, theta: float) -> np.ndarray:
    g = (b / 2.0) * (np.cos(theta) * SX + np.sin(theta) * SZ)
    u = expm_herm(g)
    out = np.array([[1.0 + 0j]])
    for _ in range(L):
        out = np.kron(out, u)
    return out


def ising_kick_dense(L: int, j_x: float, boundary: str = "periodic") -> np.ndarray:
    n_bonds = L if boundary == "periodic" else L - 1
    dim = 2 ** L
    U = np.eye(dim, dtype=complex)
    for n in range(n_bonds):
        xx = op_on(SX, n, L) @ op_on(SX, (n + 1) % L, L)
        U = (np.cos(j_x / 4.0) * np.eye(dim) - 1j * np.sin(j_x / 4.0) * xx) @ U
    return U


def step_dense(L: int, j_x: float, b: float, theta: float,
               boundary: str = "periodic") -> np.ndarray:
    return ising_kick_dense(L, j_x, boundary) @ field_kick_dense(L, b, theta)


def brute_rdm1(psi: np.ndarray, k: int, L: int) -> np.ndarray:
    """Partial trace onto qubit k by explicit index summation."""
    rho = np.zeros((2, 2), dtype=complex)
    mask = 1 << k
    for a in (0, 1):
        for c in (0, 1):
            acc = 0j
            for rest in range(2 ** L):
                if rest & mask:
                    continue
                acc += psi[rest | (a << k)] * np.conj(psi[rest | (c << k)])
            rho[a, c] = acc
    return rho


def brute_rdm2(psi: np.ndarray, i: int, j: int, L: int) -> np.ndarray:
    """Partial trace onto qubits (i, j), i leftmost, by explicit index summation."""
    rho = np.zeros((4, 4), dtype=complex)
    mi, mj = 1 << i, 1 << j
    for a in (0, 1):
        for b in (0, 1):
            for c in (0, 1):
                for d in (0, 1):
                    acc = 0j
                    for rest in range(2 ** L):
                        if rest & (mi | mj):
                            continue
                        bra = rest | (a << i) | (b << j)
                        ket = rest | (c << i) | (d << j)
                        acc += psi[bra] * np.conj(psi[ket])
                    rho[2 * a + b, 2 * c + d] = acc
    return rho


def concurrence_oracle(rho: np.ndarray) -> float:
    """Wootters concurrence through the non-Hermitian product spectrum."""
    flip = np.kron(SY, SY)
    lam = np.linalg.eigvals(rho @ flip @ rho.conj() @ flip)
    lam = np.sqrt(np.clip(lam.real, 0.0, None))
    lam[::-1].sort()
    return max(0.0, lam[0] - lam[1] - lam[2] - lam[3])


def sz_profile_dense(psi: np.ndarray, L: int) -> np.ndarray:
    p = np.abs(psi) ** 2
    idx = np.arange(2 ** L)
    return np.array([np.sum(p * (((idx >> l) & 1) - 0.5)) for l in range(L)])


def v_q_block(j_x: float, b: float, q: float) -> np.ndarray:
    """Even-parity 2x2 block of the mode unitary in the (|0>, |-q q>) basis."""
    pairing = np.array([[0.0, np.sin(q)], [np.sin(q), 2.0 * np.cos(q)]])
    number = np.diag([0.0, 2.0])
    return expm_herm((j_x / 2.0) * pairing) @ expm_herm(b * number)


def random_state(L: int, rng: np.random.Generator) -> np.ndarray:
    psi = rng.normal(size=2 ** L) + 1j * rng.normal(size=2 ** L)
    return psi / np.linalg.norm(psi)


def random_unitary_2x2(rng: np.random.Generator) -> np.ndarray:
    m = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    qmat, r = np.linalg.qr(m)
    return qmat * (np.diag(r) / np.abs(np.diag(r)))


def apply_local_unitaries(psi: np.ndarray, unitaries: list[np.ndarray]) -> np.ndarray:
    L = len(unitaries)
    full = np.array([[1.0 + 0j]])
    for k in range(L - 1, -1, -1):
        full = np.kron(full, unitaries[k])
    return full @ psi
