"""Reduced density matrices and the entanglement measures computed from them.

All operations take a :class:`~kicked_ising.statevec.PureState` (or a reduced
density matrix produced here) and are pure functions.  Basis conventions come
from :mod:`kicked_ising.statevec`; two-qubit density matrices are ordered
(|00>, |01>, |10>, |11>) with the first-listed qubit in the left slot.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .jacobi import eigh_small
from .statevec import PAULI_Y, PureState

# spin-flip kernel sigma_y (x) sigma_y; identical for either sign convention of sigma_y
_SPIN_FLIP = np.kron(PAULI_Y, PAULI_Y).real.astype(float)

_EIG_FLOOR = -1e-9  # spectra of valid density matrices may only dip this far below 0


def rdm_single(state: PureState, k: int) -> np.ndarray:
    """2x2 reduced density matrix of qubit ``k`` (partial trace over the rest)."""
    L = state.num_qubits
    if not 0 <= k < L:
        raise IndexError(f"qubit index {k} out of range for {L} qubits")
    t = state.amplitudes.reshape((2,) * L)
    t = np.moveaxis(t, L - 1 - k, 0).reshape(2, -1)
    return t @ t.conj().T


def rdm_pair(state: PureState, i: int, j: int) -> np.ndarray:
    """4x4 reduced density matrix of qubits ``(i, j)``, qubit ``i`` leftmost."""
    L = state.num_qubits
    if not (0 <= i < L and 0 <= j < L):
        raise IndexError(f"qubit pair ({i}, {j}) out of range for {L} qubits")
    if i == j:
        raise ValueError(f"need two distinct qubits, got ({i}, {j})")
    t = state.amplitudes.reshape((2,) * L)
    t = np.moveaxis(t, (L - 1 - i, L - 1 - j), (0, 1)).reshape(4, -1)
    return t @ t.conj().T


def _clamped_spectrum(w: np.ndarray, what: str) -> np.ndarray:
    if w.min() < _EIG_FLOOR:
        raise ValueError(f"{what} has eigenvalue {w.min():.3e} below {_EIG_FLOOR:.0e}; "
                         "input is not a valid density matrix")
    # eigenvalues below the backward-error resolution of the solver are
    # indistinguishable from exact zeros; zeroing them keeps the later square
    # root from amplifying rank-deficiency noise (~1e-16) to the 1e-8 scale
    floor = 32.0 * np.finfo(float).eps * max(w.max(), 0.0)
    return np.where(w < floor, 0.0, w)


def concurrence(rho: np.ndarray) -> float:
    """Wootters concurrence of a two-qubit density matrix.

    The eigenvalues of ``rho rho~`` (with ``rho~`` the spin-flipped complex
    conjugate) are obtained from the Hermitian congruent form
    ``sqrt(rho) rho~ sqrt(rho)``, diagonalized with the small-matrix Jacobi
    kernel.  Result is max(sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4), 0).
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 density matrix, got shape {rho.shape}")
    w, v = eigh_small(rho, vectors=True)
    w = _clamped_spectrum(w, "rho")
    sqrt_rho = (v * np.sqrt(w)) @ v.conj().T
    rho_tilde = _SPIN_FLIP @ rho.conj() @ _SPIN_FLIP
    w2, _ = eigh_small(sqrt_rho @ rho_tilde @ sqrt_rho)
    lam = np.sqrt(_clamped_spectrum(w2, "rho rho~"))[::-1]
    return max(float(lam[0] - lam[1] - lam[2] - lam[3]), 0.0)


def one_tangle(state: PureState, k: int) -> float:
    """4 det of the single-qubit reduced density matrix, clamped to [0, 1]."""
    r = rdm_single(state, k)
    det = (r[0, 0] * r[1, 1] - r[0, 1] * r[1, 0]).real
    return min(max(4.0 * det, 0.0), 1.0)


def q_measure(state: PureState) -> float:
    """Average one-tangle over all qubits (Meyer-Wallach measure)."""
    L = state.num_qubits
    return sum(one_tangle(state, k) for k in range(L)) / L


@lru_cache(maxsize=32)
def _parity_signs(num_qubits: int) -> np.ndarray:
    counts = np.bitwise_count(np.arange(2 ** num_qubits, dtype=np.uint32))
    out = np.where(counts & 1, -1.0, 1.0)
    out.setflags(write=False)
    return out


def n_tangle(state: PureState) -> float:
    """|<psi| sigma_y^{(x) L} |psi*>|^2, the N-qubit generalization of the tangle.

    Evaluated in O(2^L) as ``|sum_b psi(b) psi(~b) (-1)^popcount(b)|^2``; the
    complement pairing makes it vanish identically for odd L.
    """
    a = state.amplitudes
    total = np.sum(a * a[::-1] * _parity_signs(state.num_qubits))
    return min(float(abs(total) ** 2), 1.0)


def residual_tangle(state: PureState, focus: int) -> float:
    """One-tangle of ``focus`` minus the squared concurrences to every other qubit.

    Reported raw (not clamped) so the monogamy inequality stays testable.
    """
    L = state.num_qubits
    total = one_tangle(state, focus)
    for j in range(L):
        if j != focus:
            total -= concurrence(rdm_pair(state, focus, j)) ** 2
    return total


@dataclass(frozen=True)
class MeasureReport:
    """Every measure of one state at one kick count.

    ``pair_concurrences`` is the symmetric (L, L) concurrence table, or None
    when the pairwise measures were skipped for speed; the derived scalars
    then come back as None as well.
    """

    t: int
    num_qubits: int
    q_measure: float
    n_tangle: float
    one_tangles: np.ndarray
    pair_concurrences: np.ndarray | None

    @property
    def one_tangle(self) -> float:
        return float(self.one_tangles.mean())

    @property
    def sum_two_tangles_per_qubit(self) -> np.ndarray | None:
        if self.pair_concurrences is None:
            return None
        return (self.pair_concurrences ** 2).sum(axis=1)

    @property
    def sum_two_tangles(self) -> float | None:
        per_qubit = self.sum_two_tangles_per_qubit
        return None if per_qubit is None else float(per_qubit.mean())

    @property
    def residual_tangles(self) -> np.ndarray | None:
        per_qubit = self.sum_two_tangles_per_qubit
        return None if per_qubit is None else self.one_tangles - per_qubit

    @property
    def residual_tangle(self) -> float | None:
        per_focus = self.residual_tangles
        return None if per_focus is None else float(per_focus.mean())

    @property
    def nn_concurrence(self) -> float | None:
        """Mean concurrence over the ring bonds (i, i+1 mod L)."""
        if self.pair_concurrences is None:
            return None
        L = self.num_qubits
        bonds = {(min(i, (i + 1) % L), max(i, (i + 1) % L)) for i in range(L)}
        return float(np.mean([self.pair_concurrences[i, j] for i, j in sorted(bonds)]))

    def value(self, measure: str) -> float:
        """Scalar value of a named measure (for averaging and CSV output)."""
        attr = {"q": "q_measure"}.get(measure, measure)
        if not hasattr(self, attr):
            raise KeyError(f"unknown measure {measure!r}")
        out = getattr(self, attr)
        if out is None:
            raise ValueError(f"measure {measure!r} was not computed for this report")
        return float(out)


def report(state: PureState, t: int, pair_measures: bool = True) -> MeasureReport:
    """Assemble all measures of ``state`` at kick count ``t``."""
    L = state.num_qubits
    tangles = np.array([one_tangle(state, k) for k in range(L)])
    pairs = None
    if pair_measures:
        pairs = np.zeros((L, L))
        for i in range(L):
            for j in range(i + 1, L):
                pairs[i, j] = pairs[j, i] = concurrence(rdm_pair(state, i, j))
    return MeasureReport(
        t=t,
        num_qubits=L,
        q_measure=float(tangles.mean()),
        n_tangle=n_tangle(state),
        one_tangles=tangles,
        pair_concurrences=pairs,
    )
