"""Pure-state representation and the kicked-Ising evolution kernels.

Basis convention (shared by every module in this package):

* A state of ``L`` qubits is a length ``2**L`` complex amplitude array.
* Bit ``k`` of a basis index (least-significant bit first, ``k = 0 .. L-1``)
  encodes qubit ``k``.  Bit value 1 corresponds to the spin-up state ``|1>``
  with ``S^z`` eigenvalue +1/2, so the all-down "vacuum" is basis index 0.
* In this basis ordering ``sigma_z = diag(-1, +1)``; ``sigma_x`` is the usual
  bit flip and ``sigma_y = [[0, 1j], [-1j, 0]]`` completes the Pauli algebra.

One kick of the chain is ``U = U_xx(j_x) . U_field(b, theta)``: the tilted
magnetic-field rotation acts first, then the nearest-neighbour Ising coupling
``exp(-i j_x sum_n S^x_n S^x_{n+1})``.  The coupling is applied in the
``sigma_x`` eigenbasis reached by a fast Walsh-Hadamard transform, which costs
O(L 2^L) instead of the O(4^L) dense product.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, 1j], [-1j, 0]], dtype=complex)
PAULI_Z = np.array([[-1, 0], [0, 1]], dtype=complex)

BOUNDARIES = ("periodic", "open")

_NORM_ATOL = 1e-10  # fresh states sit at 1e-12; long runs may drift towards this


@dataclass(frozen=True)
class PureState:
    """Unit-norm pure state of ``num_qubits`` qubits."""

    num_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if self.num_qubits < 2:
            raise ValueError(f"need at least 2 qubits, got {self.num_qubits}")
        amps = np.ascontiguousarray(self.amplitudes, dtype=complex)
        if amps.shape != (2 ** self.num_qubits,):
            raise ValueError(
                f"amplitude array of shape {self.amplitudes.shape} does not match "
                f"num_qubits={self.num_qubits}"
            )
        norm = np.linalg.norm(amps)
        if abs(norm - 1.0) > _NORM_ATOL:
            raise ValueError(f"state norm {norm!r} is not 1 within {_NORM_ATOL}")
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return self.amplitudes.shape[0]


@dataclass(frozen=True)
class ChainParams:
    """All physical knobs of one kick of the chain.

    ``j_x`` and ``b_field`` are dimensionless phases per kick (radians),
    ``theta`` is the tilt of the field in the x-z plane (0 = along the
    coupling axis, pi/2 = transverse).  The kick period is the time unit, so
    time is the integer kick count.
    """

    num_qubits: int
    j_x: float
    b_field: float
    theta: float
    boundary: str = "periodic"

    def __post_init__(self):
        if self.num_qubits < 2:
            raise ValueError(f"need at least 2 qubits, got {self.num_qubits}")
        if self.boundary not in BOUNDARIES:
            raise ValueError(f"boundary must be one of {BOUNDARIES}, got {self.boundary!r}")

    @property
    def num_bonds(self) -> int:
        return self.num_qubits if self.boundary == "periodic" else self.num_qubits - 1


def make_basis_state(num_qubits: int, bits: str) -> PureState:
    """Computational basis state from a bitstring in ket order.

    The leftmost character of ``bits`` is qubit ``L-1``, the rightmost is
    qubit 0, i.e. the basis index is ``int(bits, 2)``.
    """
    if num_qubits < 2:
        raise ValueError(f"need at least 2 qubits, got {num_qubits}")
    if len(bits) != num_qubits or any(c not in "01" for c in bits):
        raise ValueError(f"bits must be a 0/1 string of length {num_qubits}, got {bits!r}")
    amps = np.zeros(2 ** num_qubits, dtype=complex)
    amps[int(bits, 2)] = 1.0
    return PureState(num_qubits, amps)


def make_vacuum(num_qubits: int) -> PureState:
    """All spins down: basis index 0."""
    return make_basis_state(num_qubits, "0" * num_qubits)


def make_ghz(num_qubits: int) -> PureState:
    """(|0...0> + |1...1>)/sqrt(2)."""
    if num_qubits < 2:
        raise ValueError(f"need at least 2 qubits, got {num_qubits}")
    amps = np.zeros(2 ** num_qubits, dtype=complex)
    amps[0] = amps[-1] = 1.0 / math.sqrt(2.0)
    return PureState(num_qubits, amps)


def fwht_inplace(amplitudes: np.ndarray) -> np.ndarray:
    """In-place normalized fast Walsh-Hadamard transform, H^{tensor L}.

    Applies ``H = [[1, 1], [1, -1]]/sqrt(2)`` on every qubit in O(L 2^L);
    the transform is involutive.  The array length must be a power of two.
    """
    n = amplitudes.shape[0]
    if n < 1 or (n & (n - 1)) != 0:
        raise ValueError(f"length {n} is not a power of two")
    h = 1
    while h < n:
        v = amplitudes.reshape(-1, 2, h)
        lo = v[:, 0, :] + v[:, 1, :]
        hi = v[:, 0, :] - v[:, 1, :]
        v[:, 0, :] = lo
        v[:, 1, :] = hi
        h *= 2
    amplitudes *= 1.0 / math.sqrt(n)
    return amplitudes


@lru_cache(maxsize=32)
def _bond_alignment(num_qubits: int, boundary: str) -> np.ndarray:
    """sum_n s_n s_{n+1} over the bonds, per basis index, with s = +/-1 from the bits."""
    idx = np.arange(2 ** num_qubits, dtype=np.uint32)
    if boundary == "periodic":
        neighbour = (idx >> 1) | ((idx & 1) << (num_qubits - 1))
        flips = np.bitwise_count(idx ^ neighbour)
        n_bonds = num_qubits
    else:
        flips = np.bitwise_count((idx ^ (idx >> 1)) & ((1 << (num_qubits - 1)) - 1))
        n_bonds = num_qubits - 1
    out = (n_bonds - 2 * flips.astype(np.int32)).astype(np.float64)
    out.setflags(write=False)
    return out


@lru_cache(maxsize=32)
def _ising_phases(num_qubits: int, j_x: float, boundary: str) -> np.ndarray:
    out = np.exp(-0.25j * j_x * _bond_alignment(num_qubits, boundary))
    out.setflags(write=False)
    return out


def apply_ising_kick(state: PureState, j_x: float, boundary: str = "periodic") -> PureState:
    """exp(-i j_x sum_n S^x_n S^x_{n+1}) over the chain bonds.

    Walsh-Hadamard to the sigma_x eigenbasis, multiply each amplitude by
    exp(-i (j_x/4) sum_n s_n s_{n+1}) with the eigenvalue signs s_n read off
    the index bits, and transform back.
    """
    if boundary not in BOUNDARIES:
        raise ValueError(f"boundary must be one of {BOUNDARIES}, got {boundary!r}")
    amps = state.amplitudes.copy()
    fwht_inplace(amps)
    amps *= _ising_phases(state.num_qubits, float(j_x), boundary)
    fwht_inplace(amps)
    return PureState(state.num_qubits, amps)


def field_unitary(b_field: float, theta: float) -> np.ndarray:
    """The 2x2 one-qubit rotation exp(-i b (cos(theta) S^x + sin(theta) S^z))."""
    axis = math.cos(theta) * PAULI_X + math.sin(theta) * PAULI_Z
    return math.cos(b_field / 2) * np.eye(2) - 1j * math.sin(b_field / 2) * axis


def apply_field_kick(state: PureState, b_field: float, theta: float) -> PureState:
    """Apply the tilted-field rotation independently to every qubit."""
    u = field_unitary(b_field, theta)
    amps = state.amplitudes.copy()
    n = amps.shape[0]
    h = 1
    while h < n:
        v = amps.reshape(-1, 2, h)
        lo = v[:, 0, :].copy()
        hi = v[:, 1, :]
        v[:, 0, :] = u[0, 0] * lo + u[0, 1] * hi
        v[:, 1, :] = u[1, 0] * lo + u[1, 1] * hi
        h *= 2
    return PureState(state.num_qubits, amps)


def step(state: PureState, params: ChainParams) -> PureState:
    """One kick: the field rotation first, then the Ising coupling."""
    if state.num_qubits != params.num_qubits:
        raise ValueError(
            f"state has {state.num_qubits} qubits but params expect {params.num_qubits}"
        )
    out = apply_field_kick(state, params.b_field, params.theta)
    return apply_ising_kick(out, params.j_x, params.boundary)
