"""Matrix-free n-qubit statevector simulation.

A state on n qubits is stored as 2**n complex amplitudes. Qubit 0 is the
leftmost tensor factor, i.e. the most significant bit of the amplitude
index (the q0 (x) q1 (x) ... (x) q_{n-1} ordering). All gate kernels work
on amplitude slices selected by bit strides; no 2**n x 2**n matrix is ever
built.

The public functions are value-semantic: they return a fresh StateVector
and never mutate their argument. Internally every kernel operates in place
on a (batch, 2**n) array so that many independent circuits can be advanced
with a single numpy call; the private ``_*_rows`` functions expose that
batched path to the rest of the package.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

MAX_QUBITS = 20

_INV_SQRT2 = 1.0 / np.sqrt(2.0)


@dataclass
class StateVector:
    """Amplitudes of an n-qubit register.

    ``amplitudes[i]`` is the coefficient of the basis state whose bit j
    (counting qubit 0 as the most significant bit) is ``(i >> (n-1-j)) & 1``.
    Treated as immutable: gate functions return new instances.
    """

    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        self.amplitudes = np.asarray(self.amplitudes, dtype=np.complex128)
        if self.amplitudes.shape != (1 << self.n_qubits,):
            raise ValueError(
                f"expected {1 << self.n_qubits} amplitudes for "
                f"{self.n_qubits} qubits, got shape {self.amplitudes.shape}"
            )

    def copy(self) -> "StateVector":
        return StateVector(self.n_qubits, self.amplitudes.copy())


def zero_state(n_qubits: int) -> StateVector:
    """All-qubits-|0> state: amplitude 1 at index 0."""
    if not 1 <= n_qubits <= MAX_QUBITS:
        raise ValueError(f"n_qubits must be in [1, {MAX_QUBITS}], got {n_qubits}")
    amp = np.zeros(1 << n_qubits, dtype=np.complex128)
    amp[0] = 1.0
    return StateVector(n_qubits, amp)


def norm(psi: StateVector) -> float:
    """Euclidean norm of the amplitude vector."""
    return float(np.linalg.norm(psi.amplitudes))


# ---------------------------------------------------------------------------
# batched in-place kernels, amplitudes of shape (batch, 2**n)
# ---------------------------------------------------------------------------


def _check_qubit(n_qubits: int, q: int) -> None:
    if not 0 <= q < n_qubits:
        raise ValueError(f"qubit index {q} out of range for {n_qubits} qubits")


def _bit_slices(rows: np.ndarray, n_qubits: int, q: int):
    """Views of the amplitudes where bit q is 0 resp. 1."""
    stride = 1 << (n_qubits - 1 - q)
    v = rows.reshape(rows.shape[0], -1, 2, stride)
    return v[:, :, 0, :], v[:, :, 1, :]


def _angle_factors(theta, half: bool = True):
    """cos/sin of theta/2, shaped to broadcast over (batch, blocks, stride)."""
    t = np.asarray(theta, dtype=np.float64)
    if not np.all(np.isfinite(t)):
        raise ValueError("rotation angle must be finite")
    t = t / 2.0 if half else t
    c, s = np.cos(t), np.sin(t)
    if t.ndim == 1:
        c, s = c[:, None, None], s[:, None, None]
    return c, s


def _h_rows(rows: np.ndarray, n_qubits: int, q: int) -> None:
    lo, hi = _bit_slices(rows, n_qubits, q)
    a = lo.copy()
    lo[...] = (a + hi) * _INV_SQRT2
    hi[...] = (a - hi) * _INV_SQRT2


def _ry_rows(rows: np.ndarray, n_qubits: int, q: int, theta) -> None:
    c, s = _angle_factors(theta)
    lo, hi = _bit_slices(rows, n_qubits, q)
    a = lo.copy()
    lo[...] = c * a - s * hi
    hi[...] = s * a + c * hi


def _rx_rows(rows: np.ndarray, n_qubits: int, q: int, theta) -> None:
    c, s = _angle_factors(theta)
    lo, hi = _bit_slices(rows, n_qubits, q)
    a = lo.copy()
    lo[...] = c * a - 1j * s * hi
    hi[...] = -1j * s * a + c * hi


def _rz_rows(rows: np.ndarray, n_qubits: int, q: int, theta) -> None:
    c, s = _angle_factors(theta)
    lo, hi = _bit_slices(rows, n_qubits, q)
    lo *= c - 1j * s
    hi *= c + 1j * s


def _cnot_rows(rows: np.ndarray, n_qubits: int, control: int, target: int) -> None:
    v = rows.reshape((rows.shape[0],) + (2,) * n_qubits)
    i0 = [slice(None)] * (n_qubits + 1)
    i0[1 + control] = 1
    i0[1 + target] = 0
    i1 = list(i0)
    i1[1 + target] = 1
    i0, i1 = tuple(i0), tuple(i1)
    tmp = v[i0].copy()
    v[i0] = v[i1]
    v[i1] = tmp


def _expect_z_rows(rows: np.ndarray, n_qubits: int, q: int) -> np.ndarray:
    """Per-row <sigma_z> on qubit q: P(bit q = 0) - P(bit q = 1)."""
    p = rows.real**2 + rows.imag**2
    stride = 1 << (n_qubits - 1 - q)
    p = p.reshape(rows.shape[0], -1, 2, stride)
    return p[:, :, 0, :].sum(axis=(1, 2)) - p[:, :, 1, :].sum(axis=(1, 2))


# ---------------------------------------------------------------------------
# single-state public API
# ---------------------------------------------------------------------------


def _applied(psi: StateVector, kernel, *args) -> StateVector:
    rows = psi.amplitudes.copy().reshape(1, -1)
    kernel(rows, psi.n_qubits, *args)
    return StateVector(psi.n_qubits, rows[0])


def apply_h(psi: StateVector, q: int) -> StateVector:
    """Hadamard on qubit q."""
    _check_qubit(psi.n_qubits, q)
    return _applied(psi, _h_rows, q)


def apply_rx(psi: StateVector, q: int, theta: float) -> StateVector:
    """Rotation exp(-i theta/2 sigma_x) on qubit q."""
    _check_qubit(psi.n_qubits, q)
    return _applied(psi, _rx_rows, q, theta)


def apply_ry(psi: StateVector, q: int, theta: float) -> StateVector:
    """Rotation exp(-i theta/2 sigma_y) on qubit q,
    [[cos t/2, -sin t/2], [sin t/2, cos t/2]]."""
    _check_qubit(psi.n_qubits, q)
    return _applied(psi, _ry_rows, q, theta)


def apply_rz(psi: StateVector, q: int, theta: float) -> StateVector:
    """Rotation exp(-i theta/2 sigma_z) on qubit q."""
    _check_qubit(psi.n_qubits, q)
    return _applied(psi, _rz_rows, q, theta)


def apply_cnot(psi: StateVector, control: int, target: int) -> StateVector:
    """CNOT: flips the target bit on amplitudes whose control bit is 1."""
    _check_qubit(psi.n_qubits, control)
    _check_qubit(psi.n_qubits, target)
    if control == target:
        raise ValueError("control and target must differ")
    return _applied(psi, _cnot_rows, control, target)


def expect_z(psi: StateVector, q: int) -> float:
    """<sigma_z> on qubit q, in [-1, 1] for a normalized state."""
    _check_qubit(psi.n_qubits, q)
    return float(_expect_z_rows(psi.amplitudes.reshape(1, -1), psi.n_qubits, q)[0])
