"""Layered hybrid network over the statevector simulator.

The full model (``Variant.WITH_MEASUREMENTS``) runs, for scalar input a:

1. encoding: on every qubit of |0...0>, H then Ry(a),
2. a trainable block of n layers (CNOT ladder + one Ry per qubit),
3. an exact per-qubit <sigma_z> readout, giving b in [-1, 1]^n,
4. re-encoding of the readout on a fresh register, H then Ry(pi * b_i),
   so the angles span [-pi, pi],
5. a second trainable block of n layers.

Step 3/4 is the network's nonlinearity: amplitudes are collapsed to
probabilities and fed back in as angles. The ablation
(``Variant.WITHOUT_MEASUREMENTS``) keeps the same parameter budget by
replacing steps 2-5 with a single trainable block of 2n layers, so both
variants consume exactly 2 n^2 rotation angles.

Parameter vectors are plain 1-D float arrays (radians). Block j of a
trainable block reads angles ``params[offset + i + n*j]`` for qubit i.

All public functions are pure; batched private kernels (rows = one circuit
instance per parameter assignment) carry the training workload.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .statevector import (
    StateVector,
    _cnot_rows,
    _expect_z_rows,
    _h_rows,
    _ry_rows,
)


class Variant(enum.Enum):
    """Network topology selector."""

    WITH_MEASUREMENTS = "with_measurements"
    WITHOUT_MEASUREMENTS = "without_measurements"


@dataclass(frozen=True)
class EncodingSpec:
    """Input-loading block: on each qubit, H then Ry(scale * input value).

    scale = 1 loads raw inputs; scale = pi maps readout values from
    [-1, 1] onto [-pi, pi].
    """

    scale: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.scale) or self.scale == 0.0:
            raise ValueError(f"scale must be finite and nonzero, got {self.scale}")


@dataclass(frozen=True)
class PqcSpec:
    """Trainable block: n_layers repetitions of (CNOT ladder, Ry per qubit).

    The block owns the contiguous parameter window
    ``[param_offset, param_offset + n_qubits * n_layers)``.
    """

    n_qubits: int
    n_layers: int
    param_offset: int

    def __post_init__(self) -> None:
        if self.n_qubits < 1:
            raise ValueError("n_qubits must be positive")
        if self.n_layers < 1:
            raise ValueError("n_layers must be positive")
        if self.param_offset < 0:
            raise ValueError("param_offset must be non-negative")

    @property
    def n_params(self) -> int:
        return self.n_qubits * self.n_layers


@dataclass(frozen=True)
class MeasureSpec:
    """Readout block: per-qubit <sigma_z>, feeding the next encoding."""


Block = EncodingSpec | PqcSpec | MeasureSpec


@dataclass(frozen=True)
class NetworkSpec:
    """Complete network: qubit count plus variant; blocks are derived."""

    n_qubits: int
    variant: Variant

    def __post_init__(self) -> None:
        if self.n_qubits < 1:
            raise ValueError("n_qubits must be positive")
        if not isinstance(self.variant, Variant):
            raise ValueError(f"variant must be a Variant, got {self.variant!r}")

    @property
    def n_params(self) -> int:
        """Both variants consume exactly 2 n^2 angles."""
        return 2 * self.n_qubits * self.n_qubits

    def blocks(self) -> tuple[Block, ...]:
        n = self.n_qubits
        if self.variant is Variant.WITH_MEASUREMENTS:
            return (
                EncodingSpec(1.0),
                PqcSpec(n, n, 0),
                MeasureSpec(),
                EncodingSpec(math.pi),
                PqcSpec(n, n, n * n),
            )
        return (EncodingSpec(1.0), PqcSpec(n, 2 * n, 0))


def entangler_pattern(n_qubits: int) -> list[tuple[int, int]]:
    """(control, target) CNOT pairs for one layer.

    Even-start nearest-neighbour pairs (0,1), (2,3), ... first, then the
    odd-start pairs (1,2), (3,4), ...; which chain reaches the last qubit
    depends on the parity of n. Empty for a single qubit.
    """
    if n_qubits < 1:
        raise ValueError("n_qubits must be positive")
    pairs = [(c, c + 1) for c in range(0, n_qubits - 1, 2)]
    pairs += [(c, c + 1) for c in range(1, n_qubits - 1, 2)]
    return pairs


# ---------------------------------------------------------------------------
# batched kernels: rows is a (batch, 2**n) amplitude array, modified in place
# ---------------------------------------------------------------------------


def _zero_rows(n_qubits: int, batch: int) -> np.ndarray:
    rows = np.zeros((batch, 1 << n_qubits), dtype=np.complex128)
    rows[:, 0] = 1.0
    return rows


def _encode_rows(rows: np.ndarray, n_qubits: int, angles: np.ndarray) -> None:
    """H then Ry(angles[..., q]) on each qubit q; angles (batch, n) or (n,)."""
    for q in range(n_qubits):
        _h_rows(rows, n_qubits, q)
        _ry_rows(rows, n_qubits, q, angles[..., q])


def _pqc_rows(rows: np.ndarray, spec: PqcSpec, thetas: np.ndarray) -> None:
    """thetas is the block's own window, shape (batch, n*layers) or (n*layers,)."""
    n = spec.n_qubits
    pattern = entangler_pattern(n)
    for j in range(spec.n_layers):
        for control, target in pattern:
            _cnot_rows(rows, n, control, target)
        for i in range(n):
            _ry_rows(rows, n, i, thetas[..., i + n * j])


def _measure_rows(rows: np.ndarray, n_qubits: int) -> np.ndarray:
    """(batch, n) array of per-qubit <sigma_z> values."""
    return np.stack(
        [_expect_z_rows(rows, n_qubits, q) for q in range(n_qubits)], axis=1
    )


def _forward_rows(
    net: NetworkSpec, bond_length: float, params_rows: np.ndarray
) -> np.ndarray:
    """One forward pass per row of params_rows; returns final amplitude rows.

    Every encoding block starts from a fresh zero register, so the readout
    block only has to capture its values; the collapsed state is dropped.
    """
    batch = params_rows.shape[0]
    n = net.n_qubits
    inputs = np.full((batch, n), float(bond_length))
    rows = _zero_rows(n, batch)
    for block in net.blocks():
        if isinstance(block, EncodingSpec):
            rows = _zero_rows(n, batch)
            _encode_rows(rows, n, block.scale * inputs)
        elif isinstance(block, PqcSpec):
            window = params_rows[:, block.param_offset : block.param_offset + block.n_params]
            _pqc_rows(rows, block, window)
        else:
            inputs = _measure_rows(rows, n)
    return rows


# ---------------------------------------------------------------------------
# public single-instance API
# ---------------------------------------------------------------------------


def apply_encoding(spec: EncodingSpec, inputs) -> StateVector:
    """Encode a vector of values, one per qubit, from the zero state.

    The register size is the length of ``inputs``.
    """
    vals = np.asarray(inputs, dtype=np.float64)
    if vals.ndim != 1 or vals.size == 0:
        raise ValueError("inputs must be a non-empty 1-D sequence")
    if not np.all(np.isfinite(vals)):
        raise ValueError("inputs must be finite")
    n = int(vals.size)
    rows = _zero_rows(n, 1)
    _encode_rows(rows, n, spec.scale * vals)
    return StateVector(n, rows[0])


def apply_pqc(psi: StateVector, spec: PqcSpec, params) -> StateVector:
    """Run one trainable block on psi, reading the block's parameter window."""
    if spec.n_qubits != psi.n_qubits:
        raise ValueError(
            f"block is for {spec.n_qubits} qubits, state has {psi.n_qubits}"
        )
    vec = np.asarray(params, dtype=np.float64)
    if vec.ndim != 1:
        raise ValueError("params must be a 1-D sequence")
    end = spec.param_offset + spec.n_params
    if vec.size < end:
        raise ValueError(
            f"parameter vector of length {vec.size} too short: "
            f"block reads indices [{spec.param_offset}, {end})"
        )
    rows = psi.amplitudes.copy().reshape(1, -1)
    _pqc_rows(rows, spec, vec[spec.param_offset : end])
    return StateVector(psi.n_qubits, rows[0])


def measure_layer(psi: StateVector) -> np.ndarray:
    """Per-qubit <sigma_z>, exact from the amplitudes (no sampling)."""
    return _measure_rows(psi.amplitudes.reshape(1, -1), psi.n_qubits)[0]


def forward(net: NetworkSpec, bond_length: float, params) -> StateVector:
    """Run the network on one input; returns the final normalized state."""
    if not math.isfinite(bond_length):
        raise ValueError(f"bond_length must be finite, got {bond_length}")
    vec = np.asarray(params, dtype=np.float64)
    if vec.ndim != 1 or vec.size != net.n_params:
        raise ValueError(
            f"expected {net.n_params} parameters for n_qubits={net.n_qubits}, "
            f"got {vec.ndim}-D input of size {vec.size}"
        )
    rows = _forward_rows(net, float(bond_length), vec.reshape(1, -1))
    return StateVector(net.n_qubits, rows[0])
