"""Hamiltonians as real-weighted sums of Pauli strings.

A Hamiltonian is H = sum_i c_i P_i where each P_i is a tensor product of
single-qubit Pauli operators {I, X, Y, Z} and each c_i is a finite real
(energy units, Hartree for molecular data). Qubit 0 is the leftmost tensor
factor, matching :mod:`hqcnn.statevector`.

Expectation values are evaluated matrix-free: each term is applied to the
state by amplitude permutation and phase flips, the results are accumulated
into a single H|psi> buffer, and one inner product <psi|H|psi> finishes the
job. ``to_dense`` materializes the full matrix only for small registers, as
ground truth for tests and the diagonalization oracle.

The ``.ham`` text format (UTF-8, line oriented)::

    # comment lines and blank lines are ignored
    qubits: 4
    bond_length: 0.74
    term: -0.8105 IIII
    term: 0.1209 ZZII

Exactly one ``qubits`` header must precede any term; ``bond_length`` is
optional. Coefficients accept decimal or scientific notation; axis strings
use only I, X, Y, Z and must match the declared qubit count.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import reduce

import numpy as np

from .statevector import StateVector, _bit_slices

DENSE_MAX_QUBITS = 12


class PauliAxis(enum.Enum):
    """Single-qubit factor of a Pauli string."""

    I = "I"
    X = "X"
    Y = "Y"
    Z = "Z"


_AXIS_BY_CHAR = {axis.value: axis for axis in PauliAxis}

PAULI_MATRICES = {
    PauliAxis.I: np.eye(2, dtype=np.complex128),
    PauliAxis.X: np.array([[0, 1], [1, 0]], dtype=np.complex128),
    PauliAxis.Y: np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    PauliAxis.Z: np.array([[1, 0], [0, -1]], dtype=np.complex128),
}


@dataclass(frozen=True)
class PauliTerm:
    """One weighted Pauli string: coefficient * axes[0] (x) ... (x) axes[n-1]."""

    coefficient: float
    axes: tuple[PauliAxis, ...]

    def __post_init__(self) -> None:
        if not math.isfinite(self.coefficient):
            raise ValueError(f"coefficient must be finite, got {self.coefficient}")
        if not self.axes:
            raise ValueError("axes must be non-empty")

    @classmethod
    def from_string(cls, coefficient: float, axes: str) -> "PauliTerm":
        try:
            parsed = tuple(_AXIS_BY_CHAR[c] for c in axes)
        except KeyError as exc:
            raise ValueError(f"unknown axis character {exc.args[0]!r}") from None
        return cls(float(coefficient), parsed)

    @property
    def axis_string(self) -> str:
        return "".join(a.value for a in self.axes)

    @property
    def is_identity(self) -> bool:
        return all(a is PauliAxis.I for a in self.axes)


@dataclass(frozen=True)
class PauliHamiltonian:
    """Sum of Pauli terms on a fixed number of qubits.

    Duplicate axis strings are kept as-is to preserve input fidelity; use
    :func:`merged` to fold them. ``bond_length`` (Angstrom) is optional
    metadata used to pair Hamiltonians with network inputs.
    """

    n_qubits: int
    terms: tuple[PauliTerm, ...]
    bond_length: float | None = None

    def __post_init__(self) -> None:
        if self.n_qubits < 1:
            raise ValueError("n_qubits must be positive")
        for term in self.terms:
            if len(term.axes) != self.n_qubits:
                raise ValueError(
                    f"term {term.axis_string!r} has {len(term.axes)} axes, "
                    f"expected {self.n_qubits}"
                )
        if self.bond_length is not None and not math.isfinite(self.bond_length):
            raise ValueError("bond_length must be finite")


def merged(h: PauliHamiltonian) -> PauliHamiltonian:
    """Fold duplicate axis strings by summing coefficients (first-seen order)."""
    totals: dict[str, float] = {}
    axes_of: dict[str, tuple[PauliAxis, ...]] = {}
    for term in h.terms:
        key = term.axis_string
        totals[key] = totals.get(key, 0.0) + term.coefficient
        axes_of.setdefault(key, term.axes)
    out = tuple(PauliTerm(c, axes_of[k]) for k, c in totals.items())
    return PauliHamiltonian(h.n_qubits, out, h.bond_length)


# ---------------------------------------------------------------------------
# parsing / formatting
# ---------------------------------------------------------------------------


class HamParseError(ValueError):
    """Malformed .ham input; ``line`` is the 1-based offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_hamiltonian(text: str) -> PauliHamiltonian:
    """Parse a .ham document into a Hamiltonian, preserving term order."""
    n_qubits: int | None = None
    bond_length: float | None = None
    terms: list[PauliTerm] = []
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise HamParseError(lineno, f"expected 'key: value', got {line!r}")
        key, value = key.strip(), value.strip()
        if key == "qubits":
            if n_qubits is not None:
                raise HamParseError(lineno, "duplicate 'qubits' header")
            try:
                n_qubits = int(value)
            except ValueError:
                raise HamParseError(lineno, f"qubits must be an integer, got {value!r}") from None
            if n_qubits < 1:
                raise HamParseError(lineno, f"qubits must be positive, got {n_qubits}")
        elif key == "bond_length":
            if bond_length is not None:
                raise HamParseError(lineno, "duplicate 'bond_length' line")
            bond_length = _parse_real(lineno, value, what="bond_length")
        elif key == "term":
            if n_qubits is None:
                raise HamParseError(lineno, "term before 'qubits' header")
            fields = value.split()
            if len(fields) != 2:
                raise HamParseError(
                    lineno, f"term needs '<coefficient> <axes>', got {value!r}"
                )
            coeff = _parse_real(lineno, fields[0], what="coefficient")
            axes = fields[1]
            if len(axes) != n_qubits:
                raise HamParseError(
                    lineno,
                    f"axis string {axes!r} has length {len(axes)}, "
                    f"expected {n_qubits}",
                )
            for c in axes:
                if c not in _AXIS_BY_CHAR:
                    raise HamParseError(lineno, f"unknown axis character {c!r} in {axes!r}")
            terms.append(PauliTerm.from_string(coeff, axes))
        else:
            raise HamParseError(lineno, f"unknown key {key!r}")
    if n_qubits is None:
        raise HamParseError(lineno + 1, "missing 'qubits' header")
    return PauliHamiltonian(n_qubits, tuple(terms), bond_length)


def _parse_real(lineno: int, token: str, what: str) -> float:
    try:
        value = float(token)
    except ValueError:
        raise HamParseError(lineno, f"invalid {what} {token!r} (real number required)") from None
    if not math.isfinite(value):
        raise HamParseError(lineno, f"non-finite {what} {token!r}")
    return value


def format_hamiltonian(h: PauliHamiltonian) -> str:
    """Render a Hamiltonian so that parsing the result reproduces it exactly.

    Coefficients use shortest round-trip float representation.
    """
    lines = [f"qubits: {h.n_qubits}"]
    if h.bond_length is not None:
        lines.append(f"bond_length: {h.bond_length!r}")
    for term in h.terms:
        lines.append(f"term: {term.coefficient!r} {term.axis_string}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------


def _apply_term_rows(term: PauliTerm, rows: np.ndarray, n_qubits: int) -> np.ndarray:
    """c * P applied to each row by bit slicing: X swaps the bit-q halves,
    Y swaps with +-i phases, Z negates the bit-1 half."""
    out = rows * term.coefficient
    for q, axis in enumerate(term.axes):
        if axis is PauliAxis.I:
            continue
        lo, hi = _bit_slices(out, n_qubits, q)
        if axis is PauliAxis.X:
            tmp = lo.copy()
            lo[...] = hi
            hi[...] = tmp
        elif axis is PauliAxis.Y:
            tmp = lo.copy()
            lo[...] = -1j * hi
            hi[...] = 1j * tmp
        else:
            hi *= -1.0
    return out


def _apply_hamiltonian_rows(h: PauliHamiltonian, rows: np.ndarray) -> np.ndarray:
    """H applied to each row of a (batch, 2**n) array."""
    out = np.zeros_like(rows)
    identity_total = 0.0
    for term in h.terms:
        if term.is_identity:
            identity_total += term.coefficient
        else:
            out += _apply_term_rows(term, rows, h.n_qubits)
    if identity_total != 0.0:
        out += identity_total * rows
    return out


def _expectation_rows(h: PauliHamiltonian, rows: np.ndarray) -> np.ndarray:
    """Per-row real expectation <row|H|row>; identity terms reduce to
    coefficient times the squared norm."""
    identity_total = 0.0
    acc = None
    for term in h.terms:
        if term.is_identity:
            identity_total += term.coefficient
        elif acc is None:
            acc = _apply_term_rows(term, rows, h.n_qubits)
        else:
            acc += _apply_term_rows(term, rows, h.n_qubits)
    values = np.zeros(rows.shape[0], dtype=np.float64)
    if acc is not None:
        values += np.einsum("bi,bi->b", rows.conj(), acc).real
    if identity_total != 0.0:
        values += identity_total * np.einsum("bi,bi->b", rows.conj(), rows).real
    return values


def apply_term(term: PauliTerm, psi: StateVector) -> StateVector:
    """c_i P_i |psi> without building any matrix."""
    if len(term.axes) != psi.n_qubits:
        raise ValueError(
            f"term acts on {len(term.axes)} qubits, state has {psi.n_qubits}"
        )
    rows = _apply_term_rows(term, psi.amplitudes.reshape(1, -1), psi.n_qubits)
    return StateVector(psi.n_qubits, rows[0])


def expectation(h: PauliHamiltonian, psi: StateVector) -> float:
    """<psi|H|psi> = sum_i c_i <psi|P_i|psi>, accumulated matrix-free.

    The tiny imaginary residue of the quadratic form (Hermitian H, so it is
    pure rounding noise) is discarded.
    """
    if h.n_qubits != psi.n_qubits:
        raise ValueError(
            f"Hamiltonian acts on {h.n_qubits} qubits, state has {psi.n_qubits}"
        )
    return float(_expectation_rows(h, psi.amplitudes.reshape(1, -1))[0])


def to_dense(h: PauliHamiltonian) -> np.ndarray:
    """Full 2**n x 2**n Hermitian matrix, qubit 0 as the leftmost Kronecker
    factor. Guarded to small registers; use the matrix-free path otherwise."""
    if h.n_qubits > DENSE_MAX_QUBITS:
        raise ValueError(
            f"to_dense limited to {DENSE_MAX_QUBITS} qubits, got {h.n_qubits}"
        )
    dim = 1 << h.n_qubits
    out = np.zeros((dim, dim), dtype=np.complex128)
    for term in h.terms:
        factors = [PAULI_MATRICES[a] for a in term.axes]
        out += term.coefficient * reduce(np.kron, factors)
    return out
