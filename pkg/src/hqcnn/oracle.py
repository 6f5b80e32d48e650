"""Exact ground-state reference values by diagonalization.

Two independent routes to the smallest eigenvalue:

* ``ground_energy`` / ``ground_state`` build the dense matrix and call the
  symmetric eigensolver. Exact up to LAPACK rounding, limited to small
  registers.
* ``ground_energy_iterative`` never materializes the matrix: it wraps the
  matrix-free term application in a LinearOperator and runs Lanczos
  (shift-free, smallest-algebraic). Agreement between the two routes is a
  strong check that the bit-slicing kernels and the Kronecker construction
  implement the same operator.

``spectrum_bounds`` returns (min, max) eigenvalues, used to express model
errors as a fraction of the spectral range.
"""

from __future__ import annotations

import numpy as np
import scipy.sparse.linalg

from .pauli import PauliHamiltonian, _apply_hamiltonian_rows, to_dense
from .statevector import StateVector


class EigensolverError(RuntimeError):
    """Iterative eigensolver failed to converge."""


def ground_energy(h: PauliHamiltonian) -> float:
    """Smallest eigenvalue of H via dense symmetric diagonalization."""
    return float(np.linalg.eigvalsh(to_dense(h))[0])


def ground_state(h: PauliHamiltonian) -> tuple[float, StateVector]:
    """Smallest eigenvalue and a unit-norm eigenvector for it."""
    values, vectors = np.linalg.eigh(to_dense(h))
    return float(values[0]), StateVector(h.n_qubits, vectors[:, 0])


def spectrum_bounds(h: PauliHamiltonian) -> tuple[float, float]:
    """(lowest, highest) eigenvalue of H."""
    values = np.linalg.eigvalsh(to_dense(h))
    return float(values[0]), float(values[-1])


def ground_energy_iterative(h: PauliHamiltonian, tol: float = 0.0) -> float:
    """Smallest eigenvalue via Lanczos on the matrix-free operator.

    ``tol = 0`` requests machine precision. Raises
    :class:`EigensolverError` if the iteration does not converge rather
    than returning a silently inaccurate value.
    """
    dim = 1 << h.n_qubits

    def matvec(v: np.ndarray) -> np.ndarray:
        rows = np.ascontiguousarray(v, dtype=np.complex128).reshape(1, dim)
        return _apply_hamiltonian_rows(h, rows)[0]

    op = scipy.sparse.linalg.LinearOperator(
        shape=(dim, dim), matvec=matvec, dtype=np.complex128
    )
    if dim == 2:
        # Lanczos needs k < dim; a 2x2 problem is cheaper dense anyway.
        m = np.column_stack([matvec(col) for col in np.eye(2, dtype=np.complex128)])
        return float(np.linalg.eigvalsh(m)[0])
    rng = np.random.default_rng(7)
    v0 = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    try:
        values = scipy.sparse.linalg.eigsh(
            op, k=1, which="SA", tol=tol, v0=v0, return_eigenvectors=False
        )
    except scipy.sparse.linalg.ArpackNoConvergence as exc:
        raise EigensolverError(f"Lanczos did not converge: {exc}") from exc
    return float(values[0])
