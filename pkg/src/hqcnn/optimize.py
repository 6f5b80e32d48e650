"""Training: summed-energy cost, finite-difference gradients, BFGS.

The cost of a parameter vector w over a training set {(a_j, H_j)} is

    f(w) = sum_j <phi_j| H_j |phi_j>,   |phi_j> = forward(net, a_j, w),

so minimizing f pushes each predicted energy toward the ground energy of
its Hamiltonian (variational bound: each term is >= lambda_min(H_j)).

Gradients are central finite differences; the readout layer makes the
model piecewise-smooth but not conveniently differentiable by hand, and a
step-halving check (``gradient_step_check``) guards the step choice.

The minimizer is a self-contained BFGS with a strong-Wolfe line search
(c1 = 1e-4, c2 = 0.9, cubic interpolation with bisection safeguards).
Defaults: at most 500 iterations, stop when the gradient infinity norm
drops to 1e-5.

Determinism: cost sums training points in dataset order, gradients
batch all coordinate perturbations into one array walk, and parameter
initialization draws from a seeded generator, so identical inputs give
bitwise-identical results on one platform.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import oracle
from .network import NetworkSpec, _forward_rows, forward
from .pauli import PauliHamiltonian, _expectation_rows, expectation


class NumericalError(RuntimeError):
    """Objective or gradient produced a non-finite value."""


@dataclass(frozen=True)
class TrainingProblem:
    """A network plus the ordered (bond_length, Hamiltonian) training pairs."""

    network: NetworkSpec
    training_set: tuple[tuple[float, PauliHamiltonian], ...]

    def __post_init__(self) -> None:
        pairs = tuple((float(a), h) for a, h in self.training_set)
        object.__setattr__(self, "training_set", pairs)
        if not pairs:
            raise ValueError("training set must be non-empty")
        for a, h in pairs:
            if not math.isfinite(a):
                raise ValueError(f"bond length must be finite, got {a}")
            if h.n_qubits != self.network.n_qubits:
                raise ValueError(
                    f"Hamiltonian acts on {h.n_qubits} qubits, "
                    f"network has {self.network.n_qubits}"
                )


@dataclass(frozen=True)
class OptimizerSettings:
    max_iterations: int = 500
    gradient_norm_tolerance: float = 1e-5
    finite_difference_step: float = 1e-6

    def __post_init__(self) -> None:
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be positive")
        if not (self.gradient_norm_tolerance > 0):
            raise ValueError("gradient_norm_tolerance must be positive")
        if not (self.finite_difference_step > 0):
            raise ValueError("finite_difference_step must be positive")


@dataclass(frozen=True)
class MinimizeResult:
    """Raw minimizer outcome, independent of any network."""

    x: np.ndarray
    fun: float
    iterations: int
    converged: bool


@dataclass(frozen=True)
class TrainedModel:
    network: NetworkSpec
    parameters: np.ndarray
    final_cost: float
    iterations_used: int
    converged: bool


def _check_params(params, problem: TrainingProblem) -> np.ndarray:
    vec = np.asarray(params, dtype=np.float64)
    k = problem.network.n_params
    if vec.ndim != 1 or vec.size != k:
        raise ValueError(f"expected {k} parameters, got size {vec.size}")
    return vec


def cost(params, problem: TrainingProblem) -> float:
    """Summed energy expectation over the training points, in dataset order."""
    vec = _check_params(params, problem)
    total = 0.0
    for a, h in problem.training_set:
        psi = forward(problem.network, a, vec)
        total += expectation(h, psi)
    return float(total)


def gradient(params, problem: TrainingProblem, step: float = 1e-6) -> np.ndarray:
    """Central-difference gradient, (f(w + h e_i) - f(w - h e_i)) / 2h.

    All 2k perturbed vectors run as one batch per training point, which
    keeps the walk order (and therefore the rounding) fixed.
    """
    if not (step > 0):
        raise ValueError("step must be positive")
    vec = _check_params(params, problem)
    k = vec.size
    perturbed = np.repeat(vec.reshape(1, -1), 2 * k, axis=0)
    idx = np.arange(k)
    perturbed[idx, idx] += step
    perturbed[k + idx, idx] -= step
    values = np.zeros(2 * k, dtype=np.float64)
    for a, h in problem.training_set:
        rows = _forward_rows(problem.network, a, perturbed)
        values += _expectation_rows(h, rows)
    return (values[:k] - values[k:]) / (2.0 * step)


def gradient_step_check(params, problem: TrainingProblem, step: float = 1e-6) -> float:
    """Max deviation between gradients at h and h/2, relative to the
    gradient's infinity norm. Small values certify the step choice."""
    g_full = gradient(params, problem, step)
    g_half = gradient(params, problem, step / 2.0)
    scale = max(float(np.max(np.abs(g_half))), 1e-12)
    return float(np.max(np.abs(g_full - g_half))) / scale


def init_params(k: int, seed: int) -> np.ndarray:
    """k Gaussian draws, mean 0, standard deviation 0.1, seeded."""
    if k < 1:
        raise ValueError("k must be positive")
    return np.random.default_rng(seed).normal(0.0, 0.1, size=k)


# ---------------------------------------------------------------------------
# BFGS with strong-Wolfe line search
# ---------------------------------------------------------------------------

_WOLFE_C1 = 1e-4
_WOLFE_C2 = 0.9


def _finite_or_raise(value: float, where: str) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise NumericalError(f"objective returned {value} {where}")
    return value


def _cubic_step(a_lo, f_lo, d_lo, a_hi, f_hi, d_hi):
    """Minimizer of the cubic matching values and slopes at both ends;
    None when the formula degenerates."""
    if d_hi is None:
        # Only one slope known: quadratic through (a_lo, f_lo, d_lo), (a_hi, f_hi).
        denom = 2.0 * (f_hi - f_lo - d_lo * (a_hi - a_lo))
        if denom == 0.0:
            return None
        return a_lo - d_lo * (a_hi - a_lo) ** 2 / denom
    d1 = d_lo + d_hi - 3.0 * (f_lo - f_hi) / (a_lo - a_hi)
    radicand = d1 * d1 - d_lo * d_hi
    if radicand < 0.0:
        return None
    d2 = math.copysign(math.sqrt(radicand), a_hi - a_lo)
    denom = d_hi - d_lo + 2.0 * d2
    if denom == 0.0:
        return None
    return a_hi - (a_hi - a_lo) * (d_hi + d2 - d1) / denom


def _zoom(fun, grad, x, p, f0, d0, a_lo, f_lo, d_lo, a_hi, f_hi, d_hi, max_iter=30):
    """Narrow a bracket [a_lo, a_hi] known to contain a strong-Wolfe point."""
    for _ in range(max_iter):
        lo, hi = min(a_lo, a_hi), max(a_lo, a_hi)
        width = hi - lo
        a = _cubic_step(a_lo, f_lo, d_lo, a_hi, f_hi, d_hi)
        # Reject steps outside or hugging the bracket edge.
        if a is None or not (lo + 0.1 * width <= a <= hi - 0.1 * width):
            a = 0.5 * (lo + hi)
        f_a = _finite_or_raise(fun(x + a * p), f"in line search at step {a}")
        if f_a > f0 + _WOLFE_C1 * a * d0 or f_a >= f_lo:
            a_hi, f_hi, d_hi = a, f_a, None
        else:
            g_a = np.asarray(grad(x + a * p), dtype=np.float64)
            d_a = float(g_a @ p)
            if abs(d_a) <= -_WOLFE_C2 * d0:
                return a, f_a, g_a
            if d_a * (a_hi - a_lo) >= 0.0:
                a_hi, f_hi, d_hi = a_lo, f_lo, d_lo
            a_lo, f_lo, d_lo = a, f_a, d_a
        if width < 1e-14:
            break
    return None


def _strong_wolfe(fun, grad, x, p, f0, g0, max_steps=25):
    """Find alpha with sufficient decrease and flattened slope; None on failure."""
    d0 = float(g0 @ p)
    if d0 >= 0.0:
        return None
    a_prev, f_prev, d_prev = 0.0, f0, d0
    a = 1.0
    for i in range(max_steps):
        f_a = _finite_or_raise(fun(x + a * p), f"in line search at step {a}")
        if f_a > f0 + _WOLFE_C1 * a * d0 or (i > 0 and f_a >= f_prev):
            return _zoom(fun, grad, x, p, f0, d0, a_prev, f_prev, d_prev, a, f_a, None)
        g_a = np.asarray(grad(x + a * p), dtype=np.float64)
        d_a = float(g_a @ p)
        if abs(d_a) <= -_WOLFE_C2 * d0:
            return a, f_a, g_a
        if d_a >= 0.0:
            return _zoom(fun, grad, x, p, f0, d0, a, f_a, d_a, a_prev, f_prev, d_prev)
        a_prev, f_prev, d_prev = a, f_a, d_a
        a *= 2.0
    return None


def bfgs_minimize(objective, gradient_fn, x0, settings: OptimizerSettings) -> MinimizeResult:
    """Quasi-Newton minimization with the inverse-Hessian BFGS update.

    Stops when the gradient infinity norm reaches the tolerance or the
    iteration cap is hit. A failed line search returns the best iterate
    found so far with ``converged=False``; a non-finite objective raises
    :class:`NumericalError`.
    """
    x = np.array(x0, dtype=np.float64).reshape(-1).copy()
    k = x.size
    f = _finite_or_raise(objective(x), "at the start point")
    g = np.asarray(gradient_fn(x), dtype=np.float64)
    h_inv = np.eye(k)
    first_update = True
    iterations = 0
    for _ in range(settings.max_iterations):
        if float(np.max(np.abs(g))) <= settings.gradient_norm_tolerance:
            return MinimizeResult(x, f, iterations, True)
        p = -(h_inv @ g)
        if float(p @ g) >= 0.0:
            # Stale curvature produced a non-descent direction: restart.
            h_inv = np.eye(k)
            first_update = True
            p = -g
        found = _strong_wolfe(objective, gradient_fn, x, p, f, g)
        if found is None:
            return MinimizeResult(x, f, iterations, False)
        alpha, f_new, g_new = found
        s = alpha * p
        y = g_new - g
        sy = float(s @ y)
        if sy > 1e-12:
            if first_update:
                # Scale the seed matrix to the first observed curvature.
                h_inv *= sy / float(y @ y)
                first_update = False
            rho = 1.0 / sy
            hy = h_inv @ y
            h_inv -= rho * (np.outer(s, hy) + np.outer(hy, s))
            h_inv += (rho * rho * float(y @ hy) + rho) * np.outer(s, s)
        x = x + s
        f, g = f_new, g_new
        iterations += 1
    converged = float(np.max(np.abs(g))) <= settings.gradient_norm_tolerance
    return MinimizeResult(x, f, iterations, converged)


def train(
    problem: TrainingProblem,
    seed: int,
    settings: OptimizerSettings = OptimizerSettings(),
) -> TrainedModel:
    """Initialize from the seed, minimize the summed energy, report the fit."""
    x0 = init_params(problem.network.n_params, seed)

    def objective(v: np.ndarray) -> float:
        return cost(v, problem)

    def grad(v: np.ndarray) -> np.ndarray:
        return gradient(v, problem, settings.finite_difference_step)

    result = bfgs_minimize(objective, grad, x0, settings)
    # Recompute so the reported number is exactly cost(parameters).
    final_cost = cost(result.x, problem)
    return TrainedModel(
        network=problem.network,
        parameters=result.x,
        final_cost=final_cost,
        iterations_used=result.iterations,
        converged=result.converged,
    )


def evaluate(
    model: TrainedModel, bond_length: float, h: PauliHamiltonian
) -> tuple[float, float]:
    """(predicted energy, absolute error vs the diagonalization oracle)."""
    psi = forward(model.network, bond_length, model.parameters)
    energy = expectation(h, psi)
    return energy, abs(energy - oracle.ground_energy(h))
