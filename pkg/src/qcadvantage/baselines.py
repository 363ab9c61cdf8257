"""Classical CASCI and NISQ-VQE runtime baselines."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import ValidationError
from .hamio import HamiltonianStats

__all__ = [
    "ClassicalMachine",
    "MACHINES",
    "VqeConfig",
    "determinant_count",
    "casci_runtime",
    "ansatz_depth",
    "vqe_shots",
    "vqe_iteration_time",
]


@dataclass(frozen=True)
class ClassicalMachine:
    name: str
    flops: float

    def __post_init__(self):
        if not self.flops > 0:
            raise ValidationError(f"flops must be > 0, got {self.flops}")


MACHINES = {
    "desktop": ClassicalMachine("desktop", 1.2e12),  # Intel i9-10980XE
    "hpc": ClassicalMachine("hpc", 1.25e17),  # top-5 supercomputer
}

ANSATZE = ("linear_depth", "k_upccgsd", "puccd")

# two-qubit-gate layers as a polynomial in N, lowest power first
DEFAULT_DEPTH_POLYNOMIALS = {
    "linear_depth": (0.0, 1.0),
    "puccd": (0.0, 2.0),
    "k_upccgsd": (0.0, 8.0),
}


@dataclass(frozen=True)
class VqeConfig:
    """Hardware and ansatz assumptions for one VQE energy evaluation.

    ``shot_grouping_factor`` divides the naive ``(lambda/eps)**2`` shot count
    to account for simultaneous measurement of commuting terms and variance
    reduction; ``parallel_factor`` counts circuits executed concurrently
    (copies of the register on one chip, or several chips).
    """

    ansatz: str = "linear_depth"
    two_qubit_gate_time: float = 1e-7
    measure_reset_time: float = 1e-6
    parallel_factor: int = 10
    shot_grouping_factor: float = 1e4
    depth_polynomials: dict = field(default_factory=lambda: dict(DEFAULT_DEPTH_POLYNOMIALS))

    def __post_init__(self):
        if self.ansatz not in ANSATZE:
            raise ValidationError(f"ansatz must be one of {ANSATZE}, got {self.ansatz!r}")
        if not (self.two_qubit_gate_time > 0 and self.measure_reset_time > 0):
            raise ValidationError("gate and measurement times must be > 0")
        if self.parallel_factor < 1:
            raise ValidationError(f"parallel_factor must be >= 1, got {self.parallel_factor}")
        if not self.shot_grouping_factor > 0:
            raise ValidationError("shot_grouping_factor must be > 0")


def determinant_count(n_orbitals: int, n_electrons: int) -> int:
    """Slater determinants in a CAS with ``n_electrons`` in ``n_orbitals`` (S_z minimal)."""
    if not 0 <= n_electrons <= 2 * n_orbitals:
        raise ValidationError(f"n_electrons={n_electrons} outside [0, 2*{n_orbitals}]")
    n_alpha = (n_electrons + 1) // 2
    n_beta = n_electrons // 2
    return math.comb(n_orbitals, n_alpha) * math.comb(n_orbitals, n_beta)


def casci_runtime(
    n_orbitals: int,
    n_electrons: int,
    machine: ClassicalMachine,
    n_iterations: int = 10,
    flop_coefficient: float = 1.0,
) -> float:
    """Seconds for a Davidson-style CASCI: ``n_iter * c * D * N**4`` flops."""
    dets = determinant_count(n_orbitals, n_electrons)
    return n_iterations * flop_coefficient * dets * n_orbitals**4 / machine.flops


def ansatz_depth(ansatz: str, n_orbitals: int, polynomials: dict | None = None) -> float:
    coeffs = (polynomials or DEFAULT_DEPTH_POLYNOMIALS)[ansatz]
    return sum(c * n_orbitals**power for power, c in enumerate(coeffs))


def vqe_shots(lambda_: float, epsilon: float, grouping: float = 1.0) -> int:
    if not epsilon > 0:
        raise ValidationError(f"epsilon must be > 0, got {epsilon}")
    return math.ceil((lambda_ / epsilon) ** 2 / grouping)


def vqe_iteration_time(stats: HamiltonianStats, config: VqeConfig, epsilon: float) -> float:
    """Seconds of device time for one energy evaluation of the optimizer loop."""
    shots = vqe_shots(stats.lambda_, epsilon, config.shot_grouping_factor)
    depth = ansatz_depth(config.ansatz, stats.n_orbitals, config.depth_polynomials)
    circuit = depth * config.two_qubit_gate_time + config.measure_reset_time
    return shots * circuit / config.parallel_factor
