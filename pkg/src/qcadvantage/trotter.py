"""Gate counts for iterative phase estimation with Trotter-Suzuki oracles.

The controlled evolution is repeated ``U(eps) = ceil(pe_constant / eps)``
times; each repetition applies ``r(N)`` Trotter steps, each step one
synthesized rotation per retained Hamiltonian term. Rotations are compiled
to T gates with a repeat-until-success synthesis cost logarithmic in the
per-rotation error budget.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ValidationError
from .hamio import HamiltonianStats

__all__ = [
    "AlgorithmCost",
    "TrotterCostModel",
    "logical_qubits_trotter",
    "trotter_number",
    "phase_estimation_repetitions",
    "rotation_t_cost",
    "trotter_t_count",
]

TROTTERIZATION = "trotterization"
QUBITIZATION = "qubitization"


@dataclass(frozen=True)
class AlgorithmCost:
    """Logical-level cost of one phase-estimation run."""

    method: str
    logical_qubits: int
    t_count: int = 0
    toffoli_count: int = 0
    logical_depth: int = 0

    @property
    def non_clifford_count(self) -> int:
        return self.t_count + self.toffoli_count

    @property
    def gate_kind(self) -> str:
        return "T" if self.method == TROTTERIZATION else "Toffoli"

    def to_record(self) -> dict:
        return {
            "method": self.method,
            "logical_qubits": self.logical_qubits,
            "t_count": self.t_count,
            "toffoli_count": self.toffoli_count,
            "logical_depth": self.logical_depth,
        }


@dataclass(frozen=True)
class TrotterCostModel:
    """Constants of the Trotter cost model.

    ``trotter_r0``, ``trotter_alpha`` and ``trotter_shift`` define the Trotter
    number ``r(N) = ceil(r0 * max(1, N - shift) ** alpha)``. The defaults here
    are placeholders; the calibrated values live in the calibration file.
    """

    trotter_r0: float = 1.0
    trotter_alpha: float = 2.0
    trotter_shift: float = 0.0
    synthesis_a: float = 1.15
    synthesis_b: float = 9.2
    pe_constant: float = math.pi / 2

    def __post_init__(self):
        for name in ("trotter_r0", "trotter_alpha", "trotter_shift", "synthesis_a", "synthesis_b", "pe_constant"):
            value = getattr(self, name)
            if not (value >= 0 and math.isfinite(value)):
                raise ValidationError(f"{name} must be finite and >= 0, got {value}")


def logical_qubits_trotter(n_orbitals: int) -> int:
    """2N spin-orbital qubits plus one phase-estimation ancilla."""
    if n_orbitals < 1:
        raise ValidationError(f"n_orbitals must be >= 1, got {n_orbitals}")
    return 2 * n_orbitals + 1


def trotter_number(n_orbitals: int, model: TrotterCostModel) -> int:
    if n_orbitals < 1:
        raise ValidationError(f"n_orbitals must be >= 1, got {n_orbitals}")
    base = max(1.0, n_orbitals - model.trotter_shift)
    return math.ceil(model.trotter_r0 * base**model.trotter_alpha)


def phase_estimation_repetitions(epsilon: float, pe_constant: float = math.pi / 2) -> int:
    """Controlled-evolution segments needed for energy resolution ``epsilon``."""
    if not epsilon > 0:
        raise ValidationError(f"epsilon must be > 0, got {epsilon}")
    return math.ceil(pe_constant / epsilon)


def rotation_t_cost(rotation_error: float, a: float = 1.15, b: float = 9.2) -> int:
    """T gates to synthesize one arbitrary-angle rotation to ``rotation_error``."""
    return math.ceil(a * math.log2(1.0 / rotation_error) + b)


def trotter_t_count(stats: HamiltonianStats, epsilon: float, model: TrotterCostModel) -> AlgorithmCost:
    """Total T count for a Trotterized iterative QPE run.

    The error budget ``epsilon`` is split evenly over every synthesized
    rotation. Rotations are applied serially, so the logical depth equals the
    T count.
    """
    if not epsilon > 0:
        raise ValidationError(f"epsilon must be > 0, got {epsilon}")
    if stats.n_terms < 0:
        raise ValidationError(f"n_terms must be >= 0, got {stats.n_terms}")
    qubits = logical_qubits_trotter(stats.n_orbitals)
    if stats.n_terms == 0:
        return AlgorithmCost(TROTTERIZATION, qubits)
    reps = phase_estimation_repetitions(epsilon, model.pe_constant)
    steps = trotter_number(stats.n_orbitals, model)
    n_rotations = reps * steps * stats.n_terms
    per_rotation = rotation_t_cost(epsilon / n_rotations, model.synthesis_a, model.synthesis_b)
    t_count = n_rotations * per_rotation
    return AlgorithmCost(TROTTERIZATION, qubits, t_count=t_count, logical_depth=t_count)
