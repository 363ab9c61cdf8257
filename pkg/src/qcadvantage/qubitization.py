"""Toffoli and logical-qubit counts for phase estimation by sparse qubitization.

Each walk-operator iteration reads the ``d`` retained coefficients through a
QROM whose space-time trade-off parameter ``k`` (a power of two) exchanges
Toffolis, ``ceil(d/k)``, against ``m*(k-1)`` extra Toffolis and ``m*k``
extra output qubits, where ``m`` is the coefficient bit precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ValidationError
from .hamio import HamiltonianStats
from .trotter import QUBITIZATION, AlgorithmCost

__all__ = [
    "QubitizationCostModel",
    "coefficient_bits",
    "qpe_iterations",
    "select_qrom_k",
    "toffoli_per_iteration",
    "qubitization_logical_qubits",
    "qubitization_cost",
]

MAX_QROM_LOG2 = 20


@dataclass(frozen=True)
class QubitizationCostModel:
    """Oracle constants.

    Attributes:
        coeff_bits_m: Coefficient bits; ``None`` derives it from lambda and
            epsilon with :func:`coefficient_bits`.
        qrom_k: Fixed power of two, or ``"auto"`` to pick the Toffoli-optimal one.
        per_iter_linear_c: Toffolis per orbital per iteration (selection and
            swap networks).
        per_iter_const: Fixed Toffolis per iteration.
        ancilla_const: Fixed extra logical qubits (control and temporary registers).
    """

    coeff_bits_m: int | None = None
    qrom_k: int | str = "auto"
    per_iter_linear_c: float = 0.0
    per_iter_const: int = 0
    ancilla_const: int = 0

    def __post_init__(self):
        if self.coeff_bits_m is not None and self.coeff_bits_m < 1:
            raise ValidationError(f"coeff_bits_m must be >= 1, got {self.coeff_bits_m}")
        if self.qrom_k != "auto":
            k = self.qrom_k
            if not isinstance(k, int) or k < 1 or k & (k - 1):
                raise ValidationError(f"qrom_k must be 'auto' or a power of two >= 1, got {k!r}")
        if min(self.per_iter_linear_c, self.per_iter_const, self.ancilla_const) < 0:
            raise ValidationError("qubitization constants must be nonnegative")


def coefficient_bits(lambda_: float, epsilon: float) -> int:
    """Bits needed so coefficient rounding error stays below epsilon/10."""
    if lambda_ <= 0:
        return 1
    return max(1, math.ceil(math.log2(10.0 * lambda_ / epsilon)))


def qpe_iterations(lambda_: float, epsilon: float) -> int:
    """Walk-operator applications for energy resolution ``epsilon``."""
    if not epsilon > 0:
        raise ValidationError(f"epsilon must be > 0, got {epsilon}")
    if lambda_ < 0:
        raise ValidationError(f"lambda must be >= 0, got {lambda_}")
    return math.ceil(math.pi * lambda_ / (2.0 * epsilon))


def _qrom_cost(d: int, m: int, k: int) -> int:
    return -(-d // k) + m * (k - 1)


def select_qrom_k(d: int, m: int, qrom_k: int | str = "auto") -> int:
    if qrom_k != "auto":
        return int(qrom_k)
    # first minimum wins, so ties resolve to the smaller (cheaper in qubits) k
    return min((2**e for e in range(MAX_QROM_LOG2 + 1)), key=lambda k: _qrom_cost(d, m, k))


def _bits(model: QubitizationCostModel, lambda_: float, epsilon: float) -> int:
    if model.coeff_bits_m is not None:
        return model.coeff_bits_m
    return coefficient_bits(lambda_, epsilon)


def toffoli_per_iteration(d: int, n_orbitals: int, model: QubitizationCostModel, m: int | None = None) -> int:
    """Toffolis in one walk-operator iteration.

    ``m`` overrides the model's coefficient bits (used when the model derives
    them from lambda and epsilon).
    """
    if d < 0:
        raise ValidationError(f"d must be >= 0, got {d}")
    if m is None:
        m = model.coeff_bits_m if model.coeff_bits_m is not None else 1
    k = select_qrom_k(d, m, model.qrom_k)
    linear = math.ceil(model.per_iter_linear_c * n_orbitals)
    return _qrom_cost(d, m, k) + linear + model.per_iter_const


def qubitization_logical_qubits(d: int, n_orbitals: int, m: int, k: int, ancilla_const: int) -> int:
    """System register, term-index register, coefficient and QROM output registers."""
    index_bits = math.ceil(math.log2(max(d, 2)))
    return 2 * n_orbitals + index_bits + m + m * k + ancilla_const


def qubitization_cost(stats: HamiltonianStats, epsilon: float, model: QubitizationCostModel) -> AlgorithmCost:
    iterations = qpe_iterations(stats.lambda_, epsilon)
    m = _bits(model, stats.lambda_, epsilon)
    k = select_qrom_k(stats.n_terms, m, model.qrom_k)
    qubits = qubitization_logical_qubits(stats.n_terms, stats.n_orbitals, m, k, model.ancilla_const)
    if stats.n_terms == 0:
        return AlgorithmCost(QUBITIZATION, qubits)
    toffolis = iterations * toffoli_per_iteration(stats.n_terms, stats.n_orbitals, model, m=m)
    return AlgorithmCost(QUBITIZATION, qubits, toffoli_count=toffolis, logical_depth=toffolis)
