"""scikit-learn style wrappers around the cost models.

Rows of ``X`` describe Hamiltonians as ``[n_orbitals, n_electrons, n_terms,
lambda]`` (or ``[n_orbitals, n_electrons]`` for the classical baseline). The
wrappers validate input with :func:`sklearn.utils.check_array`, expose
hyperparameters through ``get_params``/``set_params`` and compose in
pipelines; ``fit`` only resolves the calibration, since the cost models are
closed-form.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, RegressorMixin, TransformerMixin
from sklearn.utils import check_array
from sklearn.utils.validation import check_is_fitted

from .baselines import MACHINES, ClassicalMachine, casci_runtime
from .calibration import load_calibration
from .crossover import fit_power_law
from .errors import ValidationError
from .faulttolerance import SPACE_OPTIMIZED, estimate
from .hamio import HamiltonianStats, stats_from_summary
from .qubitization import qubitization_cost
from .trotter import QUBITIZATION, TROTTERIZATION, trotter_t_count

__all__ = [
    "RESOURCE_OUTPUTS",
    "rows_to_stats",
    "QuantumResourceEstimator",
    "ClassicalRuntimeEstimator",
    "PowerLawExtrapolator",
]

RESOURCE_OUTPUTS = (
    "code_distance",
    "logical_qubits",
    "non_clifford_count",
    "physical_qubits_total",
    "wallclock_seconds",
)


def rows_to_stats(X) -> list[HamiltonianStats]:
    """Validate a ``(n_samples, 4)`` array and turn each row into summary stats."""
    X = check_array(X, dtype=np.float64)
    if X.shape[1] != 4:
        raise ValidationError(f"expected 4 columns (n_orbitals, n_electrons, n_terms, lambda), got {X.shape[1]}")
    return [stats_from_summary(int(n), int(eta), int(d), float(lam)) for n, eta, d, lam in X]


class QuantumResourceEstimator(TransformerMixin, BaseEstimator):
    """Map Hamiltonian statistics to fault-tolerant resources.

    Parameters:
        method: ``"trotterization"`` or ``"qubitization"``.
        strategy: Factory preset.
        physical_error_rate: Hardware error rate p.
        epsilon: Energy error; ``None`` uses the calibration's.
        calibration_path: Alternative calibration file.

    ``transform`` returns one row per sample with the columns of
    ``RESOURCE_OUTPUTS``; ``predict`` returns the wallclock column alone.
    """

    def __init__(self, method=QUBITIZATION, strategy=SPACE_OPTIMIZED, physical_error_rate=1e-3, epsilon=None, calibration_path=None):
        self.method = method
        self.strategy = strategy
        self.physical_error_rate = physical_error_rate
        self.epsilon = epsilon
        self.calibration_path = calibration_path

    def fit(self, X=None, y=None):
        if self.method not in (TROTTERIZATION, QUBITIZATION):
            raise ValidationError(f"unknown method {self.method!r}")
        if X is not None:
            rows_to_stats(X)
        self.calibration_ = load_calibration(self.calibration_path)
        self.epsilon_ = self.calibration_.epsilon if self.epsilon is None else float(self.epsilon)
        self.profile_ = self.calibration_.surface_code.profile(self.physical_error_rate)
        return self

    def _estimate(self, stats: HamiltonianStats):
        cal = self.calibration_
        if self.method == TROTTERIZATION:
            cost = trotter_t_count(stats, self.epsilon_, cal.trotter)
        else:
            cost = qubitization_cost(stats, self.epsilon_, cal.qubitization)
        return estimate(cost, self.profile_, self.strategy, cal)

    def transform(self, X):
        check_is_fitted(self, "calibration_")
        out = []
        for stats in rows_to_stats(X):
            e = self._estimate(stats)
            out.append([e.code_distance, e.logical_qubits, e.non_clifford_count, e.physical_qubits_total, e.wallclock])
        return np.asarray(out, dtype=np.float64).reshape(-1, len(RESOURCE_OUTPUTS))

    def predict(self, X):
        return self.transform(X)[:, -1]

    def get_feature_names_out(self, input_features=None):
        return np.asarray(RESOURCE_OUTPUTS, dtype=object)


class ClassicalRuntimeEstimator(RegressorMixin, BaseEstimator):
    """CASCI wallclock for rows ``[n_orbitals, n_electrons]``.

    Parameters:
        machine: Name in ``MACHINES`` or a FLOP rate.
        n_iterations: Davidson iterations.
        flop_coefficient: Prefactor of ``D * N**4``.
    """

    def __init__(self, machine="desktop", n_iterations=10, flop_coefficient=1.0):
        self.machine = machine
        self.n_iterations = n_iterations
        self.flop_coefficient = flop_coefficient

    def fit(self, X=None, y=None):
        if isinstance(self.machine, str):
            if self.machine not in MACHINES:
                raise ValidationError(f"unknown machine {self.machine!r}; known: {sorted(MACHINES)}")
            self.machine_ = MACHINES[self.machine]
        else:
            self.machine_ = ClassicalMachine("custom", float(self.machine))
        return self

    def predict(self, X):
        check_is_fitted(self, "machine_")
        X = check_array(X, dtype=np.int64)
        if X.shape[1] != 2:
            raise ValidationError(f"expected 2 columns (n_orbitals, n_electrons), got {X.shape[1]}")
        return np.asarray(
            [casci_runtime(int(n), int(eta), self.machine_, self.n_iterations, self.flop_coefficient) for n, eta in X]
        )


class PowerLawExtrapolator(RegressorMixin, BaseEstimator):
    """Fit ``y = a * N**b`` per target column in log-log space.

    ``X`` is a single column of sizes N; ``y`` has one column per quantity
    (e.g. n_terms and lambda). Rows with ``N < min_n`` are dropped when at
    least two distinct sizes remain.
    """

    def __init__(self, min_n=8):
        self.min_n = min_n

    def fit(self, X, y):
        X = check_array(X, dtype=np.float64)
        y = np.asarray(y, dtype=np.float64)
        if y.ndim == 1:
            y = y[:, None]
        if X.shape[1] != 1 or len(y) != len(X):
            raise ValidationError("X must be one column of sizes with one target row each")
        n = X[:, 0]
        keep = n >= self.min_n
        if len(set(n[keep])) >= 2:
            n, y = n[keep], y[keep]
        params = [fit_power_law(list(n), list(y[:, j])) for j in range(y.shape[1])]
        self.coef_ = np.array([a for a, _ in params])
        self.exponent_ = np.array([b for _, b in params])
        return self

    def predict(self, X):
        check_is_fitted(self, "exponent_")
        X = check_array(X, dtype=np.float64)
        return self.coef_[None, :] * X[:, :1] ** self.exponent_[None, :]
