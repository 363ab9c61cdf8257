import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline

from qcadvantage.baselines import MACHINES, casci_runtime
from qcadvantage.errors import ValidationError
from qcadvantage.estimators import (
    RESOURCE_OUTPUTS,
    ClassicalRuntimeEstimator,
    PowerLawExtrapolator,
    QuantumResourceEstimator,
)
from qcadvantage.faulttolerance import estimate
from qcadvantage.qubitization import qubitization_cost


def test_quantum_estimator_matches_functional_api(cal):
    s = cal.cr2_sparse
    X = [[s.n_orbitals, s.n_electrons, s.n_terms, s.lambda_]]
    est = QuantumResourceEstimator(physical_error_rate=1e-3).fit(X)
    out = est.transform(X)
    ref = estimate(qubitization_cost(s, cal.epsilon, cal.qubitization), cal.surface_code.profile(1e-3), calibration=cal)
    assert out.shape == (1, len(RESOURCE_OUTPUTS))
    assert out[0, 1] == 1366
    assert out[0, 3] == ref.physical_qubits_total
    assert est.predict(X)[0] == pytest.approx(ref.wallclock)


def test_params_and_clone():
    est = QuantumResourceEstimator(method="trotterization", strategy="time_optimized")
    params = est.get_params()
    assert params["method"] == "trotterization" and params["physical_error_rate"] == 1e-3
    twin = clone(est).set_params(physical_error_rate=1e-6)
    assert twin.physical_error_rate == 1e-6 and est.physical_error_rate == 1e-3


def test_not_fitted():
    with pytest.raises(NotFittedError):
        QuantumResourceEstimator().transform([[4, 4, 10, 1.0]])
    with pytest.raises(NotFittedError):
        ClassicalRuntimeEstimator().predict([[4, 4]])


def test_input_validation():
    est = QuantumResourceEstimator().fit()
    with pytest.raises(ValidationError):
        est.transform([[4, 4, 10]])
    with pytest.raises(ValueError):
        est.transform([[4, 4, 10, np.nan]])
    with pytest.raises(ValidationError):
        QuantumResourceEstimator(method="vqe").fit()


def test_classical_estimator():
    X = np.array([[20, 20], [24, 24]])
    pred = ClassicalRuntimeEstimator(machine="hpc").fit().predict(X)
    assert pred[1] == pytest.approx(casci_runtime(24, 24, MACHINES["hpc"]))
    custom = ClassicalRuntimeEstimator(machine=1.25e17).fit().predict(X)
    assert np.allclose(pred, custom)
    with pytest.raises(ValidationError):
        ClassicalRuntimeEstimator(machine="abacus").fit()


def test_power_law_extrapolator():
    n = np.array([[4.0], [10.0], [20.0], [30.0]])
    y = np.column_stack([3 * n[:, 0] ** 4, 0.5 * n[:, 0] ** 2])
    y[0] = [1.0, 1.0]  # below min_n, ignored
    model = PowerLawExtrapolator().fit(n, y)
    assert model.exponent_ == pytest.approx([4.0, 2.0])
    assert model.predict([[40.0]])[0] == pytest.approx([3 * 40**4, 0.5 * 40**2])


def test_pipeline_composes():
    pipe = make_pipeline(QuantumResourceEstimator(method="trotterization"))
    out = pipe.fit_transform([[10, 10, 5000, 40.0], [12, 12, 10000, 60.0]])
    assert out.shape == (2, 5)
    assert out[1, -1] > out[0, -1]
