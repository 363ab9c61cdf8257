import pytest
import yaml

from qcadvantage.calibration import (
    TABLE2,
    Assumptions,
    calibrate,
    calibration_from_dict,
    calibration_to_dict,
    dump_calibration,
    load_calibration,
    logical_qubits_table2,
    table2_estimates,
)
from qcadvantage.faulttolerance import HardwareProfile


@pytest.fixture(scope="module")
def fresh():
    return calibrate()


def test_bundled_file_is_what_calibrate_produces(cal, fresh):
    a, b = calibration_to_dict(cal), calibration_to_dict(fresh)
    assert a["qubitization"] == b["qubitization"]
    assert a["trotter"]["trotter_r0"] == pytest.approx(b["trotter"]["trotter_r0"], rel=1e-6)
    for (_, e1), (_, e2) in zip(table2_estimates(cal), table2_estimates(fresh)):
        assert e1.code_distance == e2.code_distance
        assert e1.wallclock == pytest.approx(e2.wallclock, rel=1e-6)


def test_dump_load_round_trip(cal, tmp_path):
    path = tmp_path / "cal.yaml"
    text = dump_calibration(cal, path)
    assert text.startswith("# Calibrated constants")
    back = load_calibration(path)
    assert calibration_to_dict(back) == calibration_to_dict(cal)
    assert calibration_from_dict(yaml.safe_load(text)) == back


def test_reference_factory_constants(cal):
    p = cal.assumptions.reference_error_rate
    assert cal.factories.qubitseconds_per_gate("T", p) == 14.0
    assert cal.factories.qubitseconds_per_gate("Toffoli", p) == 24.0


def test_qubitseconds_interpolation_is_log_linear(cal):
    lo = cal.factories.qubitseconds_per_gate("T", 1e-6)
    hi = cal.factories.qubitseconds_per_gate("T", 1e-3)
    mid = cal.factories.qubitseconds_per_gate("T", 10**-4.5)
    assert mid == pytest.approx((lo * hi) ** 0.5)


def test_factory_build_scales_with_distance(cal):
    f3 = cal.factories.build("T", "space_optimized", HardwareProfile(1e-3), 3)
    f9 = cal.factories.build("T", "space_optimized", HardwareProfile(1e-3), 9)
    assert f9.footprint == pytest.approx(9 * f3.footprint, rel=0.05)


def test_exact_logical_qubits(cal):
    assert logical_qubits_table2(cal) == {"trotterization": 53, "qubitization": 1366}


def test_residuals_recorded(cal):
    assert len(cal.fit_residuals) == len(TABLE2)
    for res in cal.fit_residuals.values():
        assert abs(res["qubits_log10"]) < 0.3
        assert abs(res["runtime_log10"]) < 0.47


def test_calibration_is_deterministic(fresh):
    assert calibration_to_dict(calibrate()) == calibration_to_dict(fresh)


def test_alternative_assumptions_still_pin_1366():
    cal = calibrate(Assumptions(dense_fraction=0.4, per_iter_linear_c=4.0))
    assert logical_qubits_table2(cal)["qubitization"] == 1366


def test_anchor_lookup(cal):
    assert cal.anchor(26).n_terms == cal.cr2_sparse.n_terms
    assert cal.anchor(26, sparse=False).lambda_ == cal.cr2_dense.lambda_
    assert cal.abp.n_orbitals == 1569 and cal.abp.n_electrons == 90
