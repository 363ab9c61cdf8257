import math

import pytest

from qcadvantage.baselines import (
    MACHINES,
    ClassicalMachine,
    VqeConfig,
    ansatz_depth,
    casci_runtime,
    determinant_count,
    vqe_iteration_time,
    vqe_shots,
)
from qcadvantage.errors import ValidationError
from qcadvantage.hamio import stats_from_summary
from qcadvantage.units import HOUR, YEAR


def enumerate_determinants(n, eta):
    n_alpha, n_beta = (eta + 1) // 2, eta // 2
    strings = range(2**n)
    alpha = [s for s in strings if bin(s).count("1") == n_alpha]
    beta = [s for s in strings if bin(s).count("1") == n_beta]
    return sum(1 for _ in alpha for _ in beta)


def test_determinant_anchors():
    assert determinant_count(22, 22) == 705432**2
    assert determinant_count(24, 24) == 2704156**2
    assert abs(determinant_count(22, 22) / 5.0e11 - 1) < 0.01
    assert abs(determinant_count(24, 24) / 7.3e12 - 1) < 0.01
    assert determinant_count(2, 2) == 4


def test_twenty_twenty_discrepancy_is_kept():
    # the quoted ~4.2e9 for (20,20) is not what the unrestricted formula gives
    assert determinant_count(20, 20) == math.comb(20, 10) ** 2
    assert determinant_count(20, 20) > 3e10


def test_determinant_enumeration_small():
    for n in range(1, 7):
        for eta in range(0, 2 * n + 1):
            assert determinant_count(n, eta) == enumerate_determinants(n, eta)


def test_particle_hole_symmetry():
    for n in range(1, 15):
        for eta in range(0, 2 * n + 1):
            assert determinant_count(n, eta) == determinant_count(n, 2 * n - eta)


def test_determinant_count_validation():
    with pytest.raises(ValidationError):
        determinant_count(3, 7)


def test_casci_runtime():
    desktop, hpc = MACHINES["desktop"], MACHINES["hpc"]
    assert casci_runtime(5, 0, desktop) == pytest.approx(10 * 5**4 / 1.2e12)
    assert casci_runtime(24, 24, desktop) == pytest.approx(10 * 2704156**2 * 24**4 / 1.2e12)
    assert casci_runtime(24, 24, desktop) == pytest.approx(2.0e7, rel=0.05)
    for n in (6, 14, 30):
        ratio = casci_runtime(n, n, desktop) / casci_runtime(n, n, hpc)
        assert ratio == pytest.approx(1.25e17 / 1.2e12)
        assert ratio == pytest.approx(1.04e5, rel=0.01)


def test_casci_linear_in_iterations_and_flops():
    m = ClassicalMachine("x", 1e9)
    assert casci_runtime(8, 8, m, n_iterations=20) == pytest.approx(2 * casci_runtime(8, 8, m))
    assert casci_runtime(8, 8, ClassicalMachine("y", 2e9)) == pytest.approx(casci_runtime(8, 8, m) / 2)


def test_machine_validation():
    with pytest.raises(ValidationError):
        ClassicalMachine("bad", 0)


def test_vqe_zero_lambda():
    assert vqe_iteration_time(stats_from_summary(4, 4, 0, 0.0), VqeConfig(), 1e-3) == 0.0


def test_vqe_hand_computed():
    cfg = VqeConfig(parallel_factor=2, shot_grouping_factor=100)
    stats = stats_from_summary(10, 10, 100, 3.0)
    shots = math.ceil((3.0 / 1e-2) ** 2 / 100)
    assert vqe_shots(3.0, 1e-2, 100) == shots
    assert vqe_iteration_time(stats, cfg, 1e-2) == pytest.approx(shots * (10 * 1e-7 + 1e-6) / 2)


def test_vqe_inverse_square_scaling():
    stats = stats_from_summary(26, 26, 10**5, 1000.0)
    for eps in (1e-2, 1.6e-3, 1e-4):
        ratio = vqe_iteration_time(stats, VqeConfig(), eps / 2) / vqe_iteration_time(stats, VqeConfig(), eps)
        assert 3.9 <= ratio <= 4.1


def test_ansatz_depths():
    assert ansatz_depth("linear_depth", 26) == 26
    assert ansatz_depth("puccd", 10) == 20
    assert ansatz_depth("k_upccgsd", 10, {"k_upccgsd": (1.0, 0.0, 2.0)}) == 201


def test_vqe_bands(cal):
    cr2 = vqe_iteration_time(cal.cr2_dense, cal.vqe, cal.epsilon)
    assert 0.1 * HOUR <= cr2 <= 10 * HOUR
    abp = vqe_iteration_time(cal.abp, VqeConfig(ansatz="puccd"), cal.epsilon)
    assert abp >= 100 * YEAR


def test_vqe_config_validation():
    with pytest.raises(ValidationError):
        VqeConfig(ansatz="uccsd")
    with pytest.raises(ValidationError):
        VqeConfig(parallel_factor=0)
    with pytest.raises(ValidationError):
        VqeConfig(two_qubit_gate_time=0)
    with pytest.raises(ValidationError):
        vqe_shots(1.0, 0.0)
