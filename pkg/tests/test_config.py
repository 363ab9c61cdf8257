import pytest

from qcadvantage.baselines import MACHINES
from qcadvantage.config import RunConfig, load_config, parse_range
from qcadvantage.errors import ValidationError


def test_empty_config_is_default(tmp_path):
    empty = tmp_path / "empty.yaml"
    empty.write_text("")
    assert load_config(empty) == RunConfig()
    assert load_config(None) == RunConfig()
    assert RunConfig.from_dict({}) == RunConfig()


def test_defaults(cal):
    cfg = RunConfig()
    assert cfg.machines == (MACHINES["desktop"], MACHINES["hpc"])
    assert cfg.sweep_range == (8, 40)
    assert cfg.calibration() == cal
    assert cfg.vqe_config(cal) == cal.vqe


def test_full_config(tmp_path):
    path = tmp_path / "run.yaml"
    path.write_text(
        """
epsilon: 1.0e-3
threshold: 1.0e-6
methods: [qubitization]
error_rates: [1.0e-4]
strategies: [time_optimized]
machines: {laptop: 1.0e11}
trotter: {synthesis_a: 1.0}
qubitization: {per_iter_const: 5}
vqe: {ansatz: puccd, parallel_factor: 1}
sweep: {range: [10, 12], workers: 3}
output: {dir: out, format: json}
"""
    )
    cfg = load_config(path)
    assert cfg.epsilon == 1e-3 and cfg.threshold == 1e-6
    assert cfg.machines[0].name == "laptop"
    assert cfg.sweep_range == (10, 12) and cfg.workers == 3
    cal = cfg.calibration()
    assert cal.epsilon == 1e-3
    assert cal.trotter.synthesis_a == 1.0
    assert cal.qubitization.per_iter_const == 5
    vqe = cfg.vqe_config(cal)
    assert vqe.ansatz == "puccd" and vqe.parallel_factor == 1


@pytest.mark.parametrize(
    "doc",
    [
        {"epsilon": 0},
        {"methods": []},
        {"methods": ["vqe"]},
        {"strategies": ["fast"]},
        {"machines": {}},
        {"output": {"format": "xml"}},
        {"unknown_key": 1},
        {"sweep": {"range": [5, 2]}},
        {"input": {"fcidump": "x", "summary": {}}},
    ],
)
def test_invalid_configs(doc):
    with pytest.raises(ValidationError):
        RunConfig.from_dict(doc)


def test_unknown_model_constant():
    with pytest.raises(ValidationError):
        RunConfig.from_dict({"trotter": {"nope": 1}}).calibration()


def test_parse_range():
    assert parse_range("8:40") == (8, 40)
    assert parse_range("12") == (12, 12)
    for bad in ("a:b", "1:2:3", "0:4", "5:4"):
        with pytest.raises(ValidationError):
            parse_range(bad)


def test_output_dir_precedence(monkeypatch):
    cfg = RunConfig(output_dir="cfgdir")
    monkeypatch.delenv("QCADVANTAGE_OUTPUT_DIR", raising=False)
    assert cfg.resolved_output_dir() == "cfgdir"
    monkeypatch.setenv("QCADVANTAGE_OUTPUT_DIR", "envdir")
    assert cfg.resolved_output_dir() == "envdir"
    assert cfg.resolved_output_dir("flagdir") == "flagdir"
