"""Run configuration: a YAML tree where every key is optional.

An empty file (or no file) reproduces the calibrated defaults. Unknown keys
are rejected so that typos do not silently fall back to defaults.

Example::

    epsilon: 0.0016
    error_rates: [1.0e-3, 1.0e-6]
    strategies: [space_optimized, time_optimized]
    machines: {desktop: 1.2e12, hpc: 1.25e17}
    input: {fcidump: h2.fcidump}      # or {summary: {n_orbitals: ..., ...}}
    sweep: {range: [8, 40]}
    output: {dir: results, format: both}
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field, replace
from os import PathLike

import yaml

from .baselines import MACHINES, ClassicalMachine, VqeConfig
from .calibration import Calibration, load_calibration
from .errors import ValidationError
from .faulttolerance import STRATEGIES
from .trotter import QUBITIZATION, TROTTERIZATION

__all__ = ["OUTPUT_DIR_ENV", "OUTPUT_FORMATS", "RunConfig", "load_config"]

OUTPUT_DIR_ENV = "QCADVANTAGE_OUTPUT_DIR"
OUTPUT_FORMATS = ("csv", "json", "both")
METHODS = (TROTTERIZATION, QUBITIZATION)

_TOP_KEYS = {
    "epsilon", "threshold", "methods", "error_rates", "strategies", "machines",
    "trotter", "qubitization", "vqe", "sweep", "input", "output", "calibration",
}


@dataclass(frozen=True)
class RunConfig:
    """Resolved settings for one CLI invocation.

    Attributes:
        epsilon: Target energy error in Hartree; ``None`` uses the calibration's.
        threshold: Truncation threshold applied to parsed FCIDUMP input for
            the sparse (qubitization) Hamiltonian.
        methods: Quantum algorithms to estimate.
        error_rates: Physical error rates, one hardware profile each.
        strategies: Factory presets.
        machines: Classical baselines.
        trotter: Overrides for the calibrated Trotter model constants.
        qubitization: Overrides for the calibrated qubitization constants.
        vqe: Overrides for the VQE model, plus ``ansatz``.
        sweep_range: Inclusive ``(first, last)`` active-space sizes.
        sweep_corpus: ``"none"``, ``"bundled"`` or a mapping N -> FCIDUMP path.
        workers: Threads used by the sweep; 1 is sequential.
        fcidump: Input Hamiltonian file for ``estimate``.
        summary: Input statistics for ``estimate`` (``n_orbitals``,
            ``n_electrons``, ``n_terms``, ``lambda``).
        output_dir: Report directory (overridden by ``--output`` and the
            ``QCADVANTAGE_OUTPUT_DIR`` environment variable).
        output_format: ``csv``, ``json`` or ``both``.
        calibration_path: Alternative calibration file.
    """

    epsilon: float | None = None
    threshold: float = 1e-5
    methods: tuple = METHODS
    error_rates: tuple = (1e-3, 1e-6)
    strategies: tuple = STRATEGIES
    machines: tuple = (MACHINES["desktop"], MACHINES["hpc"])
    trotter: dict = field(default_factory=dict)
    qubitization: dict = field(default_factory=dict)
    vqe: dict = field(default_factory=dict)
    sweep_range: tuple = (8, 40)
    sweep_corpus: object = "none"
    workers: int = 1
    fcidump: str | None = None
    summary: dict | None = None
    output_dir: str = "results"
    output_format: str = "both"
    calibration_path: str | None = None

    def __post_init__(self):
        if self.epsilon is not None and not self.epsilon > 0:
            raise ValidationError(f"epsilon must be > 0, got {self.epsilon}")
        if not self.threshold >= 0:
            raise ValidationError(f"threshold must be >= 0, got {self.threshold}")
        if not self.methods or any(m not in METHODS for m in self.methods):
            raise ValidationError(f"methods must be a nonempty subset of {METHODS}")
        if not self.strategies or any(s not in STRATEGIES for s in self.strategies):
            raise ValidationError(f"strategies must be a nonempty subset of {STRATEGIES}")
        if not self.error_rates:
            raise ValidationError("at least one physical error rate is required")
        if not self.machines:
            raise ValidationError("at least one classical machine is required")
        a, b = self.sweep_range
        if not 1 <= a <= b:
            raise ValidationError(f"sweep range must satisfy 1 <= first <= last, got {a}:{b}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ValidationError(f"output format must be one of {OUTPUT_FORMATS}")
        if self.workers < 1:
            raise ValidationError(f"workers must be >= 1, got {self.workers}")
        if self.fcidump is not None and self.summary is not None:
            raise ValidationError("input takes either fcidump or summary, not both")

    @classmethod
    def from_dict(cls, doc: dict | None) -> "RunConfig":
        doc = dict(doc or {})
        unknown = set(doc) - _TOP_KEYS
        if unknown:
            raise ValidationError(f"unknown config keys: {sorted(unknown)}")
        kw = {}
        for key in ("epsilon", "threshold"):
            if doc.get(key) is not None:
                kw[key] = float(doc[key])
        for key in ("methods", "strategies"):
            if key in doc:
                kw[key] = tuple(doc[key])
        if "error_rates" in doc:
            kw["error_rates"] = tuple(float(p) for p in doc["error_rates"])
        if "machines" in doc:
            kw["machines"] = tuple(ClassicalMachine(str(k), float(v)) for k, v in doc["machines"].items())
        for key in ("trotter", "qubitization", "vqe"):
            if key in doc:
                kw[key] = dict(doc[key] or {})
        sweep = dict(doc.get("sweep") or {})
        if "range" in sweep:
            first, last = sweep["range"]
            kw["sweep_range"] = (int(first), int(last))
        if "corpus" in sweep:
            kw["sweep_corpus"] = sweep["corpus"]
        if "workers" in sweep:
            kw["workers"] = int(sweep["workers"])
        inp = dict(doc.get("input") or {})
        if "fcidump" in inp:
            kw["fcidump"] = str(inp["fcidump"])
        if "summary" in inp:
            kw["summary"] = dict(inp["summary"])
        out = dict(doc.get("output") or {})
        if "dir" in out:
            kw["output_dir"] = str(out["dir"])
        if "format" in out:
            kw["output_format"] = str(out["format"])
        if doc.get("calibration") is not None:
            kw["calibration_path"] = str(doc["calibration"])
        return cls(**kw)

    def with_overrides(self, **kw) -> "RunConfig":
        return replace(self, **{k: v for k, v in kw.items() if v is not None})

    def resolved_output_dir(self, cli_value: str | None = None) -> str:
        """``--output`` wins, then the environment variable, then the config."""
        if cli_value:
            return cli_value
        return os.environ.get(OUTPUT_DIR_ENV) or self.output_dir

    def calibration(self) -> Calibration:
        """The calibration with this config's model overrides applied."""
        cal = load_calibration(self.calibration_path)
        try:
            trotter = replace(cal.trotter, **self.trotter)
            qub = replace(cal.qubitization, **self.qubitization)
        except TypeError as exc:
            raise ValidationError(f"unknown model constant: {exc}") from None
        cal = replace(cal, trotter=trotter, qubitization=qub)
        if self.epsilon is not None:
            cal = replace(cal, epsilon=self.epsilon)
        return cal

    def vqe_config(self, cal: Calibration) -> VqeConfig:
        try:
            return replace(cal.vqe, **self.vqe)
        except TypeError as exc:
            raise ValidationError(f"unknown vqe setting: {exc}") from None


def load_config(path: str | PathLike | None) -> RunConfig:
    """Read a YAML config; ``None`` gives the defaults."""
    if path is None:
        return RunConfig()
    with open(path) as fh:
        doc = yaml.safe_load(fh)
    if doc is not None and not isinstance(doc, dict):
        raise ValidationError(f"{path}: config must be a mapping")
    return RunConfig.from_dict(doc)


def parse_range(text: str) -> tuple[int, int]:
    """``"A:B"`` (inclusive) or a single ``"A"``."""
    parts = text.split(":")
    try:
        if len(parts) == 1:
            a = b = int(parts[0])
        elif len(parts) == 2:
            a, b = int(parts[0]), int(parts[1])
        else:
            raise ValueError
    except ValueError:
        raise ValidationError(f"range must look like A:B, got {text!r}") from None
    if not 1 <= a <= b:
        raise ValidationError(f"range must satisfy 1 <= A <= B, got {text!r}")
    return a, b


def finite_or_inf(x: float) -> float | str:
    """JSON-safe float: infinities become strings."""
    return x if math.isfinite(x) else ("inf" if x > 0 else "-inf")
