"""Surface-code and magic-state-factory overhead on top of a logical cost.

The model is deliberately coarse:

* a logical qubit at distance ``d`` occupies ``layout_factor * d**2``
  physical qubits (measure qubits included, routing neglected);
* a logical error per qubit per logical timestep of
  ``A * (p / p_th) ** ((d + 1) / 2)``;
* runtime is the slower of two limits: factories delivering non-Clifford
  states at a fixed spacetime cost per gate, and the logical clock stepping
  through ``logical_depth`` non-Clifford layers of ``d`` code cycles each.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import CodeDistanceOverflow, ValidationError
from .trotter import AlgorithmCost

__all__ = [
    "SPACE_OPTIMIZED",
    "TIME_OPTIMIZED",
    "STRATEGIES",
    "HardwareProfile",
    "FactoryModel",
    "ResourceEstimate",
    "code_distance",
    "physical_layout",
    "wallclock",
    "estimate",
]

SPACE_OPTIMIZED = "space_optimized"
TIME_OPTIMIZED = "time_optimized"
STRATEGIES = (SPACE_OPTIMIZED, TIME_OPTIMIZED)
GATE_KINDS = ("T", "Toffoli")


@dataclass(frozen=True)
class HardwareProfile:
    physical_error_rate: float
    cycle_time: float = 1e-6
    threshold: float = 1e-2
    logical_prefactor: float = 0.1

    def __post_init__(self):
        p, p_th = self.physical_error_rate, self.threshold
        if not 0 < p < p_th < 1:
            raise ValidationError(f"need 0 < p < p_th < 1, got p={p}, p_th={p_th}")
        if not self.cycle_time > 0:
            raise ValidationError(f"cycle_time must be > 0, got {self.cycle_time}")
        if not self.logical_prefactor > 0:
            raise ValidationError(f"logical_prefactor must be > 0, got {self.logical_prefactor}")

    def logical_error_rate(self, distance: int) -> float:
        """Failure probability of one logical qubit over one logical timestep."""
        ratio = self.physical_error_rate / self.threshold
        return self.logical_prefactor * ratio ** ((distance + 1) / 2)


@dataclass(frozen=True)
class FactoryModel:
    """Magic-state factories serving one algorithm.

    Attributes:
        gate_kind: ``"T"`` or ``"Toffoli"``.
        qubitseconds_per_gate: Spacetime spent by the factories per delivered gate.
        footprint: Physical qubits of one factory.
        n_factories: Factories running in parallel.
        strategy: Preset name the factory came from.
        pipeline_factor: Non-Clifford layers the layout can overlap; divides
            the logical-clock limit.
    """

    gate_kind: str
    qubitseconds_per_gate: float
    footprint: int
    n_factories: int = 1
    strategy: str = SPACE_OPTIMIZED
    pipeline_factor: float = 1.0

    def __post_init__(self):
        if self.gate_kind not in GATE_KINDS:
            raise ValidationError(f"gate_kind must be one of {GATE_KINDS}, got {self.gate_kind!r}")
        if not self.qubitseconds_per_gate > 0:
            raise ValidationError("qubitseconds_per_gate must be > 0")
        if self.footprint < 1 or self.n_factories < 1:
            raise ValidationError("footprint and n_factories must be >= 1")
        if not self.pipeline_factor >= 1:
            raise ValidationError("pipeline_factor must be >= 1")

    @property
    def total_qubits(self) -> int:
        return self.footprint * self.n_factories


@dataclass(frozen=True)
class ResourceEstimate:
    method: str
    strategy: str
    physical_error_rate: float
    code_distance: int
    logical_qubits: int
    non_clifford_count: int
    physical_qubits_data: int
    physical_qubits_factories: int
    wallclock: float
    spacetime_volume: float
    factory_spacetime: float

    @property
    def physical_qubits_total(self) -> int:
        return self.physical_qubits_data + self.physical_qubits_factories

    def to_record(self) -> dict:
        # leading columns are a fixed public schema; append new ones at the end
        return {
            "method": self.method,
            "strategy": self.strategy,
            "p": self.physical_error_rate,
            "code_distance": self.code_distance,
            "physical_qubits_total": self.physical_qubits_total,
            "wallclock_seconds": self.wallclock,
            "spacetime_qubitseconds": self.spacetime_volume,
            "physical_qubits_data": self.physical_qubits_data,
            "physical_qubits_factories": self.physical_qubits_factories,
            "logical_qubits": self.logical_qubits,
            "non_clifford_count": self.non_clifford_count,
            "factory_qubitseconds": self.factory_spacetime,
        }


def code_distance(
    n_logical: int,
    n_logical_timesteps: int,
    profile: HardwareProfile,
    failure_budget: float = 1e-2,
    d_max: int = 99,
) -> int:
    """Smallest odd distance >= 3 keeping the whole run under ``failure_budget``.

    Raises:
        CodeDistanceOverflow: If no distance up to ``d_max`` suffices.
    """
    if not 0 < failure_budget < 1:
        raise ValidationError(f"failure_budget must be in (0, 1), got {failure_budget}")
    if n_logical < 1:
        raise ValidationError(f"n_logical must be >= 1, got {n_logical}")
    volume = n_logical * max(n_logical_timesteps, 1)
    # relative slack so exact boundary cases are not lost to float rounding
    limit = failure_budget * (1 + 1e-12)
    for d in range(3, d_max + 1, 2):
        if volume * profile.logical_error_rate(d) <= limit:
            return d
    raise CodeDistanceOverflow(
        f"no code distance <= {d_max} reaches failure budget {failure_budget} "
        f"for {n_logical} logical qubits x {n_logical_timesteps} timesteps at p={profile.physical_error_rate}"
    )


def physical_layout(cost: AlgorithmCost, d: int, factory: FactoryModel | None, layout_factor: int = 2) -> tuple[int, int]:
    """Return ``(data_qubits, factory_qubits)``."""
    if d < 3 or d % 2 == 0:
        raise ValidationError(f"code distance must be odd and >= 3, got {d}")
    data = layout_factor * d * d * cost.logical_qubits
    return data, (factory.total_qubits if factory is not None else 0)


def factory_limited_time(cost: AlgorithmCost, factory: FactoryModel) -> float:
    return cost.non_clifford_count * factory.qubitseconds_per_gate / factory.total_qubits


def clock_limited_time(cost: AlgorithmCost, d: int, profile: HardwareProfile, pipeline_factor: float = 1.0) -> float:
    return cost.logical_depth * d * profile.cycle_time / pipeline_factor


def wallclock(cost: AlgorithmCost, factory: FactoryModel, d: int, profile: HardwareProfile) -> float:
    clock = clock_limited_time(cost, d, profile, factory.pipeline_factor)
    if cost.non_clifford_count == 0:
        return clock
    return max(factory_limited_time(cost, factory), clock)


def estimate(cost: AlgorithmCost, profile: HardwareProfile, strategy: str = SPACE_OPTIMIZED, calibration=None) -> ResourceEstimate:
    """Physical qubits and wallclock for ``cost`` on ``profile``.

    ``strategy`` picks the factory preset from ``calibration`` (the bundled
    calibration when ``None``).
    """
    if calibration is None:
        from .calibration import load_calibration

        calibration = load_calibration()
    if strategy not in STRATEGIES:
        raise ValidationError(f"strategy must be one of {STRATEGIES}, got {strategy!r}")
    sc = calibration.surface_code
    d = code_distance(cost.logical_qubits, cost.logical_depth, profile, sc.failure_budget, sc.d_max)
    factory = calibration.factories.build(cost.gate_kind, strategy, profile, d, sc.layout_factor)
    data, fact = physical_layout(cost, d, factory, sc.layout_factor)
    seconds = wallclock(cost, factory, d, profile)
    factory_st = cost.non_clifford_count * factory.qubitseconds_per_gate
    return ResourceEstimate(
        method=cost.method,
        strategy=strategy,
        physical_error_rate=profile.physical_error_rate,
        code_distance=d,
        logical_qubits=cost.logical_qubits,
        non_clifford_count=cost.non_clifford_count,
        physical_qubits_data=data,
        physical_qubits_factories=fact,
        wallclock=seconds,
        spacetime_volume=factory_st + data * seconds,
        factory_spacetime=factory_st,
    )
