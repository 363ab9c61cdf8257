"""Active-space sweeps and quantum-vs-classical crossover detection."""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .baselines import MACHINES, VqeConfig, casci_runtime, vqe_iteration_time
from .calibration import Calibration, load_calibration
from .errors import ValidationError
from .faulttolerance import SPACE_OPTIMIZED, ResourceEstimate, estimate
from .hamio import HamiltonianStats, max_expanded_terms, read_fcidump, sparsify, stats_from_summary
from .qubitization import qubitization_cost
from .trotter import QUBITIZATION, TROTTERIZATION, trotter_t_count

__all__ = [
    "SweepConfig",
    "SweepPoint",
    "CrossoverEntry",
    "CrossoverReport",
    "extrapolate_stats",
    "fit_power_law",
    "run_sweep",
    "find_crossover",
    "plot_curves",
    "sweep_rows",
]

MIN_FIT_ORBITALS = 8


def fit_power_law(n: list[float], y: list[float]) -> tuple[float, float]:
    """Least-squares fit of ``y = a * n**b`` in log-log space; returns ``(a, b)``."""
    if len(n) < 2 or len(set(n)) < 2:
        raise ValidationError("power-law fit needs at least two distinct sizes")
    if min(n) <= 0 or min(y) <= 0:
        raise ValidationError("power-law fit needs positive values")
    slope, intercept = np.polyfit(np.log(n), np.log(y), 1)
    return float(math.exp(intercept)), float(slope)


def extrapolate_stats(anchor_points: list[HamiltonianStats], target_n: int, n_electrons: int | None = None) -> HamiltonianStats:
    """Power-law extension of n_terms(N) and lambda(N) to ``target_n``.

    Anchors below 8 orbitals are ignored when enough larger ones exist.
    """
    anchors = list(anchor_points)
    if len({a.n_orbitals for a in anchors}) < 2:
        raise ValidationError("extrapolation needs at least two anchors with distinct N")
    large = [a for a in anchors if a.n_orbitals >= MIN_FIT_ORBITALS]
    if len({a.n_orbitals for a in large}) >= 2:
        anchors = large
    if any(a.n_terms <= 0 or a.lambda_ <= 0 for a in anchors):
        raise ValidationError("anchor n_terms and lambda must be positive")
    ns = [a.n_orbitals for a in anchors]
    a_d, b_d = fit_power_law(ns, [a.n_terms for a in anchors])
    a_l, b_l = fit_power_law(ns, [a.lambda_ for a in anchors])
    d = min(max_expanded_terms(target_n), max(1, round(a_d * target_n**b_d)))
    eta = target_n if n_electrons is None else n_electrons
    return stats_from_summary(target_n, min(eta, 2 * target_n), d, a_l * target_n**b_l)


@dataclass(frozen=True)
class SweepConfig:
    """What to evaluate at every active-space size.

    ``corpus`` maps N to an FCIDUMP path used instead of extrapolation; the
    sparse (qubitization) input is truncated at ``threshold``, the dense
    (Trotterization, VQE) input keeps every nonzero coefficient.
    """

    epsilon: float | None = None
    methods: tuple = (TROTTERIZATION, QUBITIZATION)
    strategies: tuple = (SPACE_OPTIMIZED,)
    error_rates: tuple = (1e-3,)
    machines: tuple = (MACHINES["desktop"], MACHINES["hpc"])
    vqe: VqeConfig | None = None
    threshold: float = 1e-5
    corpus: dict = field(default_factory=dict)
    workers: int | None = None


@dataclass
class SweepPoint:
    n_orbitals: int
    n_electrons: int
    stats: HamiltonianStats | None
    dense_stats: HamiltonianStats | None
    extrapolated: bool
    estimates: list = field(default_factory=list)
    classical_seconds: dict = field(default_factory=dict)
    vqe_seconds: float | None = None
    errors: list = field(default_factory=list)

    def estimate_for(self, method: str, strategy: str, p: float) -> ResourceEstimate | None:
        for e in self.estimates:
            if e.method == method and e.strategy == strategy and e.physical_error_rate == p:
                return e
        return None


def _point_stats(n: int, cfg: SweepConfig, cal: Calibration):
    if n in cfg.corpus:
        h = read_fcidump(cfg.corpus[n])
        return sparsify(h, cfg.threshold), sparsify(h, 0.0), False
    sparse = extrapolate_stats(cal.sparse_anchors, n, n_electrons=n)
    dense = extrapolate_stats(cal.dense_anchors, n, n_electrons=n)
    return sparse, dense, True


def _evaluate(n: int, cfg: SweepConfig, cal: Calibration) -> SweepPoint:
    eps = cfg.epsilon if cfg.epsilon is not None else cal.epsilon
    try:
        sparse, dense, extrapolated = _point_stats(n, cfg, cal)
    except Exception as exc:  # recorded per point so the sweep completes
        return SweepPoint(n, n, None, None, True, errors=[f"stats: {exc}"])
    point = SweepPoint(n, dense.n_electrons, sparse, dense, extrapolated)
    for method in cfg.methods:
        try:
            if method == TROTTERIZATION:
                cost = trotter_t_count(dense, eps, cal.trotter)
            else:
                cost = qubitization_cost(sparse, eps, cal.qubitization)
        except Exception as exc:
            point.errors.append(f"{method}: {exc}")
            continue
        for p in cfg.error_rates:
            profile = cal.surface_code.profile(p)
            for strategy in cfg.strategies:
                try:
                    point.estimates.append(estimate(cost, profile, strategy, cal))
                except Exception as exc:
                    point.errors.append(f"{method}/{strategy}/p={p:g}: {exc}")
    for machine in cfg.machines:
        point.classical_seconds[machine.name] = casci_runtime(
            n, point.n_electrons, machine, cal.classical["n_iterations"], cal.classical["flop_coefficient"]
        )
    if cfg.vqe is not None:
        point.vqe_seconds = vqe_iteration_time(dense, cfg.vqe, eps)
    return point


def run_sweep(n_range, config: SweepConfig | None = None, calibration: Calibration | None = None) -> list[SweepPoint]:
    """Evaluate every method, strategy, error rate and machine for each N in ``n_range``.

    Points are independent and may be evaluated on ``config.workers``
    threads; the result is always ordered by N.
    """
    cfg = config or SweepConfig()
    cal = calibration or load_calibration()
    sizes = sorted(set(int(n) for n in n_range))
    if any(n < 1 for n in sizes):
        raise ValidationError("active-space sizes must be >= 1")
    if cfg.workers and cfg.workers > 1:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            return list(pool.map(lambda n: _evaluate(n, cfg, cal), sizes))
    return [_evaluate(n, cfg, cal) for n in sizes]


@dataclass(frozen=True)
class CrossoverEntry:
    method: str
    strategy: str
    physical_error_rate: float
    machine: str
    crossover_n: int | None
    quantum_seconds: float | None
    classical_seconds: float | None
    physical_qubits: int | None

    @property
    def crossover_runtime(self) -> float | None:
        return self.quantum_seconds

    def to_record(self) -> dict:
        return {
            "method": self.method,
            "strategy": self.strategy,
            "p": self.physical_error_rate,
            "machine": self.machine,
            "crossover_n": self.crossover_n if self.crossover_n is not None else "none in range",
            "quantum_seconds": self.quantum_seconds,
            "classical_seconds": self.classical_seconds,
            "physical_qubits_total": self.physical_qubits,
        }


@dataclass
class CrossoverReport:
    entries: list
    warnings: list
    points: list

    def entry(self, method: str, machine: str, strategy: str = SPACE_OPTIMIZED, p: float = 1e-3) -> CrossoverEntry:
        for e in self.entries:
            if (e.method, e.machine, e.strategy, e.physical_error_rate) == (method, machine, strategy, p):
                return e
        raise KeyError((method, machine, strategy, p))


def _monotone(values: list[float]) -> bool:
    return all(b >= a for a, b in zip(values, values[1:]))


def find_crossover(points: list[SweepPoint]) -> CrossoverReport:
    """Smallest N at which each quantum curve beats each classical curve."""
    ns = [p.n_orbitals for p in points]
    if ns != sorted(ns):
        raise ValidationError("sweep points must be sorted by N")
    warnings = []
    machines = sorted({m for p in points for m in p.classical_seconds})
    curves = sorted({(e.method, e.strategy, e.physical_error_rate) for p in points for e in p.estimates})
    for m in machines:
        if not _monotone([p.classical_seconds[m] for p in points if m in p.classical_seconds]):
            warnings.append(f"classical curve '{m}' is not monotone in N")
    entries = []
    for method, strategy, rate in curves:
        quantum = [(p, p.estimate_for(method, strategy, rate)) for p in points]
        if not _monotone([e.wallclock for _, e in quantum if e is not None]):
            warnings.append(f"quantum curve {method}/{strategy}/p={rate:g} is not monotone in N")
        for m in machines:
            hit = None
            for p, e in quantum:
                if e is not None and m in p.classical_seconds and e.wallclock < p.classical_seconds[m]:
                    hit = (p, e)
                    break
            if hit is None:
                entries.append(CrossoverEntry(method, strategy, rate, m, None, None, None, None))
            else:
                p, e = hit
                entries.append(
                    CrossoverEntry(method, strategy, rate, m, p.n_orbitals, e.wallclock, p.classical_seconds[m], e.physical_qubits_total)
                )
    return CrossoverReport(entries, warnings, list(points))


def curve_name(method: str, strategy: str, p: float) -> str:
    return f"{method}_{strategy}_p{p:g}"


def plot_curves(points: list[SweepPoint]) -> dict:
    """Per-curve ``[(N, value), ...]`` series; one row per sweep point.

    Wallclock curves are keyed ``seconds/<curve>`` and physical-qubit curves
    ``qubits/<curve>``. Failed evaluations appear as ``None`` so every curve
    has exactly one row per N.
    """
    curves: dict = {}
    keys = sorted({(e.method, e.strategy, e.physical_error_rate) for p in points for e in p.estimates})
    for method, strategy, rate in keys:
        name = curve_name(method, strategy, rate)
        secs, qubits = [], []
        for p in points:
            e = p.estimate_for(method, strategy, rate)
            secs.append((p.n_orbitals, e.wallclock if e else None))
            qubits.append((p.n_orbitals, e.physical_qubits_total if e else None))
        curves[f"seconds/{name}"] = secs
        curves[f"qubits/{name}"] = qubits
    for m in sorted({m for p in points for m in p.classical_seconds}):
        curves[f"seconds/classical_{m}"] = [(p.n_orbitals, p.classical_seconds.get(m)) for p in points]
    if any(p.vqe_seconds is not None for p in points):
        curves["seconds/vqe"] = [(p.n_orbitals, p.vqe_seconds) for p in points]
    return curves


SWEEP_COLUMNS = (
    "n_orbitals",
    "n_electrons",
    "extrapolated",
    "method",
    "strategy",
    "p",
    "machine",
    "quantum_seconds",
    "classical_seconds",
    "quantum_faster",
    "physical_qubits_total",
    "code_distance",
    "n_terms",
    "lambda",
)


def sweep_rows(points: list[SweepPoint]) -> list[dict]:
    """One row per (N, method, strategy, p, machine) in the ``SWEEP_COLUMNS`` schema."""
    rows = []
    for p in points:
        for e in p.estimates:
            stats = p.dense_stats if e.method == TROTTERIZATION else p.stats
            for m in sorted(p.classical_seconds):
                c = p.classical_seconds[m]
                rows.append({
                    "n_orbitals": p.n_orbitals,
                    "n_electrons": p.n_electrons,
                    "extrapolated": p.extrapolated,
                    "method": e.method,
                    "strategy": e.strategy,
                    "p": e.physical_error_rate,
                    "machine": m,
                    "quantum_seconds": e.wallclock,
                    "classical_seconds": c,
                    "quantum_faster": e.wallclock < c,
                    "physical_qubits_total": e.physical_qubits_total,
                    "code_distance": e.code_distance,
                    "n_terms": stats.n_terms,
                    "lambda": stats.lambda_,
                })
    return rows
