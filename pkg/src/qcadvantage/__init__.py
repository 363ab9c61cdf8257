"""Fault-tolerant resource estimation and quantum-advantage crossover analysis
for quantum-chemistry ground-state energy estimation."""

__version__ = "0.1.0"

from .baselines import MACHINES, VqeConfig, casci_runtime, determinant_count, vqe_iteration_time
from .calibration import calibrate, load_calibration, table2_estimates
from .crossover import extrapolate_stats, find_crossover, run_sweep
from .errors import CodeDistanceOverflow, FciDumpParseError, ValidationError
from .faulttolerance import SPACE_OPTIMIZED, TIME_OPTIMIZED, HardwareProfile, ResourceEstimate, estimate
from .hamio import FciDump, HamiltonianStats, integral_volume, parse_fcidump, read_fcidump, sparsify, stats_from_summary
from .qubitization import QubitizationCostModel, qubitization_cost
from .trotter import AlgorithmCost, TrotterCostModel, logical_qubits_trotter, trotter_t_count

__all__ = [
    "MACHINES",
    "SPACE_OPTIMIZED",
    "TIME_OPTIMIZED",
    "AlgorithmCost",
    "CodeDistanceOverflow",
    "FciDump",
    "FciDumpParseError",
    "HamiltonianStats",
    "HardwareProfile",
    "QubitizationCostModel",
    "ResourceEstimate",
    "TrotterCostModel",
    "ValidationError",
    "VqeConfig",
    "calibrate",
    "casci_runtime",
    "determinant_count",
    "estimate",
    "extrapolate_stats",
    "find_crossover",
    "integral_volume",
    "load_calibration",
    "logical_qubits_trotter",
    "parse_fcidump",
    "qubitization_cost",
    "read_fcidump",
    "run_sweep",
    "sparsify",
    "stats_from_summary",
    "table2_estimates",
    "trotter_t_count",
    "vqe_iteration_time",
]
