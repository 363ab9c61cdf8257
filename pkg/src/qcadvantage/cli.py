"""Command-line front end: ``qcadvantage {parse,estimate,sweep,calibrate}``.

Exit codes: 0 on success, 1 on parse or estimation failures, 2 on usage
errors and missing input files.

The report directory defaults to ``results`` and is overridden, in
increasing precedence, by the config's ``output.dir``, the
``QCADVANTAGE_OUTPUT_DIR`` environment variable and ``--output``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys

from . import __version__
from .calibration import TABLE2, calibrate, dump_calibration, table2_estimates
from .config import OUTPUT_DIR_ENV, RunConfig, finite_or_inf, load_config, parse_range
from .crossover import SWEEP_COLUMNS, SweepConfig, find_crossover, plot_curves, run_sweep, sweep_rows
from .errors import FciDumpParseError, ValidationError
from .faulttolerance import estimate
from .hamio import bundled_corpus, read_fcidump, sparsify, stats_from_summary
from .qubitization import qubitization_cost
from .trotter import TROTTERIZATION, trotter_t_count
from .units import humanize_seconds

REPORT_SCHEMA_VERSION = 1

ESTIMATE_COLUMNS = (
    "method",
    "strategy",
    "p",
    "code_distance",
    "physical_qubits_total",
    "wallclock_seconds",
    "spacetime_qubitseconds",
    "physical_qubits_data",
    "physical_qubits_factories",
    "logical_qubits",
    "non_clifford_count",
    "factory_qubitseconds",
    "n_orbitals",
    "n_electrons",
    "n_terms",
    "lambda",
    "truncation_threshold",
    "source",
)

TABLE2_COLUMNS = ESTIMATE_COLUMNS + (
    "published_physical_qubits",
    "published_runtime_seconds",
    "qubits_ratio",
    "runtime_ratio",
)

CROSSOVER_COLUMNS = (
    "method",
    "strategy",
    "p",
    "machine",
    "crossover_n",
    "quantum_seconds",
    "classical_seconds",
    "physical_qubits_total",
)


class CliError(Exception):
    def __init__(self, message: str, code: int = 1):
        super().__init__(message)
        self.code = code


# ----------------------------------------------------------------- reports

def _csv_value(v):
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(v)
    return str(v)


def to_csv(rows: list[dict], columns: tuple) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_csv_value(row.get(c)) for c in columns])
    return buf.getvalue()


def _json_safe(obj):
    if isinstance(obj, float):
        return finite_or_inf(obj)
    if isinstance(obj, dict):
        return {str(k): _json_safe(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_json_safe(v) for v in obj]
    return obj


def to_json(doc: dict) -> str:
    """Deterministic serialization: sorted keys, fixed indentation, no timestamps."""
    return json.dumps(_json_safe(doc), sort_keys=True, indent=2) + "\n"


def _write(out_dir: str, name: str, text: str) -> str:
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, name)
    with open(path, "w", newline="") as fh:
        fh.write(text)
    return path


def _emit(out_dir: str, stem: str, fmt: str, rows: list[dict], columns: tuple, doc: dict) -> list[str]:
    written = []
    if fmt in ("csv", "both"):
        written.append(_write(out_dir, f"{stem}.csv", to_csv(rows, columns)))
    if fmt in ("json", "both"):
        written.append(_write(out_dir, f"{stem}.json", to_json(doc)))
    return written


# ------------------------------------------------------------------ inputs

def _require_file(path: str) -> None:
    if not os.path.isfile(path):
        raise CliError(f"no such file: {path}", code=2)


def resolve_inputs(cfg: RunConfig, cal) -> tuple:
    """``(dense, sparse)`` statistics for Trotterization and qubitization."""
    if cfg.fcidump is not None:
        _require_file(cfg.fcidump)
        h = read_fcidump(cfg.fcidump)
        return sparsify(h, 0.0), sparsify(h, cfg.threshold)
    if cfg.summary is not None:
        s = cfg.summary
        try:
            stats = stats_from_summary(
                int(s["n_orbitals"]), int(s["n_electrons"]), int(s["n_terms"]), float(s["lambda"])
            )
        except KeyError as exc:
            raise ValidationError(f"summary input is missing {exc}") from None
        return stats, stats
    return cal.cr2_dense, cal.cr2_sparse


def estimate_records(cfg: RunConfig) -> tuple[list[dict], dict]:
    """Rows for every (method, p, strategy) and the JSON document."""
    cal = cfg.calibration()
    dense, sparse = resolve_inputs(cfg, cal)
    rows, failures = [], []
    for method in cfg.methods:
        stats = dense if method == TROTTERIZATION else sparse
        if method == TROTTERIZATION:
            cost = trotter_t_count(stats, cal.epsilon, cal.trotter)
        else:
            cost = qubitization_cost(stats, cal.epsilon, cal.qubitization)
        for p in cfg.error_rates:
            for strategy in cfg.strategies:
                try:
                    est = estimate(cost, cal.surface_code.profile(p), strategy, cal)
                except (ValidationError, ValueError) as exc:
                    failures.append(f"{method}/p={p:g}/{strategy}: {exc}")
                    continue
                rows.append({**est.to_record(), **stats.to_record()})
    if failures:
        raise CliError("estimation failed for row(s): " + "; ".join(failures))
    doc = {
        "schema_version": REPORT_SCHEMA_VERSION,
        "command": "estimate",
        "epsilon": cal.epsilon,
        "inputs": {"dense": dense.to_record(), "sparse": sparse.to_record()},
        "estimates": rows,
    }
    return rows, doc


def table2_records(cfg: RunConfig) -> tuple[list[dict], dict]:
    cal = cfg.calibration()
    rows = []
    for row, est in table2_estimates(cal):
        stats = cal.cr2_dense if row.method == TROTTERIZATION else cal.cr2_sparse
        rows.append({
            **est.to_record(),
            **stats.to_record(),
            "published_physical_qubits": row.physical_qubits,
            "published_runtime_seconds": row.runtime_seconds,
            "qubits_ratio": est.physical_qubits_total / row.physical_qubits,
            "runtime_ratio": est.wallclock / row.runtime_seconds,
        })
    doc = {
        "schema_version": REPORT_SCHEMA_VERSION,
        "command": "estimate --table2",
        "epsilon": cal.epsilon,
        "estimates": rows,
    }
    return rows, doc


def sweep_config(cfg: RunConfig, vqe=None) -> SweepConfig:
    corpus = cfg.sweep_corpus
    if corpus in (None, "none"):
        corpus = {}
    elif corpus == "bundled":
        corpus = bundled_corpus()
    elif isinstance(corpus, dict):
        corpus = {int(k): str(v) for k, v in corpus.items()}
        for path in corpus.values():
            _require_file(path)
    else:
        raise ValidationError(f"sweep corpus must be 'none', 'bundled' or a mapping, got {corpus!r}")
    return SweepConfig(
        epsilon=cfg.epsilon,
        methods=tuple(cfg.methods),
        strategies=tuple(cfg.strategies),
        error_rates=tuple(cfg.error_rates),
        machines=tuple(cfg.machines),
        threshold=cfg.threshold,
        corpus=corpus,
        workers=cfg.workers,
        vqe=vqe,
    )


def sweep_reports(cfg: RunConfig) -> tuple:
    """``(rows, crossover_doc, curves)`` for the configured sweep."""
    cal = cfg.calibration()
    scfg = sweep_config(cfg, vqe=cfg.vqe_config(cal))
    first, last = cfg.sweep_range
    points = run_sweep(range(first, last + 1), scfg, cal)
    report = find_crossover(points)
    doc = {
        "schema_version": REPORT_SCHEMA_VERSION,
        "command": "sweep",
        "epsilon": cal.epsilon,
        "range": [first, last],
        "crossovers": [e.to_record() for e in report.entries],
        "warnings": list(report.warnings),
        "points": [
            {
                "n_orbitals": p.n_orbitals,
                "n_electrons": p.n_electrons,
                "extrapolated": p.extrapolated,
                "stats": p.stats.to_record() if p.stats else None,
                "dense_stats": p.dense_stats.to_record() if p.dense_stats else None,
                "classical_seconds": dict(sorted(p.classical_seconds.items())),
                "vqe_seconds": p.vqe_seconds,
                "errors": list(p.errors),
            }
            for p in points
        ],
    }
    return sweep_rows(points), doc, plot_curves(points), report


# ---------------------------------------------------------------- commands

def cmd_parse(args, cfg: RunConfig) -> int:
    _require_file(args.path)
    h = read_fcidump(args.path)
    thresholds = [0.0] if cfg.threshold == 0 else [0.0, cfg.threshold]
    records = [sparsify(h, t).to_record() for t in thresholds]
    print(f"{args.path}: N={h.n_orbitals} electrons={h.n_electrons} core_energy={h.core_energy!r}")
    print(to_csv(records, ("truncation_threshold", "n_orbitals", "n_electrons", "n_terms", "lambda", "source")), end="")
    return 0


def cmd_estimate(args, cfg: RunConfig) -> int:
    if args.table2:
        rows, doc = table2_records(cfg)
        stem, columns = "table2", TABLE2_COLUMNS
    else:
        rows, doc = estimate_records(cfg)
        stem, columns = "estimates", ESTIMATE_COLUMNS
    out_dir = cfg.resolved_output_dir(args.output)
    for r in rows:
        line = (
            f"{r['method']:<15} p={r['p']:<7g} {r['strategy']:<16} d={r['code_distance']:<3} "
            f"qubits={r['physical_qubits_total']:.3g}  runtime={humanize_seconds(r['wallclock_seconds'])}"
        )
        if args.table2:
            line += f"  (x{r['qubits_ratio']:.2f} qubits, x{r['runtime_ratio']:.2f} runtime vs published)"
        print(line)
    for path in _emit(out_dir, stem, cfg.output_format, rows, columns, doc):
        print(f"wrote {path}")
    return 0


def cmd_sweep(args, cfg: RunConfig) -> int:
    rows, doc, curves, report = sweep_reports(cfg)
    out_dir = cfg.resolved_output_dir(args.output)
    crossover_rows = doc["crossovers"]
    for e in report.entries:
        where = f"N={e.crossover_n} ({humanize_seconds(e.quantum_seconds)})" if e.crossover_n else "none in range"
        print(f"{e.method:<15} {e.strategy:<16} p={e.physical_error_rate:<7g} vs {e.machine:<8} crossover {where}")
    for w in report.warnings:
        print(f"warning: {w}", file=sys.stderr)
    written = []
    if cfg.output_format in ("csv", "both"):
        written.append(_write(out_dir, "sweep.csv", to_csv(rows, SWEEP_COLUMNS)))
        written.append(_write(out_dir, "crossover.csv", to_csv(crossover_rows, CROSSOVER_COLUMNS)))
    if cfg.output_format in ("json", "both"):
        written.append(_write(out_dir, "crossover.json", to_json(doc)))
    plot_dir = os.path.join(out_dir, "plot_data")
    for key, series in curves.items():
        kind, name = key.split("/", 1)
        column = "seconds" if kind == "seconds" else "physical_qubits"
        text = to_csv([{"N": n, column: v} for n, v in series], ("N", column))
        written.append(_write(plot_dir, f"{kind}_{name}.csv", text))
    print(f"wrote {len(written)} files under {out_dir}")
    return 0


def cmd_calibrate(args, cfg: RunConfig) -> int:
    kwargs = {} if cfg.epsilon is None else {"epsilon": cfg.epsilon}
    cal = calibrate(**kwargs)
    out_dir = cfg.resolved_output_dir(args.output)
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, "calibration.yaml")
    dump_calibration(cal, path)
    for key, res in cal.fit_residuals.items():
        print(f"{key:<42} qubits x{10 ** res['qubits_log10']:.2f}  runtime x{10 ** res['runtime_log10']:.2f}")
    print(f"wrote {path} ({len(TABLE2)} rows fitted)")
    return 0


# ------------------------------------------------------------------ parser

def _positive_float(text: str) -> float:
    try:
        x = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if math.isnan(x) or x < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {text!r}")
    return x


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH", help="YAML run configuration")
    common.add_argument("--epsilon", type=_positive_float, metavar="X", help="target energy error (Hartree)")
    common.add_argument("--threshold", type=_positive_float, metavar="X", help="truncation threshold (Hartree)")
    common.add_argument("--output", metavar="DIR", help=f"report directory (overrides ${OUTPUT_DIR_ENV})")
    common.add_argument("--format", choices=("csv", "json", "both"), help="report format")

    parser = argparse.ArgumentParser(
        prog="qcadvantage",
        description="Fault-tolerant resource estimates and quantum-advantage crossover analysis.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", parents=[common], help="print Hamiltonian statistics of an FCIDUMP file")
    p.add_argument("path")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("estimate", parents=[common], help="physical resource estimates")
    p.add_argument("--table2", action="store_true", help="reproduce the eight-row (26,26) table")
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser("sweep", parents=[common], help="sweep (N,N) sizes and locate crossovers")
    p.add_argument("--range", dest="range_", metavar="A:B", help="inclusive active-space range")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("calibrate", parents=[common], help="refit the calibration file")
    p.set_defaults(func=cmd_calibrate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.config is not None:
            _require_file(args.config)
        cfg = load_config(args.config)
        cfg = cfg.with_overrides(
            epsilon=args.epsilon,
            threshold=args.threshold,
            output_format=args.format,
            sweep_range=parse_range(args.range_) if getattr(args, "range_", None) else None,
        )
        return args.func(args, cfg)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except FciDumpParseError as exc:
        print(f"error: parse failed: {exc}", file=sys.stderr)
        return 1
    except (ValidationError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
