"""FCIDUMP ingestion and Hamiltonian summary statistics.

Every cost model in the package consumes a :class:`HamiltonianStats`, which
can be produced either by parsing and truncating an FCIDUMP file
(:func:`parse_fcidump` followed by :func:`sparsify`) or directly from summary
numbers (:func:`stats_from_summary`) when the integrals themselves are not
available.

Term counts and one-norms are taken over the *symmetry-expanded* operator:
a stored two-electron integral ``(ij|kl)`` stands for every distinct index
permutation under the 8-fold real-orbital symmetry, and a stored one-electron
integral ``h_ij`` for both ``h_ij`` and ``h_ji``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from importlib import resources
from os import PathLike
from typing import NamedTuple

from .errors import FciDumpParseError, ValidationError

__all__ = [
    "Integral",
    "FciDump",
    "HamiltonianStats",
    "parse_fcidump",
    "read_fcidump",
    "write_fcidump",
    "canonical_indices",
    "expansion_multiplicity",
    "max_expanded_terms",
    "sparsify",
    "stats_from_summary",
    "integral_volume",
    "bundled_corpus",
]

_KNOWN_KEYS = ("NORB", "NELEC", "MS2", "ORBSYM")
_KEY_RE = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)\s*=")

# symmetry-equivalent records must agree to this tolerance to be merged
DUPLICATE_RTOL = 1e-9
DUPLICATE_ATOL = 1e-12


class Integral(NamedTuple):
    """One integral record, indices 1-based in chemists' notation."""

    i: int
    j: int
    k: int
    l: int  # noqa: E741
    value: float

    @property
    def indices(self) -> tuple[int, int, int, int]:
        return (self.i, self.j, self.k, self.l)

    @property
    def is_one_electron(self) -> bool:
        return self.k == 0 and self.l == 0


@dataclass(frozen=True)
class FciDump:
    """A parsed second-quantized Hamiltonian.

    ``integrals`` holds one- and two-electron records only, with indices in
    canonical order and the records sorted, so two files that differ only by
    line order or by which symmetry-equivalent index ordering they wrote
    compare equal. The core energy lives in ``core_energy``.
    """

    n_orbitals: int
    n_electrons: int
    ms2: int = 0
    orbital_symmetries: tuple[int, ...] = ()
    core_energy: float = 0.0
    integrals: tuple[Integral, ...] = ()
    metadata: tuple[tuple[str, str], ...] = field(default=())

    @property
    def one_electron(self) -> tuple[Integral, ...]:
        return tuple(x for x in self.integrals if x.is_one_electron)

    @property
    def two_electron(self) -> tuple[Integral, ...]:
        return tuple(x for x in self.integrals if not x.is_one_electron)


@dataclass(frozen=True)
class HamiltonianStats:
    """Summary numbers the cost models need.

    Attributes:
        n_orbitals: Spatial orbitals N.
        n_electrons: Active electrons.
        n_terms: Nonzero symmetry-expanded coefficients retained (d).
        lambda_: Sum of absolute values of the retained coefficients, Hartree.
        truncation_threshold: Threshold used by :func:`sparsify`; ``None`` for
            summary input.
        source: ``"parsed"`` or ``"summary"``.
    """

    n_orbitals: int
    n_electrons: int
    n_terms: int
    lambda_: float
    truncation_threshold: float | None = None
    source: str = "summary"

    def to_record(self) -> dict:
        return {
            "n_orbitals": self.n_orbitals,
            "n_electrons": self.n_electrons,
            "n_terms": self.n_terms,
            "lambda": self.lambda_,
            "truncation_threshold": self.truncation_threshold,
            "source": self.source,
        }


def canonical_indices(i: int, j: int, k: int, l: int) -> tuple[int, int, int, int]:  # noqa: E741
    """Representative of the 8-fold permutation orbit (i>=j, k>=l, ij>=kl)."""
    if k == 0 and l == 0:
        return (max(i, j), min(i, j), 0, 0)
    p = (max(i, j), min(i, j))
    q = (max(k, l), min(k, l))
    if q > p:
        p, q = q, p
    return (p[0], p[1], q[0], q[1])


def expansion_multiplicity(i: int, j: int, k: int, l: int) -> int:  # noqa: E741
    """Number of distinct index tuples a stored integral stands for."""
    if k == 0 and l == 0:
        return 1 if i == j else 2
    n = 8
    if i == j:
        n //= 2
    if k == l:
        n //= 2
    if {i, j} == {k, l} and (i == j) == (k == l):
        n //= 2
    return n


def max_expanded_terms(n_orbitals: int) -> int:
    """Symmetry-expanded term count of a fully dense Hamiltonian on N orbitals."""
    return n_orbitals**2 + n_orbitals**4


def _to_float(token: str, line: int) -> float:
    try:
        return float(token.replace("D", "E").replace("d", "e"))
    except ValueError:
        raise FciDumpParseError(f"non-numeric value {token!r}", line) from None


def _to_int(token: str, line: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise FciDumpParseError(f"non-integer {what} {token!r}", line) from None


def _split_header(lines: list[str]) -> tuple[str, int, int]:
    """Locate the namelist; return (body, header_end_line, first_data_index)."""
    start = None
    for n, raw in enumerate(lines):
        if raw.strip():
            start = n
            break
    if start is None or "&FCI" not in lines[start].upper():
        raise FciDumpParseError("missing &FCI namelist header", (start or 0) + 1)

    chunks = []
    for n in range(start, len(lines)):
        text = lines[n]
        if n == start:
            text = text[text.upper().index("&FCI") + 4:]
        upper = text.upper()
        if "&END" in upper:
            chunks.append(text[: upper.index("&END")])
            return " ".join(chunks), n + 1, n + 1
        stripped = text.rstrip()
        if stripped.endswith("/") or stripped.strip() == "/":
            chunks.append(stripped[:-1])
            return " ".join(chunks), n + 1, n + 1
        chunks.append(text)
    raise FciDumpParseError("unterminated namelist header (expected &END or /)", len(lines))


def _parse_namelist(body: str, line: int) -> dict[str, str]:
    keys = list(_KEY_RE.finditer(body))
    out = {}
    for n, m in enumerate(keys):
        end = keys[n + 1].start() if n + 1 < len(keys) else len(body)
        out[m.group(1).upper()] = body[m.end():end].strip().strip(",").strip()
    return out


def parse_fcidump(text: str) -> FciDump:
    """Parse FCIDUMP text.

    Accepts ``&END`` or ``/`` namelist terminators, free-form whitespace, and
    Fortran ``D`` exponents. Unrecognized namelist keys are kept verbatim in
    ``metadata``.

    Raises:
        FciDumpParseError: With the offending line number, for a missing or
            malformed header, an index outside ``[0, NORB]``, a non-numeric
            value, an invalid index pattern, or two symmetry-equivalent
            records with conflicting values.
    """
    lines = text.splitlines()
    body, header_line, first_data = _split_header(lines)
    keys = _parse_namelist(body, header_line)
    for required in ("NORB", "NELEC"):
        if required not in keys:
            raise FciDumpParseError(f"header is missing {required}", header_line)
    n_orb = _to_int(keys["NORB"], header_line, "NORB")
    n_elec = _to_int(keys["NELEC"], header_line, "NELEC")
    ms2 = _to_int(keys.get("MS2", "0"), header_line, "MS2")
    if n_orb < 1:
        raise FciDumpParseError(f"NORB must be >= 1, got {n_orb}", header_line)
    if not 0 <= n_elec <= 2 * n_orb:
        raise FciDumpParseError(f"NELEC={n_elec} outside [0, 2*NORB]", header_line)
    if "ORBSYM" in keys and keys["ORBSYM"]:
        orbsym = tuple(
            _to_int(t, header_line, "ORBSYM entry")
            for t in re.split(r"[,\s]+", keys["ORBSYM"])
            if t
        )
    else:
        orbsym = (1,) * n_orb
    metadata = tuple(sorted((k, v) for k, v in keys.items() if k not in _KNOWN_KEYS))

    core = 0.0
    core_line = None
    seen: dict[tuple[int, int, int, int], tuple[int, list[float]]] = {}
    for n in range(first_data, len(lines)):
        lineno = n + 1
        tokens = lines[n].split()
        if not tokens:
            continue
        if len(tokens) != 5:
            raise FciDumpParseError(f"expected 'value i j k l', got {len(tokens)} fields", lineno)
        value = _to_float(tokens[0], lineno)
        idx = tuple(_to_int(t, lineno, "index") for t in tokens[1:])
        for x in idx:
            if not 0 <= x <= n_orb:
                raise FciDumpParseError(f"index {x} out of range [0, {n_orb}]", lineno)
        i, j, k, l = idx  # noqa: E741
        if idx == (0, 0, 0, 0):
            if core_line is not None:
                raise FciDumpParseError(f"duplicate core energy (first on line {core_line})", lineno)
            core, core_line = value, lineno
            continue
        one_body = k == 0 and l == 0 and i >= 1 and j >= 1
        two_body = min(idx) >= 1
        if not (one_body or two_body):
            raise FciDumpParseError(f"invalid index pattern {idx}", lineno)
        key = canonical_indices(i, j, k, l)
        if key in seen:
            first_line, values = seen[key]
            if not math.isclose(value, values[0], rel_tol=DUPLICATE_RTOL, abs_tol=DUPLICATE_ATOL):
                raise FciDumpParseError(
                    f"integral {key} conflicts with line {first_line} under permutational symmetry",
                    lineno,
                )
            values.append(value)
        else:
            seen[key] = (lineno, [value])

    # 4-fold writers emit (ij|kl) and (kl|ij) separately; fsum keeps the merge order-free
    records = [Integral(*key, math.fsum(vals) / len(vals)) for key, (_, vals) in seen.items()]
    records.sort(key=lambda r: (r.is_one_electron, r.indices))
    return FciDump(
        n_orbitals=n_orb,
        n_electrons=n_elec,
        ms2=ms2,
        orbital_symmetries=orbsym,
        core_energy=core,
        integrals=tuple(records),
        metadata=metadata,
    )


def read_fcidump(path: str | PathLike) -> FciDump:
    with open(path) as fh:
        return parse_fcidump(fh.read())


def write_fcidump(h: FciDump) -> str:
    """Serialize to FCIDUMP text that :func:`parse_fcidump` reads back identically."""
    out = [f" &FCI NORB={h.n_orbitals},NELEC={h.n_electrons},MS2={h.ms2},"]
    out.append("  ORBSYM=" + ",".join(str(s) for s in h.orbital_symmetries) + ",")
    for key, value in h.metadata:
        out.append(f"  {key}={value},")
    out.append(" &END")
    for rec in h.integrals:
        out.append(f"{rec.value: .16e} {rec.i:4d} {rec.j:4d} {rec.k:4d} {rec.l:4d}")
    out.append(f"{h.core_energy: .16e}    0    0    0    0")
    return "\n".join(out) + "\n"


def sparsify(h: FciDump, threshold: float) -> HamiltonianStats:
    """Truncate small coefficients and summarize what remains.

    A coefficient is retained when ``|value| > threshold``; each retained
    stored integral contributes its full symmetry multiplicity to both the
    term count and the one-norm. The core energy is never counted.
    """
    if not threshold >= 0:
        raise ValidationError(f"threshold must be >= 0, got {threshold}")
    n_terms = 0
    lam = 0.0
    for rec in h.integrals:
        if abs(rec.value) > threshold:
            mult = expansion_multiplicity(*rec.indices)
            n_terms += mult
            lam += mult * abs(rec.value)
    return HamiltonianStats(
        n_orbitals=h.n_orbitals,
        n_electrons=h.n_electrons,
        n_terms=n_terms,
        lambda_=lam,
        truncation_threshold=float(threshold),
        source="parsed",
    )


def stats_from_summary(n_orbitals: int, n_electrons: int, d: int, lambda_: float) -> HamiltonianStats:
    """Build stats from published or extrapolated summary numbers."""
    if n_orbitals < 1:
        raise ValidationError(f"n_orbitals must be >= 1, got {n_orbitals}")
    if not 0 <= n_electrons <= 2 * n_orbitals:
        raise ValidationError(f"n_electrons={n_electrons} outside [0, 2*{n_orbitals}]")
    if d < 0 or not lambda_ >= 0 or math.isinf(lambda_):
        raise ValidationError("term count and lambda must be finite and nonnegative")
    if (d == 0) != (lambda_ == 0):
        raise ValidationError(f"lambda={lambda_} inconsistent with n_terms={d}: zero iff no terms")
    if d > max_expanded_terms(n_orbitals):
        raise ValidationError(
            f"n_terms={d} exceeds the {max_expanded_terms(n_orbitals)} possible terms on {n_orbitals} orbitals"
        )
    return HamiltonianStats(n_orbitals, n_electrons, int(d), float(lambda_), None, "summary")


def integral_volume(n_orbitals: int, bytes_per_value: int = 8) -> int:
    """Storage for the ~N**4/8 unique two-electron integrals, in bytes (rounded up)."""
    if n_orbitals < 1:
        raise ValidationError(f"n_orbitals must be >= 1, got {n_orbitals}")
    return -(-(n_orbitals**4) * bytes_per_value // 8)


def bundled_corpus() -> dict[int, str]:
    """Paths of the bundled hydrogen-chain FCIDUMP files keyed by orbital count.

    Chains H_n in a minimal basis give n orbitals and n electrons, matching
    the (N,N) active-space convention of the sweep.
    """
    root = resources.files("qcadvantage").joinpath("data/corpus")
    out = {}
    for entry in root.iterdir():
        m = re.fullmatch(r"h(\d+)\.fcidump", entry.name)
        if m:
            out[int(m.group(1))] = str(entry)
    return dict(sorted(out.items()))
