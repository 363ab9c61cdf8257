"""Unit constants and presentation-layer formatting.

Internally energies are Hartree and times are seconds; the helpers here only
exist for human-readable output.
"""

CHEMICAL_ACCURACY = 1.6e-3  # Hartree, ~1 kcal/mol

MINUTE = 60.0
HOUR = 3600.0
DAY = 86400.0
YEAR = 365.25 * DAY


def humanize_seconds(seconds: float) -> str:
    """Render a duration in the largest sensible unit, e.g. ``'43.0 days'``."""
    if seconds != seconds:
        return "nan"
    for unit, size in (("years", YEAR), ("days", DAY), ("hours", HOUR), ("minutes", MINUTE)):
        if seconds >= size:
            return f"{seconds / size:.3g} {unit}"
    return f"{seconds:.3g} s"
