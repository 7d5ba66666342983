"""Size caps for the exhaustive layers, driven by one environment knob.

DEGSEQ_ORACLE_LIMIT (default 7) is the sequence-length cap for anything
that must enumerate realizations and color them (the chi and h1 layers).
Realization enumeration alone is allowed one vertex more, and the cheap
omega-only layers two more, since their cost per sequence is far smaller.
Callers that want to go past a cap must say so explicitly (a force flag),
never silently.
"""

import os

from .errors import ArgumentError

BASE_DEFAULT = 7


def oracle_limit() -> int:
    """Length cap for the chi / h1 layers (the knob itself)."""
    raw = os.environ.get("DEGSEQ_ORACLE_LIMIT")
    if raw is None:
        return BASE_DEFAULT
    try:
        val = int(raw)
    except ValueError:
        raise ArgumentError(f"DEGSEQ_ORACLE_LIMIT={raw!r} is not an integer") from None
    if val < 1:
        raise ArgumentError(f"DEGSEQ_ORACLE_LIMIT must be >= 1, got {val}")
    return val


def enumeration_limit() -> int:
    """Length cap for realization enumeration (one past the knob)."""
    return oracle_limit() + 1


def omega_limit() -> int:
    """Length cap for omega-only sequence scans (two past the knob)."""
    return oracle_limit() + 2
