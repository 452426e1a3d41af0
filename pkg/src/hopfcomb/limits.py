"""Resource guards for enumeration and verification sweeps.

All exhaustive routines are meant for desk-scale arguments.  The guard
values live in a configuration object rather than being scattered through
the code, and the environment variable ``HOPFCOMB_MAX_DEGREE`` overrides
the degree bound used by verification sweeps.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, replace


class LimitExceeded(ValueError):
    """Raised when an enumeration is requested beyond its configured bound."""


@dataclass(frozen=True)
class Limits:
    endofunctions: int = 8
    permutations: int = 9
    parking: int = 8
    nondecreasing_parking: int = 14
    set_partitions: int = 11
    initial_words: int = 8
    involutions: int = 10
    rewrite_length: int = 10
    symfunc_degree: int = 10
    max_degree: int = 6


def current_limits() -> Limits:
    """The active limits, honouring the ``HOPFCOMB_MAX_DEGREE`` override."""
    limits = Limits()
    override = os.environ.get("HOPFCOMB_MAX_DEGREE")
    if override is not None:
        limits = replace(limits, max_degree=int(override))
    return limits


def guard(kind: str, n: int, limits: Limits | None = None) -> None:
    """Refuse an enumeration of family ``kind`` at size ``n`` beyond the bound."""
    limits = limits or current_limits()
    bound = getattr(limits, kind)
    if n > bound:
        raise LimitExceeded(f"{kind} enumeration at n={n} exceeds configured bound {bound}")
