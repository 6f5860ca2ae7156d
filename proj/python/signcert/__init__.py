"""Binary polynomial certificates: min-cut minimization and signed LP relaxations."""

from ._core import (
    CapExceeded,
    Polynomial,
    brute_force_min,
    level_count,
    maxcut_brute_force,
    maxcut_polynomial,
    minimize_nns,
    random_pm1_graph,
    relax,
    separate,
)

__all__ = [
    "CapExceeded",
    "Polynomial",
    "brute_force_min",
    "level_count",
    "maxcut_brute_force",
    "maxcut_polynomial",
    "minimize_nns",
    "random_pm1_graph",
    "relax",
    "separate",
]
