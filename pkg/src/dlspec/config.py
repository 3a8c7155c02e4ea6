"""Tolerances and size limits.

Every numeric threshold used by the solvers and verdict engines lives here so
that the CLI can override them in one place.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, replace

DEFAULT_CEILING = 12


def enumeration_ceiling() -> int:
    """Largest order accepted by canonicalization and enumeration.

    ``DLSPEC_CEILING`` in the environment overrides the default of 12.
    """
    raw = os.environ.get("DLSPEC_CEILING")
    if raw is None or raw.strip() == "":
        return DEFAULT_CEILING
    value = int(raw)
    if value < 1:
        raise ValueError(f"DLSPEC_CEILING must be positive, got {value}")
    return value


@dataclass(frozen=True)
class Tolerances:
    # gaps in (-strict, strict) are INCONCLUSIVE
    strict: float = 1e-6
    # slack for non-strict bounds (lambda >= Tr_max, monotonicity)
    nonstrict: float = 1e-8
    residual: float = 1e-8
    # relative off-diagonal Frobenius mass at which Jacobi stops
    jacobi_threshold: float = 1e-13
    jacobi_max_sweeps: int = 100
    # |computed - quoted| for values quoted to four decimals
    quoted: float = 5e-4

    def with_overrides(self, **kwargs) -> "Tolerances":
        clean = {k: v for k, v in kwargs.items() if v is not None}
        for key, value in clean.items():
            if key != "jacobi_max_sweeps" and not value > 0:
                raise ValueError(f"tolerance {key} must be positive, got {value}")
        return replace(self, **clean)


DEFAULT_TOLERANCES = Tolerances()
