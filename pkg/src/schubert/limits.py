"""Size guards for the operations with exponential worst cases.

Each guarded operation has its own default cap on the grid size n; the
environment variable SCHUBERT_MAX_N overrides every default, so big one-off
runs (or stricter CI limits) need no code changes.
"""

from __future__ import annotations

import os

ENV_VAR = "SCHUBERT_MAX_N"


class SizeGuardError(ValueError):
    """Raised when an input exceeds an operation's size cap."""


def size_guard(n: int, default_cap: int, operation: str) -> None:
    cap = default_cap
    env = os.environ.get(ENV_VAR)
    if env is not None:
        cap = int(env)
    if n > cap:
        raise SizeGuardError(
            f"{operation}: n={n} exceeds cap {cap} (set {ENV_VAR} to override)"
        )
