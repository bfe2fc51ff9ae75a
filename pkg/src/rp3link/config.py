"""Run limits, overridable via environment variables."""

from __future__ import annotations

import os
from dataclasses import dataclass


@dataclass(frozen=True)
class Limits:
    max_vertices: int = 20       # canonical form / minor search / cycle enumeration bound
    max_dim: int = 24            # cycle-space dimension cap for assignment enumeration
    max_cycles: int = 500_000    # cutoff for simple-cycle enumeration


DEFAULT_LIMITS = Limits()

ENV_MAX_VERTICES = "RP3LINK_MAX_VERTICES"
ENV_MAX_DIM = "RP3LINK_MAX_DIM"


def limits_from_env(base: Limits = DEFAULT_LIMITS) -> Limits:
    """Apply RP3LINK_MAX_VERTICES / RP3LINK_MAX_DIM overrides when set."""
    mv = os.environ.get(ENV_MAX_VERTICES)
    md = os.environ.get(ENV_MAX_DIM)
    return Limits(
        max_vertices=int(mv) if mv else base.max_vertices,
        max_dim=int(md) if md else base.max_dim,
        max_cycles=base.max_cycles,
    )
