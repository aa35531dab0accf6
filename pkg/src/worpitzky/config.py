"""Enumeration bounds shared by the library and the CLI."""

from __future__ import annotations

import os
from dataclasses import dataclass

PERM_ENV_VAR = "WORPITZKY_MAX_PERM_N"


class BoundExceeded(ValueError):
    """Raised when a factorial- or exponential-scale routine is asked for too much."""


@dataclass(frozen=True)
class Bounds:
    graph_n: int = 6
    perm_n: int = 9
    alcove_n: int = 7
    geometric_n: int = 5
    ceiling_lift_n: int = 5
    decomposition_n: int = 12

    @classmethod
    def from_env(cls) -> "Bounds":
        raw = os.environ.get(PERM_ENV_VAR)
        if raw is None or not raw.strip():
            return cls()
        try:
            perm_n = int(raw)
        except ValueError:
            raise ValueError(f"{PERM_ENV_VAR} must be an integer, got {raw!r}") from None
        if perm_n < 1:
            raise ValueError(f"{PERM_ENV_VAR} must be positive, got {perm_n}")
        return cls(perm_n=perm_n)


def bounds() -> Bounds:
    return Bounds.from_env()


def check_bound(name: str, value: int, limit: int) -> None:
    if value > limit:
        raise BoundExceeded(f"{name}={value} exceeds the configured bound {limit}")
