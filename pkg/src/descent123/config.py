"""Size limits for the exhaustive oracles."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Bounds:
    """Largest sizes the brute-force routines accept.

    Catalan numbers grow like 4^n, so enumerating every object quickly gets
    out of hand; these caps make an accidental ``n = 100`` fail fast instead
    of hanging.
    """

    enumerate_paths: int = 14
    path_oracle: int = 12
    perm_oracle: int = 10
    series_order: int = 40


DEFAULT_BOUNDS = Bounds()


class BoundExceededError(ValueError):
    """Raised when an oracle is asked for a size above its cap."""

    def __init__(self, what: str, n: int, bound: int):
        super().__init__(f"{what}: n = {n} exceeds bound {bound}")
        self.what = what
        self.n = n
        self.bound = bound
