"""Dyck paths and the statistics the descent translation needs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Tuple

from descent123.config import DEFAULT_BOUNDS, BoundExceededError

UP, DOWN = "U", "D"


class PathError(ValueError):
    """Malformed Dyck path text or steps."""

    def __init__(self, message: str, position: Optional[int] = None):
        super().__init__(message)
        self.position = position


def _validate(steps: str) -> None:
    height = 0
    for pos, c in enumerate(steps, start=1):
        if c == UP:
            height += 1
        elif c == DOWN:
            height -= 1
            if height < 0:
                raise PathError(f"path goes below the x-axis at step {pos}", pos)
        else:
            raise PathError(f"illegal step {c!r} at position {pos}", pos)
    if height != 0:
        raise PathError(
            f"unbalanced path: {steps.count(UP)} up steps, {steps.count(DOWN)} down steps"
        )


@dataclass(frozen=True)
class DyckPath:
    """A Dyck path stored as its U/D step string."""

    steps: str = ""

    def __post_init__(self):
        _validate(self.steps)

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return self.steps

    def __add__(self, other: "DyckPath") -> "DyckPath":
        return DyckPath(self.steps + other.steps)


@dataclass(frozen=True)
class RunForm:
    """Run-length view ``U^a1 D^d1 ... U^as D^ds`` of a nonempty path."""

    runs: Tuple[Tuple[int, int], ...]

    def to_path(self) -> DyckPath:
        return DyckPath("".join(UP * a + DOWN * d for a, d in self.runs))


def parse_path(text: str) -> DyckPath:
    """Read a case-insensitive U/D string."""
    return DyckPath(text.strip().upper())


def run_form(p: DyckPath) -> RunForm:
    runs = []
    s = p.steps
    i = 0
    while i < len(s):
        a = 0
        while i < len(s) and s[i] == UP:
            a += 1
            i += 1
        d = 0
        while i < len(s) and s[i] == DOWN:
            d += 1
            i += 1
        runs.append((a, d))
    return RunForm(tuple(runs))


def heights(p: DyckPath) -> Tuple[int, ...]:
    """Height after each step."""
    out = []
    h = 0
    for c in p.steps:
        h += 1 if c == UP else -1
        out.append(h)
    return tuple(out)


def valleys(p: DyckPath) -> int:
    """Number of DU factors."""
    return p.steps.count(DOWN + UP)


def triple_falls(p: DyckPath) -> int:
    """Number of DDD factors, overlaps included."""
    s = p.steps
    return sum(1 for i in range(len(s) - 2) if s[i : i + 3] == "DDD")


def returns(p: DyckPath) -> int:
    """Down steps that end on the x-axis."""
    return sum(1 for h in heights(p) if h == 0)


def is_irreducible(p: DyckPath) -> bool:
    return returns(p) == 1


def last_return_split(p: DyckPath) -> Tuple[DyckPath, DyckPath]:
    """Split ``p`` into (possibly empty prefix, irreducible last factor)."""
    if not p.steps:
        raise PathError("cannot split the empty path")
    hs = heights(p)
    # end of the second-to-last return, or 0 if there is only one
    cut = 0
    for i in range(len(hs) - 1):
        if hs[i] == 0:
            cut = i + 1
    return DyckPath(p.steps[:cut]), DyckPath(p.steps[cut:])


def elevate(p: DyckPath) -> DyckPath:
    """``U p D``."""
    return DyckPath(UP + p.steps + DOWN)


def enumerate_paths(n: int, bound: int = DEFAULT_BOUNDS.enumerate_paths) -> Iterator[DyckPath]:
    """Yield every Dyck path of semilength n once, in lexicographic order (D < U)."""
    if n < 0:
        raise ValueError("semilength must be nonnegative")
    if n > bound:
        raise BoundExceededError("enumerate_paths", n, bound)
    for s in _step_strings(n):
        yield DyckPath(s)


def _step_strings(n: int) -> Iterator[str]:
    buf = []

    def go(ups: int, downs: int) -> Iterator[str]:
        # ups/downs already used; downs <= ups always holds
        if ups == n and downs == n:
            yield "".join(buf)
            return
        if downs < ups:
            buf.append(DOWN)
            yield from go(ups, downs + 1)
            buf.pop()
        if ups < n:
            buf.append(UP)
            yield from go(ups + 1, downs)
            buf.pop()

    yield from go(0, 0)


def path_from_runs(runs: Sequence[Tuple[int, int]]) -> DyckPath:
    return RunForm(tuple(runs)).to_path()
