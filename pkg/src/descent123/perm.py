"""Permutations, 123-avoidance, descents and left-to-right minima."""

from __future__ import annotations

import re
from bisect import bisect_left
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterator, Optional, Sequence, Tuple


class PermutationError(ValueError):
    """Malformed permutation text or entries."""


@dataclass(frozen=True)
class Permutation:
    """One-line notation of a permutation of {1, ..., n}."""

    entries: Tuple[int, ...]

    def __init__(self, entries: Sequence[int] = ()):
        entries = tuple(entries)
        _check_entries(entries)
        object.__setattr__(self, "entries", entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __str__(self) -> str:
        return " ".join(map(str, self.entries))


def _check_entries(entries: Tuple[int, ...]) -> None:
    n = len(entries)
    seen = set()
    for v in entries:
        if not isinstance(v, int) or isinstance(v, bool):
            raise PermutationError(f"non-integer entry {v!r}")
        if v in seen:
            raise PermutationError(f"duplicate value {v}")
        if not 1 <= v <= n:
            raise PermutationError(f"value {v} out of range 1..{n}")
        seen.add(v)


@dataclass(frozen=True)
class MinDecomposition:
    """Blocks ``(x_i, w_i)``: each left-to-right minimum with the word after it."""

    blocks: Tuple[Tuple[int, Tuple[int, ...]], ...]

    @property
    def minima(self) -> Tuple[int, ...]:
        return tuple(x for x, _ in self.blocks)

    @property
    def words(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(w for _, w in self.blocks)

    def flatten(self) -> Tuple[int, ...]:
        out = []
        for x, w in self.blocks:
            out.append(x)
            out.extend(w)
        return tuple(out)


def parse_permutation(text: str) -> Permutation:
    """Parse one-line notation such as ``"5 7 2 6 4 3 1"`` or ``"3,1,2"``."""
    tokens = [t for t in re.split(r"[\s,]+", text.strip()) if t]
    values = []
    for t in tokens:
        try:
            values.append(int(t, 10))
        except ValueError:
            raise PermutationError(f"non-integer token {t!r}") from None
    n = len(values)
    seen = set()
    for v in values:
        if v in seen:
            raise PermutationError(f"duplicate value {v}")
        seen.add(v)
    missing = sorted(set(range(1, n + 1)) - seen)
    if missing:
        extra = sorted(seen - set(range(1, n + 1)))
        raise PermutationError(
            f"missing value {missing[0]} (out-of-range value {extra[0]})"
        )
    return Permutation(values)


def find_123(p: Sequence[int]) -> Optional[Tuple[int, int, int]]:
    """Return 0-based positions ``i < j < k`` of some 123 occurrence, or None."""
    p = tuple(p)
    n = len(p)
    if n < 3:
        return None
    # argmin of prefix, argmax of suffix
    prefix_min = [0] * n
    for j in range(1, n):
        prefix_min[j] = j if p[j] < p[prefix_min[j - 1]] else prefix_min[j - 1]
    suffix_max = [n - 1] * n
    for j in range(n - 2, -1, -1):
        suffix_max[j] = j if p[j] > p[suffix_max[j + 1]] else suffix_max[j + 1]
    for j in range(1, n - 1):
        i, k = prefix_min[j - 1], suffix_max[j + 1]
        if p[i] < p[j] < p[k]:
            return i, j, k
    return None


def longest_increasing_length(p: Sequence[int]) -> int:
    """Patience sorting, O(n log n)."""
    piles: list = []
    for v in p:
        at = bisect_left(piles, v)
        if at == len(piles):
            piles.append(v)
        else:
            piles[at] = v
    return len(piles)


def avoids_123(p: Sequence[int]) -> bool:
    return longest_increasing_length(p) <= 2


def avoids_123_bruteforce(p: Sequence[int]) -> bool:
    """Cubic triple scan; test oracle for :func:`avoids_123`."""
    return not any(a < b < c for a, b, c in combinations(tuple(p), 3))


def descent_positions(p: Sequence[int]) -> Tuple[int, ...]:
    """1-based positions i with p(i) > p(i+1)."""
    p = tuple(p)
    return tuple(i + 1 for i in range(len(p) - 1) if p[i] > p[i + 1])


def descent_count(p: Sequence[int]) -> int:
    p = tuple(p)
    return sum(1 for i in range(len(p) - 1) if p[i] > p[i + 1])


def left_to_right_minima(p: Sequence[int]) -> Tuple[int, ...]:
    out = []
    for v in p:
        if not out or v < out[-1]:
            out.append(v)
    return tuple(out)


def min_decompose(p: Sequence[int]) -> MinDecomposition:
    """Split ``p`` as ``x_1 w_1 ... x_s w_s`` at its left-to-right minima.

    >>> min_decompose([5, 7, 2, 6, 4, 3, 1]).blocks
    ((5, (7,)), (2, (6, 4, 3)), (1, ()))
    """
    blocks: list = []
    for v in p:
        if not blocks or v < blocks[-1][0]:
            blocks.append((v, []))
        else:
            blocks[-1][1].append(v)
    return MinDecomposition(tuple((x, tuple(w)) for x, w in blocks))


def all_permutations(n: int) -> Iterator[Tuple[int, ...]]:
    return permutations(range(1, n + 1))


def avoiders_by_filter(n: int) -> Iterator[Tuple[int, ...]]:
    """Every 123-avoider of length n, by filtering all n! permutations."""
    return (p for p in all_permutations(n) if avoids_123(p))


def avoiders(n: int) -> Iterator[Tuple[int, ...]]:
    """Every 123-avoider of length n, built left to right without filtering.

    A prefix is extendable iff it avoids 123 and every unused value lies
    below the smallest entry that already has a smaller entry to its left
    (any larger value would complete a 123). Pruning on that condition
    means the search never enters a dead branch. Output is lexicographic.
    """
    if n == 0:
        yield ()
        return
    used = [False] * (n + 2)
    prefix: list = []

    def extend(low: int, mid: int) -> Iterator[Tuple[int, ...]]:
        # low: current minimum; mid: smallest non-minimum entry so far
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in range(1, n + 1):
            if used[v] or v > mid:
                continue
            if v < low:
                new_low, new_mid = v, mid
            else:
                new_low, new_mid = low, v
            used[v] = True
            # largest unused value must stay below the new threshold
            top = next((u for u in range(n, 0, -1) if not used[u]), 0)
            if top < new_mid:
                prefix.append(v)
                yield from extend(new_low, new_mid)
                prefix.pop()
            used[v] = False

    yield from extend(n + 1, n + 1)
