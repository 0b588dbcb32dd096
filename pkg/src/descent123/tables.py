"""Joint valley / triple-fall counts of Dyck paths and the Eulerian rows.

``a[n][(p, q)]`` counts paths of semilength n with p valleys and q triple
falls; ``b[n][(p, q)]`` does the same for irreducible paths. Irreducible
counts come from elevation, full counts from the last-return decomposition.
"""

from __future__ import annotations

import csv
import json
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Sequence, TextIO, Tuple

from descent123.config import DEFAULT_BOUNDS, BoundExceededError
from descent123.dyck import enumerate_paths, is_irreducible, triple_falls, valleys
from descent123.perm import avoiders, avoiders_by_filter, descent_count

Counts = Dict[Tuple[int, int], int]

ALL = "all"
IRREDUCIBLE = "irreducible"


class NegativeCountError(ArithmeticError):
    """A recurrence produced a negative count; always an indexing bug."""


@dataclass(frozen=True)
class TriStatTable:
    kind: str
    rows: Tuple[Counts, ...]

    @property
    def max_n(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, n: int) -> Counts:
        return self.rows[n]

    def total(self, n: int) -> int:
        return sum(self.rows[n].values())

    def records(self) -> Iterator[Tuple[int, int, int, int]]:
        """``(n, p, q, count)`` for every nonzero entry, sorted."""
        for n, row in enumerate(self.rows):
            for (p, q) in sorted(row):
                yield n, p, q, row[(p, q)]


@dataclass(frozen=True)
class EulerianRow:
    n: int
    counts: Tuple[int, ...]

    def records(self) -> Iterator[Tuple[int, int, int]]:
        for k, c in enumerate(self.counts):
            yield self.n, k, c


def _add_shifted(target: Counter, source: Counts, dp: int, dq: int, sign: int = 1) -> None:
    for (p, q), c in source.items():
        target[(p + dp, q + dq)] += sign * c


def _freeze(counter: Counter, label: str) -> Counts:
    out = {}
    for key in sorted(counter):
        c = counter[key]
        if c < 0:
            raise NegativeCountError(f"{label}: negative count {c} at (p, q) = {key}")
        if c:
            out[key] = c
    return out


def build_tables(max_n: int) -> Tuple[TriStatTable, TriStatTable]:
    """Return ``(a, b)`` for semilengths ``0..max_n``.

    ``b[0]`` is left empty: the empty path has no return.
    """
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    a: List[Counts] = [{(0, 0): 1}, {(0, 0): 1}, {(0, 0): 1, (1, 0): 1}]
    b: List[Counts] = [{}, {(0, 0): 1}, {(0, 0): 1}]
    for n in range(3, max_n + 1):
        # elevation: append D to a path not ending in UD (one more DDD), or
        # to one ending in UD, which is a shorter path plus a valley
        bn: Counter = Counter()
        _add_shifted(bn, a[n - 1], 0, 1)
        _add_shifted(bn, a[n - 2], 1, 1, sign=-1)
        _add_shifted(bn, a[n - 2], 1, 0)
        b.append(_freeze(bn, f"b[{n}]"))

        # last return: prefix of semilength n - i, irreducible tail of size i,
        # plus one valley where they meet
        an: Counter = Counter(b[n])
        for i in range(1, n):
            for (j, s), bc in b[i].items():
                for (p, q), ac in a[n - i].items():
                    an[(p + j + 1, q + s)] += bc * ac
        a.append(_freeze(an, f"a[{n}]"))
    return TriStatTable(ALL, tuple(a[: max_n + 1])), TriStatTable(IRREDUCIBLE, tuple(b[: max_n + 1]))


def eulerian_row_from_counts(n: int, counts: Counts) -> EulerianRow:
    width = max(n, 1)
    row = [0] * width
    for (p, q), c in counts.items():
        row[p + q] += c
    return EulerianRow(n, tuple(row))


def eulerian_rows(max_n: int, a: TriStatTable = None) -> List[EulerianRow]:
    """``e[n][k]``: 123-avoiders of length n with k descents, from the path table."""
    if a is None or a.max_n < max_n:
        a, _ = build_tables(max_n)
    return [eulerian_row_from_counts(n, a[n]) for n in range(max_n + 1)]


def oracle_tristat_pair(n: int, bound: int = DEFAULT_BOUNDS.path_oracle) -> Tuple[Counts, Counts]:
    """Brute-force ``(a_n, b_n)`` by enumerating every path of semilength n."""
    if n > bound:
        raise BoundExceededError("oracle_tristat", n, bound)
    every: Counter = Counter()
    irred: Counter = Counter()
    for path in enumerate_paths(n, bound=max(bound, n)):
        key = (valleys(path), triple_falls(path))
        every[key] += 1
        if is_irreducible(path):
            irred[key] += 1
    return dict(sorted(every.items())), dict(sorted(irred.items()))


def oracle_tristat(n: int, irreducible: bool = False, bound: int = DEFAULT_BOUNDS.path_oracle) -> Counts:
    every, irred = oracle_tristat_pair(n, bound)
    return irred if irreducible else every


def oracle_ddd_counts(n: int, bound: int = DEFAULT_BOUNDS.path_oracle) -> Tuple[int, ...]:
    """Paths of semilength n tallied by number of triple falls alone."""
    if n > bound:
        raise BoundExceededError("oracle_ddd_counts", n, bound)
    tally: Counter = Counter(triple_falls(p) for p in enumerate_paths(n, bound=max(bound, n)))
    return tuple(tally[q] for q in range(max(tally) + 1))


def oracle_eulerian(n: int, bound: int = DEFAULT_BOUNDS.perm_oracle) -> EulerianRow:
    """Tally descents over all 123-avoiders of length n."""
    if n > bound:
        raise BoundExceededError("oracle_eulerian", n, bound)
    source = avoiders_by_filter(n) if n <= 8 else avoiders(n)
    row = [0] * max(n, 1)
    for p in source:
        row[descent_count(p)] += 1
    return EulerianRow(n, tuple(row))


# --- export -----------------------------------------------------------------

TRISTAT_FIELDS = ("n", "p", "q", "count")
EULERIAN_FIELDS = ("n", "k", "count")


def write_csv(stream: TextIO, fields: Sequence[str], records: Iterable[Sequence[int]]) -> None:
    w = csv.writer(stream, lineterminator="\n")
    w.writerow(fields)
    for rec in records:
        w.writerow(rec)


def to_json(kind: str, max_n: int, fields: Sequence[str], records: Iterable[Sequence[int]]) -> str:
    """Counts are emitted as decimal strings so consumers never overflow."""
    rows = []
    for rec in records:
        obj = dict(zip(fields, rec))
        obj["count"] = str(obj["count"])
        rows.append(obj)
    return json.dumps({"kind": kind, "max_n": max_n, "rows": rows}, indent=2)


def tristat_records(table: TriStatTable) -> Iterator[Tuple[int, int, int, int]]:
    return table.records()


def eulerian_records(rows: Iterable[EulerianRow]) -> Iterator[Tuple[int, int, int]]:
    for row in rows:
        yield from row.records()
