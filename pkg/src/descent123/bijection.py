"""The map kappa from 123-avoiding permutations to Dyck paths, and back.

Reading ``sigma = x_1 w_1 ... x_s w_s`` (left-to-right minima ``x_i``), each
minimum becomes ``x_{i-1} - x_i`` up steps, with ``x_0 = n + 1``, and each
word ``w_i`` becomes ``len(w_i) + 1`` down steps.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence, Tuple

from descent123.dyck import DOWN, UP, DyckPath, run_form, triple_falls, valleys
from descent123.perm import Permutation, descent_count, find_123, min_decompose


class Not123AvoidingError(ValueError):
    """Input contains a 123 pattern; ``positions`` are 1-based."""

    def __init__(self, positions: Tuple[int, int, int]):
        self.positions = positions
        super().__init__("contains 123 at positions " + " ".join(map(str, positions)))


def _require_avoider(p: Sequence[int]) -> None:
    hit = find_123(p)
    if hit is not None:
        raise Not123AvoidingError(tuple(i + 1 for i in hit))


def kappa(p: Sequence[int]) -> DyckPath:
    p = tuple(p)
    _require_avoider(p)
    prev = len(p) + 1
    steps = []
    for x, w in min_decompose(p).blocks:
        steps.append(UP * (prev - x))
        steps.append(DOWN * (len(w) + 1))
        prev = x
    return DyckPath("".join(steps))


def kappa_inverse(d: DyckPath) -> Permutation:
    n = d.semilength
    if n == 0:
        return Permutation(())
    runs = run_form(d).runs
    minima = []
    x = n + 1
    for a, _ in runs:
        x -= a
        minima.append(x)
    rest = sorted(set(range(1, n + 1)) - set(minima), reverse=True)
    out = []
    at = 0
    for x, (_, down) in zip(minima, runs):
        out.append(x)
        out.extend(rest[at : at + down - 1])
        at += down - 1
    return Permutation(out)


class DescentCheck(NamedTuple):
    des: int
    v: int
    tf: int
    holds: bool


def check_prop1(p: Sequence[int]) -> DescentCheck:
    """Compare descents of ``p`` with valleys + triple falls of ``kappa(p)``."""
    path = kappa(p)
    des = descent_count(p)
    v, tf = valleys(path), triple_falls(path)
    return DescentCheck(des, v, tf, des == v + tf)
