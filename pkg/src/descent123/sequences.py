"""Classical sequences from their own recurrences, for cross-checking."""

from __future__ import annotations

from math import comb
from typing import List


def catalan_numbers(count: int) -> List[int]:
    """First ``count`` Catalan numbers via C_{n+1} = sum_i C_i C_{n-i}."""
    c = [1]
    while len(c) < count:
        n = len(c) - 1
        c.append(sum(c[i] * c[n - i] for i in range(n + 1)))
    return c[:count]


def motzkin_numbers(count: int) -> List[int]:
    """M_{n+1} = M_n + sum_{i=0}^{n-1} M_i M_{n-1-i}."""
    m = [1]
    while len(m) < count:
        n = len(m) - 1
        m.append(m[n] + sum(m[i] * m[n - 1 - i] for i in range(n)))
    return m[:count]


def narayana(n: int, k: int) -> int:
    """Dyck paths of semilength n with k peaks; N(0, 0) = 1."""
    if n == 0:
        return 1 if k == 0 else 0
    if not 1 <= k <= n:
        return 0
    return comb(n, k) * comb(n, k - 1) // n
