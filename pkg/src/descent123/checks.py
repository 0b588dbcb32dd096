"""Verification suites shared by the CLI and the acceptance tests."""

from __future__ import annotations

from typing import Callable, Dict, List, Optional

from descent123.bijection import check_prop1, kappa, kappa_inverse
from descent123.config import DEFAULT_BOUNDS, BoundExceededError, Bounds
from descent123.dyck import enumerate_paths
from descent123.perm import avoiders, avoiders_by_filter
from descent123.series import (
    CheckReport,
    check_functional_equations,
    check_specializations,
    check_theorem5,
    check_theorem6,
)
from descent123.tables import (
    build_tables,
    eulerian_rows,
    oracle_eulerian,
    oracle_tristat_pair,
)

SUITES = ("oracle", "equations", "theorem5", "theorem6", "specials")


def _first_count_mismatch(n, got, want):
    for key in sorted(set(got) | set(want)):
        if got.get(key, 0) != want.get(key, 0):
            return (n, key[0], key[1], got.get(key, 0), want.get(key, 0))
    return None


def tables_vs_oracle(max_n: int, bounds: Bounds = DEFAULT_BOUNDS) -> List[CheckReport]:
    a, b = build_tables(max_n)
    reports = []
    for label, pick, table in (("a", 0, a), ("b", 1, b)):
        bad = None
        for n in range(max_n + 1):
            want = oracle_tristat_pair(n, bound=bounds.path_oracle)[pick]
            if n == 0 and label == "b":
                continue
            bad = _first_count_mismatch(n, table[n], want)
            if bad:
                break
        reports.append(CheckReport(f"tristat-{label} vs path oracle", max_n, bad is None, bad))
    return reports


def eulerian_vs_oracle(max_n: int, bounds: Bounds = DEFAULT_BOUNDS) -> CheckReport:
    rows = eulerian_rows(max_n)
    for n in range(max_n + 1):
        want = oracle_eulerian(n, bound=bounds.perm_oracle).counts
        got = rows[n].counts
        if got != want:
            k = next(i for i, (u, v) in enumerate(zip(got, want)) if u != v)
            return CheckReport("eulerian vs permutation oracle", max_n, False, (n, k, 0, got[k], want[k]))
    return CheckReport("eulerian vs permutation oracle", max_n, True)


def bijection_round_trips(path_n: int, perm_n: int) -> List[CheckReport]:
    bad_paths = None
    for n in range(path_n + 1):
        for d in enumerate_paths(n, bound=max(path_n, DEFAULT_BOUNDS.enumerate_paths)):
            if kappa(kappa_inverse(d)) != d:
                bad_paths = (n, 0, 0, str(kappa(kappa_inverse(d))), str(d))
                break
        if bad_paths:
            break
    bad_perms = None
    bad_prop1 = None
    for n in range(perm_n + 1):
        for p in avoiders_by_filter(n) if n <= 8 else avoiders(n):
            if bad_perms is None and tuple(kappa_inverse(kappa(p))) != p:
                bad_perms = (n, 0, 0, str(kappa_inverse(kappa(p))), " ".join(map(str, p)))
            if bad_prop1 is None:
                c = check_prop1(p)
                if not c.holds:
                    bad_prop1 = (n, c.v, c.tf, c.des, c.v + c.tf)
    return [
        CheckReport("kappa(kappa_inverse(d)) = d", path_n, bad_paths is None, bad_paths),
        CheckReport("kappa_inverse(kappa(p)) = p", perm_n, bad_perms is None, bad_perms),
        CheckReport("des = valleys + triple falls", perm_n, bad_prop1 is None, bad_prop1),
    ]


def run_suite(
    suite: str, max_n: int, bounds: Bounds = DEFAULT_BOUNDS, unsafe: bool = False, direct: bool = False
) -> List[CheckReport]:
    """Run one suite (or ``"all"``) and return its reports.

    Raises BoundExceededError when ``max_n`` is beyond the suite's cap and
    ``unsafe`` is false. The permutation oracle is capped separately and runs
    to ``min(max_n, bounds.perm_oracle)``.
    """
    if suite == "all":
        out: List[CheckReport] = []
        for s in SUITES:
            out.extend(run_suite(s, max_n, bounds, unsafe, direct))
        return out
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    if unsafe:
        bounds = Bounds(max_n, max_n, max(max_n, bounds.perm_oracle), max_n)
    if suite == "oracle":
        if max_n > bounds.path_oracle:
            raise BoundExceededError("oracle suite", max_n, bounds.path_oracle)
        perm_n = min(max_n, bounds.perm_oracle)
        return (
            tables_vs_oracle(max_n, bounds)
            + [eulerian_vs_oracle(perm_n, bounds)]
            + bijection_round_trips(max_n, perm_n)
        )
    if max_n > bounds.series_order:
        raise BoundExceededError(f"{suite} suite", max_n, bounds.series_order)
    a, b = build_tables(max_n)
    if suite == "equations":
        return check_functional_equations(a, b, max_n)
    if suite == "theorem5":
        return check_theorem5(a, max_n, direct=direct)
    if suite == "theorem6":
        return check_theorem6(a, eulerian_rows(max_n, a), max_n, direct=direct)
    return check_specializations(a, max_n, oracle_n=min(max_n, bounds.path_oracle))
