"""Descent distribution over 123-avoiding permutations, computed through Dyck paths."""

from descent123.bijection import check_prop1, kappa, kappa_inverse
from descent123.dyck import DyckPath, parse_path, triple_falls, valleys
from descent123.perm import Permutation, avoids_123, descent_count, parse_permutation
from descent123.tables import build_tables, eulerian_rows

__all__ = [
    "DyckPath",
    "Permutation",
    "avoids_123",
    "build_tables",
    "check_prop1",
    "descent_count",
    "eulerian_rows",
    "kappa",
    "kappa_inverse",
    "parse_path",
    "parse_permutation",
    "triple_falls",
    "valleys",
]
