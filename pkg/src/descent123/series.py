"""Truncated power series in x with exact polynomial coefficients in y, z.

A coefficient is a dict ``{(deg_y, deg_z): value}`` holding ints, or
``Fraction`` when a denominator survives. Nothing here touches floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from descent123.tables import EulerianRow, TriStatTable

Scalar = Union[int, Fraction]
Poly = Dict[Tuple[int, int], Scalar]


def _norm(c: Scalar) -> Scalar:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def poly_add(f: Poly, g: Poly, sign: int = 1) -> Poly:
    out = dict(f)
    for k, c in g.items():
        v = out.get(k, 0) + sign * c
        if v:
            out[k] = _norm(v)
        else:
            out.pop(k, None)
    return out


def poly_mul(f: Poly, g: Poly) -> Poly:
    out: Dict[Tuple[int, int], Scalar] = {}
    for (a, b), c in f.items():
        for (d, e), h in g.items():
            k = (a + d, b + e)
            out[k] = out.get(k, 0) + c * h
    return {k: _norm(v) for k, v in sorted(out.items()) if v}


def poly_scale(f: Poly, c: Scalar) -> Poly:
    if not c:
        return {}
    return {k: _norm(v * c) for k, v in f.items()}


def poly_div_monomial(f: Poly, m: Poly) -> Poly:
    """Exact division by a one-term polynomial; raises if it does not divide."""
    if len(m) != 1:
        raise ArithmeticError(f"divisor {m} is not a monomial")
    ((dy, dz), c), = m.items()
    out = {}
    for (a, b), v in f.items():
        if a < dy or b < dz:
            raise ArithmeticError(f"y^{a} z^{b} is not divisible by y^{dy} z^{dz}")
        out[(a - dy, b - dz)] = _norm(Fraction(v) / c)
    return out


def poly_str(f: Poly) -> str:
    if not f:
        return "0"
    terms = []
    for (a, b), c in sorted(f.items()):
        mono = "".join(
            s for s in (
                "" if a == 0 else ("y" if a == 1 else f"y^{a}"),
                "" if b == 0 else ("z" if b == 1 else f"z^{b}"),
            )
        )
        if not mono:
            terms.append(str(c))
        elif c == 1:
            terms.append(mono)
        elif c == -1:
            terms.append("-" + mono)
        else:
            terms.append(f"{c}*{mono}")
    return " + ".join(terms).replace("+ -", "- ")


class PolySeries:
    """Series ``sum_{n <= order} c_n(y, z) x^n``, truncated at ``order``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence[Poly], order: Optional[int] = None):
        if order is None:
            order = len(coeffs) - 1
        cs = [{k: _norm(v) for k, v in c.items() if v} for c in coeffs[: order + 1]]
        cs.extend({} for _ in range(order + 1 - len(cs)))
        self.order = order
        self.coeffs: Tuple[Poly, ...] = tuple(cs)

    # -- construction ----------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "PolySeries":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "PolySeries":
        return cls.from_terms({(0, 0, 0): 1}, order)

    @classmethod
    def from_terms(cls, terms: Dict[Tuple[int, int, int], Scalar], order: int) -> "PolySeries":
        """Build from ``{(deg_x, deg_y, deg_z): c}``; terms above ``order`` are dropped."""
        cs: List[Poly] = [{} for _ in range(order + 1)]
        for (n, a, b), c in terms.items():
            if n <= order and c:
                cs[n][(a, b)] = cs[n].get((a, b), 0) + c
        return cls(cs, order)

    # -- ring operations -------------------------------------------------

    def _coerce(self, other) -> "PolySeries":
        if isinstance(other, PolySeries):
            return other
        if isinstance(other, (int, Fraction)):
            return PolySeries.from_terms({(0, 0, 0): other}, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        return PolySeries([poly_add(self.coeffs[i], other.coeffs[i]) for i in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return PolySeries([poly_scale(c, -1) for c in self.coeffs], self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        return PolySeries([poly_add(self.coeffs[i], other.coeffs[i], -1) for i in range(n + 1)], n)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PolySeries([poly_scale(c, other) for c in self.coeffs], self.order)
        if not isinstance(other, PolySeries):
            return NotImplemented
        n = min(self.order, other.order)
        out: List[Poly] = [{} for _ in range(n + 1)]
        for i in range(n + 1):
            f = self.coeffs[i]
            if not f:
                continue
            for j in range(n + 1 - i):
                g = other.coeffs[j]
                if g:
                    out[i + j] = poly_add(out[i + j], poly_mul(f, g))
        return PolySeries(out, n)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, PolySeries):
            return NotImplemented
        return self.first_difference(other) is None

    def __repr__(self):
        return f"PolySeries(order={self.order}, {self})"

    def __str__(self):
        parts = []
        for n, c in enumerate(self.coeffs):
            if c:
                parts.append(f"({poly_str(c)})*x^{n}" if n else f"({poly_str(c)})")
        return " + ".join(parts) if parts else "0"

    # -- utilities -------------------------------------------------------

    def coefficient(self, n: int) -> Poly:
        return self.coeffs[n]

    def truncate(self, order: int) -> "PolySeries":
        return PolySeries(self.coeffs[: order + 1], min(order, self.order))

    def shift(self, k: int = 1) -> "PolySeries":
        """Multiply by ``x^k``."""
        return PolySeries([{}] * k + list(self.coeffs[: self.order + 1 - k]), self.order)

    def monomial_times(self, c: Scalar, dx: int, dy: int, dz: int) -> "PolySeries":
        """Multiply by ``c x^dx y^dy z^dz``."""
        shifted = [
            {(a + dy, b + dz): v * c for (a, b), v in poly.items()} for poly in self.coeffs
        ]
        return PolySeries(([{}] * dx + shifted)[: self.order + 1], self.order)

    def is_integral(self) -> bool:
        return all(isinstance(v, int) for c in self.coeffs for v in c.values())

    def is_nonnegative_integral(self) -> bool:
        return all(isinstance(v, int) and v >= 0 for c in self.coeffs for v in c.values())

    def substitute(self, y: Optional[Scalar] = None, z: Optional[Scalar] = None) -> "PolySeries":
        """Set y and/or z to numbers; the variable's exponent becomes 0."""
        out = []
        for poly in self.coeffs:
            acc: Poly = {}
            for (a, b), c in poly.items():
                if y is not None:
                    c, a = c * Fraction(y) ** a, 0
                if z is not None:
                    c, b = c * Fraction(z) ** b, 0
                acc[(a, b)] = acc.get((a, b), 0) + c
            out.append(acc)
        return PolySeries(out, self.order)

    def z_to_y(self) -> "PolySeries":
        """The specialization ``z <- y``."""
        out = []
        for poly in self.coeffs:
            acc: Poly = {}
            for (a, b), c in poly.items():
                acc[(a + b, 0)] = acc.get((a + b, 0), 0) + c
            out.append(acc)
        return PolySeries(out, self.order)

    def first_difference(self, other: "PolySeries") -> Optional[Tuple[int, int, int, Scalar, Scalar]]:
        """Lexicographically first ``(n, deg_y, deg_z, mine, theirs)`` that differs."""
        n = min(self.order, other.order)
        for i in range(n + 1):
            f, g = self.coeffs[i], other.coeffs[i]
            if f == g:
                continue
            for key in sorted(set(f) | set(g)):
                u, v = f.get(key, 0), g.get(key, 0)
                if u != v:
                    return (i, key[0], key[1], u, v)
        return None


# --- inverse, sqrt, division -------------------------------------------------


def _require_unit_constant(r: PolySeries, what: str) -> None:
    if r.coeffs[0] != {(0, 0): 1}:
        raise ValueError(f"{what}: constant term must be 1, got {poly_str(r.coeffs[0])}")


def series_inverse(s: PolySeries, order: Optional[int] = None) -> PolySeries:
    """``1/s`` for a series with constant term 1."""
    _require_unit_constant(s, "series_inverse")
    n = s.order if order is None else min(order, s.order)
    inv: List[Poly] = [{(0, 0): 1}]
    for k in range(1, n + 1):
        acc: Poly = {}
        for i in range(1, k + 1):
            if s.coeffs[i] and inv[k - i]:
                acc = poly_add(acc, poly_mul(s.coeffs[i], inv[k - i]))
        inv.append(poly_scale(acc, -1))
    return PolySeries(inv, n)


def _sqrt_recurrence(r: PolySeries) -> PolySeries:
    # from S^2 = r: 2 S_n = r_n - sum_{0<i<n} S_i S_{n-i}
    half = Fraction(1, 2)
    s: List[Poly] = [{(0, 0): 1}]
    for n in range(1, r.order + 1):
        acc = dict(r.coeffs[n])
        for i in range(1, n):
            if s[i] and s[n - i]:
                acc = poly_add(acc, poly_mul(s[i], s[n - i]), -1)
        s.append(poly_scale(acc, half))
    return PolySeries(s, r.order)


def _sqrt_newton(r: PolySeries) -> PolySeries:
    s = PolySeries.one(0)
    prec = 0
    half = Fraction(1, 2)
    while prec < r.order:
        prec = min(2 * prec + 1, r.order)
        s = PolySeries(s.coeffs, prec)
        s = (s + r.truncate(prec) * series_inverse(s)) * half
    return PolySeries(s.coeffs, r.order)


def series_sqrt(r: PolySeries, method: str = "newton") -> PolySeries:
    """Square root with constant term 1.

    ``method`` is ``"newton"`` (precision doubling) or ``"recurrence"``
    (coefficient-by-coefficient from ``S^2 = r``).
    """
    _require_unit_constant(r, "series_sqrt")
    if method == "newton":
        return _sqrt_newton(r)
    if method == "recurrence":
        return _sqrt_recurrence(r)
    raise ValueError(f"unknown sqrt method {method!r}")


def series_divide(num: PolySeries, den: PolySeries) -> PolySeries:
    """Exact ``num / den`` when den's lowest x-coefficient is a monomial.

    If den starts at ``x^v`` the quotient is known to order ``order - v``.
    Raises ArithmeticError when a step is not exactly divisible.
    """
    v = next((i for i, c in enumerate(den.coeffs) if c), None)
    if v is None:
        raise ZeroDivisionError("division by the zero series")
    for i in range(min(v, num.order + 1)):
        if num.coeffs[i]:
            raise ArithmeticError(f"numerator has a nonzero x^{i} term below the divisor's valuation")
    n = min(num.order, den.order) - v
    lead = den.coeffs[v]
    q: List[Poly] = []
    for k in range(n + 1):
        acc = dict(num.coeffs[k + v])
        for i in range(1, k + 1):
            d = den.coeffs[v + i]
            if d and q[k - i]:
                acc = poly_add(acc, poly_mul(d, q[k - i]), -1)
        q.append(poly_div_monomial(acc, lead))
    return PolySeries(q, n)


# --- series built from the tables -------------------------------------------


def A_from_tables(a: TriStatTable, max_n: Optional[int] = None) -> PolySeries:
    n = a.max_n if max_n is None else max_n
    return PolySeries([dict(a[i]) for i in range(n + 1)], n)


def B_from_tables(b: TriStatTable, max_n: Optional[int] = None) -> PolySeries:
    """B with the constant term 1 that the empty path contributes by convention."""
    n = b.max_n if max_n is None else max_n
    return PolySeries([{(0, 0): 1}] + [dict(b[i]) for i in range(1, n + 1)], n)


def E_from_rows(rows: Sequence[EulerianRow]) -> PolySeries:
    cs = [{(k, 0): c for k, c in enumerate(row.counts) if c} for row in rows]
    return PolySeries(cs, len(rows) - 1)


def _poly_series(terms: Dict[Tuple[int, int, int], int], order: int) -> PolySeries:
    return PolySeries.from_terms(terms, order)


# Closed-form pieces, keyed by (deg_x, deg_y, deg_z).
ELEVATION_MULTIPLIER = {(1, 0, 1): 1, (2, 1, 0): 1, (2, 1, 1): -1}
ELEVATION_CORRECTION = {(0, 0, 0): 1, (1, 0, 0): 1, (2, 0, 0): 1, (2, 0, 1): -1}

TRIVARIATE_DENOMINATOR = {(1, 1, 1): -2, (2, 2, 1): 2, (2, 2, 0): -2}  # 2xy(xyz - z - xy)
TRIVARIATE_POLYNOMIAL = {
    (0, 0, 0): -1, (1, 1, 0): 1, (2, 1, 0): 2, (2, 2, 0): -2,
    (1, 0, 1): 1, (1, 1, 1): -2, (2, 1, 1): -2, (2, 2, 1): 2,
}
TRIVARIATE_RADICAND = {
    (0, 0, 0): 1, (1, 1, 0): -2, (2, 1, 0): -4, (2, 2, 0): 1,
    (1, 0, 1): -2, (2, 1, 1): 2, (2, 0, 2): 1,
}

EULERIAN_DENOMINATOR = {(2, 3, 0): 2, (1, 2, 0): -2, (2, 2, 0): -2}  # 2xy^2(xy - 1 - x)
EULERIAN_POLYNOMIAL = {
    (0, 0, 0): -1, (1, 1, 0): 2, (2, 1, 0): 2, (1, 2, 0): -2, (2, 2, 0): -4, (2, 3, 0): 2,
}
EULERIAN_RADICAND = {(0, 0, 0): 1, (1, 1, 0): -4, (2, 1, 0): -4, (2, 2, 0): 4}


def trivariate_radicand(order: int) -> PolySeries:
    return _poly_series(TRIVARIATE_RADICAND, order)


def eulerian_radicand(order: int) -> PolySeries:
    return _poly_series(EULERIAN_RADICAND, order)


def closed_form_A(order: int) -> PolySeries:
    """Expand the trivariate closed form directly, by exact series division."""
    num = _poly_series(TRIVARIATE_POLYNOMIAL, order + 1) + series_sqrt(trivariate_radicand(order + 1))
    return series_divide(num, _poly_series(TRIVARIATE_DENOMINATOR, order + 1))


def closed_form_E(order: int) -> PolySeries:
    num = _poly_series(EULERIAN_POLYNOMIAL, order + 1) + series_sqrt(eulerian_radicand(order + 1))
    return series_divide(num, _poly_series(EULERIAN_DENOMINATOR, order + 1))


# --- checks -----------------------------------------------------------------


@dataclass(frozen=True)
class CheckReport:
    name: str
    order: int
    passed: bool
    mismatch: Optional[Tuple[int, int, int, Scalar, Scalar]] = None

    def line(self) -> str:
        head = f"{self.name} order={self.order} {'PASS' if self.passed else 'FAIL'}"
        if self.mismatch is None:
            return head
        n, a, b, u, v = self.mismatch
        return f"{head} at x^{n} y^{a} z^{b}: lhs={u} rhs={v}"


def compare(name: str, lhs: PolySeries, rhs: PolySeries) -> CheckReport:
    diff = lhs.first_difference(rhs)
    return CheckReport(name, min(lhs.order, rhs.order), diff is None, diff)


def check_functional_equations(a: TriStatTable, b: TriStatTable, max_n: int) -> List[CheckReport]:
    A = A_from_tables(a, max_n)
    B = B_from_tables(b, max_n)
    rhs4 = (A - 1) * _poly_series(ELEVATION_MULTIPLIER, max_n) + _poly_series(ELEVATION_CORRECTION, max_n)
    rhs5 = B + ((B - 1) * (A - 1)).monomial_times(1, 0, 1, 0)
    return [compare("B-from-A", B, rhs4), compare("A-from-B", A, rhs5)]


def check_theorem5(a: TriStatTable, max_n: int, direct: bool = False) -> List[CheckReport]:
    A = A_from_tables(a, max_n)
    R = trivariate_radicand(max_n)
    S = series_sqrt(R)
    reports = [
        compare("theorem5-sqrt", S * S, R),
        compare(
            "theorem5",
            _poly_series(TRIVARIATE_DENOMINATOR, max_n) * A,
            _poly_series(TRIVARIATE_POLYNOMIAL, max_n) + S,
        ),
    ]
    if direct:
        reports.append(compare("theorem5-direct", closed_form_A(max_n), A))
    return reports


def check_theorem6(a: TriStatTable, rows: Sequence[EulerianRow], max_n: int, direct: bool = False) -> List[CheckReport]:
    A = A_from_tables(a, max_n)
    E = E_from_rows(rows[: max_n + 1])
    R = eulerian_radicand(max_n)
    S = series_sqrt(R)
    reports = [
        compare("theorem6-E=A(x,y,y)", E, A.z_to_y()),
        compare("theorem6-sqrt", S * S, R),
        compare(
            "theorem6",
            _poly_series(EULERIAN_DENOMINATOR, max_n) * E,
            _poly_series(EULERIAN_POLYNOMIAL, max_n) + S,
        ),
    ]
    if direct:
        reports.append(compare("theorem6-direct", closed_form_E(max_n), E))
    return reports


# --- specializations ----------------------------------------------------------


@dataclass(frozen=True)
class Specializations:
    catalan: Tuple[int, ...]  # A(x,1,1)
    motzkin: Tuple[int, ...]  # A(x,1,0)
    narayana: Tuple[Tuple[int, ...], ...]  # y A(x,y,1): row n, entry k = coeff of y^k
    ddd_triangle: Tuple[Tuple[int, ...], ...]  # A(x,1,z): row n, entry q = coeff of z^q


def _to_int(c: Scalar) -> int:
    c = _norm(c)
    if not isinstance(c, int):
        raise ArithmeticError(f"non-integer coefficient {c}")
    return c


def _univariate_rows(s: PolySeries, var: int) -> Tuple[Tuple[int, ...], ...]:
    rows = []
    for poly in s.coeffs:
        width = max((k[var] for k in poly), default=-1) + 1
        row = [0] * width
        for k, c in poly.items():
            row[k[var]] += _to_int(c)
        rows.append(tuple(row))
    return tuple(rows)


def specializations(a: TriStatTable, max_n: Optional[int] = None) -> Specializations:
    A = A_from_tables(a, max_n)
    cat = tuple(_to_int(c.get((0, 0), 0)) for c in A.substitute(y=1, z=1).coeffs)
    mot = tuple(_to_int(c.get((0, 0), 0)) for c in A.substitute(y=1, z=0).coeffs)
    nar = _univariate_rows(A.substitute(z=1).monomial_times(1, 0, 1, 0), 0)
    ddd = _univariate_rows(A.substitute(y=1), 1)
    return Specializations(cat, mot, nar, ddd)


def check_specializations(a: TriStatTable, max_n: int, oracle_n: int = 12) -> List[CheckReport]:
    """Compare the four specializations with sources that never touch the tables."""
    from descent123.sequences import catalan_numbers, motzkin_numbers, narayana
    from descent123.tables import oracle_ddd_counts

    sp = specializations(a, max_n)
    reports = []

    def seq_report(name: str, got: Sequence[int], want: Sequence[int]) -> CheckReport:
        for n, (u, v) in enumerate(zip(got, want)):
            if u != v:
                return CheckReport(name, max_n, False, (n, 0, 0, u, v))
        return CheckReport(name, max_n, True)

    reports.append(seq_report("catalan A(x,1,1)", sp.catalan, catalan_numbers(max_n + 1)))
    reports.append(seq_report("motzkin A(x,1,0)", sp.motzkin, motzkin_numbers(max_n + 1)))

    def triangle_report(name, rows, want_row, var_slot, upto, start=0):
        for n in range(start, upto + 1):
            got, want = tuple(rows[n]), tuple(want_row(n))
            width = max(len(got), len(want))
            got += (0,) * (width - len(got))
            want += (0,) * (width - len(want))
            for k, (u, v) in enumerate(zip(got, want)):
                if u != v:
                    key = (n, k, 0) if var_slot == 0 else (n, 0, k)
                    return CheckReport(name, upto, False, key + (u, v))
        return CheckReport(name, upto, True)

    reports.append(
        triangle_report(
            "narayana yA(x,y,1)", sp.narayana,
            lambda n: [narayana(n, k) for k in range(n + 1)], 0, max_n, start=1,
        )
    )
    symmetric = all(row[1:] == row[1:][::-1] for row in sp.narayana[1:])
    reports.append(CheckReport("narayana symmetry", max_n, symmetric))
    upto = min(max_n, oracle_n)
    reports.append(triangle_report("ddd-triangle A(x,1,z)", sp.ddd_triangle, oracle_ddd_counts, 1, upto))
    return reports
