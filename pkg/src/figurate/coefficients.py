"""The coefficients c(p, ell) expanding n^p over figurate numbers.

n^p = sum over ell of (-1)^ell * c(p, ell) * F_n^(p - ell), and every
route here computes the same c(p, ell) by a different mechanism:

* closed:      (p - ell)! * S(p, p - ell) with S of the second kind.
* enum_k:      sum of p! / prod((k_i + 1)!) over the constrained
               nonnegative tuples of enumeration.enumerate_k_tuples.
* enum_j:      sum of p! / prod(j_i!) over the positive tuples of
               enumeration.enumerate_j_tuples.
* recurrence:  c(p, ell) = (p - ell) * [c(p-1, ell) + c(p-1, ell-1)]
               between the boundary columns p! and 1.
* decompose:   with j = p - ell, group the enum_j sum by the number t of
               parts >= 2: sum over t of C(j, t) times the sum of
               p! / prod(s_i!) over compositions of p + t - j into t
               parts, each >= 2 (and p! outright for j = p).
* eulerian2:   (p - ell)! * sum over i of <<ell, i>> * C(p + ell - 1 - i, 2*ell)
               with second-kind Eulerian numbers.
* alternating: with j = p - ell, the inclusion-exclusion surjection count
               sum over r of (-1)^r * C(j, r) * (j - r)^p.

certify() runs them all (enumerative ones behind a size guard) and
reports whether they agree; their agreement is the checkable content of
the whole construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .combinatorics import _RowTable, binomial, factorial
from .combinatorics import eulerian_second, stirling2
from .enumeration import enumerate_compositions, enumerate_j_tuples, enumerate_k_tuples

#: Canonical route order, used everywhere output is serialized.
ROUTES = (
    "closed",
    "enum_k",
    "enum_j",
    "recurrence",
    "decompose",
    "eulerian2",
    "alternating",
)

#: Routes whose cost grows like C(p-1, j-1) summed over j; certify() and
#: the verification suites skip these for p above the size guard.
ENUMERATIVE_ROUTES = frozenset({"enum_k", "enum_j", "decompose"})

DEFAULT_SIZE_GUARD = 14


def _check_pair(p: int, ell: int) -> None:
    if p < 1:
        raise ValueError(f"p must be positive, got {p}")
    if not 0 <= ell <= p - 1:
        raise ValueError(f"ell must lie in 0..{p - 1}, got {ell}")


def _check_j(p: int, j: int, j_max: int) -> None:
    if p < 1:
        raise ValueError(f"p must be positive, got {p}")
    if not 1 <= j <= j_max:
        raise ValueError(f"j must lie in 1..{j_max}, got {j}")


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise RuntimeError(f"internal error: {num} not divisible by {den}")
    return q


def c_closed(p: int, ell: int) -> int:
    """(p - ell)! * S(p, p - ell)."""
    _check_pair(p, ell)
    return factorial(p - ell) * stirling2(p, p - ell)


def c_enum_k(p: int, ell: int) -> int:
    """Sum of p! / prod((k_i + 1)!) over the admissible nonnegative tuples."""
    _check_pair(p, ell)
    fact_p = factorial(p)
    total = 0
    for entries in enumerate_k_tuples(p, ell):
        den = math.prod(factorial(e + 1) for e in entries)
        total += _exact_div(fact_p, den)
    return total


def c_enum_j(p: int, ell: int) -> int:
    """Sum of p! / prod(j_i!) over the admissible positive tuples."""
    _check_pair(p, ell)
    fact_p = factorial(p)
    total = 0
    for entries in enumerate_j_tuples(p, ell):
        den = math.prod(factorial(e) for e in entries)
        total += _exact_div(fact_p, den)
    return total


def _recurrence_step(prev: tuple, index: int) -> list:
    p = index + 1
    row = [0] * p
    row[0] = factorial(p)
    row[p - 1] = 1
    for ell in range(1, p - 1):
        row[ell] = (p - ell) * (prev[ell] + prev[ell - 1])
    return row


_RECURRENCE = _RowTable((1,), _recurrence_step)  # rows[i] holds p = i + 1


def c_recurrence(p: int, ell: int) -> int:
    """Dynamic programming on (p - ell) * [c(p-1, ell) + c(p-1, ell-1)]."""
    _check_pair(p, ell)
    return _RECURRENCE.row(p - 1)[ell]


def decompose_groups(p: int, j: int) -> list[tuple[int, int, int]]:
    """Per-t groups (t, C(j, t), inner sum) of the decompose route.

    The inner sum for each t runs p! / prod(s_i!) over the compositions
    of p + t - j into t parts, each part >= 2. Requires 1 <= j <= p - 1.
    """
    _check_j(p, j, p - 1)
    fact_p = factorial(p)
    groups = []
    for t in range(1, j + 1):
        inner = 0
        for comp in enumerate_compositions(p + t - j, t, 2):
            den = math.prod(factorial(s) for s in comp)
            inner += _exact_div(fact_p, den)
        groups.append((t, binomial(j, t), inner))
    return groups


def c_decompose(p: int, j: int) -> int:
    """c(p, p - j) via the grouped composition sums; p! for j = p."""
    _check_j(p, j, p)
    if j == p:
        return factorial(p)
    return sum(weight * inner for _, weight, inner in decompose_groups(p, j))


def c_eulerian2(p: int, ell: int) -> int:
    """(p - ell)! * sum of <<ell, i>> * C(p + ell - 1 - i, 2*ell)."""
    _check_pair(p, ell)
    total = sum(
        eulerian_second(ell, i) * binomial(p + ell - 1 - i, 2 * ell)
        for i in range(ell + 1)
    )
    return factorial(p - ell) * total


def c_alternating(p: int, j: int) -> int:
    """c(p, p - j) by inclusion-exclusion: sum of (-1)^r C(j, r) (j - r)^p."""
    _check_j(p, j, p)
    return sum((-1) ** r * binomial(j, r) * (j - r) ** p for r in range(j))


def w_sum(p: int, j: int) -> int:
    """Total weight of the length-j compositions of p containing a part 1.

    Computed two ways, which must agree: as the binomially weighted
    composition sums over t = 1..j-1, and directly by filtering the
    min-part-1 compositions of p for a part equal to 1. Requires
    1 <= j <= p - 1 (so the all-ones tuple never sums to p).
    """
    _check_j(p, j, p - 1)
    fact_p = factorial(p)

    weighted = 0
    for t in range(1, j):
        inner = 0
        for comp in enumerate_compositions(p + t - j, t, 2):
            inner += _exact_div(fact_p, math.prod(factorial(s) for s in comp))
        weighted += binomial(j, t) * inner

    direct = 0
    for comp in enumerate_compositions(p, j, 1):
        if 1 in comp:
            direct += _exact_div(fact_p, math.prod(factorial(w) for w in comp))

    if weighted != direct:
        raise RuntimeError(
            f"internal error: W({p},{j}) mismatch, weighted={weighted} direct={direct}"
        )
    return weighted


def summand_count(p: int, j: int) -> int:
    """Number of individual composition summands in the decompose route:
    sum of C(j, t) * C(p - j - 1, t - 1) over t, which must equal
    C(p - 1, j - 1)."""
    _check_j(p, j, p - 1)
    vandermonde = sum(
        binomial(j, t) * binomial(p - j - 1, t - 1) for t in range(1, j + 1)
    )
    closed = binomial(p - 1, j - 1)
    if vandermonde != closed:
        raise RuntimeError(
            f"internal error: N({p},{j}) mismatch, sum={vandermonde} closed={closed}"
        )
    return closed


def coefficient(p: int, ell: int, route: str = "closed") -> int:
    """c(p, ell) by the named route."""
    _check_pair(p, ell)
    if route == "closed":
        return c_closed(p, ell)
    if route == "enum_k":
        return c_enum_k(p, ell)
    if route == "enum_j":
        return c_enum_j(p, ell)
    if route == "recurrence":
        return c_recurrence(p, ell)
    if route == "decompose":
        return c_decompose(p, p - ell)
    if route == "eulerian2":
        return c_eulerian2(p, ell)
    if route == "alternating":
        return c_alternating(p, p - ell)
    raise ValueError(f"unknown route {route!r}; expected one of {ROUTES}")


@dataclass(frozen=True)
class CoeffTriangle:
    """Rows of c(p, ell) for p = 1..pmax, ell = 0..p-1."""

    pmax: int
    rows: tuple[tuple[int, ...], ...]

    def row(self, p: int) -> tuple[int, ...]:
        return self.rows[p - 1]


def build_triangle(pmax: int, route: str = "closed") -> CoeffTriangle:
    """The full triangle up to pmax by the named route."""
    if pmax < 1:
        raise ValueError(f"pmax must be positive, got {pmax}")
    if route not in ROUTES:
        raise ValueError(f"unknown route {route!r}; expected one of {ROUTES}")
    rows = tuple(
        tuple(coefficient(p, ell, route) for ell in range(p)) for p in range(1, pmax + 1)
    )
    return CoeffTriangle(pmax, rows)


@dataclass(frozen=True)
class RouteReport:
    """Per-route values of c(p, ell) and whether they agree.

    Routes skipped by the size guard are listed in `skipped`, never
    silently dropped; a skip is not a disagreement.
    """

    p: int
    ell: int
    values: dict[str, int]
    skipped: tuple[str, ...] = field(default=())

    @property
    def agree(self) -> bool:
        return len(set(self.values.values())) == 1

    @property
    def value(self) -> int:
        """The common value; meaningful when agree is True."""
        return self.values["closed"]


def certify(p: int, ell: int, size_guard: int = DEFAULT_SIZE_GUARD) -> RouteReport:
    """Evaluate every route at (p, ell), skipping enumerative routes when
    p exceeds size_guard, and report agreement."""
    _check_pair(p, ell)
    values: dict[str, int] = {}
    skipped: list[str] = []
    for route in ROUTES:
        if route in ENUMERATIVE_ROUTES and p > size_guard:
            skipped.append(route)
            continue
        values[route] = coefficient(p, ell, route)
    return RouteReport(p, ell, values, tuple(skipped))
