"""Classical counting families, computed exactly by their recurrences.

Triangles covered: unsigned Stirling numbers of the first kind s(k,r),
Stirling numbers of the second kind S(k,j), Eulerian numbers of the first
kind, and Eulerian numbers of the second kind. Rows are built once by the
triangular recurrence of each family and memoized for the process
lifetime; the row tables only ever grow and are safe to use from several
threads.

Index conventions (they differ between families on purpose):

* stirling1 / stirling2: row k has entries 0..k, s(0,0) = S(0,0) = 1.
* eulerian1: 1-based, row p has entries j = 1..p with <p,1> = 1. This is
  shifted by one against the common 0-based convention.
* eulerian2: 0-based, row 0 is the single entry <<0,0>> = 1 and row l has
  entries j = 0..l-1 for l >= 1.
"""

from __future__ import annotations

import itertools
import math
import threading
from dataclasses import dataclass
from typing import Callable, Sequence

#: Triangle families understood by number_triangle().
FAMILIES = ("stirling1", "stirling2", "eulerian1", "eulerian2")

#: surjection_brute refuses instances with more than this many functions.
BRUTE_FORCE_LIMIT = 10**8


def factorial(n: int) -> int:
    """n! for n >= 0."""
    if n < 0:
        raise ValueError(f"factorial of negative {n}")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """C(n, k) for n, k >= 0, zero when k > n."""
    if n < 0 or k < 0:
        raise ValueError(f"binomial arguments must be nonnegative, got ({n}, {k})")
    return math.comb(n, k)


def multinomial(parts: Sequence[int]) -> int:
    """(sum parts)! / prod(part!) over nonnegative parts."""
    if any(p < 0 for p in parts):
        raise ValueError(f"multinomial parts must be nonnegative, got {parts}")
    num = math.factorial(sum(parts))
    den = math.prod(math.factorial(p) for p in parts)
    return num // den


class _RowTable:
    """Monotonically growing memo of triangle rows.

    Rows are tuples and only appended, never replaced, so readers that
    race the lock still see consistent data.
    """

    def __init__(self, seed: Sequence[int], step: Callable[[tuple, int], list]):
        self._rows: list[tuple[int, ...]] = [tuple(seed)]
        self._step = step
        self._lock = threading.Lock()

    def row(self, index: int) -> tuple[int, ...]:
        if index < len(self._rows):
            return self._rows[index]
        with self._lock:
            while len(self._rows) <= index:
                prev = self._rows[-1]
                self._rows.append(tuple(self._step(prev, len(self._rows))))
        return self._rows[index]


def _stirling1_step(prev: tuple, k: int) -> list:
    # s(k,r) = s(k-1,r-1) + (k-1) s(k-1,r)
    return [
        (prev[r - 1] if r >= 1 else 0) + (k - 1) * (prev[r] if r < len(prev) else 0)
        for r in range(k + 1)
    ]


def _stirling2_step(prev: tuple, k: int) -> list:
    # S(k,j) = j S(k-1,j) + S(k-1,j-1)
    return [
        j * (prev[j] if j < len(prev) else 0) + (prev[j - 1] if j >= 1 else 0)
        for j in range(k + 1)
    ]


def _eulerian1_step(prev: tuple, index: int) -> list:
    # 1-based: <p,j> = j <p-1,j> + (p-j+1) <p-1,j-1>; row index i holds p = i+1
    p = index + 1

    def at(j: int) -> int:  # prev row is p-1, entries j = 1..p-1
        return prev[j - 1] if 1 <= j <= p - 1 else 0

    return [j * at(j) + (p - j + 1) * at(j - 1) for j in range(1, p + 1)]


def _eulerian2_step(prev: tuple, n: int) -> list:
    # <<n,k>> = (k+1) <<n-1,k>> + (2n-1-k) <<n-1,k-1>>
    prev_len = len(prev)

    def at(k: int) -> int:
        return prev[k] if 0 <= k < prev_len else 0

    return [(k + 1) * at(k) + (2 * n - 1 - k) * at(k - 1) for k in range(n)]


_STIRLING1 = _RowTable((1,), _stirling1_step)
_STIRLING2 = _RowTable((1,), _stirling2_step)
_EULERIAN1 = _RowTable((1,), _eulerian1_step)  # rows[i] is row p = i+1
_EULERIAN2 = _RowTable((1,), _eulerian2_step)


def stirling1_unsigned(k: int, r: int) -> int:
    """Unsigned Stirling number of the first kind s(k, r).

    Counts k-permutations with r cycles; zero outside 0 <= r <= k except
    s(0,0) = 1.
    """
    if k < 0:
        raise ValueError(f"negative row {k}")
    if r < 0 or r > k:
        return 0
    return _STIRLING1.row(k)[r]


def stirling2(k: int, j: int) -> int:
    """Stirling number of the second kind S(k, j); zero when j > k."""
    if k < 0:
        raise ValueError(f"negative row {k}")
    if j < 0 or j > k:
        return 0
    return _STIRLING2.row(k)[j]


def eulerian_first(p: int, j: int) -> int:
    """First-kind Eulerian number, 1-based: <p,1> = 1, valid for 1 <= j <= p."""
    if p < 1:
        raise ValueError(f"row must be positive, got {p}")
    if not 1 <= j <= p:
        raise ValueError(f"index {j} out of range 1..{p}")
    return _EULERIAN1.row(p - 1)[j - 1]


def eulerian_second(l: int, j: int) -> int:
    """Second-kind Eulerian number <<l, j>>, 0-based, <<0,0>> = 1.

    Zero outside the triangle (j < 0, or j >= l for l >= 1, or (0, j != 0)).
    """
    if l < 0:
        raise ValueError(f"negative row {l}")
    if j < 0 or j >= max(l, 1):
        return 0
    return _EULERIAN2.row(l)[j]


def surjection_count(m: int, n: int) -> int:
    """Number of surjections from an m-set onto an n-set: n! * S(m, n).

    Returns 0 when m < n (no surjection exists).
    """
    if m < 1 or n < 1:
        raise ValueError(f"set sizes must be positive, got ({m}, {n})")
    if m < n:
        return 0
    return math.factorial(n) * stirling2(m, n)


def surjection_brute(m: int, n: int) -> int:
    """Surjection count by exhaustive enumeration of all n**m functions.

    Independent of surjection_count: every map from {1..m} to {1..n} is
    generated and tested for being onto. Refuses instances beyond
    BRUTE_FORCE_LIMIT functions.
    """
    if m < 1 or n < 1:
        raise ValueError(f"set sizes must be positive, got ({m}, {n})")
    if n**m > BRUTE_FORCE_LIMIT:
        raise ValueError(
            f"refusing brute-force enumeration: {n}**{m} functions exceeds "
            f"the bound {BRUTE_FORCE_LIMIT}"
        )
    if m < n:
        return 0
    full = frozenset(range(n))
    return sum(
        1 for f in itertools.product(range(n), repeat=m) if frozenset(f) == full
    )


@dataclass(frozen=True)
class NumberTriangle:
    """Rows of one counting family, in its canonical shape.

    first_row is the row index of rows[0] (1 for the 1-based first-kind
    Eulerian family, 0 otherwise).
    """

    family: str
    rows: tuple[tuple[int, ...], ...]
    first_row: int = 0

    def row(self, k: int) -> tuple[int, ...]:
        return self.rows[k - self.first_row]


def number_triangle(family: str, max_row: int) -> NumberTriangle:
    """All rows of the named family up to max_row inclusive."""
    if family == "stirling1":
        rows = tuple(_STIRLING1.row(k) for k in range(max_row + 1))
        return NumberTriangle(family, rows)
    if family == "stirling2":
        rows = tuple(_STIRLING2.row(k) for k in range(max_row + 1))
        return NumberTriangle(family, rows)
    if family == "eulerian1":
        if max_row < 1:
            raise ValueError("eulerian1 rows start at 1")
        rows = tuple(_EULERIAN1.row(p - 1) for p in range(1, max_row + 1))
        return NumberTriangle(family, rows, first_row=1)
    if family == "eulerian2":
        rows = tuple(_EULERIAN2.row(n) for n in range(max_row + 1))
        return NumberTriangle(family, rows)
    raise ValueError(f"unknown triangle family {family!r}; expected one of {FAMILIES}")
