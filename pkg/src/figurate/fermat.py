"""Fermat matrices: exact transition between power and figurate bases.

A_p is lower triangular with entries a(k, j) = s(k, j) / k! (unsigned
first-kind Stirling numbers), so that the column vector of F_n^1..F_n^p
equals A_p times the column vector of n..n^p. Its inverse has the closed
form a'(k, j) = (-1)^(k-j) * j! * S(k, j), and certify_inverse checks the
closed form against a forward-substitution inversion, exactly.

Matrix indices are 1-based at the API surface.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .combinatorics import factorial, stirling1_unsigned, stirling2
from .exact import Polynomial


class RationalMatrix:
    """Immutable dense square matrix of exact rationals, 1-based access."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Sequence[Sequence[Fraction | int]]):
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        object.__setattr__(
            self, "_rows", tuple(tuple(Fraction(x) for x in r) for r in rows)
        )

    def __setattr__(self, name, value):
        raise AttributeError("RationalMatrix is immutable")

    @property
    def order(self) -> int:
        return len(self._rows)

    def entry(self, k: int, j: int) -> Fraction:
        """Entry in row k, column j, both 1-based."""
        return self._rows[k - 1][j - 1]

    def row(self, k: int) -> tuple[Fraction, ...]:
        return self._rows[k - 1]

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.order != other.order:
            raise ValueError("order mismatch")
        n = self.order
        cols = list(zip(*other._rows))
        return RationalMatrix(
            [
                [sum(a * b for a, b in zip(row, col)) for col in cols]
                for row in self._rows
            ]
        )

    def is_identity(self) -> bool:
        return self == RationalMatrix.identity(self.order)

    def is_lower_triangular(self) -> bool:
        return all(
            self._rows[i][j] == 0 for i in range(self.order) for j in range(i + 1, self.order)
        )

    def __repr__(self) -> str:
        return f"RationalMatrix(order={self.order})"


def build_fermat(p: int) -> RationalMatrix:
    """A_p with entries s(k, j) / k!, zero above the diagonal."""
    if p < 1:
        raise ValueError(f"p must be positive, got {p}")
    return RationalMatrix(
        [
            [
                Fraction(stirling1_unsigned(k, j), factorial(k)) if j <= k else Fraction(0)
                for j in range(1, p + 1)
            ]
            for k in range(1, p + 1)
        ]
    )


def inverse_closed(p: int) -> RationalMatrix:
    """The closed-form inverse of A_p: (-1)^(k-j) * j! * S(k, j)."""
    if p < 1:
        raise ValueError(f"p must be positive, got {p}")
    return RationalMatrix(
        [
            [
                (-1) ** (k - j) * factorial(j) * stirling2(k, j) if j <= k else 0
                for j in range(1, p + 1)
            ]
            for k in range(1, p + 1)
        ]
    )


def invert_exact(m: RationalMatrix) -> RationalMatrix:
    """Exact inverse of a lower-triangular matrix by forward substitution."""
    if not m.is_lower_triangular():
        raise ValueError("matrix is not lower triangular")
    n = m.order
    if any(m.entry(k, k) == 0 for k in range(1, n + 1)):
        raise ValueError("matrix is singular: zero diagonal entry")
    a = m.rows
    inv = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        inv[i][i] = 1 / a[i][i]
        for j in range(i - 1, -1, -1):
            acc = sum(a[i][k] * inv[k][j] for k in range(j, i))
            inv[i][j] = -acc / a[i][i]
    return RationalMatrix(inv)


def certify_inverse(p: int) -> bool:
    """True iff the closed-form inverse is the exact two-sided inverse of
    A_p and matches the forward-substitution inversion entrywise."""
    a = build_fermat(p)
    closed = inverse_closed(p)
    ident = RationalMatrix.identity(p)
    return (
        (a @ closed) == ident
        and (closed @ a) == ident
        and invert_exact(a) == closed
    )


def figurate_polynomial(k: int) -> Polynomial:
    """F_n^k as an exact polynomial in n: (1/k!) * sum of s(k, r) n^r.

    Degree k, zero constant term; its coefficient list is row k of A_p
    for any p >= k.
    """
    if k < 1:
        raise ValueError(f"dimension must be positive, got {k}")
    kfact = factorial(k)
    return Polynomial(
        Fraction(stirling1_unsigned(k, r), kfact) for r in range(k + 1)
    )
