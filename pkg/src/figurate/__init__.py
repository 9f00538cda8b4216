"""Exact arithmetic for figurate-number expansions of powers and power sums.

Everything here is integer or rational arithmetic with no rounding: the
coefficients that expand n^p over the figurate numbers F_n^k, the
triangular transition matrices between the power and figurate bases, and
several equivalent closed forms for sum(r^p, r=1..n), each checkable
against the others.
"""

__version__ = "0.1.0"
