"""Fibonacci and Lucas numbers and their partial sums, exact.

Every function walks the recurrence from the initial terms; nothing is
cached. Negative indices are rejected.
"""

from __future__ import annotations

import enum

__all__ = ["SequenceKind", "fib", "lucas", "fib_sum", "lucas_sum", "value"]


class SequenceKind(enum.Enum):
    FIBONACCI = "fib"
    LUCAS = "lucas"
    FIB_PARTIAL_SUM = "fib_sum"
    LUCAS_PARTIAL_SUM = "lucas_sum"


def _check_index(n, name):
    if n < 0:
        raise ValueError("%s is undefined for negative index %d" % (name, n))


def _walk(n, a, b):
    # a, b = x_0, x_1 of a sequence with x_{k+1} = x_k + x_{k-1}
    for _ in range(n):
        a, b = b, a + b
    return a


def fib(n: int) -> int:
    _check_index(n, "fib")
    return _walk(n, 0, 1)


def lucas(n: int) -> int:
    _check_index(n, "lucas")
    return _walk(n, 2, 1)


def _partial_sum(m, a, b):
    total = 0
    for _ in range(m + 1):
        total += a
        a, b = b, a + b
    return total


def fib_sum(m: int) -> int:
    """F_0 + F_1 + ... + F_m, added term by term."""
    _check_index(m, "fib_sum")
    return _partial_sum(m, 0, 1)


def lucas_sum(m: int) -> int:
    """L_0 + L_1 + ... + L_m, added term by term."""
    _check_index(m, "lucas_sum")
    return _partial_sum(m, 2, 1)


_DISPATCH = {
    SequenceKind.FIBONACCI: fib,
    SequenceKind.LUCAS: lucas,
    SequenceKind.FIB_PARTIAL_SUM: fib_sum,
    SequenceKind.LUCAS_PARTIAL_SUM: lucas_sum,
}


def value(kind: SequenceKind, n: int) -> int:
    return _DISPATCH[kind](n)
