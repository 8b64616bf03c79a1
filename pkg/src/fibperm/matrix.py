"""Immutable dense matrices of Python (arbitrary precision) integers.

Indices passed to the public helpers in this package are 1-based, the same
convention the reports use. Internally rows are plain tuples and are
addressed 0-based.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Iterable, Sequence

from fibperm.errors import MatrixError

__all__ = [
    "IntMatrix",
    "make_matrix",
    "identity",
    "ones",
    "transpose",
    "hadamard",
    "is_square",
    "is_lower_hessenberg",
]


@dataclass(frozen=True)
class IntMatrix:
    """A non-empty rectangular grid of integers.

    Build instances with :func:`make_matrix`; the constructor expects
    ``rows`` to already be a tuple of equal-length int tuples.
    """

    rows: tuple

    def __post_init__(self):
        if not self.rows or not self.rows[0]:
            raise MatrixError("matrix must have at least one row and one column")
        width = len(self.rows[0])
        for r, row in enumerate(self.rows):
            if len(row) != width:
                raise MatrixError(
                    "ragged input: row %d has %d entries, expected %d"
                    % (r + 1, len(row), width))

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self) -> tuple:
        return (self.n_rows, self.n_cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple:
        """Column ``j`` (0-based) as a tuple."""
        return tuple(row[j] for row in self.rows)

    def tolist(self) -> list:
        return [list(row) for row in self.rows]

    def __str__(self):
        cells = [[str(x) for x in row] for row in self.rows]
        width = max(len(c) for row in cells for c in row)
        return "\n".join(
            "[" + " ".join(c.rjust(width) for c in row) + "]" for row in cells)


def _as_int(x):
    if isinstance(x, bool):
        raise MatrixError("boolean entries are not integers: %r" % (x,))
    try:
        return operator.index(x)
    except TypeError:
        raise MatrixError("entry %r is not an integer" % (x,)) from None


def make_matrix(rows: Iterable[Sequence[int]]) -> IntMatrix:
    """Validate ``rows`` and freeze them into an :class:`IntMatrix`."""
    if isinstance(rows, IntMatrix):
        return rows
    frozen = tuple(tuple(_as_int(x) for x in row) for row in rows)
    return IntMatrix(frozen)


def identity(n: int) -> IntMatrix:
    return IntMatrix(tuple(
        tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))


def ones(n_rows: int, n_cols: int | None = None) -> IntMatrix:
    n_cols = n_rows if n_cols is None else n_cols
    return IntMatrix(tuple((1,) * n_cols for _ in range(n_rows)))


def transpose(a: IntMatrix) -> IntMatrix:
    return IntMatrix(tuple(zip(*a.rows)))


def hadamard(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Elementwise product of two equally shaped matrices."""
    if a.shape != b.shape:
        raise MatrixError(
            "hadamard product needs equal shapes, got %dx%d and %dx%d"
            % (a.shape + b.shape))
    return IntMatrix(tuple(
        tuple(x * y for x, y in zip(ra, rb)) for ra, rb in zip(a.rows, b.rows)))


def is_square(a: IntMatrix) -> bool:
    return a.n_rows == a.n_cols


def _require_square(a: IntMatrix, what: str):
    if not is_square(a):
        raise MatrixError("%s needs a square matrix, got %dx%d"
                          % ((what,) + a.shape))


def is_lower_hessenberg(a: IntMatrix) -> bool:
    """True when every entry above the superdiagonal is zero."""
    _require_square(a, "is_lower_hessenberg")
    return all(not any(row[i + 2:]) for i, row in enumerate(a.rows))
