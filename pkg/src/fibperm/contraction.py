"""Row and column contraction, and the contraction-chain permanent.

If column k has exactly two nonzero entries a_ik and a_jk (i != j), the
contraction on column k replaces row i by a_jk*r_i + a_ik*r_j and deletes
row j and column k. The permanent is unchanged: expanding per(A) along
column k gives a_ik*per(A_ik) + a_jk*per(A_jk), and both minors share every
row except row j versus row i, so the sum is the permanent of the
combined row by multilinearity. No sign condition on the entries is
needed.

All indices here are 1-based.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from fibperm.errors import ContractionError, NotContractibleError, MatrixError
from fibperm.matrix import IntMatrix, is_square, transpose
from fibperm.permanent import NAIVE_MAX_N, RYSER_MAX_N, per_naive, per_ryser

__all__ = [
    "Axis",
    "ContractionStep",
    "ContractionTrace",
    "find_contractible_column",
    "contract_column",
    "contract_row",
    "per_contraction",
]


class Axis(enum.Enum):
    COLUMN = "column"
    ROW = "row"


@dataclass(frozen=True)
class ContractionStep:
    kind: Axis
    index_k: int
    kept_i: int
    removed_j: int
    mult_ik: int
    mult_jk: int
    result_dims: tuple

    def describe(self) -> str:
        other = "rows" if self.kind is Axis.COLUMN else "columns"
        return ("contract %s %d, %s i=%d j=%d, a_ik=%d a_jk=%d -> %dx%d"
                % ((self.kind.value, self.index_k, other, self.kept_i,
                    self.removed_j, self.mult_ik, self.mult_jk)
                   + tuple(self.result_dims)))


@dataclass(frozen=True)
class ContractionTrace:
    initial: IntMatrix
    steps: tuple = ()
    intermediates: tuple = ()
    final: IntMatrix = field(default=None)
    terminal_method: str = "naive"

    def __post_init__(self):
        if self.final is None:
            object.__setattr__(self, "final", self.initial)


def find_contractible_column(a: IntMatrix):
    """Rightmost column with exactly two nonzero entries, as ``(k, i, j)``.

    ``i < j`` are the rows of the two nonzeros. Returns None when no column
    qualifies.
    """
    if a.n_rows < 2:
        return None
    rows = a.rows
    for k in range(a.n_cols - 1, -1, -1):
        hits = []
        for r, row in enumerate(rows):
            if row[k]:
                hits.append(r)
                if len(hits) > 2:
                    break
        if len(hits) == 2:
            return (k + 1, hits[0] + 1, hits[1] + 1)
    return None


def _check_indices(a, k, i, j):
    m, n = a.shape
    if m < 2 or n < 2:
        raise ContractionError(
            "contraction needs at least a 2x2 matrix, got %dx%d" % (m, n))
    if not 1 <= k <= n:
        raise ContractionError("column k=%d outside 1..%d" % (k, n))
    for name, x in (("i", i), ("j", j)):
        if not 1 <= x <= m:
            raise ContractionError("row %s=%d outside 1..%d" % (name, x, m))
    if i == j:
        raise ContractionError("rows i and j must differ (both %d)" % i)


def contract_column(a: IntMatrix, k: int, i: int, j: int) -> IntMatrix:
    """The contraction of ``a`` on column k relative to rows i and j."""
    _check_indices(a, k, i, j)
    rows = a.rows
    c = k - 1
    aik, ajk = rows[i - 1][c], rows[j - 1][c]
    if not aik:
        raise ContractionError("entry (%d,%d) is zero" % (i, k))
    if not ajk:
        raise ContractionError("entry (%d,%d) is zero" % (j, k))
    extra = [r + 1 for r, row in enumerate(rows)
             if row[c] and r + 1 not in (i, j)]
    if extra:
        raise ContractionError(
            "column %d has nonzeros outside rows %d and %d (rows %s)"
            % (k, i, j, ", ".join(map(str, extra))))
    ri, rj = rows[i - 1], rows[j - 1]
    combined = tuple(ajk * x + aik * y for x, y in zip(ri, rj))
    last = c == a.n_cols - 1
    combined = combined[:c] if last else combined[:c] + combined[c + 1:]
    out = []
    for r, row in enumerate(rows):
        if r == j - 1:
            continue
        if r == i - 1:
            out.append(combined)
        else:
            out.append(row[:c] if last else row[:c] + row[c + 1:])
    return IntMatrix(tuple(out))


def contract_row(a: IntMatrix, k: int, i: int, j: int) -> IntMatrix:
    """The contraction of ``a`` on row k relative to columns i and j."""
    return transpose(contract_column(transpose(a), k, i, j))


def _terminal_value(b):
    n = b.n_rows
    if n <= NAIVE_MAX_N:
        return per_naive(b), "naive"
    if n <= RYSER_MAX_N:
        return per_ryser(b), "ryser"
    raise NotContractibleError(
        "not contractible to oracle range: chain stalled at %dx%d "
        "(oracle limit %d)" % (n, n, RYSER_MAX_N))


def per_contraction(a: IntMatrix, *, keep_intermediates: bool = True):
    """Permanent by repeated column contraction.

    Contracts at :func:`find_contractible_column` until the matrix is 2x2
    or smaller, or no column qualifies; the permanent of what remains is
    taken by ``per_naive`` (or ``per_ryser`` if the chain stalled above
    the naive bound). Returns ``(value, trace)``.

    ``keep_intermediates=False`` leaves ``trace.intermediates`` empty;
    storing every step costs O(n^3) memory on large inputs.
    """
    if not is_square(a):
        raise MatrixError("per_contraction needs a square matrix, got %dx%d"
                          % a.shape)
    steps = []
    kept = []
    b = a
    while b.n_rows > 2:
        hit = find_contractible_column(b)
        if hit is None:
            break
        k, i, j = hit
        aik, ajk = b.rows[i - 1][k - 1], b.rows[j - 1][k - 1]
        b = contract_column(b, k, i, j)
        steps.append(ContractionStep(Axis.COLUMN, k, i, j, aik, ajk, b.shape))
        if keep_intermediates:
            kept.append(b)
    value, method = _terminal_value(b)
    trace = ContractionTrace(a, tuple(steps), tuple(kept), b, method)
    return value, trace
