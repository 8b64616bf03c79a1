"""Exact permanent evaluators and a fraction-free determinant.

``per_naive`` and ``per_ryser`` are exponential oracles with hard size
guards. ``per_hessenberg`` is the O(n^2) recurrence for lower Hessenberg
matrices. ``det_bareiss`` is used by the per/det conversion checks.
"""

from __future__ import annotations

import math

import numpy as np

from fibperm.errors import MatrixError, NotLowerHessenbergError, SizeGuardError
from fibperm.matrix import IntMatrix, is_lower_hessenberg, is_square

__all__ = [
    "NAIVE_MAX_N",
    "RYSER_MAX_N",
    "per_naive",
    "per_ryser",
    "per_hessenberg",
    "det_bareiss",
]

NAIVE_MAX_N = 10
RYSER_MAX_N = 30

# Signed products and block sums in the vectorised Ryser path must stay
# strictly inside int64.
_INT64_BITS = 62
_MAX_BLOCK_BITS = 16


def _require_square(a, what):
    if not is_square(a):
        raise MatrixError("%s needs a square matrix, got %dx%d"
                          % ((what,) + a.shape))


def per_naive(a: IntMatrix) -> int:
    """Sum over all permutations of the product of selected entries."""
    _require_square(a, "per_naive")
    n = a.n_rows
    if n > NAIVE_MAX_N:
        raise SizeGuardError("per_naive", NAIVE_MAX_N, n)
    rows = a.rows
    used = [False] * n

    # depth-first over partial permutations; zero entries end a branch
    # early since every completion of it contributes 0
    def walk(i):
        if i == n:
            return 1
        total = 0
        row = rows[i]
        for j in range(n):
            if not used[j] and row[j]:
                used[j] = True
                total += row[j] * walk(i + 1)
                used[j] = False
        return total

    return walk(0)


def per_ryser(a: IntMatrix, *, vectorize: bool | None = None) -> int:
    """Ryser's inclusion-exclusion formula over column subsets.

    per(A) = (-1)^n * sum_S (-1)^|S| * prod_i sum_{j in S} a_ij

    When every term provably fits in int64 the subsets are processed in
    numpy blocks (Gray-code order over the high bits, all low-bit
    combinations at once); otherwise a pure Python Gray-code loop with
    incremental row sums runs on big integers. ``vectorize`` forces one
    path (True raises if int64 safety cannot be shown).
    """
    _require_square(a, "per_ryser")
    n = a.n_rows
    if n > RYSER_MAX_N:
        raise SizeGuardError("per_ryser", RYSER_MAX_N, n)
    row_abs = [sum(abs(x) for x in row) for row in a.rows]
    if 0 in row_abs:
        return 0
    term_bits = sum(math.log2(r) for r in row_abs)
    safe = term_bits + 1 < _INT64_BITS
    if vectorize is None:
        vectorize = safe and n >= 8
    if vectorize:
        if not safe:
            raise OverflowError("matrix entries too large for the int64 Ryser path")
        block_bits = min(n, _MAX_BLOCK_BITS, int(_INT64_BITS - term_bits) - 1)
        return _ryser_blocked(a, max(block_bits, 0))
    return _ryser_gray(a)


def _ryser_gray(a):
    n = a.n_rows
    rows = a.rows
    sums = [0] * n
    in_set = [False] * n
    total = 0
    # subset k differs from subset k-1 in column = trailing zeros of k
    for k in range(1, 1 << n):
        j = (k & -k).bit_length() - 1
        if in_set[j]:
            in_set[j] = False
            for i in range(n):
                sums[i] -= rows[i][j]
        else:
            in_set[j] = True
            for i in range(n):
                sums[i] += rows[i][j]
        term = 1
        for s in sums:
            if not s:
                term = 0
                break
            term *= s
        # popcount of the Gray code g = k ^ (k >> 1) is the subset size
        if bin(k ^ (k >> 1)).count("1") & 1:
            total -= term
        else:
            total += term
    return -total if n & 1 else total


def _ryser_blocked(a, block_bits):
    n = a.n_rows
    mat = np.array(a.rows, dtype=np.int64)
    low = block_bits
    high = n - low
    # all 2^low subsets of the first `low` columns: row sums and parities
    codes = np.arange(1 << low, dtype=np.int64)
    bits = ((codes[:, None] >> np.arange(low, dtype=np.int64)) & 1)
    low_sums = bits @ mat[:, :low].T                # (2^low, n)
    low_sign = np.where(bits.sum(axis=1) & 1, -1, 1).astype(np.int64)

    base = np.zeros(n, dtype=np.int64)
    in_set = [False] * high
    size = 0
    total = 0
    for k in range(1 << high):
        if k:
            j = (k & -k).bit_length() - 1
            col = mat[:, low + j]
            if in_set[j]:
                base -= col
                size -= 1
            else:
                base += col
                size += 1
            in_set[j] = not in_set[j]
        prods = np.prod(low_sums + base, axis=1)
        block = int(np.dot(prods, low_sign))
        total += -block if size & 1 else block
    return -total if n & 1 else total


def per_hessenberg(a: IntMatrix) -> int:
    """Permanent of a lower Hessenberg matrix in O(n^2) multiplications.

    With P_0 = 1 and P_m the permanent of the leading m x m block,
    P_m = a_mm P_{m-1} + sum_{r<m} a_mr (a_{r,r+1} ... a_{m-1,m}) P_{r-1}.
    """
    _require_square(a, "per_hessenberg")
    if not is_lower_hessenberg(a):
        raise NotLowerHessenbergError(
            "per_hessenberg needs a lower Hessenberg matrix")
    rows = a.rows
    n = a.n_rows
    p = [1] * (n + 1)
    for m in range(1, n + 1):
        row = rows[m - 1]
        acc = row[m - 1] * p[m - 1]
        chain = 1
        for r in range(m - 1, 0, -1):
            chain *= rows[r - 1][r]
            if not chain:
                break
            if row[r - 1]:
                acc += row[r - 1] * chain * p[r - 1]
        p[m] = acc
    return p[n]


def det_bareiss(a: IntMatrix) -> int:
    """Determinant by fraction-free elimination; every division is exact."""
    _require_square(a, "det_bareiss")
    m = [list(row) for row in a.rows]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for p in range(k + 1, n):
                if m[p][k]:
                    m[k], m[p] = m[p], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mi, mk = m[i], m[k]
            f = mi[k]
            for j in range(k + 1, n):
                mi[j] = (pivot * mi[j] - f * mk[j]) // prev
            mi[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]
