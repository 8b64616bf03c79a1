"""Named matrix families and closed forms of their contraction chains.

Band rules, 1-based (i, j):

* ``H``: diagonal 2 except (n, n) = 1, superdiagonal (i, i+1) = (-1)**i,
  second subdiagonal (i+2, i) = 1.
* ``K``: ``H`` with (1, 2) = -3.
* ``M``: ``H`` with (n, n) = 2.
* ``N``: ``M`` with (1, 1) = 3 and (1, 2) = -2.
* ``LEE``: ones on the three central diagonals, except (1, 2) = 0 and
  (1, 3) = 1. Only defined for n >= 2.
* ``S``: all ones except (i+1, i) = -1.
* ``TRIDIAG``: given sub-, main and superdiagonal sequences.

For n = 1 the corner entry of the family wins: H_1 = K_1 = [1], M_1 = [2],
N_1 = [3].
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from fibperm.matrix import IntMatrix, make_matrix
from fibperm.sequences import fib, fib_sum

__all__ = [
    "Family",
    "FamilySpec",
    "HESSENBERG_FAMILIES",
    "build_family",
    "family",
    "tridiagonal",
    "expected_contraction",
    "paper_displays",
    "PaperDisplay",
]


class Family(enum.Enum):
    H = "H"
    K = "K"
    M = "M"
    N = "N"
    LEE = "LEE"
    SIGN_S = "S"
    TRIDIAG = "TRIDIAG"

    @classmethod
    def parse(cls, name: str) -> "Family":
        key = name.strip().upper()
        for member in cls:
            if key in (member.name, member.value):
                return member
        raise ValueError("unknown family %r" % name)


HESSENBERG_FAMILIES = (Family.H, Family.K, Family.M, Family.N)


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    n: int
    sub: Optional[tuple] = None
    main: Optional[tuple] = None
    super: Optional[tuple] = None

    def __post_init__(self):
        if not isinstance(self.family, Family):
            object.__setattr__(self, "family", Family.parse(self.family))
        if self.n < 1:
            raise ValueError("matrix order must be >= 1, got %d" % self.n)
        bands = (self.sub, self.main, self.super)
        if self.family is Family.TRIDIAG:
            if any(b is None for b in bands):
                raise ValueError("TRIDIAG needs sub, main and super sequences")
            for name, b in zip(("sub", "main", "super"), bands):
                object.__setattr__(self, name, tuple(int(x) for x in b))
            want = (self.n - 1, self.n, self.n - 1)
            got = tuple(len(b) for b in (self.sub, self.main, self.super))
            if got != want:
                raise ValueError(
                    "TRIDIAG of order %d needs band lengths %s, got %s"
                    % (self.n, want, got))
        elif any(b is not None for b in bands):
            raise ValueError("%s takes no band sequences" % self.family.name)
        if self.family is Family.LEE and self.n < 2:
            raise ValueError("LEE is only defined for n >= 2")


def _hessenberg_rows(fam, n):
    a = [[0] * n for _ in range(n)]
    for i in range(1, n + 1):
        a[i - 1][i - 1] = 2
        if i < n:
            a[i - 1][i] = (-1) ** i
        if i + 2 <= n:
            a[i + 1][i - 1] = 1
    if fam in (Family.H, Family.K):
        a[n - 1][n - 1] = 1
    if fam is Family.K and n >= 2:
        a[0][1] = -3
    if fam is Family.N:
        a[0][0] = 3
        if n >= 2:
            a[0][1] = -2
    return a


def _lee_rows(n):
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 1
        if i + 1 < n:
            a[i][i + 1] = 1
            a[i + 1][i] = 1
    a[0][1] = 0
    if n >= 3:
        a[0][2] = 1
    return a


def _sign_rows(n):
    a = [[1] * n for _ in range(n)]
    for i in range(n - 1):
        a[i + 1][i] = -1
    return a


def _tridiag_rows(sub, main, sup):
    n = len(main)
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = main[i]
        if i + 1 < n:
            a[i + 1][i] = sub[i]
            a[i][i + 1] = sup[i]
    return a


def build_family(spec: FamilySpec) -> IntMatrix:
    fam, n = spec.family, spec.n
    if fam in HESSENBERG_FAMILIES:
        rows = _hessenberg_rows(fam, n)
    elif fam is Family.LEE:
        rows = _lee_rows(n)
    elif fam is Family.SIGN_S:
        rows = _sign_rows(n)
    else:
        rows = _tridiag_rows(spec.sub, spec.main, spec.super)
    return make_matrix(rows)


def family(name, n: int) -> IntMatrix:
    """Shorthand: ``family("H", 5)``."""
    return build_family(FamilySpec(Family.parse(name) if isinstance(name, str) else name, n))


def tridiagonal(sub, main, sup) -> IntMatrix:
    return build_family(FamilySpec(Family.TRIDIAG, len(main), sub, main, sup))


# -- closed forms of the contraction chain -----------------------------------

def _check_chain_args(spec, r):
    if spec.family not in HESSENBERG_FAMILIES:
        raise ValueError("contraction closed forms exist only for H, K, M, N")
    if spec.n < 4:
        raise ValueError("contraction closed forms need n >= 4, got %d" % spec.n)
    if not 1 <= r <= spec.n - 2:
        raise ValueError("step r=%d outside 1..%d" % (r, spec.n - 2))


def _bottom_seq(fam):
    # H/K chains carry Fibonacci numbers, M/N chains carry their partial sums
    return fib if fam in (Family.H, Family.K) else fib_sum


def _frame(spec, size, top_band, bottom):
    """Leading rows of the family, then an explicit last column and row.

    ``size`` >= 3. The leading ``size - 1`` rows are rows of the order-n
    family truncated to ``size`` columns, with (size-1, size) replaced by
    ``top_band``; the last row is zero except its last three entries.
    """
    base = _hessenberg_rows(spec.family, spec.n)
    rows = [base[i][:size] for i in range(size - 1)]
    rows[-1][-1] = top_band
    last = [0] * size
    last[-3:] = bottom
    rows.append(last)
    return make_matrix(rows)


def _first_row(fam):
    return {Family.H: (2, -1), Family.K: (2, -3),
            Family.M: (2, -1), Family.N: (3, -2)}[fam]


def expected_contraction(spec: FamilySpec, r: int) -> IntMatrix:
    """Closed form of the r-th matrix in the contraction chain of ``spec``.

    For r <= n-3 the order is n-r, the last column holds (-1)**(n-r-1) at
    its superdiagonal slot, and the bottom row ends with
    ``[s(r+1), (-1)**(n-r) * s(r), s(r+2)]`` where ``s`` is ``fib`` for H/K
    and ``fib_sum`` for M/N. The final 2x2 is ``[[first row], [s(n-2), s(n)]]``.
    These forms are derived independently of the contraction code and are
    checked against it by the test suite.
    """
    _check_chain_args(spec, r)
    n, s = spec.n, _bottom_seq(spec.family)
    if r == n - 2:
        return make_matrix([_first_row(spec.family), (s(n - 2), s(n))])
    bottom = (s(r + 1), (-1) ** (n - r) * s(r), s(r + 2))
    return _frame(spec, n - r, (-1) ** (n - r - 1), bottom)


# -- literal transcription of the proof displays -------------------------------

@dataclass(frozen=True)
class PaperDisplay:
    """One matrix as printed in a proof, instantiated at concrete (n, r)."""

    label: str
    matrix: IntMatrix


def _sgn(e):
    return (-1) ** (e % 2)


def _step_displays(fam, n, r):
    """(label, top_band, bottom) for the displays printed for steps 1..3."""
    if fam in (Family.H, Family.K):
        table = {
            1: (_sgn(n - 2), (1, _sgn(n - 1), 2)),
            2: (_sgn(n - 3), (2, _sgn(n - 2), 3)),
            3: (_sgn(n - 4), (3, 2 * _sgn(n - 3), 5)),
        }
    elif fam is Family.M:
        table = {
            1: (_sgn(n - 2), (2, _sgn(n - 1), 4)),
            2: (_sgn(n - 3), (4, 2 * _sgn(n - 2), 7)),
            3: (_sgn(n - 4), (7, 4 * _sgn(n - 3), 12)),
        }
    else:
        table = {
            1: (_sgn(n), (2, _sgn(n - 1), 4)),
            2: (_sgn(n - 1), (4, 2 * _sgn(n - 2), 7)),
            3: (_sgn(n - 2), (7, 4 * _sgn(n - 3), 12)),
        }
    if r in table:
        top, bottom = table[r]
        yield "step %d" % r, top, bottom


def _general_display(fam, n, r):
    """The 'r-th contraction' display, printed for 2 <= r <= n-4."""
    even = n % 2 == 0
    if fam is Family.H:
        top, mid = (_sgn(r - 1), _sgn(r)) if even else (_sgn(r), _sgn(r - 1))
        bottom = (fib(r + 1), mid * (fib(r + 2) - fib(r + 1)), fib(r + 2))
    elif fam is Family.K:
        top, mid = (_sgn(r - 1), _sgn(r - 2)) if even else (_sgn(r), _sgn(r - 1))
        bottom = (fib(r + 1), mid * (fib(r + 2) - fib(r + 1)), fib(r + 2))
    elif fam is Family.M:
        top, mid = (_sgn(r - 1), _sgn(r - 2)) if even else (_sgn(r), _sgn(r - 1))
        bottom = (fib_sum(r + 1), mid * fib_sum(r), fib_sum(r + 2))
    else:
        top, mid = (_sgn(r - 1), _sgn(r)) if even else (_sgn(r), _sgn(r - 1))
        bottom = (fib_sum(r + 1), mid * fib_sum(r), fib_sum(r + 2))
    return top, bottom


def _late_displays(fam, n):
    """The (n-3)- and (n-2)-step displays, exactly as printed."""
    F, S = fib, fib_sum
    if fam is Family.H:
        m3 = [[2, -1, 0], [0, 2, 1], [F(n - 2), F(n - 2) - F(n - 1), F(n - 1)]]
        m2 = [[2, -1], [F(n - 2), F(n)]]
    elif fam is Family.K:
        m3 = [[2, -3, 0], [0, 2, 1], [F(n - 3), F(n - 3) - F(n - 1), F(n - 1)]]
        m2 = [[2, -3], [F(n - 2), F(n)]]
    elif fam is Family.M:
        m3 = [[2, -1, 0], [0, 2, 1], [S(n - 2), -S(n - 3), S(n - 1)]]
        m2 = [[2, -1], [S(n - 4), S(n - 2)]]
    else:
        m3 = [[3, -2, 0], [0, 2, 1], [S(n - 2), -S(n - 3), S(n - 1)]]
        m2 = [[3, -2], [S(n - 2), S(n)]]
    return make_matrix(m3), make_matrix(m2)


def paper_displays(spec: FamilySpec, r: int) -> list:
    """Every proof display that claims to show step ``r`` of ``spec``'s chain.

    Several displays can cover the same step for small n (e.g. at n = 4 the
    step-1 display and the (n-3) display both describe r = 1); each is
    returned separately so disagreements can be attributed to a display.
    """
    _check_chain_args(spec, r)
    fam, n = spec.family, spec.n
    out = []
    if r <= n - 3:
        for label, top, bottom in _step_displays(fam, n, r):
            out.append(PaperDisplay(label, _frame(spec, n - r, top, bottom)))
        if 2 <= r <= n - 4:
            top, bottom = _general_display(fam, n, r)
            out.append(PaperDisplay("general r", _frame(spec, n - r, top, bottom)))
    m3, m2 = _late_displays(fam, n)
    if r == n - 3:
        out.append(PaperDisplay("step n-3", m3))
    if r == n - 2:
        out.append(PaperDisplay("step n-2", m2))
    return out
