"""Identity sweeps, contraction-trace checks and per/det conversion checks.

A disagreement between an evaluator and the Ryser oracle is a bug and
raises :class:`OracleDisagreement`. A disagreement between a computed
permanent and a claimed closed form is a finding and is reported with
status ``MISMATCH``.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field

from fibperm.contraction import per_contraction
from fibperm.errors import ValidityFloorError
from fibperm.families import (
    HESSENBERG_FAMILIES,
    Family,
    FamilySpec,
    build_family,
    expected_contraction,
    paper_displays,
    tridiagonal,
)
from fibperm.matrix import IntMatrix, hadamard, is_lower_hessenberg, transpose
from fibperm.permanent import det_bareiss, per_hessenberg, per_naive, per_ryser
from fibperm.sequences import fib, fib_sum, lucas, lucas_sum

__all__ = [
    "METHODS",
    "Theorem",
    "Variant",
    "TheoremId",
    "IdentityReport",
    "OracleDisagreement",
    "evaluate",
    "claimed_value",
    "validity_floor",
    "verify_theorem",
    "first_mismatch",
    "adjudicate_t3",
    "verify_trace",
    "verify_perdet",
]

METHODS = ("contraction", "hessenberg", "ryser", "naive")


class Theorem(enum.Enum):
    T1_H_FIB = "T1"
    T2_K_LUCAS = "T2"
    T3_M_FIBSUM = "T3"
    T4_N_LUCASSUM = "T4"
    LEE_LUCAS = "LEE"
    PERDET_TRIDIAG = "PERDET_TRIDIAG"
    PERDET_S = "PERDET_S"

    @classmethod
    def parse(cls, name: str) -> "Theorem":
        key = name.strip().upper()
        for member in cls:
            if key in (member.name, member.value):
                return member
        raise ValueError("unknown theorem %r" % name)


class Variant(enum.Enum):
    PAPER_STATED = "paper"
    DERIVED_CORRECTED = "corrected"


@dataclass(frozen=True)
class TheoremId:
    tag: Theorem
    variant: Variant = Variant.PAPER_STATED

    @property
    def label(self) -> str:
        if self.tag is Theorem.T3_M_FIBSUM:
            return "%s:%s" % (self.tag.value, self.variant.value)
        return self.tag.value


@dataclass(frozen=True)
class IdentityReport:
    theorem: TheoremId
    n: int
    computed: int
    claimed: int
    method: str
    oracle_checked: bool

    @property
    def status(self) -> str:
        return "MATCH" if self.computed == self.claimed else "MISMATCH"


class OracleDisagreement(AssertionError):
    """An evaluator and the Ryser oracle produced different permanents."""


def evaluate(a: IntMatrix, method: str) -> int:
    """Permanent of ``a`` by the named evaluator.

    ``hessenberg`` also accepts matrices whose transpose is lower
    Hessenberg (the permanent is transpose invariant).
    """
    if method == "contraction":
        return per_contraction(a, keep_intermediates=False)[0]
    if method == "hessenberg":
        if not is_lower_hessenberg(a):
            t = transpose(a)
            if is_lower_hessenberg(t):
                return per_hessenberg(t)
        return per_hessenberg(a)
    if method == "ryser":
        return per_ryser(a)
    if method == "naive":
        return per_naive(a)
    raise ValueError("unknown method %r (choose from %s)"
                     % (method, ", ".join(METHODS)))


_FAMILY_OF = {
    Theorem.T1_H_FIB: Family.H,
    Theorem.T2_K_LUCAS: Family.K,
    Theorem.T3_M_FIBSUM: Family.M,
    Theorem.T4_N_LUCASSUM: Family.N,
    Theorem.LEE_LUCAS: Family.LEE,
}

_FLOORS = {
    Theorem.T1_H_FIB: 1,
    Theorem.T2_K_LUCAS: 2,
    Theorem.T3_M_FIBSUM: 1,
    Theorem.T4_N_LUCASSUM: 2,
    Theorem.LEE_LUCAS: 2,
}


def _as_id(theorem):
    if isinstance(theorem, TheoremId):
        return theorem
    if isinstance(theorem, str):
        theorem = Theorem.parse(theorem)
    return TheoremId(theorem)


def validity_floor(theorem) -> int:
    tid = _as_id(theorem)
    if tid.tag not in _FLOORS:
        raise ValueError("%s is not a permanent identity in n; use verify_perdet"
                         % tid.tag.name)
    return _FLOORS[tid.tag]


def claimed_value(theorem, n: int) -> int:
    """Right-hand side of the identity at order ``n``."""
    tid = _as_id(theorem)
    floor = validity_floor(tid)
    if n < floor:
        raise ValidityFloorError(
            "%s is stated for n >= %d, got n=%d" % (tid.label, floor, n))
    tag = tid.tag
    if tag is Theorem.T1_H_FIB:
        return fib(n + 1)
    if tag is Theorem.T2_K_LUCAS:
        return lucas(n - 2)
    if tag is Theorem.T3_M_FIBSUM:
        if tid.variant is Variant.PAPER_STATED:
            return fib_sum(n - 1)
        # upper index established by the Ryser sweep in the test suite
        return fib_sum(n + 1)
    if tag is Theorem.T4_N_LUCASSUM:
        return lucas_sum(n)
    return lucas(n - 1)


def verify_theorem(theorem, n_min: int, n_max: int, method: str = "contraction",
                   oracle_max_n: int = 16) -> list:
    """One :class:`IdentityReport` per n in ``[n_min, n_max]``, ascending."""
    tid = _as_id(theorem)
    if n_min > n_max:
        raise ValueError("n_min=%d exceeds n_max=%d" % (n_min, n_max))
    if method not in METHODS:
        raise ValueError("unknown method %r" % method)
    floor = validity_floor(tid)
    if n_min < floor:
        raise ValidityFloorError(
            "%s is stated for n >= %d, got n_min=%d" % (tid.label, floor, n_min))
    fam = _FAMILY_OF[tid.tag]
    reports = []
    for n in range(n_min, n_max + 1):
        a = build_family(FamilySpec(fam, n))
        computed = evaluate(a, method)
        checked = n <= oracle_max_n
        if checked:
            oracle = per_ryser(a)
            if oracle != computed:
                raise OracleDisagreement(
                    "%s evaluator gave %d but Ryser gave %d for %s_%d"
                    % (method, computed, oracle, fam.name, n))
        reports.append(IdentityReport(
            tid, n, computed, claimed_value(tid, n), method, checked))
    return reports


def first_mismatch(reports):
    """The first MISMATCH report, or None if every row matches."""
    for rep in reports:
        if rep.status != "MATCH":
            return rep
    return None


@dataclass(frozen=True)
class T3Adjudication:
    paper: list
    corrected: list

    @property
    def all_match(self) -> dict:
        return {
            Variant.PAPER_STATED: first_mismatch(self.paper) is None,
            Variant.DERIVED_CORRECTED: first_mismatch(self.corrected) is None,
        }

    @property
    def winner(self):
        """The single all-MATCH variant, or None if zero or both match."""
        ok = [v for v, good in self.all_match.items() if good]
        return ok[0] if len(ok) == 1 else None

    def summary(self) -> str:
        lines = []
        for variant, reps in ((Variant.PAPER_STATED, self.paper),
                              (Variant.DERIVED_CORRECTED, self.corrected)):
            bad = first_mismatch(reps)
            label = TheoremId(Theorem.T3_M_FIBSUM, variant).label
            if bad is None:
                lines.append("%s: all MATCH for n=%d..%d"
                             % (label, reps[0].n, reps[-1].n))
            else:
                lines.append("%s: first MISMATCH at n=%d (computed %d, claimed %d)"
                             % (label, bad.n, bad.computed, bad.claimed))
        return "\n".join(lines)


def adjudicate_t3(n_min: int = 2, n_max: int = 64, method: str = "contraction",
                  oracle_max_n: int = 16) -> T3Adjudication:
    """Sweep both Theorem 3 variants over the same range."""
    return T3Adjudication(
        verify_theorem(TheoremId(Theorem.T3_M_FIBSUM, Variant.PAPER_STATED),
                       n_min, n_max, method, oracle_max_n),
        verify_theorem(TheoremId(Theorem.T3_M_FIBSUM, Variant.DERIVED_CORRECTED),
                       n_min, n_max, method, oracle_max_n),
    )


# -- trace checks -------------------------------------------------------------

@dataclass(frozen=True)
class DisplayCheck:
    label: str
    matrix: IntMatrix
    match: bool


@dataclass(frozen=True)
class StepCheck:
    r: int
    computed: IntMatrix
    expected: IntMatrix
    displays: tuple

    @property
    def match(self) -> bool:
        return self.computed == self.expected


@dataclass(frozen=True)
class TraceReport:
    family: Family
    n: int
    value: int
    steps: tuple

    @property
    def all_match(self) -> bool:
        return all(s.match for s in self.steps)

    def display_mismatches(self) -> list:
        """``(r, label)`` for every printed proof display the chain contradicts."""
        return [(s.r, d.label) for s in self.steps for d in s.displays
                if not d.match]


def verify_trace(family, n: int) -> TraceReport:
    """Compare every step of the contraction chain with its closed forms."""
    if not isinstance(family, Family):
        family = Family.parse(family)
    if family not in HESSENBERG_FAMILIES:
        raise ValueError("trace checks exist only for H, K, M, N")
    if n < 4:
        raise ValueError("trace checks need n >= 4, got %d" % n)
    spec = FamilySpec(family, n)
    value, trace = per_contraction(build_family(spec))
    checks = []
    for r, got in enumerate(trace.intermediates, start=1):
        if r > n - 2:
            break
        displays = tuple(DisplayCheck(d.label, d.matrix, d.matrix == got)
                         for d in paper_displays(spec, r))
        checks.append(StepCheck(r, got, expected_contraction(spec, r), displays))
    if len(checks) != n - 2:
        raise AssertionError("chain for %s_%d has %d steps, expected %d"
                             % (family.name, n, len(checks), n - 2))
    return TraceReport(family, n, value, tuple(checks))


# -- per/det conversion -----------------------------------------------------------

@dataclass
class PerDetReport:
    seed: int
    trials: int
    n_max: int
    passes: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passes == self.trials and not self.failures


def _negate(seq):
    return [-x for x in seq]


def perdet_check(sub, main, sup):
    """``(per T, det T(-sub), det T(-super), det T∘S)`` for one tridiagonal."""
    t = tridiagonal(sub, main, sup)
    s = build_family(FamilySpec(Family.SIGN_S, len(main)))
    return (per_ryser(t),
            det_bareiss(tridiagonal(_negate(sub), main, sup)),
            det_bareiss(tridiagonal(sub, main, _negate(sup))),
            det_bareiss(hadamard(t, s)))


def verify_perdet(trials: int = 100, n_max: int = 10, rng_seed: int = 1,
                  entry_bound: int = 9) -> PerDetReport:
    """Random integer tridiagonal matrices: per(T) against three determinants."""
    if n_max > 10:
        raise ValueError("verify_perdet is bounded to n_max <= 10")
    rng = random.Random(rng_seed)
    report = PerDetReport(rng_seed, trials, n_max)

    def draw(k):
        return [rng.randint(-entry_bound, entry_bound) for _ in range(k)]

    for _ in range(trials):
        n = rng.randint(1, n_max)
        sub, main, sup = draw(n - 1), draw(n), draw(n - 1)
        values = perdet_check(sub, main, sup)
        if len(set(values)) == 1:
            report.passes += 1
        else:
            report.failures.append((sub, main, sup, values))
    return report
