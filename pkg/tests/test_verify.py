import pytest

from fibperm.errors import ValidityFloorError
from fibperm.families import Family, family
from fibperm.permanent import per_ryser
from fibperm.sequences import fib_sum
from fibperm.verify import (
    OracleDisagreement,
    Theorem,
    TheoremId,
    Variant,
    adjudicate_t3,
    claimed_value,
    evaluate,
    first_mismatch,
    perdet_check,
    verify_perdet,
    verify_theorem,
    verify_trace,
)

T3_PAPER = TheoremId(Theorem.T3_M_FIBSUM, Variant.PAPER_STATED)
T3_FIXED = TheoremId(Theorem.T3_M_FIBSUM, Variant.DERIVED_CORRECTED)


def test_claimed_values():
    assert claimed_value("T1", 5) == 8
    assert claimed_value("T2", 5) == 4
    assert claimed_value(T3_PAPER, 4) == 0 + 1 + 1 + 2 == 4
    assert claimed_value("T4", 4) == 2 + 1 + 3 + 4 + 7 == 17
    assert claimed_value("LEE", 5) == 7


def test_theorem_id_defaults_to_paper_variant():
    assert TheoremId(Theorem.T3_M_FIBSUM).variant is Variant.PAPER_STATED


@pytest.mark.parametrize("name, floor", [("T1", 1), ("T2", 2), ("T4", 2), ("LEE", 2)])
def test_floors(name, floor):
    claimed_value(name, floor)
    with pytest.raises(ValidityFloorError, match="n >= %d" % floor):
        claimed_value(name, floor - 1)


def test_perdet_tags_are_not_sweeps():
    with pytest.raises(ValueError):
        claimed_value("PERDET_S", 3)


def test_t3_corrected_index_found_by_oracle():
    # brute-force search for the upper summation index: per(M_n) = fib_sum(n + s)
    shifts = set()
    for n in range(2, 11):
        p = per_ryser(family("M", n))
        shifts.add(next(s for s in range(-2, 6) if fib_sum(n + s) == p))
    assert shifts == {1}
    for n in range(1, 30):
        assert claimed_value(T3_FIXED, n) == fib_sum(n + 1)


def test_verify_t1_contraction():
    reps = verify_theorem("T1", 1, 20, "contraction", 18)
    assert [r.n for r in reps] == list(range(1, 21))
    assert all(r.status == "MATCH" for r in reps)
    assert [r.oracle_checked for r in reps] == [n <= 18 for n in range(1, 21)]


def test_verify_t3_paper_mismatches():
    reps = verify_theorem(T3_PAPER, 2, 10, "contraction", 10)
    assert all(r.status == "MISMATCH" for r in reps)
    n4 = reps[2]
    assert (n4.n, n4.computed, n4.claimed) == (4, 12, 4)


def test_verify_t4_hessenberg():
    reps = verify_theorem("T4", 2, 20, "hessenberg", 18)
    assert all(r.status == "MATCH" for r in reps)
    assert reps[2].computed == 17


def test_verify_below_floor():
    with pytest.raises(ValidityFloorError):
        verify_theorem("T2", 1, 5)
    with pytest.raises(ValueError):
        verify_theorem("T1", 5, 4)


def test_verify_is_deterministic():
    a = verify_theorem(T3_PAPER, 2, 12, "hessenberg", 8)
    b = verify_theorem(T3_PAPER, 2, 12, "hessenberg", 8)
    assert a == b


def test_oracle_disagreement_is_a_hard_error(monkeypatch):
    import fibperm.verify as v
    monkeypatch.setattr(v, "evaluate", lambda a, method: 0)
    with pytest.raises(OracleDisagreement):
        verify_theorem("T1", 3, 3)


def test_evaluate_methods_agree():
    a = family("N", 7)
    assert {evaluate(a, m) for m in ("contraction", "hessenberg", "ryser", "naive")} == {75}
    with pytest.raises(ValueError):
        evaluate(a, "magic")


def test_evaluate_hessenberg_on_lee_via_transpose():
    assert evaluate(family("LEE", 9), "hessenberg") == 47


def test_adjudication():
    adj = adjudicate_t3(2, 12, "contraction", 12)
    assert adj.winner is Variant.DERIVED_CORRECTED
    bad = first_mismatch(adj.paper)
    assert (bad.n, bad.computed, bad.claimed) == (2, 4, 1)
    assert "T3:paper: first MISMATCH at n=2 (computed 4, claimed 1)" in adj.summary()


def test_trace_h5():
    rep = verify_trace(Family.H, 5)
    assert rep.value == 8
    assert [s.r for s in rep.steps] == [1, 2, 3]
    assert rep.all_match and rep.display_mismatches() == []
    assert rep.steps[-1].computed.tolist() == [[2, -1], [2, 5]]


def test_trace_m5():
    rep = verify_trace("M", 5)
    assert rep.all_match
    assert rep.steps[-1].computed.tolist() == [[2, -1], [4, 12]]
    # the printed final display disagrees; earlier ones agree
    assert rep.display_mismatches() == [(3, "step n-2")]


def test_trace_k4():
    rep = verify_trace("K", 4)
    assert rep.all_match and rep.display_mismatches() == []
    assert rep.steps[-1].computed.tolist() == [[2, -3], [1, 3]]


def test_trace_k5_flags_n3_display():
    assert verify_trace("K", 5).display_mismatches() == [(2, "step n-3")]


def test_trace_rejects():
    with pytest.raises(ValueError):
        verify_trace("H", 3)
    with pytest.raises(ValueError):
        verify_trace("LEE", 6)


def test_perdet_examples():
    assert perdet_check([1, 1], [1, 1, 1], [1, 1]) == (3, 3, 3, 3)
    assert perdet_check([], [7], []) == (7, 7, 7, 7)


def test_perdet_report():
    rep = verify_perdet(100, 8, 1)
    assert rep.ok and rep.passes == 100 and rep.seed == 1
    with pytest.raises(ValueError):
        verify_perdet(10, 11, 1)


@pytest.mark.parametrize("name", ["T1", "T2", "T4", "LEE"])
@pytest.mark.parametrize("method", ["contraction", "hessenberg"])
def test_identity_sweeps_to_64(name, method):
    reps = verify_theorem(name, 2, 64, method, oracle_max_n=10)
    assert first_mismatch(reps) is None
