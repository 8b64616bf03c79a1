import pytest

from fibperm.contraction import per_contraction
from fibperm.families import (
    Family,
    FamilySpec,
    build_family,
    expected_contraction,
    family,
    paper_displays,
    tridiagonal,
)
from fibperm.matrix import is_lower_hessenberg, make_matrix
from fibperm.sequences import fib

N_RANGE = range(1, 25)


def test_h5():
    assert family("H", 5).tolist() == [
        [2, -1, 0, 0, 0],
        [0, 2, 1, 0, 0],
        [1, 0, 2, -1, 0],
        [0, 1, 0, 2, 1],
        [0, 0, 1, 0, 1],
    ]


def test_k2():
    assert family("K", 2).tolist() == [[2, -3], [0, 1]]


def test_sign_s4():
    assert family("S", 4).tolist() == [
        [1, 1, 1, 1], [-1, 1, 1, 1], [1, -1, 1, 1], [1, 1, -1, 1]]


@pytest.mark.parametrize("name, corner", [("H", 1), ("K", 1), ("M", 2), ("N", 3)])
def test_order_one(name, corner):
    assert family(name, 1).tolist() == [[corner]]


def test_k_differs_from_h_only_at_1_2():
    for n in range(2, 12):
        h, k = family("H", n).tolist(), family("K", n).tolist()
        diff = [(i, j) for i in range(n) for j in range(n) if h[i][j] != k[i][j]]
        assert diff == [(0, 1)]
        assert k[0][1] == -3


def test_k6_superdiagonal():
    k = family("K", 6)
    assert [k[i, i + 1] for i in range(5)] == [-3, 1, -1, 1, -1]


def test_m_and_n():
    assert family("M", 4).tolist() == [
        [2, -1, 0, 0], [0, 2, 1, 0], [1, 0, 2, -1], [0, 1, 0, 2]]
    assert family("N", 4).tolist() == [
        [3, -2, 0, 0], [0, 2, 1, 0], [1, 0, 2, -1], [0, 1, 0, 2]]


def test_lee():
    assert family("LEE", 2).tolist() == [[1, 0], [1, 1]]
    assert family("LEE", 5).tolist() == [
        [1, 0, 1, 0, 0],
        [1, 1, 1, 0, 0],
        [0, 1, 1, 1, 0],
        [0, 0, 1, 1, 1],
        [0, 0, 0, 1, 1],
    ]
    with pytest.raises(ValueError):
        family("LEE", 1)


def test_tridiag():
    t = tridiagonal([4, 5], [1, 2, 3], [6, 7])
    assert t.tolist() == [[1, 6, 0], [4, 2, 7], [0, 5, 3]]
    assert tridiagonal([], [7], []).tolist() == [[7]]


@pytest.mark.parametrize("kwargs", [
    dict(family=Family.H, n=0),
    dict(family=Family.TRIDIAG, n=3, sub=(1,), main=(1, 1, 1), super=(1, 1)),
    dict(family=Family.TRIDIAG, n=2),
    dict(family=Family.H, n=3, main=(1, 1, 1)),
])
def test_invalid_specs(kwargs):
    with pytest.raises(ValueError):
        FamilySpec(**kwargs)


def test_family_parse():
    assert Family.parse("s") is Family.SIGN_S
    assert Family.parse("SIGN_S") is Family.SIGN_S
    with pytest.raises(ValueError):
        Family.parse("Q")


@pytest.mark.parametrize("name", ["H", "K", "M", "N"])
def test_families_are_lower_hessenberg(name):
    for n in N_RANGE:
        assert is_lower_hessenberg(family(name, n))


def test_lee_transpose_is_lower_hessenberg():
    from fibperm.matrix import transpose
    for n in range(3, 20):
        assert not is_lower_hessenberg(family("LEE", n))
        assert is_lower_hessenberg(transpose(family("LEE", n)))


@pytest.mark.parametrize("name", ["H", "K", "M", "N"])
def test_last_column_has_two_nonzeros_along_chain(name):
    for n in range(3, 20):
        a = family(name, n)
        _, trace = per_contraction(a)
        for b in (a,) + trace.intermediates[:-1]:
            assert sum(1 for x in b.column(b.n_cols - 1) if x) == 2


# -- closed forms ------------------------------------------------------------------

def test_expected_h5_r2():
    spec = FamilySpec(Family.H, 5)
    assert expected_contraction(spec, 2).tolist() == [[2, -1, 0], [0, 2, 1], [2, -1, 3]]


def test_expected_h_final():
    for n in range(4, 30):
        got = expected_contraction(FamilySpec(Family.H, n), n - 2)
        assert got.tolist() == [[2, -1], [fib(n - 2), fib(n)]]


def test_expected_m5_r1():
    got = expected_contraction(FamilySpec(Family.M, 5), 1)
    assert got.shape == (4, 4)
    assert got.tolist()[-1] == [0, 2, 1, 4]


@pytest.mark.parametrize("r", [0, 5])
def test_expected_out_of_range(r):
    with pytest.raises(ValueError):
        expected_contraction(FamilySpec(Family.H, 6), r)


def test_expected_needs_chain_family_and_n4():
    with pytest.raises(ValueError):
        expected_contraction(FamilySpec(Family.LEE, 6), 1)
    with pytest.raises(ValueError):
        expected_contraction(FamilySpec(Family.H, 3), 1)


@pytest.mark.parametrize("name", ["H", "K", "M", "N"])
def test_expected_matches_actual_chain(name):
    for n in range(4, 20):
        spec = FamilySpec(Family.parse(name), n)
        _, trace = per_contraction(build_family(spec))
        assert len(trace.intermediates) == n - 2
        for r, got in enumerate(trace.intermediates, start=1):
            assert got == expected_contraction(spec, r), (name, n, r)


def test_paper_displays_cover_every_step():
    for name in "HKMN":
        for n in range(4, 12):
            spec = FamilySpec(Family.parse(name), n)
            for r in range(1, n - 1):
                assert paper_displays(spec, r), (name, n, r)


def test_paper_display_labels_at_n4():
    spec = FamilySpec(Family.H, 4)
    assert [d.label for d in paper_displays(spec, 1)] == ["step 1", "step n-3"]
    assert [d.label for d in paper_displays(spec, 2)] == ["step n-2"]


def test_paper_k_n3_display_as_printed():
    # bottom row printed as F_{n-3}, F_{n-3}-F_{n-1}, F_{n-1}
    [d] = [d for d in paper_displays(FamilySpec(Family.K, 7), 4) if d.label == "step n-3"]
    assert d.matrix == make_matrix([[2, -3, 0], [0, 2, 1], [3, 3 - 8, 8]])


def test_paper_m_n2_display_as_printed():
    [d] = paper_displays(FamilySpec(Family.M, 7), 5)
    assert d.matrix == make_matrix([[2, -1], [4, 12]])
