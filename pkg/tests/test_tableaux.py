from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from r2r.checks import derangements
from r2r.partitions import Partition, dominates, enumerate_partitions, horizontal_strip_subshapes, syt_count
from r2r.tableaux import (
    SemistandardTableau,
    SkewTableau,
    StandardTableau,
    desarrangement_count,
    enumerate_desarrangements,
    enumerate_ssyt,
    enumerate_syt,
    is_desarrangement,
    jdt_slide,
    kostka_number,
    rsw_forward,
    rsw_inverse,
    smallest_ascent,
)

T = StandardTableau
JEU_START = SkewTableau([4, 3], [2], {(1, 3): 2, (1, 4): 5, (2, 1): 1, (2, 2): 3, (2, 3): 4})


def brute_ssyt_count(lam, nu):
    # fill every cell with every value and keep the semistandard ones
    cells = list(Partition(lam).cells())
    count = 0
    for values in product(range(1, len(nu) + 1), repeat=len(cells)):
        grid = dict(zip(cells, values))
        if any(values.count(k + 1) != nu[k] for k in range(len(nu))):
            continue
        rows_ok = all(grid[i, j] <= grid[i, j + 1] for (i, j) in cells if (i, j + 1) in grid)
        cols_ok = all(grid[i, j] < grid[i + 1, j] for (i, j) in cells if (i + 1, j) in grid)
        count += rows_ok and cols_ok
    return count


def first_row_rule(t):
    # desarrangement iff the (1,2) cell is odd, or absent with an even size
    if t.shape.first < 2:
        return t.n % 2 == 0
    return t[1, 2] % 2 == 1


def test_standard_tableau_validation():
    t = T([[1, 3], [2]])
    assert t.shape == (2, 1) and t.n == 3
    assert t[1, 2] == 3 and t.position(2) == (2, 1)
    with pytest.raises(ValueError):
        T([[2, 1]])
    with pytest.raises(ValueError):
        T([[1, 2], [3, 4], [4]])
    with pytest.raises(ValueError):
        T([[1, 3], [2, 2]])


def test_enumerate_syt_examples():
    assert set(enumerate_syt([2, 1])) == {T([[1, 2], [3]]), T([[1, 3], [2]])}
    assert enumerate_syt([4]) == [T([[1, 2, 3, 4]])]
    assert len(enumerate_syt([2, 2])) == 2
    with pytest.raises(ValueError):
        enumerate_syt([7, 6])


@pytest.mark.parametrize(
    "rows, ascent",
    [([[1, 3], [2]], 2), ([[1, 2], [3]], 1), ([[1], [2], [3]], 3), ([[1], [2]], 2), ([[1, 2]], 1)],
)
def test_smallest_ascent(rows, ascent):
    assert smallest_ascent(T(rows)) == ascent
    assert is_desarrangement(T(rows)) == (ascent % 2 == 0)


def test_empty_tableau_is_desarrangement():
    assert is_desarrangement(T([]))
    assert desarrangement_count([]) == 1
    with pytest.raises(ValueError):
        smallest_ascent(T([]))


@pytest.mark.parametrize("n", range(1, 10))
def test_first_row_characterization(n):
    for lam in enumerate_partitions(n):
        for t in enumerate_syt(lam):
            assert is_desarrangement(t) == first_row_rule(t)


def test_desarrangement_count_examples():
    for k in range(1, 15):
        assert desarrangement_count([k, 1]) == 1
        assert desarrangement_count([k]) == 0
    assert desarrangement_count([1, 1, 1, 1]) == 1
    assert desarrangement_count([1, 1, 1]) == 0


@pytest.mark.parametrize("n", range(0, 9))
def test_desarrangement_count_matches_enumeration(n):
    for mu in enumerate_partitions(n):
        expected = len(enumerate_desarrangements(mu))
        assert desarrangement_count(mu) == expected
        assert desarrangement_count(mu, method="strips") == expected


def test_recursions_agree_on_larger_shapes():
    for n in (11, 12):
        for mu in enumerate_partitions(n):
            assert desarrangement_count(mu) == desarrangement_count(mu, method="strips")
    with pytest.raises(ValueError):
        desarrangement_count([2, 1], method="nope")


@pytest.mark.parametrize("n", range(0, 9))
def test_strip_sum_and_derangements(n):
    for lam in enumerate_partitions(n):
        assert sum(desarrangement_count(mu) for mu in horizontal_strip_subshapes(lam)) == syt_count(lam)
    assert sum(syt_count(mu) * desarrangement_count(mu) for mu in enumerate_partitions(n)) == derangements(n)


def test_derangement_numbers():
    assert [derangements(n) for n in range(0, 9)] == [1, 0, 1, 2, 9, 44, 265, 1854, 14833]


def test_jdt_interior_slide():
    out = jdt_slide(JEU_START, (1, 2))
    assert out.to_json() == {"inner": [1], "rows": [[2, 4, 5], [1, 3]]}
    assert out.outer == (4, 2) and out.inner == (1,)


def test_jdt_exterior_slide():
    out = jdt_slide(JEU_START, (2, 4))
    assert out.to_json() == {"inner": [3], "rows": [[2], [1, 3, 4, 5]]}
    assert out.outer == (4, 4)


def test_jdt_single_move_and_errors():
    out = jdt_slide(SkewTableau([2], [1], {(1, 2): 1}), (1, 1))
    assert out.to_standard() == T([[1]])
    with pytest.raises(ValueError):
        jdt_slide(JEU_START, (2, 2))
    with pytest.raises(ValueError):
        jdt_slide(JEU_START, (3, 3))


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 8).flatmap(lambda n: st.sampled_from(enumerate_partitions(n))), st.data())
def test_jdt_preserves_entries_and_monotonicity(lam, data):
    t = data.draw(st.sampled_from(enumerate_syt(lam)))
    skew = SkewTableau.from_standard(t)
    # remove the entry 1 and slide the hole out
    entries = {c: v - 1 for c, v in skew.entries().items() if v != 1}
    out = jdt_slide(SkewTableau(lam, [1], entries), (1, 1))
    assert sorted(out.entries().values()) == list(range(1, lam.size))
    std = out.to_standard()  # validates rows and columns
    assert std.shape.size == lam.size - 1
    # and slide back out through an outer addable cell of the shrunken shape
    i = len(std.shape) + 1
    back = jdt_slide(SkewTableau.from_standard(std), (i, 1))
    assert sorted(back.entries().values()) == list(range(1, lam.size))


def test_rsw_forward_examples():
    q = T([[1, 3, 4], [2, 6, 7], [5]])
    assert rsw_forward(q, [4, 3, 2]) == T([[1, 2, 3, 6], [4, 5, 9], [7, 8]])
    assert rsw_forward(T([[1], [2]]), [2, 1]) == T([[1, 2], [3]])
    assert rsw_forward(T([[1, 3], [2]]), [2, 1]) == T([[1, 3], [2]])


def test_rsw_forward_rejects_bad_input():
    with pytest.raises(ValueError):
        rsw_forward(T([[1, 2], [3]]), [3, 1])
    with pytest.raises(ValueError):
        rsw_forward(T([[1], [2]]), [2, 2])


def test_rsw_inverse_examples():
    assert rsw_inverse(T([[1, 2, 3, 6], [4, 5, 9], [7, 8]])) == ((3, 3, 1), T([[1, 3, 4], [2, 6, 7], [5]]))
    assert rsw_inverse(T([[1, 2], [3]])) == ((1, 1), T([[1], [2]]))
    assert rsw_inverse(T([[1, 3], [2]])) == ((2, 1), T([[1, 3], [2]]))


@pytest.mark.parametrize("n", range(1, 8))
def test_rsw_round_trip(n):
    for lam in enumerate_partitions(n):
        images = []
        for mu in horizontal_strip_subshapes(lam):
            for q in enumerate_desarrangements(mu):
                p = rsw_forward(q, lam)
                assert p.shape == lam
                assert rsw_inverse(p) == (mu, q)
                images.append(p)
        assert sorted(images, key=lambda p: p.to_json()) == sorted(enumerate_syt(lam), key=lambda p: p.to_json())


def test_ssyt_basics():
    t = SemistandardTableau([[1, 1, 2], [2]])
    assert t.shape == (3, 1) and t.content == (2, 2)
    with pytest.raises(ValueError):
        SemistandardTableau([[1, 1], [1]])
    assert len(enumerate_ssyt([2, 1], [2, 1])) == 1


def test_kostka_examples():
    assert kostka_number([2, 1], [2, 1]) == 1
    for n in range(3, 9):
        for nu in enumerate_partitions(n):
            if nu[0] != n:
                assert kostka_number([n - 1, 1], nu) == len(nu) - 1
    for lam in enumerate_partitions(7):
        assert kostka_number(lam, [1] * 7) == syt_count(lam)
    with pytest.raises(ValueError):
        kostka_number([2, 1], [2])


@pytest.mark.parametrize("n", range(1, 7))
def test_kostka_matches_brute_force(n):
    for lam in enumerate_partitions(n):
        for nu in enumerate_partitions(n):
            k = kostka_number(lam, nu)
            assert k == brute_ssyt_count(lam, nu) == len(enumerate_ssyt(lam, nu))
            assert (k > 0) == dominates(lam, nu)


def test_json_shapes():
    assert T([[1, 3], [2]]).to_json() == [[1, 3], [2]]
    assert repr(T([[1, 3], [2]])) == "StandardTableau([[1, 3], [2]])"
