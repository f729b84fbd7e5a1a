import pytest
from hypothesis import given, strategies as st

from schurcert.partitions import (
    add_box, conjugate, contains_box, contents, f_set, is_contained, is_hook, is_rectangle,
    partition, partitions_of, remove_box, remove_boxes,
)

# p(n) from the generating function, computed independently
P_OF_N = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]

partitions_st = st.integers(0, 9).flatmap(lambda n: st.sampled_from(partitions_of(n)))
nonempty_st = st.integers(1, 9).flatmap(lambda n: st.sampled_from(partitions_of(n)))


def test_partition_counts():
    assert [len(partitions_of(n)) for n in range(11)] == P_OF_N


def test_partition_validation():
    assert partition([2, 1, 0, 0]) == (2, 1)
    assert partition([]) == ()
    with pytest.raises(ValueError):
        partition([1, 2])
    with pytest.raises(ValueError):
        partition([2, -1])


@pytest.mark.parametrize("lam, expected", [((2, 1), (2, 1)), ((4,), (1, 1, 1, 1)), ((3, 1), (2, 1, 1))])
def test_conjugate_examples(lam, expected):
    assert conjugate(lam) == expected


@given(partitions_st)
def test_conjugate_is_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert sum(conjugate(lam)) == sum(lam)


@pytest.mark.parametrize("lam, i, j, expected", [
    ((2, 1), 2, 2, False), ((2, 2), 2, 2, True), ((3,), 2, 1, False),
])
def test_contains_box(lam, i, j, expected):
    assert contains_box(lam, i, j) is expected


def test_contains_box_rejects_nonpositive():
    with pytest.raises(ValueError):
        contains_box((2, 1), 0, 1)


def test_hook_and_rectangle():
    assert is_hook((3, 1, 1)) and is_hook((1,)) and not is_hook((2, 2))
    assert is_rectangle((2, 2)) and is_rectangle((5,)) and not is_rectangle((2, 1))


def test_add_and_remove_box_examples():
    assert add_box(()) == {(1,)}
    assert add_box((1,)) == {(2,), (1, 1)}
    assert add_box((2, 1)) == {(3, 1), (2, 2), (2, 1, 1)}
    assert remove_boxes((2, 1), 1) == {(2,), (1, 1)}
    assert remove_boxes((2, 2), 2) == {(2,), (1, 1)}
    assert remove_boxes((3,), 3) == {()}


@given(nonempty_st)
def test_add_remove_are_inverse(lam):
    for smaller in remove_box(lam):
        assert lam in add_box(smaller)
    for bigger in add_box(lam):
        assert lam in remove_box(bigger)


@given(nonempty_st, st.data())
def test_remove_boxes_are_contained_subdiagrams(lam, data):
    n = sum(lam)
    i = data.draw(st.integers(0, n))
    found = remove_boxes(lam, i)
    brute = {mu for mu in partitions_of(n - i) if is_contained(mu, lam)}
    assert found == brute


def test_remove_boxes_range():
    with pytest.raises(ValueError):
        remove_boxes((2, 1), 4)


def test_contents():
    assert contents((2, 1)) == {0: 1, 1: 1, -1: 1}
    assert contents((1,)) == {0: 1}
    assert contents((2, 2)) == {0: 2, 1: 1, -1: 1}


@pytest.mark.parametrize("n", range(2, 9))
def test_fset_columns_and_rows(n):
    assert f_set((1,) * n) == set(range(2, n + 1))
    assert f_set((n,)) == set(range(-n, -1))


def test_fset_examples():
    assert f_set((2, 1)) == set()
    assert f_set((2, 2)) == {-2, 0, 2}


@given(nonempty_st)
def test_fset_duality_and_range(lam):
    assert f_set(conjugate(lam)) == {-x for x in f_set(lam)}
    p, q = len(lam), lam[0]
    assert f_set(lam) <= set(range(-q, p + 1))
