from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from schurcert.characters import irrep_dimension
from schurcert.partitions import conjugate, contains_box, partitions_of
from schurcert.polynomials import content_polynomial, p_charsum, polynomial_ratio, symmetrizer_trace
from schurcert.superspace import (
    GradedMatrix, NonScalarError, SuperSpaceSpec as V, apply_algebra_element, invariant_suite,
    measure_p_scalar, measure_symmetrizer_scalar, partial_trace_last, permutation_action, rank,
    schur_rank, signed_trace, tensor_parity, weight_block_rank,
)
from schurcert.symgroup import (
    CapExceeded, GroupAlgebraElement, YoungTableau, all_permutations, central_idempotent, compose, cycle_count,
    from_cycles, identity, young_symmetrizer,
)

spaces = st.integers(1, 3).flatmap(lambda t: st.integers(0, t).map(lambda r: V(r, t - r)))


def test_spec_validation():
    with pytest.raises(ValueError):
        V(0, 0)
    assert V(2, 1).sdim == 1 and V(2, 1).dim == 3


def test_swap_signs():
    assert permutation_action(from_cycles(2, (1, 2)), V(1, 0)).to_dense() == [[1]]
    assert permutation_action(from_cycles(2, (1, 2)), V(0, 1)).to_dense() == [[-1]]


@given(spaces, st.integers(1, 4))
def test_identity_action(v, m):
    assert permutation_action(identity(m), v) == GradedMatrix.identity(tensor_parity(v, m))


@given(spaces, st.integers(1, 4), st.data())
def test_full_trace_counts_cycles(v, m, data):
    sigma = data.draw(st.sampled_from(all_permutations(m)))
    assert signed_trace(permutation_action(sigma, v)) == v.sdim ** cycle_count(sigma)


@given(spaces, st.integers(1, 4), st.data())
def test_partial_trace(v, m, data):
    sigma = data.draw(st.sampled_from(all_permutations(m)))
    one = GradedMatrix.identity([v.parity(i) for i in range(v.dim)])
    got = partial_trace_last(permutation_action(sigma, v), v, m)
    assert got == one.scale(Fraction(v.sdim) ** (cycle_count(sigma) - 1))


def test_long_cycle_partial_trace_is_identity():
    v = V(2, 1)
    one = GradedMatrix.identity([v.parity(i) for i in range(v.dim)])
    assert partial_trace_last(permutation_action(from_cycles(4, (1, 2, 3, 4)), v), v, 4) == one


@given(spaces, st.integers(1, 3), st.data())
def test_action_is_a_homomorphism(v, m, data):
    s = data.draw(st.sampled_from(all_permutations(m)))
    t = data.draw(st.sampled_from(all_permutations(m)))
    lhs = permutation_action(compose(s, t), v)
    assert lhs == permutation_action(s, v) @ permutation_action(t, v)


def test_algebra_element_ranks():
    assert apply_algebra_element(GroupAlgebraElement.one(2), V(1, 1)) == permutation_action(identity(2), V(1, 1))
    assert rank(apply_algebra_element(central_idempotent((2,)), V(2, 0))) == 3
    assert rank(apply_algebra_element(central_idempotent((1, 1)), V(0, 1))) == 1


def test_schur_rank_examples():
    assert schur_rank((2, 2), V(1, 1)).total_rank == 0
    assert schur_rank((1, 1), V(2, 0)).total_rank == 1
    assert schur_rank((2, 1), V(2, 0)).total_rank == 2


@given(st.integers(1, 4).flatmap(lambda n: st.sampled_from(partitions_of(n))), spaces)
@settings(max_examples=60, deadline=None)
def test_schur_rank_properties(lam, v):
    got = schur_rank(lam, v)
    assert (got.total_rank == 0) == contains_box(lam, v.r + 1, v.s + 1)
    n = sum(lam)
    assert got.even_rank - got.odd_rank == irrep_dimension(lam) * content_polynomial(lam)(v.sdim) / factorial(n)
    assert schur_rank(conjugate(lam), V(v.s, v.r)).total_rank == got.total_rank


@pytest.mark.parametrize("lam, v", [((2, 1), V(2, 1)), ((3, 1), V(1, 1)), ((2, 2), V(2, 1))])
def test_tableau_choice_does_not_matter(lam, v):
    rows = schur_rank(lam, v, YoungTableau.canonical(lam))
    cols = schur_rank(lam, v, YoungTableau.column_reading(lam))
    assert rows == cols


@pytest.mark.parametrize("lam, v", [((2, 1), V(2, 1)), ((2, 2), V(1, 2)), ((3, 1), V(1, 1)), ((4,), V(0, 2))])
def test_weight_blocks_match_full_rank(lam, v):
    assert schur_rank(lam, v, method="weights") == schur_rank(lam, v, method="full")
    c = young_symmetrizer(YoungTableau.canonical(lam))
    assert sum(weight_block_rank(c, v)) == rank(apply_algebra_element(c, v))


@pytest.mark.parametrize("alpha, beta, v, expected", [
    ((1,), (2,), V(3, 0), 2),
    ((1,), (1, 1), V(1, 0), 0),
    ((1,), (2,), V(0, 1), 0),
])
def test_measure_examples(alpha, beta, v, expected):
    assert measure_p_scalar(alpha, beta, v) == expected


@pytest.mark.parametrize("alpha, beta", [((2,), (2, 1)), ((1, 1), (2, 1)), ((2, 1), (2, 2))])
def test_symmetrizer_measurement_tracks_polynomial(alpha, beta):
    ratio = polynomial_ratio(symmetrizer_trace(alpha, beta), p_charsum(beta))
    assert ratio
    for v in [V(2, 0), V(1, 1), V(2, 1), V(0, 3)]:
        assert measure_symmetrizer_scalar(alpha, beta, v) == ratio * p_charsum(beta)(v.sdim)


def test_non_scalar_result_is_reported():
    from schurcert.superspace import _scalar_of

    M = GradedMatrix(2, {(0, 0): Fraction(1)}, [0, 0])
    with pytest.raises(NonScalarError):
        _scalar_of(M)


def test_cap():
    with pytest.raises(CapExceeded):
        permutation_action(identity(5), V(3, 1), cap=100)


def test_invariant_suite_small():
    checks = invariant_suite(3, 2)
    assert {c["name"] for c in checks} == {
        "partial_trace_cycles", "schur_vanishing_box", "schur_superdimension",
        "schur_conjugate_parity_swap", "p_scalar_measurement"}
    assert all(c["pass"] and c["cases"] for c in checks)
