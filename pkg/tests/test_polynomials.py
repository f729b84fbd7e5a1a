from fractions import Fraction
from math import factorial, prod

import pytest
from hypothesis import given, strategies as st

from schurcert.partitions import conjugate, is_hook, partitions_of, remove_box
from schurcert.polynomials import (
    RationalPolynomial as P, content_polynomial, p_bruteforce, p_charsum, p_closed, polynomial_ratio,
    root_set, symmetrizer_trace,
)

d = P.linear(0)
shapes = st.integers(1, 9).flatmap(lambda m: st.sampled_from(partitions_of(m)))


def falling_binomial(x, k):
    # binomial(x, k) as a polynomial in x, valid for negative x too
    return Fraction(prod(x - j for j in range(k)), factorial(k))


def test_polynomial_arithmetic():
    assert (d + 1) * (d - 1) == d * d - 1
    assert (d * d).divide_by_variable() == d
    assert P([1, 2, 3])(2) == 17
    assert P([0, 0]) == P() == 0
    assert P.from_json((d * Fraction(1, 3) - 2).to_json()) == d * Fraction(1, 3) - 2


def test_content_polynomial_examples():
    assert content_polynomial((1,)) == d
    assert content_polynomial((2,)) == d * (d + 1)
    assert content_polynomial((2, 2)) == d * d * (d - 1) * (d + 1)


def test_closed_form_examples():
    assert p_closed((1,)) == 1
    assert p_closed((2,)) == (d + 1) * Fraction(1, 2)
    assert p_charsum((2,)) == (d + 1) * Fraction(1, 2)
    assert p_charsum((1, 1)) == (d - 1) * Fraction(1, 2)
    assert p_closed((2, 1)).to_json() == [[-1, 6], [0, 1], [1, 6]]


@pytest.mark.parametrize("m", range(1, 8))
def test_column_is_binomial(m):
    poly = p_closed((1,) * m)
    for x in range(-6, 10):
        assert poly(x) == falling_binomial(x - 1, m - 1) / m


@given(shapes)
def test_closed_equals_charsum(beta):
    assert p_closed(beta) == p_charsum(beta)


@given(shapes)
def test_conjugate_reflects_polynomial(beta):
    # cp_{beta*}(d) = (-1)^m cp_beta(-d), so p_{beta*}(d) = (-1)^(m-1) p_beta(-d)
    m = sum(beta)
    ours, theirs = p_closed(beta), p_closed(conjugate(beta))
    for x in range(-5, 6):
        assert theirs(x) == (-1) ** (m - 1) * ours(-x)


def test_bruteforce_examples():
    assert p_bruteforce((1,), (2,)) == (d + 1) * Fraction(1, 2)
    assert p_bruteforce((1,), (1, 1)) == (d - 1) * Fraction(1, 2)
    assert p_bruteforce((2,), (2, 1)) == (d - 1) * (d + 1) * Fraction(1, 6)


@pytest.mark.parametrize("m", range(1, 6))
def test_bruteforce_independent_of_alpha(m):
    for beta in partitions_of(m):
        for alpha in remove_box(beta):
            assert p_bruteforce(alpha, beta) == p_charsum(beta)


def test_bruteforce_rejects_non_branching_pair():
    with pytest.raises(ValueError):
        p_bruteforce((1, 1), (3,))


def test_empty_shape_rejected():
    with pytest.raises(ValueError):
        p_closed(())


@pytest.mark.parametrize("m", range(2, 5))
def test_symmetrizer_trace_is_nonzero_multiple(m):
    for beta in partitions_of(m):
        for alpha in sorted(remove_box(beta)):
            ratio = polynomial_ratio(symmetrizer_trace(alpha, beta), p_charsum(beta))
            assert ratio is not None and ratio != 0


def test_root_set_examples():
    assert root_set((1,)) == set()
    assert root_set((2, 2)) == {-1, 0, 1}
    assert root_set((3, 1, 1)) == {-2, -1, 1, 2}


@given(shapes)
def test_root_set_is_zero_set(beta):
    poly = p_closed(beta)
    p, q = len(beta), beta[0]
    window = range(-q - 3, p + 4)
    assert {x for x in window if poly(x) == 0} == root_set(beta)
    expected = set(range(1 - q, p)) - ({0} if is_hook(beta) else set())
    assert root_set(beta) == expected
