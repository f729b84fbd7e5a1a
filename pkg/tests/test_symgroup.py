from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from schurcert import symgroup
from schurcert.partitions import partitions_of
from schurcert.symgroup import (
    CapExceeded, GroupAlgebraElement as G, YoungTableau, all_permutations, central_idempotent, compose,
    cycle_count, cycle_type, embed_element_fixing_first, embed_fixing_first, from_cycles, identity,
    inverse, multiply, sign, young_symmetrizer,
)

perms = st.integers(1, 6).flatmap(lambda m: st.permutations(range(m)).map(tuple))


def delta(m, *cycles):
    return G.basis(from_cycles(m, *cycles))


def test_cycle_counts():
    assert cycle_count(identity(3)) == 3
    assert cycle_count(from_cycles(3, (1, 2))) == 2
    assert cycle_count(from_cycles(3, (1, 2, 3))) == 1


def test_composition_acts_right_to_left():
    s, t = from_cycles(3, (1, 2)), from_cycles(3, (2, 3))
    # (s t)(3) = s(t(3)) = s(2) = 1
    assert compose(s, t)[2] == 0


@given(perms)
def test_group_laws(s):
    m = len(s)
    assert compose(s, inverse(s)) == identity(m)
    assert sign(s) == (-1) ** (m - cycle_count(s))
    assert sum(cycle_type(s)) == m


def test_delta_products():
    s = from_cycles(3, (1, 2, 3))
    assert G.basis(s) * G.basis(inverse(s)) == G.one(3)
    x = G.one(2) + delta(2, (1, 2))
    assert x * x == 2 * x


def test_central_idempotents_in_s2():
    half = Fraction(1, 2)
    assert central_idempotent((2,)) == (G.one(2) + delta(2, (1, 2))).scale(half)
    assert central_idempotent((1, 1)) == (G.one(2) - delta(2, (1, 2))).scale(half)
    assert (central_idempotent((2,)) * central_idempotent((1, 1))).is_zero()


@pytest.mark.parametrize("m", [3, 4])
def test_central_idempotents_are_orthogonal_idempotents(m):
    es = {beta: central_idempotent(beta) for beta in partitions_of(m)}
    total = G(m)
    for beta, e in es.items():
        assert e * e == e
        total = total + e
        for other, f in es.items():
            if other != beta:
                assert (e * f).is_zero()
    assert total == G.one(m)


def test_young_symmetrizers_small():
    assert young_symmetrizer(YoungTableau.canonical((2,))) == G.one(2) + delta(2, (1, 2))
    assert young_symmetrizer(YoungTableau.canonical((1, 1))) == G.one(2) - delta(2, (1, 2))
    expected = (G.one(3) + delta(3, (1, 2))) * (G.one(3) - delta(3, (1, 3)))
    assert young_symmetrizer(YoungTableau([[1, 2], [3]])) == expected


@pytest.mark.parametrize("shape", [(2, 1), (3, 1), (2, 2), (2, 1, 1)])
def test_young_symmetrizer_is_quasi_idempotent(shape):
    from math import factorial, prod

    from schurcert.characters import hook_lengths

    c = young_symmetrizer(YoungTableau.canonical(shape))
    assert c * c == c.scale(prod(hook_lengths(shape)))
    assert factorial(sum(shape)) % prod(hook_lengths(shape)) == 0


def test_embedding_shifts_indices():
    assert embed_fixing_first(identity(2)) == identity(3)
    assert embed_fixing_first(from_cycles(2, (1, 2))) == from_cycles(3, (2, 3))
    assert embed_fixing_first(from_cycles(3, (1, 2, 3))) == from_cycles(4, (2, 3, 4))
    x = G.one(2) + delta(2, (1, 2))
    assert embed_element_fixing_first(x) == G.one(3) + delta(3, (2, 3))


def test_product_cap(monkeypatch):
    monkeypatch.setattr(symgroup, "MAX_PRODUCT_DEGREE", 2)
    x = G.one(3)
    with pytest.raises(CapExceeded):
        multiply(x, x)
    assert multiply(x, x, max_degree=3) == x


def test_json_round_trip():
    x = central_idempotent((2, 1))
    assert G.from_json(3, x.to_json()) == x
    assert all(len(perm) == 3 and min(perm) == 1 for perm, _, _ in x.to_json())


def test_all_permutations_count():
    assert len(all_permutations(5)) == 120
