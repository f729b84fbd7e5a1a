"""Irreducible characters of S_m.

Characters are evaluated per cycle type with the Murnaghan-Nakayama rule,
run on beta-sets: removing a border strip of length k is sliding one bead
from position x to the free position x - k, with sign (-1) to the number of
beads jumped over.
"""

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Sequence

from .partitions import Partition, partitions_of, conjugate

CycleType = Partition


def _beta_set(beta: Partition) -> frozenset[int]:
    length = len(beta)
    return frozenset(part + length - 1 - i for i, part in enumerate(beta))


def _murnaghan_nakayama(beads: frozenset[int], cycle_type: CycleType, recurse) -> int:
    if not cycle_type:
        return 1
    k, rest = cycle_type[0], cycle_type[1:]
    total = 0
    for x in beads:
        y = x - k
        if y < 0 or y in beads:
            continue
        jumped = sum(1 for z in beads if y < z < x)
        value = recurse((beads - {x}) | {y}, rest)
        total += -value if jumped % 2 else value
    return total


@lru_cache(maxsize=None)
def _mn_cached(beads: frozenset[int], cycle_type: CycleType) -> int:
    return _murnaghan_nakayama(beads, cycle_type, _mn_cached)


def _mn_uncached(beads: frozenset[int], cycle_type: CycleType) -> int:
    return _murnaghan_nakayama(beads, cycle_type, _mn_uncached)


def chi(beta: Sequence[int], cycle_type: Sequence[int], cached: bool = True) -> int:
    """The irreducible character chi_beta on the class of the given cycle type.

    ``cached=False`` bypasses the shared memo table entirely.
    """
    beta, cycle_type = tuple(beta), tuple(sorted(cycle_type, reverse=True))
    if sum(beta) != sum(cycle_type):
        raise ValueError(f"size mismatch: {beta} vs cycle type {cycle_type}")
    evaluate = _mn_cached if cached else _mn_uncached
    return evaluate(_beta_set(beta), cycle_type)


def z_value(cycle_type: Sequence[int]) -> int:
    """Centralizer order prod_k k^{a_k} a_k! for a cycle type."""
    return prod(k ** a * factorial(a) for k, a in Counter(cycle_type).items())


def class_size(cycle_type: Sequence[int]) -> int:
    return factorial(sum(cycle_type)) // z_value(cycle_type)


def type_sign(cycle_type: Sequence[int]) -> int:
    return -1 if (sum(cycle_type) - len(cycle_type)) % 2 else 1


def hook_lengths(beta: Sequence[int]) -> list[int]:
    conj = conjugate(beta)
    return [beta[i] - j + conj[j] - i - 1 for i in range(len(beta)) for j in range(beta[i])]


@lru_cache(maxsize=None)
def _dimension(beta: Partition) -> int:
    return factorial(sum(beta)) // prod(hook_lengths(beta))


def irrep_dimension(beta: Sequence[int]) -> int:
    """dim V_beta by the hook length formula."""
    return _dimension(tuple(beta))


def character_table(m: int) -> dict[Partition, dict[CycleType, int]]:
    """chi_beta(t) for all beta, t partitions of m."""
    classes = partitions_of(m)
    return {beta: {t: chi(beta, t) for t in classes} for beta in partitions_of(m)}


def inner_product(f: dict[CycleType, object], g: dict[CycleType, object]) -> Fraction:
    """<f, g> = (1/m!) sum over S_m, computed as a class-weighted sum (characters are real)."""
    return sum((Fraction(f[t]) * g[t] / z_value(t) for t in f), Fraction(0))


def branching_multiplicity(beta: Sequence[int], alpha: Sequence[int]) -> int:
    """[Res^{S_m}_{S_{m-1}} V_beta : V_alpha] as a character inner product over S_{m-1}."""
    beta, alpha = tuple(beta), tuple(alpha)
    if sum(beta) != sum(alpha) + 1:
        raise ValueError(f"|beta| must be |alpha| + 1, got {beta}, {alpha}")
    total = Fraction(0)
    for t in partitions_of(sum(alpha)):
        # restriction: a permutation of S_{m-1} gains a fixed point in S_m
        total += Fraction(chi(alpha, t) * chi(beta, t + (1,)), z_value(t))
    assert total.denominator == 1
    return int(total)

