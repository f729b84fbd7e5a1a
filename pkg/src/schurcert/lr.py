"""Littlewood-Richardson coefficients N^lam_{mu,nu}.

Two independent algorithms:

* ``lr_coefficient``: character inner product over the Young subgroup
  S_i x S_{n-i}, evaluated on pairs of cycle types.
* ``lr_by_tableaux``: count skew semistandard tableaux of shape lam/mu and
  content nu whose reverse reading word is a lattice word.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .characters import chi, z_value
from .partitions import Partition, add_box, is_contained, partition, partitions_of


def _lr_characters(lam: Partition, mu: Partition, nu: Partition, cached: bool = True) -> int:
    if sum(mu) + sum(nu) != sum(lam) or not is_contained(mu, lam) or not is_contained(nu, lam):
        return 0
    total = Fraction(0)
    for s in partitions_of(sum(mu)):
        chi_mu = chi(mu, s, cached)
        if not chi_mu:
            continue
        for t in partitions_of(sum(nu)):
            chi_nu = chi(nu, t, cached)
            if not chi_nu:
                continue
            total += Fraction(chi(lam, s + t, cached) * chi_mu * chi_nu, z_value(s) * z_value(t))
    if total.denominator != 1 or total < 0:
        raise ArithmeticError(f"non-integral LR coefficient {total} for {lam}, {mu}, {nu}")
    return int(total)


@lru_cache(maxsize=None)
def _lr_cached(lam: Partition, mu: Partition, nu: Partition) -> int:
    return _lr_characters(lam, mu, nu)


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int], cached: bool = True) -> int:
    """N^lam_{mu,nu} by characters; 0 on size mismatch or when mu is not inside lam.

    With ``cached=False`` no memo table (here or for characters) is consulted.
    """
    key = partition(lam), partition(mu), partition(nu)
    return _lr_cached(*key) if cached else _lr_characters(*key, cached=False)


def lr_by_tableaux(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Number of LR tableaux of shape lam/mu and content nu."""
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    if not is_contained(mu, lam):
        raise ValueError(f"{mu} is not contained in {lam}")
    if sum(mu) + sum(nu) != sum(lam):
        return 0
    mu_padded = mu + (0,) * (len(lam) - len(mu))
    # cells in reverse reading order: rows top to bottom, each right to left
    cells = [(i, j) for i in range(len(lam)) for j in range(lam[i] - 1, mu_padded[i] - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * len(nu)

    def search(k: int) -> int:
        if k == len(cells):
            return 1
        i, j = cells[k]
        found = 0
        for v in range(len(nu)):
            if counts[v] >= nu[v]:
                continue
            # lattice condition on the reading word
            if v > 0 and counts[v] + 1 > counts[v - 1]:
                continue
            # rows weakly increase left to right; the cell to the right is already filled
            right = filling.get((i, j + 1))
            if right is not None and v > right:
                continue
            # columns strictly increase downward
            up = filling.get((i - 1, j))
            if up is not None and v <= up:
                continue
            filling[(i, j)] = v
            counts[v] += 1
            found += search(k + 1)
            counts[v] -= 1
            del filling[(i, j)]
        return found

    return search(0)


def mu_plus(mu_prime: Sequence[int], nu: Sequence[int], lam: Sequence[int], cached: bool = True) -> set[Partition]:
    """{mu in mu_prime + 1 : N^lam_{mu,nu} != 0}."""
    mu_prime, nu, lam = partition(mu_prime), partition(nu), partition(lam)
    if sum(mu_prime) + sum(nu) + 1 != sum(lam):
        raise ValueError("need |mu'| + |nu| + 1 = |lam|")
    return {mu for mu in add_box(mu_prime) if lr_coefficient(lam, mu, nu, cached=cached)}


def nu_plus(mu_prime: Sequence[int], nu: Sequence[int], lam: Sequence[int], cached: bool = True) -> set[Partition]:
    """{nu' in nu + 1 : N^lam_{mu',nu'} != 0}."""
    mu_prime, nu, lam = partition(mu_prime), partition(nu), partition(lam)
    if sum(mu_prime) + sum(nu) + 1 != sum(lam):
        raise ValueError("need |mu'| + |nu| + 1 = |lam|")
    return {nu_p for nu_p in add_box(nu) if lr_coefficient(lam, mu_prime, nu_p, cached=cached)}
