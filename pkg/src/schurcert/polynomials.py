"""Trace polynomials p_{alpha,beta}(d) and their integer root sets.

Three routes compute the same polynomial:

* ``p_closed``: the content polynomial of beta divided by m! * d;
* ``p_charsum``: a class-weighted sum of chi_beta(s) d^{N(s)-1};
* ``p_bruteforce``: expand (id (x) e_alpha) e_beta in Q[S_m] and read off
  sum_s f(s) d^{N(s)-1}.
"""

from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .characters import chi, irrep_dimension, class_size
from .partitions import Partition, add_box, boxes, cols, is_hook, partitions_of, rows
from .symgroup import (
    GroupAlgebraElement,
    YoungTableau,
    central_idempotent,
    cycle_count,
    embed_element_fixing_first,
    multiply,
    young_symmetrizer,
)


class RationalPolynomial:
    """Univariate polynomial with Fraction coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def linear(cls, root_shift) -> "RationalPolynomial":
        """The polynomial d + root_shift."""
        return cls([root_shift, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __repr__(self):
        return f"RationalPolynomial({[str(c) for c in self.coeffs]})"

    def __eq__(self, other):
        if isinstance(other, RationalPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == RationalPolynomial([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return RationalPolynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return RationalPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __mul__(self, other):
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return RationalPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, x) -> Fraction:
        value = Fraction(0)
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def divide_by_variable(self) -> "RationalPolynomial":
        """Exact division by d; the constant term must vanish."""
        if self.coeffs and self.coeffs[0] != 0:
            raise ArithmeticError(f"{self} is not divisible by d")
        return RationalPolynomial(self.coeffs[1:])

    def to_json(self) -> list[list[int]]:
        return [[c.numerator, c.denominator] for c in self.coeffs]

    @classmethod
    def from_json(cls, pairs: Iterable[Sequence[int]]) -> "RationalPolynomial":
        return cls(Fraction(num, den) for num, den in pairs)


def _as_poly(x) -> RationalPolynomial:
    return x if isinstance(x, RationalPolynomial) else RationalPolynomial([x])


def content_polynomial(beta: Sequence[int]) -> RationalPolynomial:
    """cp_beta(d) = prod over boxes (i, j) of (d + j - i)."""
    out = RationalPolynomial([1])
    for i, j in boxes(beta):
        out = out * RationalPolynomial.linear(j - i)
    return out


def _check_nonempty(beta: Sequence[int]) -> int:
    m = sum(beta)
    if m < 1:
        raise ValueError("beta must be a partition of m >= 1")
    return m


def p_closed(beta: Sequence[int]) -> RationalPolynomial:
    m = _check_nonempty(beta)
    return content_polynomial(beta).divide_by_variable() * Fraction(1, factorial(m))


def p_charsum(beta: Sequence[int]) -> RationalPolynomial:
    """(1 / (m! dim V_beta)) sum_s chi_beta(s) d^{N(s)-1}, summed over cycle types."""
    beta = tuple(beta)
    m = _check_nonempty(beta)
    coeffs = [Fraction(0)] * m
    for t in partitions_of(m):
        coeffs[len(t) - 1] += class_size(t) * chi(beta, t)
    return RationalPolynomial(coeffs) * Fraction(1, factorial(m) * irrep_dimension(beta))


def trace_sum(x: GroupAlgebraElement) -> RationalPolynomial:
    """sum_s x(s) d^{N(s)-1}: the scalar by which the partial trace of x acts."""
    coeffs = [Fraction(0)] * max(x.degree, 1)
    for perm, c in x.coeffs.items():
        coeffs[cycle_count(perm) - 1] += c
    return RationalPolynomial(coeffs)


def _check_pair(alpha: Partition, beta: Partition):
    if beta not in add_box(alpha):
        raise ValueError(f"{beta} is not obtained from {alpha} by adding one box")


def p_bruteforce(alpha: Sequence[int], beta: Sequence[int], max_degree: int | None = None) -> RationalPolynomial:
    """Expand (id (x) e_alpha) e_beta in Q[S_m] and normalize its trace sum.

    The raw trace sum equals (dim V_alpha / m!) sum_s chi_beta(s) d^{N(s)-1},
    so dividing by dim V_alpha * dim V_beta lands on p_{alpha,beta}.
    """
    alpha, beta = tuple(alpha), tuple(beta)
    _check_pair(alpha, beta)
    e_alpha = embed_element_fixing_first(central_idempotent(alpha))
    product = multiply(e_alpha, central_idempotent(beta), max_degree=max_degree)
    raw = trace_sum(product)
    return raw * Fraction(1, irrep_dimension(alpha) * irrep_dimension(beta))


def raw_idempotent_trace(alpha: Sequence[int], beta: Sequence[int], max_degree: int | None = None) -> RationalPolynomial:
    """Unnormalized trace sum of (id (x) e_alpha) e_beta."""
    alpha, beta = tuple(alpha), tuple(beta)
    _check_pair(alpha, beta)
    e_alpha = embed_element_fixing_first(central_idempotent(alpha))
    return trace_sum(multiply(e_alpha, central_idempotent(beta), max_degree=max_degree))


def symmetrizer_trace(alpha: Sequence[int], beta: Sequence[int], max_degree: int | None = None) -> RationalPolynomial:
    """Trace sum of (id (x) c_alpha) c_beta for the row-reading tableaux."""
    alpha, beta = tuple(alpha), tuple(beta)
    _check_pair(alpha, beta)
    c_alpha = embed_element_fixing_first(young_symmetrizer(YoungTableau.canonical(alpha)))
    c_beta = young_symmetrizer(YoungTableau.canonical(beta))
    return trace_sum(multiply(c_alpha, c_beta, max_degree=max_degree))


def polynomial_ratio(num: RationalPolynomial, den: RationalPolynomial) -> Fraction | None:
    """The constant c with num = c * den, or None when no such constant exists."""
    if not den.coeffs:
        return None
    c = num.coeffs[-1] / den.coeffs[-1] if num.coeffs else Fraction(0)
    return c if num == den * c else None


def root_set(beta: Sequence[int]) -> set[int]:
    """Integer zeros of p_beta: {1-q, ..., p-1}, with 0 dropped for hooks."""
    beta = tuple(beta)
    _check_nonempty(beta)
    roots = set(range(1 - cols(beta), rows(beta)))
    if is_hook(beta):
        roots.discard(0)
    return roots
