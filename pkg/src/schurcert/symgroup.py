"""Permutations and the rational group algebra Q[S_m].

Permutations are tuples of images in one-line notation, 0-based internally:
``perm[i]`` is the image of ``i``.  Serialization is 1-based.  Products
compose right to left, ``(s * t)(i) = s(t(i))``.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import permutations as _itertools_permutations, product
from math import factorial
from typing import Iterable, Mapping, Sequence

from .partitions import Partition, conjugate

Permutation = tuple[int, ...]

# Full products in Q[S_m] cost up to (m!)^2 term pairs.
MAX_PRODUCT_DEGREE = 7


class CapExceeded(RuntimeError):
    """A computation would exceed a configured size cap."""


class CharacteristicError(ValueError):
    """The field characteristic does not make m! invertible."""


def identity(m: int) -> Permutation:
    return tuple(range(m))


def compose(s: Permutation, t: Permutation) -> Permutation:
    return tuple(s[x] for x in t)


def inverse(s: Permutation) -> Permutation:
    inv = [0] * len(s)
    for i, x in enumerate(s):
        inv[x] = i
    return tuple(inv)


def from_cycles(m: int, *cycles: Sequence[int]) -> Permutation:
    """Build a permutation of {1..m} from 1-based cycles, e.g. ``from_cycles(3, (1, 2))``."""
    images = list(range(m))
    for cycle in cycles:
        cycle = list(cycle)
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            images[a - 1] = b - 1
    perm = tuple(images)
    if sorted(perm) != list(range(m)):
        raise ValueError(f"cycles {cycles} do not define a permutation")
    return perm


def from_one_line(images: Sequence[int]) -> Permutation:
    """1-based one-line notation to the internal form."""
    perm = tuple(int(x) - 1 for x in images)
    if sorted(perm) != list(range(len(perm))):
        raise ValueError(f"not a permutation: {list(images)}")
    return perm


def to_one_line(perm: Permutation) -> list[int]:
    return [x + 1 for x in perm]


def cycles(perm: Permutation) -> list[tuple[int, ...]]:
    """Disjoint cycles (0-based), fixed points included."""
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycle = []
        x = start
        while not seen[x]:
            seen[x] = True
            cycle.append(x)
            x = perm[x]
        out.append(tuple(cycle))
    return out


def cycle_count(perm: Permutation) -> int:
    """N(perm): number of disjoint cycles, counting fixed points."""
    return len(cycles(perm))


def cycle_type(perm: Permutation) -> Partition:
    return tuple(sorted((len(c) for c in cycles(perm)), reverse=True))


def sign(perm: Permutation) -> int:
    return -1 if (len(perm) - cycle_count(perm)) % 2 else 1


@lru_cache(maxsize=None)
def all_permutations(m: int) -> tuple[Permutation, ...]:
    return tuple(_itertools_permutations(range(m)))


def embed_fixing_first(tau: Permutation) -> Permutation:
    """Identify S_{m-1} with the stabilizer of the first point of S_m."""
    return (0,) + tuple(x + 1 for x in tau)


class GroupAlgebraElement:
    """A finitely supported map S_m -> Q, multiplied by convolution."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: Mapping[Permutation, object] | None = None):
        self.degree = degree
        self.coeffs: dict[Permutation, Fraction] = {}
        for perm, c in (coeffs or {}).items():
            perm = tuple(perm)
            if len(perm) != degree:
                raise ValueError(f"permutation {perm} does not have degree {degree}")
            if c:
                self.coeffs[perm] = Fraction(c)

    @classmethod
    def basis(cls, perm: Permutation, coeff=1) -> "GroupAlgebraElement":
        return cls(len(perm), {perm: coeff})

    @classmethod
    def one(cls, m: int) -> "GroupAlgebraElement":
        return cls.basis(identity(m))

    def __repr__(self):
        terms = ", ".join(f"{to_one_line(p)}: {c}" for p, c in sorted(self.coeffs.items()))
        return f"GroupAlgebraElement({self.degree}, {{{terms}}})"

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.degree, frozenset(self.coeffs.items())))

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, perm: Permutation) -> Fraction:
        return self.coeffs.get(tuple(perm), Fraction(0))

    def _check(self, other: "GroupAlgebraElement"):
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for perm, c in other.coeffs.items():
            out[perm] = out.get(perm, Fraction(0)) + c
        return GroupAlgebraElement(self.degree, out)

    def __neg__(self):
        return GroupAlgebraElement(self.degree, {p: -c for p, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor) -> "GroupAlgebraElement":
        factor = Fraction(factor)
        return GroupAlgebraElement(self.degree, {p: c * factor for p, c in self.coeffs.items()})

    def __rmul__(self, factor):
        return self.scale(factor)

    def __mul__(self, other):
        if isinstance(other, GroupAlgebraElement):
            return multiply(self, other)
        return self.scale(other)

    def is_zero(self) -> bool:
        return not self.coeffs

    def to_json(self) -> list[list]:
        """Sorted (one-line permutation, numerator, denominator) triples."""
        return [[to_one_line(p), c.numerator, c.denominator]
                for p, c in sorted(self.coeffs.items(), key=lambda kv: to_one_line(kv[0]))]

    @classmethod
    def from_json(cls, degree: int, triples: Iterable[Sequence]) -> "GroupAlgebraElement":
        return cls(degree, {from_one_line(p): Fraction(num, den) for p, num, den in triples})


def multiply(x: GroupAlgebraElement, y: GroupAlgebraElement, max_degree: int | None = None) -> GroupAlgebraElement:
    x._check(y)
    cap = MAX_PRODUCT_DEGREE if max_degree is None else max_degree
    if x.degree > cap:
        raise CapExceeded(f"group algebra product in degree {x.degree} exceeds cap {cap}")
    out: dict[Permutation, Fraction] = {}
    for (s, a), (t, b) in product(x.coeffs.items(), y.coeffs.items()):
        st = tuple(s[i] for i in t)
        out[st] = out.get(st, 0) + a * b
    return GroupAlgebraElement(x.degree, out)


def embed_element_fixing_first(x: GroupAlgebraElement) -> GroupAlgebraElement:
    """id_X (x) x: extend an element of Q[S_{m-1}] to Q[S_m] fixing the first point."""
    return GroupAlgebraElement(x.degree + 1, {embed_fixing_first(p): c for p, c in x.coeffs.items()})


class YoungTableau:
    """A bijective filling of a Young diagram by 1..m, stored row by row."""

    def __init__(self, rows: Sequence[Sequence[int]]):
        self.rows = tuple(tuple(r) for r in rows if len(r))
        self.shape: Partition = tuple(len(r) for r in self.rows)
        if any(a < b for a, b in zip(self.shape, self.shape[1:])):
            raise ValueError(f"rows {rows} do not form a Young diagram")
        m = sum(self.shape)
        if sorted(x for r in self.rows for x in r) != list(range(1, m + 1)):
            raise ValueError(f"filling must use 1..{m} exactly once")

    @classmethod
    def canonical(cls, shape: Sequence[int]) -> "YoungTableau":
        """Row-reading filling: 1..shape[0] in the first row, and so on."""
        rows, start = [], 1
        for part in shape:
            rows.append(range(start, start + part))
            start += part
        return cls(rows)

    @classmethod
    def column_reading(cls, shape: Sequence[int]) -> "YoungTableau":
        """Fill down the columns instead; another standard tableau of the same shape."""
        rows = [[0] * part for part in shape]
        k = 1
        for j, height in enumerate(conjugate(shape)):
            for i in range(height):
                rows[i][j] = k
                k += 1
        return cls(rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    def columns(self) -> list[tuple[int, ...]]:
        return [tuple(r[j] for r in self.rows if j < len(r)) for j in range(len(self.rows[0]) if self.rows else 0)]

    def __repr__(self):
        return f"YoungTableau({[list(r) for r in self.rows]})"


def _set_stabilizer(m: int, blocks: Sequence[Sequence[int]]) -> list[Permutation]:
    # all permutations of {0..m-1} preserving each block (blocks are 1-based)
    factors = []
    for block in blocks:
        block = [x - 1 for x in block]
        factors.append([(block, list(img)) for img in _itertools_permutations(block)])
    out = []
    for choice in product(*factors):
        images = list(range(m))
        for block, img in choice:
            for a, b in zip(block, img):
                images[a] = b
        out.append(tuple(images))
    return out


def young_symmetrizer(t: YoungTableau) -> GroupAlgebraElement:
    """c_t = a_t * b_t: row symmetrizer times signed column antisymmetrizer."""
    m = t.size
    row_group = _set_stabilizer(m, t.rows)
    col_group = _set_stabilizer(m, t.columns())
    out: dict[Permutation, Fraction] = {}
    for r in row_group:
        for c in col_group:
            rc = compose(r, c)
            out[rc] = out.get(rc, 0) + sign(c)
    return GroupAlgebraElement(m, out)


def _check_characteristic(m: int, characteristic: int):
    if characteristic and characteristic <= m:
        raise CharacteristicError(f"characteristic {characteristic} does not invert {m}!")


def central_idempotent(beta: Sequence[int], characteristic: int = 0) -> GroupAlgebraElement:
    """e_beta = (dim V_beta / m!) * sum_s chi_beta(s) s."""
    from .characters import chi, irrep_dimension

    beta = tuple(beta)
    m = sum(beta)
    _check_characteristic(m, characteristic)
    scale = Fraction(irrep_dimension(beta), factorial(m))
    coeffs = {}
    for perm in all_permutations(m):
        value = chi(beta, cycle_type(perm))
        if value:
            coeffs[perm] = scale * value
    return GroupAlgebraElement(m, coeffs)
