"""A concrete model of the symmetric category of super vector spaces.

S_m acts on the m-th tensor power of Q^{r|s} by Koszul-signed place
permutations.  Everything is exact: matrices are sparse maps from index
pairs to Fractions, ranks come from fraction-free elimination.

Basis vectors 0..r-1 are even and r..r+s-1 are odd.  A tensor basis index
is a tuple (i_1, ..., i_m), encoded base (r+s) with i_1 most significant.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from collections import Counter
from itertools import permutations, product
from math import factorial, gcd, lcm
from typing import Sequence

from .characters import irrep_dimension
from .partitions import Partition, add_box, partition
from .symgroup import (
    CapExceeded,
    GroupAlgebraElement,
    Permutation,
    YoungTableau,
    central_idempotent,
    embed_element_fixing_first,
    multiply,
    young_symmetrizer,
)

MAX_TENSOR_DIM = 4096


@dataclass(frozen=True)
class SuperSpaceSpec:
    """Q^{r|s}: r even and s odd basis vectors."""

    r: int
    s: int

    def __post_init__(self):
        if self.r < 0 or self.s < 0 or self.r + self.s < 1:
            raise ValueError(f"need r, s >= 0 and r + s >= 1, got ({self.r}|{self.s})")

    @property
    def dim(self) -> int:
        return self.r + self.s

    @property
    def sdim(self) -> int:
        return self.r - self.s

    def parity(self, i: int) -> int:
        return 0 if i < self.r else 1


class NonScalarError(ArithmeticError):
    """A partial trace that should be scalar is not."""


class GradedMatrix:
    """Sparse exact matrix on a Z/2-graded space.

    ``parity[i]`` is the grading of basis index i (0 even, 1 odd).
    """

    __slots__ = ("size", "entries", "parity")

    def __init__(self, size: int, entries: dict[tuple[int, int], Fraction], parity: Sequence[int]):
        self.size = size
        self.entries = {k: Fraction(v) for k, v in entries.items() if v}
        self.parity = tuple(parity)
        if len(self.parity) != size:
            raise ValueError("grading must label every basis index")

    @classmethod
    def identity(cls, parity: Sequence[int]) -> "GradedMatrix":
        return cls(len(parity), {(i, i): Fraction(1) for i in range(len(parity))}, parity)

    def __eq__(self, other):
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return self.size == other.size and self.parity == other.parity and self.entries == other.entries

    def __repr__(self):
        return f"GradedMatrix(size={self.size}, nnz={len(self.entries)})"

    def __add__(self, other: "GradedMatrix") -> "GradedMatrix":
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, 0) + v
        return GradedMatrix(self.size, out, self.parity)

    def scale(self, c) -> "GradedMatrix":
        c = Fraction(c)
        return GradedMatrix(self.size, {k: v * c for k, v in self.entries.items()}, self.parity)

    def __matmul__(self, other: "GradedMatrix") -> "GradedMatrix":
        by_row: dict[int, list[tuple[int, Fraction]]] = {}
        for (i, j), v in other.entries.items():
            by_row.setdefault(i, []).append((j, v))
        out: dict[tuple[int, int], Fraction] = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                out[i, j] = out.get((i, j), 0) + a * b
        return GradedMatrix(self.size, out, self.parity)

    def is_scalar(self) -> bool:
        diag = {self.entries.get((i, i), Fraction(0)) for i in range(self.size)}
        off_diagonal = any(i != j for i, j in self.entries)
        return len(diag) <= 1 and not off_diagonal

    def to_dense(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.size for _ in range(self.size)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def block(self, parity: int) -> "GradedMatrix":
        """Restriction to basis indices of the given parity (rows and columns)."""
        keep = [i for i in range(self.size) if self.parity[i] == parity]
        position = {i: k for k, i in enumerate(keep)}
        sub = {(position[i], position[j]): v for (i, j), v in self.entries.items()
               if i in position and j in position}
        return GradedMatrix(len(keep), sub, [parity] * len(keep))


def _check_cap(v: SuperSpaceSpec, m: int, cap: int | None):
    cap = MAX_TENSOR_DIM if cap is None else cap
    if v.dim ** m > cap:
        raise CapExceeded(f"({v.r}|{v.s})^{m} has dimension {v.dim ** m} > cap {cap}")


@lru_cache(maxsize=64)
def _tensor_basis(r: int, s: int, m: int) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    labels = tuple(product(range(r + s), repeat=m))
    parity = tuple(sum(1 for i in idx if i >= r) % 2 for idx in labels)
    return labels, parity


def tensor_parity(v: SuperSpaceSpec, m: int) -> tuple[int, ...]:
    return _tensor_basis(v.r, v.s, m)[1]


def _signed_targets(sigma: Permutation, v: SuperSpaceSpec, m: int) -> list[tuple[int, int]]:
    # column index -> (row index, +-1)
    labels, _ = _tensor_basis(v.r, v.s, m)
    base, r = v.dim, v.r
    # weight of position k in the encoded index of the image tensor
    place = [base ** (m - 1 - sigma[k]) for k in range(m)]
    out = []
    for idx in labels:
        row = 0
        odd_targets = []
        for k in range(m):
            row += idx[k] * place[k]
            if idx[k] >= r:
                odd_targets.append(sigma[k])
        inversions = sum(1 for a in range(len(odd_targets)) for b in range(a + 1, len(odd_targets))
                         if odd_targets[a] > odd_targets[b])
        out.append((row, -1 if inversions % 2 else 1))
    return out


def permutation_action(sigma: Permutation, v: SuperSpaceSpec, m: int | None = None,
                       cap: int | None = None) -> GradedMatrix:
    """Matrix of sigma on (Q^{r|s})^{(x) m}: factor k moves to position sigma(k).

    Each transposition of two odd factors contributes a sign -1.
    """
    sigma = tuple(sigma)
    m = len(sigma) if m is None else m
    if len(sigma) != m:
        raise ValueError(f"permutation of degree {len(sigma)} acting on {m} factors")
    _check_cap(v, m, cap)
    parity = tensor_parity(v, m)
    entries = {(row, col): sgn for col, (row, sgn) in enumerate(_signed_targets(sigma, v, m))}
    return GradedMatrix(len(parity), entries, parity)


def signed_trace(M: GradedMatrix) -> Fraction:
    """Supertrace: sum of diagonal entries, negated on odd basis vectors."""
    return sum((v if M.parity[i] == 0 else -v for (i, j), v in M.entries.items() if i == j), Fraction(0))


def partial_trace_last(M: GradedMatrix, v: SuperSpaceSpec, m: int) -> GradedMatrix:
    """Signed trace over the last m-1 tensor factors; returns a (r+s) x (r+s) matrix."""
    if M.size != v.dim ** m:
        raise ValueError(f"matrix of size {M.size} does not act on ({v.r}|{v.s})^{m}")
    rest = v.dim ** (m - 1)
    rest_parity = tensor_parity(v, m - 1) if m > 1 else (0,)
    out: dict[tuple[int, int], Fraction] = {}
    for (row, col), value in M.entries.items():
        i, u = divmod(row, rest)
        j, w = divmod(col, rest)
        if u != w:
            continue
        signed = -value if rest_parity[u] else value
        out[i, j] = out.get((i, j), 0) + signed
    return GradedMatrix(v.dim, out, [v.parity(i) for i in range(v.dim)])


def apply_algebra_element(x: GroupAlgebraElement, v: SuperSpaceSpec, cap: int | None = None) -> GradedMatrix:
    """Linear extension of ``permutation_action`` to Q[S_m]."""
    _check_cap(v, x.degree, cap)
    parity = tensor_parity(v, x.degree)
    den = lcm(*(c.denominator for c in x.coeffs.values())) if x.coeffs else 1
    total: dict[tuple[int, int], int] = {}
    for sigma, c in x.coeffs.items():
        scaled = int(c * den)
        for col, (row, sgn) in enumerate(_signed_targets(sigma, v, x.degree)):
            key = row, col
            total[key] = total.get(key, 0) + sgn * scaled
    return GradedMatrix(len(parity), {k: Fraction(t, den) for k, t in total.items() if t}, parity)


def _components(entries) -> list[list[tuple[int, int]]]:
    # connected components of the bipartite row/column support graph
    parent: dict = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in entries:
        ri, cj = find(("r", i)), find(("c", j))
        if ri != cj:
            parent[ri] = cj
    groups: dict = {}
    for key in entries:
        groups.setdefault(find(("r", key[0])), []).append(key)
    return list(groups.values())


def rank(M: GradedMatrix) -> int:
    """Exact rank: the support splits into independent blocks, each reduced fraction-free."""
    return sum(_block_rank({k: M.entries[k] for k in keys}) for keys in _components(M.entries))


def _block_rank(entries: dict[tuple[int, int], Fraction]) -> int:
    pivots: dict[int, dict[int, int]] = {}
    rows: dict[int, dict[int, Fraction]] = {}
    for (i, j), value in entries.items():
        rows.setdefault(i, {})[j] = value
    for row in rows.values():
        den = lcm(*(x.denominator for x in row.values()))
        current = {j: int(x * den) for j, x in row.items()}
        while current:
            lead = min(current)
            pivot = pivots.get(lead)
            if pivot is None:
                pivots[lead] = current
                break
            a, b = pivot[lead], current[lead]
            combined = {j: a * x for j, x in current.items()}
            for j, x in pivot.items():
                combined[j] = combined.get(j, 0) - b * x
            current = {j: x for j, x in combined.items() if x}
            if current:
                g = 0
                for x in current.values():
                    g = gcd(g, x)
                current = {j: x // g for j, x in current.items()}
    return len(pivots)


def _compositions(total: int, parts: int) -> list[tuple[int, ...]]:
    if parts == 0:
        return [()] if total == 0 else []
    return [(k,) + rest for k in range(total, -1, -1) for rest in _compositions(total - k, parts - 1)]


def _orbit_size(counts: Sequence[int]) -> int:
    out = factorial(len(counts))
    for c in Counter(counts).values():
        out //= factorial(c)
    return out


def _weight_block_rank(x: GroupAlgebraElement, v: SuperSpaceSpec, letters: tuple[int, ...]) -> int:
    # rank of x restricted to tensors whose letters are a rearrangement of `letters`
    columns = sorted(set(permutations(letters)))
    position = {idx: k for k, idx in enumerate(columns)}
    m = x.degree
    den = lcm(*(c.denominator for c in x.coeffs.values())) if x.coeffs else 1
    entries: dict[tuple[int, int], int] = {}
    for col, idx in enumerate(columns):
        odd = [k for k in range(m) if idx[k] >= v.r]
        for sigma, c in x.coeffs.items():
            out = [0] * m
            for k in range(m):
                out[sigma[k]] = idx[k]
            targets = [sigma[k] for k in odd]
            inversions = sum(1 for a in range(len(targets)) for b in range(a + 1, len(targets))
                             if targets[a] > targets[b])
            key = position[tuple(out)], col
            entries[key] = entries.get(key, 0) + (-1 if inversions % 2 else 1) * int(c * den)
    return rank(GradedMatrix(len(columns), {k: t for k, t in entries.items() if t}, [0] * len(columns)))


def weight_block_rank(x: GroupAlgebraElement, v: SuperSpaceSpec) -> tuple[int, int]:
    """(even, odd) rank of x on (Q^{r|s})^{(x) m}, one dominant weight at a time.

    x commutes with the torus of GL(r) x GL(s), so its matrix splits into
    weight blocks, and blocks related by permuting even letters (or odd
    letters) have equal rank.
    """
    m = x.degree
    ranks = [0, 0]
    for even_total in range(m + 1):
        for even in _compositions(even_total, v.r):
            if list(even) != sorted(even, reverse=True):
                continue
            for odd in _compositions(m - even_total, v.s):
                if list(odd) != sorted(odd, reverse=True):
                    continue
                letters = tuple(k for k, c in enumerate(even) for _ in range(c))
                letters += tuple(v.r + k for k, c in enumerate(odd) for _ in range(c))
                block = _weight_block_rank(x, v, letters)
                ranks[(m - even_total) % 2] += block * _orbit_size(even) * _orbit_size(odd)
    return ranks[0], ranks[1]


@dataclass(frozen=True)
class SchurRank:
    total_rank: int
    even_rank: int
    odd_rank: int


def schur_rank(lam: Sequence[int], v: SuperSpaceSpec, tableau: YoungTableau | None = None,
               cap: int | None = None, method: str = "weights") -> SchurRank:
    """Rank of the Young symmetrizer of `lam` on (Q^{r|s})^{(x) n}, split by parity.

    ``method="weights"`` works block by block on dominant weights;
    ``method="full"`` assembles the whole matrix and splits it by parity.
    """
    lam = partition(lam)
    t = YoungTableau.canonical(lam) if tableau is None else tableau
    if t.shape != lam:
        raise ValueError(f"tableau shape {t.shape} does not match {lam}")
    _check_cap(v, sum(lam), cap)
    c = young_symmetrizer(t)
    if method == "weights":
        even, odd = weight_block_rank(c, v)
    elif method == "full":
        M = apply_algebra_element(c, v, cap)
        even, odd = rank(M.block(0)), rank(M.block(1))
    else:
        raise ValueError(f"unknown method {method!r}")
    return SchurRank(even + odd, even, odd)


def _scalar_of(M: GradedMatrix) -> Fraction:
    if not M.is_scalar():
        raise NonScalarError(f"partial trace is not a multiple of the identity: {M.entries}")
    return M.entries.get((0, 0), Fraction(0))


def _check_pair(alpha: Partition, beta: Partition):
    if beta not in add_box(alpha):
        raise ValueError(f"{beta} is not obtained from {alpha} by adding one box")


def measure_p_scalar(alpha: Sequence[int], beta: Sequence[int], v: SuperSpaceSpec,
                     normalize: bool = True, cap: int | None = None) -> Fraction:
    """Scalar of the partial trace of (id (x) e_alpha) e_beta acting on (Q^{r|s})^{(x) m}.

    With ``normalize`` the scalar is divided by dim V_alpha * dim V_beta, which
    puts it on the scale of p_{alpha,beta}(r - s).
    """
    alpha, beta = partition(alpha), partition(beta)
    _check_pair(alpha, beta)
    element = multiply(embed_element_fixing_first(central_idempotent(alpha)), central_idempotent(beta))
    m = sum(beta)
    scalar = _scalar_of(partial_trace_last(apply_algebra_element(element, v, cap), v, m))
    if normalize:
        scalar /= irrep_dimension(alpha) * irrep_dimension(beta)
    return scalar


def measure_symmetrizer_scalar(alpha: Sequence[int], beta: Sequence[int], v: SuperSpaceSpec,
                               cap: int | None = None) -> Fraction:
    """Scalar of the partial trace of (id (x) c_alpha) c_beta, row-reading tableaux."""
    alpha, beta = partition(alpha), partition(beta)
    _check_pair(alpha, beta)
    c_alpha = embed_element_fixing_first(young_symmetrizer(YoungTableau.canonical(alpha)))
    c_beta = young_symmetrizer(YoungTableau.canonical(beta))
    m = sum(beta)
    return _scalar_of(partial_trace_last(apply_algebra_element(multiply(c_alpha, c_beta), v, cap), v, m))


def _spaces(max_dim: int):
    for total in range(1, max_dim + 1):
        for r in range(total, -1, -1):
            yield SuperSpaceSpec(r, total - r)


def invariant_suite(max_m: int = 4, max_dim: int = 3) -> list[dict]:
    """Check the concrete trace and Schur functor identities for m <= max_m, r+s <= max_dim.

    Returns one record per identity: name, number of cases, failures, pass flag.
    """
    from .partitions import conjugate, contains_box, partitions_of, remove_box
    from .polynomials import content_polynomial, p_charsum
    from .symgroup import all_permutations, cycle_count

    results = []

    def record(name, cases, failures):
        results.append({"name": name, "cases": cases, "failures": failures, "pass": not failures})

    cases, failures = 0, []
    for m in range(1, max_m + 1):
        for v in _spaces(max_dim):
            if v.dim ** m > MAX_TENSOR_DIM:
                continue
            one = GradedMatrix.identity([v.parity(i) for i in range(v.dim)])
            for sigma in all_permutations(m):
                cases += 1
                expected = one.scale(Fraction(v.sdim) ** (cycle_count(sigma) - 1))
                if partial_trace_last(permutation_action(sigma, v), v, m) != expected:
                    failures.append({"sigma": [x + 1 for x in sigma], "r": v.r, "s": v.s})
    record("partial_trace_cycles", cases, failures)

    vanishing, sdim, duality = ([], 0), ([], 0), ([], 0)
    for n in range(1, max_m + 1):
        for lam in partitions_of(n):
            for v in _spaces(max_dim):
                if v.dim ** n > MAX_TENSOR_DIM:
                    continue
                got = schur_rank(lam, v)
                case = {"lambda": list(lam), "r": v.r, "s": v.s}
                vanishing = (vanishing[0] + ([case] if (got.total_rank == 0) != contains_box(lam, v.r + 1, v.s + 1) else []),
                             vanishing[1] + 1)
                expected = Fraction(irrep_dimension(lam)) * content_polynomial(lam)(v.sdim) / factorial(n)
                sdim = (sdim[0] + ([case] if got.even_rank - got.odd_rank != expected else []), sdim[1] + 1)
                twisted = schur_rank(conjugate(lam), SuperSpaceSpec(v.s, v.r)).total_rank
                duality = (duality[0] + ([case] if twisted != got.total_rank else []), duality[1] + 1)
    record("schur_vanishing_box", vanishing[1], vanishing[0])
    record("schur_superdimension", sdim[1], sdim[0])
    record("schur_conjugate_parity_swap", duality[1], duality[0])

    cases, failures = 0, []
    for m in range(1, max_m + 1):
        for beta in partitions_of(m):
            for alpha in sorted(remove_box(beta)):
                for v in _spaces(max_dim):
                    if v.dim ** m > MAX_TENSOR_DIM:
                        continue
                    cases += 1
                    got = measure_p_scalar(alpha, beta, v)
                    if got != p_charsum(beta)(v.sdim):
                        failures.append({"alpha": list(alpha), "beta": list(beta), "r": v.r, "s": v.s,
                                         "measured": [got.numerator, got.denominator]})
    record("p_scalar_measurement", cases, failures)
    return results
