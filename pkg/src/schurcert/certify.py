"""Semisimplicity certificates and counterexample reports.

For a partition lam of n and a dimension d (an integer, read in a field of
characteristic 0 or of a prime characteristic > n), ``certify`` returns either

* a :class:`Certificate`: witness data (i, mu', nu, mu, nu') covering every
  possible dimension b of a quotient B of V (and a = d - b of the sub-object
  A) such that a is not a root of p_mu and b is not a root of p_nu'.  Such
  data forces every extension 0 -> A -> V -> B -> 0 to split whenever
  S_lam V is semisimple; or
* a :class:`CounterexampleReport`: a family of non-semisimple objects V of
  dimension d with S_lam V semisimple, when d lies in F(lam).

One witness with i = 1, mu' = (0), mu = (1) handles every b outside the
root set of lam; each remaining integer b in {1-q, ..., p-1} gets its own
witness, built from the explicit row/column recipes below and, only if those
fail, from an exhaustive search.
"""

from dataclasses import dataclass, field
from math import factorial
from typing import Callable, Iterator, Optional, Sequence

from . import __version__
from .characters import irrep_dimension
from .lr import lr_by_tableaux, lr_coefficient, mu_plus, nu_plus
from .partitions import (
    Partition,
    add_box,
    boxes,
    cols,
    conjugate,
    contains_box,
    f_set,
    is_contained,
    is_rectangle,
    partition,
    remove_box,
    remove_boxes,
    rows,
    sort_partitions,
)
from .polynomials import content_polynomial, root_set
from .superspace import MAX_TENSOR_DIM, SuperSpaceSpec, schur_rank


class CertificationError(RuntimeError):
    """No witness exists for a branch that should be certifiable."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


def check_characteristic(n: int, characteristic: int):
    if characteristic < 0 or (characteristic and (not is_prime(characteristic) or characteristic <= n)):
        raise ValueError(f"characteristic must be 0 or a prime > {n}, got {characteristic}")


def in_field(x: int, values, characteristic: int) -> bool:
    """Whether x equals some element of `values` once read in the field."""
    if characteristic == 0:
        return x in values
    return any((x - y) % characteristic == 0 for y in values)


@dataclass(frozen=True)
class Witness:
    """Data for one application of the splitting criterion.

    ``mu_prime`` has i - 1 boxes and ``nu`` has n - i; ``mu`` and ``nu_prime``
    each add one box.  ``a_forbidden`` / ``b_forbidden`` are the integer root
    sets of p_mu and p_nu'.
    """

    i: int
    mu_prime: Partition
    nu: Partition
    mu: Partition
    nu_prime: Partition
    recipe: str = ""
    a_forbidden: frozenset = field(default=frozenset(), compare=False)
    b_forbidden: frozenset = field(default=frozenset(), compare=False)

    @classmethod
    def build(cls, mu_prime, nu, mu, nu_prime, recipe: str = "") -> "Witness":
        mu_prime, nu, mu, nu_prime = map(partition, (mu_prime, nu, mu, nu_prime))
        return cls(sum(mu), mu_prime, nu, mu, nu_prime, recipe,
                   frozenset(root_set(mu)), frozenset(root_set(nu_prime)))

    def conjugate(self, recipe: str | None = None) -> "Witness":
        return Witness.build(conjugate(self.mu_prime), conjugate(self.nu), conjugate(self.mu),
                             conjugate(self.nu_prime), self.recipe if recipe is None else recipe)

    def to_json(self) -> dict:
        return {
            "i": self.i,
            "mu_prime": list(self.mu_prime),
            "nu": list(self.nu),
            "mu": list(self.mu),
            "nu_prime": list(self.nu_prime),
            "a_forbidden": sorted(self.a_forbidden),
            "b_forbidden": sorted(self.b_forbidden),
            "recipe": self.recipe,
        }

    @classmethod
    def from_json(cls, doc: dict) -> "Witness":
        return cls(
            int(doc["i"]),
            partition(doc["mu_prime"]),
            partition(doc["nu"]),
            partition(doc["mu"]),
            partition(doc["nu_prime"]),
            doc.get("recipe", ""),
            frozenset(doc.get("a_forbidden", ())),
            frozenset(doc.get("b_forbidden", ())),
        )


@dataclass
class Certificate:
    lam: Partition
    d: int
    characteristic: int
    generic: Witness
    branches: dict[int, Witness]

    @property
    def used_fallback(self) -> bool:
        return any(w.recipe == "search" for w in self.branches.values())

    def to_json(self) -> dict:
        return {
            "kind": "certificate",
            "lambda": list(self.lam),
            "d": self.d,
            "char": self.characteristic,
            "generic": self.generic.to_json(),
            "branches": {str(b): w.to_json() for b, w in sorted(self.branches.items())},
            "version": __version__,
        }

    @classmethod
    def from_json(cls, doc: dict) -> "Certificate":
        return cls(
            partition(doc["lambda"]),
            int(doc["d"]),
            int(doc.get("char", 0)),
            Witness.from_json(doc["generic"]),
            {int(b): Witness.from_json(w) for b, w in doc["branches"].items()},
        )


FAMILIES = ("super", "rectangle_top", "rectangle_bottom_twist")


@dataclass
class CounterexampleReport:
    """A family of counterexamples of dimension d.

    ``super``: V = Q^{r|s} with a non-semisimple action, r - s = d, and box
    (r+1, s+1) in lam so that S_lam V = 0.  ``rectangle_top``: lam = (q^p),
    d = p, S_lam V one-dimensional.  ``rectangle_bottom_twist``: lam = (q^p),
    d = -q, the previous family for the conjugate tensored with an odd line.
    """

    lam: Partition
    d: int
    characteristic: int
    family: str
    r: Optional[int] = None
    s: Optional[int] = None

    def to_json(self) -> dict:
        doc = {
            "kind": "counterexample",
            "lambda": list(self.lam),
            "d": self.d,
            "char": self.characteristic,
            "family": self.family,
            "version": __version__,
        }
        if self.family == "super":
            doc["r"], doc["s"] = self.r, self.s
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> "CounterexampleReport":
        return cls(partition(doc["lambda"]), int(doc["d"]), int(doc.get("char", 0)), doc["family"],
                   doc.get("r"), doc.get("s"))


# Witness recipes.  Each takes (lam, b) and returns the partitions
# (mu', nu, mu, nu') or None when the recipe does not apply to this shape.

Candidate = Optional[tuple[Sequence[int], Sequence[int], Sequence[int], Sequence[int]]]


def _without_last_box(rows_: Sequence[int]) -> Partition:
    rows_ = list(rows_)
    rows_[-1] -= 1
    return partition(rows_)


def _general(lam: Partition, b: int) -> Candidate:
    p = rows(lam)
    if b > 0:
        if b > p - 1:
            return None
        i = p - b + 1
        bottom, top = lam[p - i:], lam[:p - i]
        return _without_last_box(bottom), top, bottom, top + (1,)
    if b == 0:
        return sort_partitions(remove_box(lam))[0], (), lam, (1,)
    return _dual(_general)(lam, b)


def _non_rectangle(lam: Partition, b: int) -> Candidate:
    # mu runs over extensions of the bottom i-1 rows that keep i-1 rows
    p = rows(lam)
    if b <= 0 or b > p - 1 or is_rectangle(lam):
        return None
    i = p - b + 1
    mu_prime, nu_prime = lam[p - i + 1:], lam[:p - i + 1]
    nu = _without_last_box(nu_prime)
    for mu in sort_partitions(add_box(mu_prime)):
        if len(mu) == i - 1 and lr_coefficient(lam, mu, nu):
            return mu_prime, nu, mu, nu_prime
    return None


def _missing_32(lam: Partition, b: int) -> Candidate:
    p, q = rows(lam), cols(lam)
    if contains_box(lam, 3, 2) or p < 2:
        return None
    second = lam[1]
    if b == 2 and p >= 3:
        return (1,) * (p - 1), (q - 1, second - 1), (1,) * p, (q, second - 1)
    if b == 1:
        return (q,) + (1,) * (p - 2), (second - 1,), (q,) + (1,) * (p - 1), (second,)
    if b == 0:
        return (second - 1,), (q,) + (1,) * (p - 2), (second,), (q,) + (1,) * (p - 1)
    if b in (-1, -2):
        return (lam[0], second - 1), (1,) * (p - 2), (lam[0], second), (1,) * (p - 1)
    return None


def _hook(lam: Partition, b: int) -> Candidate:
    p, q = rows(lam), cols(lam)
    if contains_box(lam, 2, 2):
        return None
    if b == 1 and p >= 2:
        return (1,) * (p - 1), (q - 1,), (1,) * p, (q,)
    if b == -1:
        return _dual(_hook)(lam, b)
    return None


def _dual(recipe: Callable[[Partition, int], Candidate]) -> Callable[[Partition, int], Candidate]:
    """Run a recipe on the conjugate shape with -b and conjugate the result."""

    def run(lam: Partition, b: int) -> Candidate:
        found = recipe(conjugate(lam), -b)
        return None if found is None else tuple(conjugate(x) for x in found)

    return run


RECIPES: tuple[tuple[str, Callable[[Partition, int], Candidate]], ...] = (
    ("general", _general),
    ("non_rectangle", _non_rectangle),
    ("non_rectangle_dual", _dual(_non_rectangle)),
    ("missing_32", _missing_32),
    ("missing_23", _dual(_missing_32)),
    ("hook", _hook),
)


def witness_problems(lam: Partition, w: Witness, cached: bool = True, both_methods: bool = False) -> list[str]:
    """Structural conditions on a witness: sizes, containments, LR non-vanishing."""
    n = sum(lam)
    problems = []
    if not 1 <= w.i <= n:
        problems.append(f"i={w.i} outside [1, {n}]")
    if sum(w.mu_prime) != w.i - 1 or not is_contained(w.mu_prime, lam):
        problems.append(f"mu'={list(w.mu_prime)} is not in lam-(n-i+1)")
    if sum(w.nu) != n - w.i or not is_contained(w.nu, lam):
        problems.append(f"nu={list(w.nu)} is not in lam-i")
    if w.mu not in add_box(w.mu_prime):
        problems.append(f"mu={list(w.mu)} is not mu' plus a box")
    if w.nu_prime not in add_box(w.nu):
        problems.append(f"nu'={list(w.nu_prime)} is not nu plus a box")
    if problems:
        return problems
    for name, (top, left, right) in (("mu", (lam, w.mu, w.nu)), ("nu'", (lam, w.mu_prime, w.nu_prime))):
        values = {lr_coefficient(top, left, right, cached=cached)}
        if both_methods:
            values.add(lr_by_tableaux(top, left, right))
        if len(values) > 1:
            problems.append(f"LR methods disagree on N^{list(top)}_{list(left)},{list(right)}: {values}")
        elif 0 in values:
            problems.append(f"{name}: N^{list(top)}_{list(left)},{list(right)} = 0")
    return problems


def _accepts(lam: Partition, d: int, b: int, characteristic: int, w: Witness) -> bool:
    return (not in_field(b, w.b_forbidden, characteristic)
            and not in_field(d - b, w.a_forbidden, characteristic)
            and not witness_problems(lam, w))


def search_witnesses(lam: Partition) -> Iterator[Witness]:
    """Every admissible witness for lam, in lexicographic order of (i, mu', nu, mu, nu')."""
    n = sum(lam)
    for i in range(1, n + 1):
        for mu_prime in sorted(remove_boxes(lam, n - i + 1)):
            for nu in sorted(remove_boxes(lam, i)):
                for mu in sorted(mu_plus(mu_prime, nu, lam)):
                    for nu_prime in sorted(nu_plus(mu_prime, nu, lam)):
                        yield Witness.build(mu_prime, nu, mu, nu_prime, "search")


def branch_witness(lam: Partition, d: int, b: int, characteristic: int = 0,
                   allow_fallback: bool = True) -> Optional[Witness]:
    for name, recipe in RECIPES:
        found = recipe(lam, b)
        if found is None:
            continue
        w = Witness.build(*found, recipe=name)
        if _accepts(lam, d, b, characteristic, w):
            return w
    if allow_fallback:
        for w in search_witnesses(lam):
            if _accepts(lam, d, b, characteristic, w):
                return w
    return None


def generic_witness(lam: Partition) -> Witness:
    nu = sort_partitions(remove_box(lam))[0]
    return Witness.build((), nu, (1,), lam, "generic")


def branch_range(lam: Sequence[int]) -> range:
    """The integers b = 1-q, ..., p-1 that need their own witness."""
    return range(1 - cols(lam), rows(lam))


def _choose_family(lam: Partition, d: int, characteristic: int) -> CounterexampleReport:
    p, q = rows(lam), cols(lam)
    targets = sorted(x for x in f_set(lam) if in_field(d, {x}, characteristic))
    for d0 in targets:
        # smallest r + s first, then smallest r
        for total in range(2, p + q - 1):
            for r in range(0, total + 1):
                s = total - r
                if r - s == d0 and contains_box(lam, r + 1, s + 1):
                    return CounterexampleReport(lam, d, characteristic, "super", r, s)
        if is_rectangle(lam) and d0 == p and p > 1:
            return CounterexampleReport(lam, d, characteristic, "rectangle_top")
        if is_rectangle(lam) and d0 == -q and q > 1:
            return CounterexampleReport(lam, d, characteristic, "rectangle_bottom_twist")
    raise CertificationError(f"no counterexample family for lam={list(lam)}, d={d}")


def certify(lam: Sequence[int], d: int, characteristic: int = 0,
            allow_fallback: bool = True) -> Certificate | CounterexampleReport:
    """Decide whether dimension d is forbidden for lam and produce the evidence."""
    lam = partition(lam)
    n = sum(lam)
    if n < 1:
        raise ValueError("lam must be a partition of a positive integer")
    check_characteristic(n, characteristic)
    if in_field(d, f_set(lam), characteristic):
        return _choose_family(lam, d, characteristic)
    branches = {}
    for b in branch_range(lam):
        w = branch_witness(lam, d, b, characteristic, allow_fallback)
        if w is None:
            raise CertificationError(
                f"no witness for lam={list(lam)}, d={d}, b={b}, char={characteristic}"
                + ("" if allow_fallback else " without exhaustive search"))
        branches[b] = w
    return Certificate(lam, d, characteristic, generic_witness(lam), branches)


@dataclass
class Verification:
    ok: bool
    problems: list[str]

    def __bool__(self):
        return self.ok


def _vanishes(beta: Partition, x: int, characteristic: int) -> bool:
    # p_beta(x) = 0 iff prod over boxes other than (1,1) of (x + j - i) is 0
    value = 1
    for i, j in boxes(beta):
        if (i, j) != (1, 1):
            value *= x + j - i
    return value % characteristic == 0 if characteristic else value == 0


def _forbidden(beta: Partition, characteristic: int) -> set[int]:
    # candidates are the negated contents; reduce into [0, char) in positive characteristic
    candidates = {i - j for i, j in boxes(beta)}
    return {x for x in candidates if _vanishes(beta, x, characteristic)}


def verify_certificate(cert: Certificate) -> Verification:
    """Recheck every hypothesis from scratch, without consulting any memo table."""
    problems: list[str] = []
    try:
        lam = partition(cert.lam)
        check_characteristic(sum(lam), cert.characteristic)
    except ValueError as exc:
        return Verification(False, [str(exc)])
    if not lam:
        return Verification(False, ["lambda must be nonempty"])
    char, d = cert.characteristic, cert.d

    def check(label: str, w: Witness):
        for msg in witness_problems(lam, w, cached=False, both_methods=True):
            problems.append(f"{label}: {msg}")
        a_roots = _forbidden(w.mu, char) if w.mu else set()
        b_roots = _forbidden(w.nu_prime, char) if w.nu_prime else set()
        if w.a_forbidden and set(w.a_forbidden) != a_roots:
            problems.append(f"{label}: recorded a_forbidden {sorted(w.a_forbidden)} != {sorted(a_roots)}")
        if w.b_forbidden and set(w.b_forbidden) != b_roots:
            problems.append(f"{label}: recorded b_forbidden {sorted(w.b_forbidden)} != {sorted(b_roots)}")
        return a_roots, b_roots

    a_roots, b_roots = check("generic", cert.generic)
    if cert.generic.i != 1 or cert.generic.mu_prime != () or cert.generic.mu != (1,):
        problems.append("generic: must have i=1, mu'=(0), mu=(1)")
    if a_roots:
        problems.append(f"generic: a-condition is not vacuous, roots {sorted(a_roots)}")
    required = set(branch_range(lam))
    present = set(cert.branches)
    if present != required:
        missing, extra = sorted(required - present), sorted(present - required)
        problems.append(f"branch coverage: missing {missing}, unexpected {extra}")
    uncovered = [b for b in b_roots if not in_field(b, present, char)]
    if uncovered:
        problems.append(f"generic: values {sorted(uncovered)} of b fall outside every branch")
    for b, w in sorted(cert.branches.items()):
        label = f"branch b={b}"
        a_roots, b_roots = check(label, w)
        if in_field(b, b_roots, char) or in_field(b, w.b_forbidden, char):
            problems.append(f"{label}: b lies in b_forbidden")
        if in_field(d - b, a_roots, char) or in_field(d - b, w.a_forbidden, char):
            problems.append(f"{label}: a = d - b = {d - b} lies in a_forbidden")
    return Verification(not problems, problems)


def verify_counterexample(report: CounterexampleReport, oracle_cap: int = MAX_TENSOR_DIM) -> Verification:
    """Recheck the family conditions; run the super-space oracle when it fits under the cap."""
    problems: list[str] = []
    try:
        lam = partition(report.lam)
        check_characteristic(sum(lam), report.characteristic)
    except ValueError as exc:
        return Verification(False, [str(exc)])
    if not lam:
        return Verification(False, ["lambda must be nonempty"])
    n, p, q = sum(lam), rows(lam), cols(lam)
    char, d = report.characteristic, report.d
    if report.family == "super":
        r, s = report.r, report.s
        if r is None or s is None or r < 0 or s < 0:
            return Verification(False, ["super family needs r, s >= 0"])
        if r + s < 2:
            problems.append(f"r+s={r + s} < 2: Q^{{{r}|{s}}} carries no non-semisimple structure")
        if not in_field(d, {r - s}, char):
            problems.append(f"r-s={r - s} differs from d={d}")
        if not contains_box(lam, r + 1, s + 1):
            problems.append(f"box ({r + 1},{s + 1}) is not in lambda")
        if not problems and (r + s) ** n <= oracle_cap:
            rank = schur_rank(lam, SuperSpaceSpec(r, s)).total_rank
            if rank:
                problems.append(f"oracle: Schur projector has rank {rank} on Q^{{{r}|{s}}}")
    elif report.family in ("rectangle_top", "rectangle_bottom_twist"):
        if not is_rectangle(lam):
            problems.append("lambda is not a rectangle")
        shape, target = (lam, p) if report.family == "rectangle_top" else (conjugate(lam), q)
        if target <= 1:
            problems.append(f"dimension {target} must exceed 1")
        expected = p if report.family == "rectangle_top" else -q
        if not in_field(d, {expected}, char):
            problems.append(f"d={d} is not {expected}")
        if not problems:
            value = content_polynomial(shape)(target) * irrep_dimension(shape) / factorial(n)
            if value != 1:
                problems.append(f"dim S_shape of a {target}-dimensional space is {value}, not 1")
    else:
        problems.append(f"unknown family {report.family!r}; expected one of {FAMILIES}")
    return Verification(not problems, problems)


def load(doc: dict) -> Certificate | CounterexampleReport:
    """Parse a certificate or counterexample document."""
    if doc.get("kind") == "counterexample" or "family" in doc:
        return CounterexampleReport.from_json(doc)
    return Certificate.from_json(doc)


def verify(obj: Certificate | CounterexampleReport) -> Verification:
    if isinstance(obj, Certificate):
        return verify_certificate(obj)
    return verify_counterexample(obj)
