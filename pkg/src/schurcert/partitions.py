"""Integer partitions and Young diagram operations.

A partition is stored as a plain tuple of positive integers in weakly
decreasing order.  The empty tuple is the partition (0) of 0.  Boxes use
1-based (row, column) coordinates.
"""

from collections import Counter
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]


def partition(parts: Iterable[int]) -> Partition:
    """Validate `parts` and return the canonical tuple (trailing zeros dropped)."""
    parts = [int(x) for x in parts]
    while parts and parts[-1] == 0:
        parts.pop()
    if any(x <= 0 for x in parts):
        raise ValueError(f"not a partition: {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"parts must be weakly decreasing: {parts}")
    return tuple(parts)


def size(lam: Sequence[int]) -> int:
    return sum(lam)


def rows(lam: Sequence[int]) -> int:
    """Number of rows p(lam)."""
    return len(lam)


def cols(lam: Sequence[int]) -> int:
    """Number of columns q(lam)."""
    return lam[0] if lam else 0


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, in reverse lexicographic order ((n) first)."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def gen(remaining: int, largest: int) -> Iterator[Partition]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part >= j) for j in range(1, lam[0] + 1))


def contains_box(lam: Sequence[int], i: int, j: int) -> bool:
    if i < 1 or j < 1:
        raise ValueError("box coordinates are 1-based")
    return i <= len(lam) and j <= lam[i - 1]


def is_hook(lam: Sequence[int]) -> bool:
    return not contains_box(lam, 2, 2)


def is_rectangle(lam: Sequence[int]) -> bool:
    return len(set(lam)) <= 1


def boxes(lam: Sequence[int]) -> Iterator[tuple[int, int]]:
    for i, part in enumerate(lam, start=1):
        for j in range(1, part + 1):
            yield i, j


def contents(lam: Sequence[int]) -> Counter:
    """Multiset of contents j - i over the boxes of `lam`."""
    return Counter(j - i for i, j in boxes(lam))


def is_contained(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """True iff the diagram of mu sits inside the diagram of lam."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for m, l in zip(mu, lam))


def add_box(alpha: Sequence[int]) -> set[Partition]:
    """Partitions obtained by adding one box to `alpha`."""
    alpha = tuple(alpha)
    out = set()
    for i in range(len(alpha) + 1):
        above = alpha[i - 1] if i > 0 else None
        current = alpha[i] if i < len(alpha) else 0
        if above is None or current < above:
            new = list(alpha)
            if i < len(alpha):
                new[i] += 1
            else:
                new.append(1)
            out.add(tuple(new))
    return out


def remove_box(lam: Sequence[int]) -> set[Partition]:
    """Partitions obtained by removing one corner box from `lam`."""
    lam = tuple(lam)
    out = set()
    for i, part in enumerate(lam):
        below = lam[i + 1] if i + 1 < len(lam) else 0
        if part > below:
            new = list(lam)
            new[i] -= 1
            out.add(partition(new))
    return out


def _sub_partitions(lam: Partition, target: int) -> Iterator[Partition]:
    # componentwise mu <= lam with |mu| = target
    def gen(index: int, remaining: int, cap: int) -> Iterator[Partition]:
        if remaining == 0:
            yield ()
            return
        if index >= len(lam):
            return
        # the remaining rows can hold at most this many boxes
        for part in range(min(cap, lam[index], remaining), 0, -1):
            room = sum(min(part, x) for x in lam[index + 1:])
            if part + room < remaining:
                break
            for rest in gen(index + 1, remaining - part, part):
                yield (part,) + rest

    yield from gen(0, target, target)


def remove_boxes(lam: Sequence[int], i: int) -> set[Partition]:
    """All partitions of |lam| - i whose diagram lies inside that of `lam`.

    ``remove_boxes(lam, |lam|)`` is ``{()}``, the partition (0).
    """
    lam = tuple(lam)
    n = sum(lam)
    if not 0 <= i <= n:
        raise ValueError(f"cannot remove {i} boxes from a partition of {n}")
    return set(_sub_partitions(lam, n - i))


def f_set(lam: Sequence[int]) -> set[int]:
    """The forbidden dimensions F(lam): the interval {-q,...,p} minus T(lam).

    T(lam) contains 0 for hooks, 1 when box (3,2) is missing, -1 when box
    (2,3) is missing, and both ends -q, p when lam is not a rectangle.
    """
    lam = tuple(lam)
    if not lam:
        raise ValueError("f_set needs a nonempty partition")
    p, q = rows(lam), cols(lam)
    allowed = set()
    if is_hook(lam):
        allowed.add(0)
    if not contains_box(lam, 3, 2):
        allowed.add(1)
    if not contains_box(lam, 2, 3):
        allowed.add(-1)
    if not is_rectangle(lam):
        allowed.update((-q, p))
    return set(range(-q, p + 1)) - allowed


def sort_partitions(parts: Iterable[Sequence[int]]) -> list[Partition]:
    """Lexicographically descending order, the canonical order for sets of partitions."""
    return sorted((tuple(x) for x in parts), reverse=True)
