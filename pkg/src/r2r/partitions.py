"""Integer partitions and Young-diagram geometry.

Partitions are immutable tuples of weakly decreasing positive integers, so they
hash, compare and serialize (``json.dumps`` gives ``[3, 2]``) like plain tuples.
Cells are addressed 1-based as ``(row, column)``.
"""

from __future__ import annotations

from functools import cache
from itertools import product
from math import factorial, prod
from typing import Iterable, Iterator

__all__ = [
    "Partition",
    "conjugate",
    "diag_index",
    "dominates",
    "enumerate_partitions",
    "hook_lengths",
    "horizontal_strip_subshapes",
    "is_horizontal_strip",
    "parse_partition",
    "syt_count",
]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction, so ``Partition([2, 1, 0])``
    equals ``Partition([2, 1])``. The empty partition is the unique partition
    of 0.
    """

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        if isinstance(parts, Partition):
            return parts
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"partition parts must be positive, got {parts}")
            if i and p > parts[i - 1]:
                raise ValueError(f"partition parts must be weakly decreasing, got {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def first(self) -> int:
        """Length of the first row (0 for the empty partition)."""
        return self[0] if self else 0

    def part(self, i: int) -> int:
        """1-based part lookup that reads missing parts as 0."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, row in enumerate(self, start=1):
            for j in range(1, row + 1):
                yield (i, j)

    def contains(self, other: "Partition") -> bool:
        """True if the diagram of ``other`` sits inside this one."""
        return len(other) <= len(self) and all(o <= s for o, s in zip(other, self))

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def without_first_row(self) -> "Partition":
        return Partition(self[1:])

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


def parse_partition(text: str) -> Partition:
    """Parse ``"3,2,1"`` (or ``"[3, 2, 1]"``) into a partition; ``""`` is empty."""
    text = text.strip().strip("[]")
    if not text:
        return Partition()
    return Partition(int(tok) for tok in text.replace(" ", "").split(","))


def enumerate_partitions(n: int, max_first_part: int | None = None) -> list[Partition]:
    """All partitions of ``n`` in lexicographically descending order.

    >>> enumerate_partitions(4)
    [Partition([4]), Partition([3, 1]), Partition([2, 2]), Partition([2, 1, 1]), Partition([1, 1, 1, 1])]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    cap = n if max_first_part is None else min(n, max_first_part)
    return [Partition(p) for p in _partitions(n, cap)]


def _partitions(n: int, cap: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def conjugate(lam: Iterable[int]) -> Partition:
    lam = Partition(lam)
    if not lam:
        return lam
    return Partition(sum(1 for part in lam if part >= j) for j in range(1, lam[0] + 1))


def is_horizontal_strip(lam: Iterable[int], mu: Iterable[int]) -> bool:
    """True iff mu is inside lam and lam/mu has at most one cell per column."""
    lam, mu = Partition(lam), Partition(mu)
    if not lam.contains(mu):
        return False
    lc, mc = conjugate(lam), conjugate(mu)
    return all(lc[i] - 1 <= mc.part(i + 1) for i in range(len(lc)))


def horizontal_strip_subshapes(lam: Iterable[int], size: int | None = None) -> list[Partition]:
    """Every mu with lam/mu a horizontal strip, lex descending.

    The strip condition is the interlacing ``lam[i+1] <= mu[i] <= lam[i]``, so
    the candidates are a box product of ranges.
    """
    lam = Partition(lam)
    if size is not None and not 0 <= size <= lam.size:
        raise ValueError(f"size must lie in [0, {lam.size}], got {size}")
    ranges = [
        range(lam[i], lam.part(i + 2) - 1, -1)
        for i in range(len(lam))
    ]
    shapes = (Partition(parts) for parts in product(*ranges))
    if size is None:
        return list(shapes)
    return [mu for mu in shapes if mu.size == size]


def diag_index(lam: Iterable[int]) -> int:
    """Sum of ``column - row`` over the cells of the diagram."""
    return sum(p * (p + 1) // 2 - i * p for i, p in enumerate(Partition(lam), start=1))


def dominates(lam: Iterable[int], nu: Iterable[int]) -> bool:
    """Dominance order: every prefix sum of lam is at least that of nu."""
    lam, nu = Partition(lam), Partition(nu)
    if lam.size != nu.size:
        raise ValueError(f"dominance needs equal sizes, got |{list(lam)}| != |{list(nu)}|")
    a = b = 0
    for i in range(max(len(lam), len(nu))):
        a += lam.part(i + 1)
        b += nu.part(i + 1)
        if a < b:
            return False
    return True


def hook_lengths(lam: Iterable[int]) -> list[list[int]]:
    lam = Partition(lam)
    lc = conjugate(lam)
    return [[lam[i] - j + lc[j] - i - 1 for j in range(lam[i])] for i in range(len(lam))]


@cache
def _syt_count(lam: Partition) -> int:
    hooks = prod(h for row in hook_lengths(lam) for h in row)
    return factorial(lam.size) // hooks


def syt_count(lam: Iterable[int]) -> int:
    """Number of standard Young tableaux of shape lam (hook length formula)."""
    return _syt_count(Partition(lam))
