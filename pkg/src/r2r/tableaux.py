"""Standard, skew and semistandard tableaux.

Covers the combinatorics behind the multiplicities of the random-to-random
spectrum: ascents and desarrangement tableaux, jeu de taquin, the
Reiner-Saliola-Welker bijection between SYT of shape lam and desarrangement
tableaux of the shapes mu with lam/mu a horizontal strip, and Kostka numbers.

Cells are 1-based ``(row, column)`` pairs throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache
from typing import Iterable, Mapping, Sequence

from .partitions import Partition, horizontal_strip_subshapes, is_horizontal_strip, syt_count

__all__ = [
    "ENUMERATION_CAP",
    "SemistandardTableau",
    "SkewTableau",
    "StandardTableau",
    "desarrangement_count",
    "enumerate_desarrangements",
    "enumerate_ssyt",
    "enumerate_syt",
    "is_desarrangement",
    "jdt_slide",
    "kostka_number",
    "rsw_forward",
    "rsw_inverse",
    "smallest_ascent",
]

ENUMERATION_CAP = 12

Cell = tuple[int, int]


@dataclass(frozen=True)
class StandardTableau:
    """A standard Young tableau stored as a tuple of rows.

    >>> t = StandardTableau([[1, 3], [2]])
    >>> t.shape, t[1, 2], t.position(2)
    (Partition([2, 1]), 3, (2, 1))
    """

    rows: tuple[tuple[int, ...], ...]
    _pos: dict = field(init=False, repr=False, compare=False, hash=False)

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(v) for v in row) for row in rows if len(row) > 0)
        object.__setattr__(self, "rows", rows)
        shape = Partition(len(r) for r in rows)  # raises on a non-partition shape
        pos = {v: (i, j) for i, row in enumerate(rows, 1) for j, v in enumerate(row, 1)}
        n = shape.size
        if sorted(pos) != list(range(1, n + 1)) or len(pos) != n:
            raise ValueError(f"entries must be exactly 1..{n}: {rows}")
        _check_increasing(dict(((i, j), v) for v, (i, j) in pos.items()), strict_rows=True)
        object.__setattr__(self, "_pos", pos)

    @property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self.rows)

    @property
    def n(self) -> int:
        return len(self._pos)

    def __getitem__(self, cell: Cell) -> int:
        i, j = cell
        return self.rows[i - 1][j - 1]

    def position(self, value: int) -> Cell:
        return self._pos[value]

    def entries(self) -> dict[Cell, int]:
        return {c: v for v, c in self._pos.items()}

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __repr__(self) -> str:
        return f"StandardTableau({self.to_json()})"


@dataclass(frozen=True)
class SkewTableau:
    """A filling of ``outer/inner``, strictly increasing along rows and columns.

    Entries form a contiguous range of integers (not necessarily starting
    at 1), which is what the intermediate stages of the RSW bijection need.
    """

    outer: Partition
    inner: Partition
    cells: tuple[tuple[Cell, int], ...]

    def __init__(self, outer: Iterable[int], inner: Iterable[int], entries: Mapping[Cell, int]):
        outer, inner = Partition(outer), Partition(inner)
        if not outer.contains(inner):
            raise ValueError(f"inner {list(inner)} is not contained in outer {list(outer)}")
        expected = {(i, j) for i, j in outer.cells() if j > inner.part(i)}
        if set(entries) != expected:
            raise ValueError("entries must fill exactly the cells of outer/inner")
        values = sorted(entries.values())
        if values and values != list(range(values[0], values[0] + len(values))):
            raise ValueError(f"entries must be a contiguous range, got {values}")
        _check_increasing(entries, strict_rows=True)
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)
        object.__setattr__(self, "cells", tuple(sorted(entries.items())))

    @classmethod
    def from_standard(cls, t: StandardTableau) -> "SkewTableau":
        return cls(t.shape, (), t.entries())

    def entries(self) -> dict[Cell, int]:
        return dict(self.cells)

    def rows(self) -> list[list[int]]:
        """Filled entries row by row (inner cells omitted)."""
        grid = self.entries()
        return [
            [grid[(i, j)] for j in range(self.inner.part(i) + 1, self.outer[i - 1] + 1)]
            for i in range(1, len(self.outer) + 1)
        ]

    def to_standard(self) -> StandardTableau:
        if self.inner:
            raise ValueError("tableau still has inner cells")
        return StandardTableau(self.rows())

    def to_json(self) -> dict:
        return {"inner": list(self.inner), "rows": self.rows()}


@dataclass(frozen=True)
class SemistandardTableau:
    """Rows weakly increase, columns strictly increase; content is the evaluation."""

    rows: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(v) for v in row) for row in rows if len(row) > 0)
        object.__setattr__(self, "rows", rows)
        Partition(len(r) for r in rows)
        grid = {(i, j): v for i, row in enumerate(rows, 1) for j, v in enumerate(row, 1)}
        if any(v < 1 for v in grid.values()):
            raise ValueError("semistandard entries must be positive")
        _check_increasing(grid, strict_rows=False)

    @property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self.rows)

    @property
    def content(self) -> tuple[int, ...]:
        flat = [v for row in self.rows for v in row]
        top = max(flat, default=0)
        return tuple(flat.count(v) for v in range(1, top + 1))


def _check_increasing(grid: Mapping[Cell, int], strict_rows: bool) -> None:
    for (i, j), v in grid.items():
        right = grid.get((i, j + 1))
        if right is not None and (right <= v if strict_rows else right < v):
            raise ValueError(f"row condition fails at {(i, j)}")
        below = grid.get((i + 1, j))
        if below is not None and below <= v:
            raise ValueError(f"column condition fails at {(i, j)}")


# ---------------------------------------------------------------------------
# enumeration


def enumerate_syt(shape: Iterable[int], cap: int = ENUMERATION_CAP) -> list[StandardTableau]:
    """Every SYT of ``shape``, built by placing the largest entry in a corner."""
    shape = Partition(shape)
    if shape.size > cap:
        raise ValueError(f"shape {list(shape)} exceeds the enumeration cap of {cap} cells")
    return [StandardTableau(rows) for rows in _syt_rows(shape)]


def _syt_rows(shape: Partition) -> list[list[list[int]]]:
    n = shape.size
    if n == 0:
        return [[]]
    out = []
    for i in range(len(shape)):
        if shape.part(i + 2) < shape[i]:
            smaller = list(shape)
            smaller[i] -= 1
            for rows in _syt_rows(Partition(smaller)):
                rows = [list(r) for r in rows]
                if i == len(rows):
                    rows.append([])
                rows[i].append(n)
                out.append(rows)
    return out


def enumerate_ssyt(shape: Iterable[int], content: Sequence[int], cap: int = ENUMERATION_CAP) -> list[SemistandardTableau]:
    """Brute-force backtracking over fillings of ``shape`` with the given content."""
    shape = Partition(shape)
    content = list(content)
    if shape.size != sum(content):
        raise ValueError("shape and content sizes differ")
    if shape.size > cap:
        raise ValueError(f"shape {list(shape)} exceeds the enumeration cap of {cap} cells")
    cells = list(shape.cells())
    grid: dict[Cell, int] = {}
    remaining = content[:]
    found = []

    def fill(k: int) -> None:
        if k == len(cells):
            found.append(SemistandardTableau([[grid[(i, j)] for j in range(1, r + 1)] for i, r in enumerate(shape, 1)]))
            return
        i, j = cells[k]
        lo = max(grid.get((i, j - 1), 1), grid.get((i - 1, j), 0) + 1)
        for v in range(lo, len(content) + 1):
            if remaining[v - 1]:
                remaining[v - 1] -= 1
                grid[(i, j)] = v
                fill(k + 1)
                del grid[(i, j)]
                remaining[v - 1] += 1

    fill(0)
    return found


# ---------------------------------------------------------------------------
# ascents and desarrangements


def smallest_ascent(t: StandardTableau) -> int:
    """Least i such that i == n or i+1 sits in a row weakly above i."""
    n = t.n
    if n == 0:
        raise ValueError("the empty tableau has no ascent")
    for i in range(1, n):
        if t.position(i + 1)[0] <= t.position(i)[0]:
            return i
    return n


def is_desarrangement(t: StandardTableau) -> bool:
    # The empty tableau counts as a desarrangement so that d^() = 1.
    return t.n == 0 or smallest_ascent(t) % 2 == 0


def enumerate_desarrangements(shape: Iterable[int], cap: int = ENUMERATION_CAP) -> list[StandardTableau]:
    return [t for t in enumerate_syt(shape, cap) if is_desarrangement(t)]


@cache
def _desarrangements_by_strips(mu: Partition) -> int:
    below = sum(_desarrangements_by_strips(rho) for rho in horizontal_strip_subshapes(mu) if rho != mu)
    return syt_count(mu) - below


@cache
def _desarrangements_by_corners(mu: Partition) -> int:
    if not mu:
        return 1
    total = 0
    for i in range(len(mu)):
        if mu.part(i + 2) < mu[i]:
            smaller = list(mu)
            smaller[i] -= 1
            total += _desarrangements_by_corners(Partition(smaller))
    if mu[0] == 1:
        total += -1 if len(mu) % 2 else 1
    return total


def desarrangement_count(mu: Iterable[int], method: str = "corners") -> int:
    """Number of desarrangement tableaux of shape mu.

    ``method="strips"`` inverts the RSW counting identity directly:
    ``d^mu = d_mu - sum d^rho`` over the proper strip-subshapes rho of mu.

    ``method="corners"`` (default) uses the equivalent branching rule
    ``d^mu = sum_c d^(mu - c) + [mu = 1^m] (-1)^m`` over removable corners c.
    It follows from the strip identity written as ``D(z) H(z) = 1/(1 - h_1 z)``
    in symmetric functions, i.e. ``d^mu = sum_k (-1)^k f^(mu/1^k)``, and costs
    one term per corner instead of one per strip-subshape, which is what makes
    decks of 30-40 cards affordable.
    """
    mu = Partition(mu)
    if method == "corners":
        return _desarrangements_by_corners(mu)
    if method == "strips":
        return _desarrangements_by_strips(mu)
    raise ValueError(f"unknown method {method!r}")


# ---------------------------------------------------------------------------
# jeu de taquin


def _is_inner_corner(inner: Partition, i: int, j: int) -> bool:
    return inner.part(i) == j and inner.part(i + 1) < j


def _is_outer_addable(outer: Partition, i: int, j: int) -> bool:
    return outer.part(i) + 1 == j and (i == 1 or outer.part(i - 1) >= j) and i <= len(outer) + 1


def _bump(shape: Partition, row: int, delta: int) -> Partition:
    parts = list(shape) + [0]
    parts[row - 1] += delta
    return Partition(parts)


def jdt_slide(t: SkewTableau, cell: Cell) -> SkewTableau:
    """One jeu de taquin slide into an empty cell.

    An inner corner of ``t.inner`` is slid forward: the smaller of the right
    and lower neighbours moves in until the hole leaves through the outer
    boundary. An addable cell outside ``t.outer`` is slid backward: the larger
    of the left and upper neighbours moves in until the hole lands in the
    inner shape.
    """
    i, j = cell
    grid = t.entries()
    if _is_inner_corner(t.inner, i, j):
        hole = (i, j)
        while True:
            hi, hj = hole
            options = [c for c in ((hi, hj + 1), (hi + 1, hj)) if c in grid]
            if not options:
                break
            src = min(options, key=grid.__getitem__)
            grid[hole] = grid.pop(src)
            hole = src
        return SkewTableau(_bump(t.outer, hole[0], -1), _bump(t.inner, i, -1), grid)
    if _is_outer_addable(t.outer, i, j):
        hole = (i, j)
        while True:
            hi, hj = hole
            options = [c for c in ((hi, hj - 1), (hi - 1, hj)) if c in grid]
            if not options:
                break
            src = max(options, key=grid.__getitem__)
            grid[hole] = grid.pop(src)
            hole = src
        return SkewTableau(_bump(t.outer, i, +1), _bump(t.inner, hole[0], +1), grid)
    raise ValueError(f"cell {cell} is neither an inner corner nor addable to {list(t.outer)}/{list(t.inner)}")


# ---------------------------------------------------------------------------
# Reiner-Saliola-Welker bijection


def rsw_forward(q: StandardTableau, lam: Iterable[int]) -> StandardTableau:
    """Map a desarrangement tableau q of shape mu to an SYT of shape lam.

    >>> rsw_forward(StandardTableau([[1, 3, 4], [2, 6, 7], [5]]), [4, 3, 2])
    StandardTableau([[1, 2, 3, 6], [4, 5, 9], [7, 8]])
    """
    lam = Partition(lam)
    mu = q.shape
    if not is_desarrangement(q):
        raise ValueError(f"{q!r} is not a desarrangement tableau")
    if not is_horizontal_strip(lam, mu):
        raise ValueError(f"{list(lam)}/{list(mu)} is not a horizontal strip")
    strip = sorted(
        ((i, j) for i in range(1, len(lam) + 1) for j in range(mu.part(i) + 1, lam[i - 1] + 1)),
        key=lambda c: c[1],
    )
    t = SkewTableau.from_standard(q)
    for cell in strip:
        t = jdt_slide(t, cell)
    s = len(strip)
    assert t.inner == Partition([s] if s else []), t.inner
    rows = [[v + s for v in row] for row in t.rows()]
    rows[0] = list(range(1, s + 1)) + rows[0]
    return StandardTableau(rows)


def rsw_inverse(p: StandardTableau) -> tuple[Partition, StandardTableau]:
    """Inverse of :func:`rsw_forward`; returns ``(mu, q)``.

    Row 1 of p starts ``1..a`` and column 1 starts ``1, a+1, ..., a+b``. The
    first ``a - 1`` (b odd) or ``a`` (b even) entries are removed, the holes are
    slid out right to left, and the remaining entries are shifted down.
    """
    if p.n == 0:
        return Partition(), p
    row1 = p.rows[0]
    a = 1
    while a < len(row1) and row1[a] == a + 1:
        a += 1
    b = 0
    while b + 1 < len(p.rows) and p.rows[b + 1][0] == a + b + 1:
        b += 1
    k = a - 1 if b % 2 else a
    grid = {c: v for c, v in p.entries().items() if v > k}
    t = SkewTableau(p.shape, [k] if k else [], grid)
    for j in range(k, 0, -1):
        t = jdt_slide(t, (1, j))
    q = StandardTableau([[v - k for v in row] for row in t.rows()])
    return q.shape, q



# ---------------------------------------------------------------------------
# Kostka numbers


@cache
def _kostka(lam: Partition, nu: tuple[int, ...]) -> int:
    if not nu:
        return 1 if not lam else 0
    last = nu[-1]
    return sum(
        _kostka(mu, nu[:-1])
        for mu in horizontal_strip_subshapes(lam)
        if lam.size - mu.size == last
    )


def kostka_number(lam: Iterable[int], nu: Iterable[int]) -> int:
    """Number of SSYT of shape lam and content nu.

    Peels off the cells holding the largest letter, which always form a
    horizontal strip.
    """
    lam, nu = Partition(lam), Partition(nu)
    if lam.size != nu.size:
        raise ValueError(f"Kostka number needs |lam| == |nu|, got {lam.size} and {nu.size}")
    return _kostka(lam, tuple(nu))
