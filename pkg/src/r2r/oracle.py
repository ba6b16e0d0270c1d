"""Brute-force ground truth on small decks.

Builds the explicit transition matrices of the random-to-random and
random-to-top shuffles (and of random-to-random on a deck with repeated
cards), diagonalizes them numerically and evolves distributions exactly.

A deck is a tuple of card types read top to bottom, 0-based. A random-to-random
move is a pair (p, q) of 0-based positions: the card at position p is removed
and reinserted so that it ends at position q. All n^2 moves are equally likely,
and p == q is the identity move. Matrices are row-stochastic: ``M[x, y]`` is
the probability of stepping from arrangement x to arrangement y.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, fsum, prod, sqrt
from typing import Iterable, Sequence

import numpy as np

from .partitions import Partition

__all__ = [
    "ARRANGEMENT_CAP",
    "ArrangementIndex",
    "Distribution",
    "TransitionMatrix",
    "build_r2r_matrix",
    "build_r2r_multiset",
    "build_r2t_matrix",
    "chi2_distance",
    "distance_profile",
    "evolve_distribution",
    "jacobi_eigh",
    "lehmer_rank",
    "lehmer_unrank",
    "numeric_eigenvalues",
    "point_mass",
    "tv_distance",
    "uniform",
]

ARRANGEMENT_CAP = 5040
EXACT_WORK_CAP = 10**6


# ---------------------------------------------------------------------------
# arrangements


def lehmer_rank(perm: Sequence[int]) -> int:
    """Lexicographic rank of a permutation of 0..n-1 (factorial number system)."""
    n = len(perm)
    rank = 0
    for i, a in enumerate(perm):
        smaller = sum(1 for b in perm[i + 1:] if b < a)
        rank += smaller * factorial(n - 1 - i)
    return rank


def lehmer_unrank(rank: int, n: int) -> tuple[int, ...]:
    pool = list(range(n))
    out = []
    for i in range(n - 1, -1, -1):
        digit, rank = divmod(rank, factorial(i))
        out.append(pool.pop(digit))
    return tuple(out)


def _distinct_arrangements(word: list[int]) -> list[tuple[int, ...]]:
    # lexicographic next-permutation walk from the sorted word
    word = sorted(word)
    out = [tuple(word)]
    n = len(word)
    while True:
        i = n - 2
        while i >= 0 and word[i] >= word[i + 1]:
            i -= 1
        if i < 0:
            return out
        j = n - 1
        while word[j] <= word[i]:
            j -= 1
        word[i], word[j] = word[j], word[i]
        word[i + 1:] = reversed(word[i + 1:])
        out.append(tuple(word))


class ArrangementIndex:
    """Lexicographic bijection between deck arrangements and 0..N-1.

    The sorted deck (all type-0 cards on top, then type 1, ...) has index 0.
    For a deck of distinct cards the index is the Lehmer rank.
    """

    def __init__(self, evaluation: Iterable[int], cap: int = ARRANGEMENT_CAP):
        self.evaluation = Partition(evaluation)
        count = factorial(self.evaluation.size) // prod(factorial(p) for p in self.evaluation)
        if count > cap:
            raise ValueError(f"{count} arrangements exceed the cap of {cap}")
        base = [t for t, mult in enumerate(self.evaluation) for _ in range(mult)]
        self.words = _distinct_arrangements(base)
        self._index = {w: i for i, w in enumerate(self.words)}

    @classmethod
    def distinct(cls, n: int, cap: int = ARRANGEMENT_CAP) -> "ArrangementIndex":
        return cls([1] * n, cap)

    @property
    def n(self) -> int:
        return self.evaluation.size

    def __len__(self) -> int:
        return len(self.words)

    def rank(self, word: Sequence[int]) -> int:
        return self._index[tuple(word)]

    def unrank(self, i: int) -> tuple[int, ...]:
        return self.words[i]


# ---------------------------------------------------------------------------
# transition matrices


@dataclass(frozen=True, eq=False)
class TransitionMatrix:
    """Dense transition matrix stored as integer counts over a shared denominator.

    ``counts[x, y] / denominator`` is the exact transition probability.
    """

    kind: str
    evaluation: Partition
    counts: np.ndarray
    denominator: int

    @property
    def n(self) -> int:
        return self.evaluation.size

    @property
    def size(self) -> int:
        return self.counts.shape[0]

    def dense(self) -> np.ndarray:
        return self.counts / self.denominator

    def entry(self, x: int, y: int) -> Fraction:
        return Fraction(int(self.counts[x, y]), self.denominator)

    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.counts, self.counts.T))

    def is_stochastic(self) -> bool:
        return bool((self.counts.sum(axis=1) == self.denominator).all())

    def is_doubly_stochastic(self) -> bool:
        return self.is_stochastic() and bool((self.counts.sum(axis=0) == self.denominator).all())

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for row in self.dense():
            w.writerow([repr(float(v)) for v in row])
        return buf.getvalue()

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "evaluation": list(self.evaluation),
            "den": self.denominator,
            "num": self.counts.tolist(),
        }


def _moves_r2r(word: tuple[int, ...]) -> Iterable[tuple[int, ...]]:
    n = len(word)
    for p in range(n):
        rest = list(word[:p] + word[p + 1:])
        for q in range(n):
            yield tuple(rest[:q] + [word[p]] + rest[q:])


def _moves_r2t(word: tuple[int, ...]) -> Iterable[tuple[int, ...]]:
    for p in range(len(word)):
        yield (word[p],) + word[:p] + word[p + 1:]


def _build(index: ArrangementIndex, moves, kind: str, denominator: int) -> TransitionMatrix:
    size = len(index)
    counts = np.zeros((size, size), dtype=np.int32)
    for x, word in enumerate(index.words):
        for new in moves(word):
            counts[x, index.rank(new)] += 1
    return TransitionMatrix(kind, index.evaluation, counts, denominator)


def build_r2r_matrix(n: int, cap: int = ARRANGEMENT_CAP) -> TransitionMatrix:
    """Random-to-random on n distinct cards (n! states, lexicographic order)."""
    if n < 1:
        raise ValueError("n must be positive")
    return _build(ArrangementIndex.distinct(n, cap), _moves_r2r, "random_to_random", n * n)


def build_r2t_matrix(n: int, cap: int = ARRANGEMENT_CAP) -> TransitionMatrix:
    """Random-to-top on n distinct cards: a uniform card is moved to the top.

    With row-stochastic matrices the symmetrization identity reads
    ``A @ A.T == P``: a random-to-top move followed by its time reversal
    (top-to-random) is one random-to-random move.
    """
    if n < 1:
        raise ValueError("n must be positive")
    return _build(ArrangementIndex.distinct(n, cap), _moves_r2t, "random_to_top", n)


def build_r2r_multiset(nu: Iterable[int], cap: int = ARRANGEMENT_CAP) -> TransitionMatrix:
    """Random-to-random on a deck with nu[i] indistinguishable cards of type i."""
    index = ArrangementIndex(nu, cap)
    if index.n < 1:
        raise ValueError("the deck must be nonempty")
    return _build(index, _moves_r2r, "random_to_random", index.n ** 2)


# ---------------------------------------------------------------------------
# eigenvalues


def jacobi_eigh(a: np.ndarray, tol: float = 1e-13, max_sweeps: int = 100, vectors: bool = False):
    """Cyclic Jacobi rotations for a dense symmetric matrix.

    Sweeps until the off-diagonal Frobenius norm drops to ``tol``. Returns the
    eigenvalues (unsorted, diagonal order) and, if requested, the matrix of
    eigenvectors as columns.
    """
    a = np.array(a, dtype=float, copy=True)
    m = a.shape[0]
    v = np.eye(m) if vectors else None
    upper = np.triu_indices(m, 1)
    for _ in range(max_sweeps):
        # summed directly: total minus diagonal cancels below ~1e-8
        off = sqrt(2.0 * float(np.sum(a[upper] ** 2)))
        if off <= tol:
            break
        for p in range(m - 1):
            for q in range(p + 1, m):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + sqrt(theta * theta + 1.0))
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                colp, colq = a[:, p].copy(), a[:, q].copy()
                a[:, p], a[:, q] = c * colp - s * colq, s * colp + c * colq
                rowp, rowq = a[p, :].copy(), a[q, :].copy()
                a[p, :], a[q, :] = c * rowp - s * rowq, s * rowp + c * rowq
                if v is not None:
                    vp, vq = v[:, p].copy(), v[:, q].copy()
                    v[:, p], v[:, q] = c * vp - s * vq, s * vp + c * vq
    else:
        raise RuntimeError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")
    w = np.diag(a).copy()
    return (w, v) if vectors else w


def numeric_eigenvalues(m: TransitionMatrix | np.ndarray, method: str = "lapack", residuals: bool = False):
    """All eigenvalues of a symmetric matrix, with multiplicity, descending.

    ``method="lapack"`` calls ``numpy.linalg.eigh``; ``method="jacobi"`` uses
    :func:`jacobi_eigh` and is only practical up to a few hundred states.
    With ``residuals=True`` also returns ``||M v - w v||`` per eigenpair.
    """
    a = m.dense() if isinstance(m, TransitionMatrix) else np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if np.max(np.abs(a - a.T), initial=0.0) > 1e-12:
        raise ValueError("matrix is not symmetric")
    if method == "lapack":
        if residuals:
            w, v = np.linalg.eigh(a)
        else:
            w = np.linalg.eigvalsh(a)
    elif method == "jacobi":
        if residuals:
            w, v = jacobi_eigh(a, vectors=True)
        else:
            w = jacobi_eigh(a)
    else:
        raise ValueError(f"unknown method {method!r}")
    order = np.argsort(-w, kind="stable")
    w = w[order]
    if not residuals:
        return w
    v = v[:, order]
    res = np.linalg.norm(a @ v - v * w, axis=0)
    return w, res


# ---------------------------------------------------------------------------
# distributions


@dataclass(frozen=True, eq=False)
class Distribution:
    """Probabilities over arrangement indices.

    Exact distributions hold Python-int weights (object array) over a common
    denominator; float distributions hold probabilities with denominator 1.
    """

    weights: np.ndarray
    denominator: int = 1
    exact: bool = False

    def __len__(self) -> int:
        return len(self.weights)

    @property
    def probabilities(self) -> np.ndarray:
        if self.exact:
            return np.array([float(Fraction(int(w), self.denominator)) for w in self.weights])
        return np.asarray(self.weights, dtype=float)

    def fractions(self) -> list[Fraction]:
        if not self.exact:
            raise ValueError("float distribution has no exact form")
        return [Fraction(int(w), self.denominator) for w in self.weights]

    def total(self) -> Fraction | float:
        if self.exact:
            return Fraction(int(sum(self.weights)), self.denominator)
        return fsum(self.weights)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["rank", "probability"])
        for i, p in enumerate(self.probabilities):
            w.writerow([i, repr(float(p))])
        return buf.getvalue()


def point_mass(size: int, index: int = 0, exact: bool = True) -> Distribution:
    if exact:
        w = np.zeros(size, dtype=object)
        w[:] = 0
        w[index] = 1
        return Distribution(w, 1, True)
    w = np.zeros(size)
    w[index] = 1.0
    return Distribution(w)


def uniform(size: int, exact: bool = True) -> Distribution:
    if exact:
        w = np.empty(size, dtype=object)
        w[:] = 1
        return Distribution(w, size, True)
    return Distribution(np.full(size, 1.0 / size))


def evolve_distribution(m: TransitionMatrix, start: Distribution, t: int, exact: bool | None = None) -> Distribution:
    """``start @ M**t`` by repeated vector-matrix products.

    ``exact=None`` picks exact integer arithmetic when ``t * states`` is at most
    1e6 and the start is exact, floats otherwise.
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    if len(start) != m.size:
        raise ValueError("distribution and matrix sizes differ")
    if exact is None:
        exact = start.exact and t * m.size <= EXACT_WORK_CAP
    if exact:
        if not start.exact:
            raise ValueError("exact evolution needs an exact start")
        # sparse row structure: each state has at most n^2 distinct successors
        rows, cols = np.nonzero(m.counts)
        vals = m.counts[rows, cols].astype(object)
        w = np.array(start.weights, dtype=object)
        den = start.denominator
        for _ in range(t):
            nxt = np.zeros(m.size, dtype=object)
            nxt[:] = 0
            np.add.at(nxt, cols, w[rows] * vals)
            w = nxt
            den *= m.denominator
        return Distribution(w, den, True)
    p = start.probabilities
    mat = m.dense()
    for _ in range(t):
        p = p @ mat
    return Distribution(p)


def tv_distance(d: Distribution) -> float:
    """Total variation distance to the uniform distribution."""
    size = len(d)
    if d.exact:
        num = sum(abs(int(w) * size - d.denominator) for w in d.weights)
        return float(Fraction(num, 2 * size * d.denominator))
    return 0.5 * fsum(np.abs(d.probabilities - 1.0 / size))


def chi2_distance(d: Distribution) -> float:
    """``sum (d_i - u)^2 / u``, the squared l2(pi) norm of ``d/pi - 1``."""
    size = len(d)
    if d.exact:
        sq = sum(int(w) * int(w) for w in d.weights)
        return float(Fraction(size * sq, d.denominator**2) - 1)
    diff = d.probabilities - 1.0 / size
    return size * fsum(diff * diff)


def distance_profile(m: TransitionMatrix, t_max: int, start: Distribution | None = None) -> list[tuple[int, float, float]]:
    """``(t, TV, chi2)`` for t = 0..t_max, evolving once step by step.

    Starts from the identity arrangement unless ``start`` is given; stays exact
    while ``t_max * states`` is within the exact-work cap.
    """
    d = start if start is not None else point_mass(m.size, exact=t_max * m.size <= EXACT_WORK_CAP)
    out = [(0, tv_distance(d), chi2_distance(d))]
    for t in range(1, t_max + 1):
        d = evolve_distribution(m, d, 1, exact=d.exact)
        out.append((t, tv_distance(d), chi2_distance(d)))
    return out
