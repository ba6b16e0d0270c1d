"""Seeded Monte Carlo simulation of random-to-random from the identity deck.

Trials are processed in fixed-size chunks. Chunk ``b`` draws from its own
Philox stream keyed by ``SeedSequence([seed, b])``, so the output depends only
on ``(n, t, trials, seed)`` and never on how the work is scheduled.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial

import numpy as np

from .oracle import Distribution

__all__ = ["CHUNK", "MCResult", "mc_sample", "rank_permutations", "simulate_decks"]

CHUNK = 1 << 16
FULL_DISTRIBUTION_MAX_N = 7
MAX_N = 12


@dataclass(frozen=True, eq=False)
class MCResult:
    n: int
    t: int
    trials: int
    seed: int
    counts: np.ndarray | None                 # per-arrangement counts (n <= 7)
    summary: dict = field(default_factory=dict)

    def distribution(self) -> Distribution:
        if self.counts is None:
            raise ValueError("full empirical distribution is only kept for n <= 7")
        return Distribution(self.counts / self.trials)

    def metadata(self) -> dict:
        return {"n": self.n, "t": self.t, "trials": self.trials, "seed": self.seed, "chunk": CHUNK}


def _generator(seed: int, chunk: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, chunk])))


def simulate_decks(n: int, t: int, size: int, rng: np.random.Generator) -> np.ndarray:
    """Run t moves on ``size`` identity decks; returns an ``(size, n)`` array.

    Per move the card at position p is lifted out and lands at position q:
    slots strictly between shift by one toward p.
    """
    decks = np.tile(np.arange(n, dtype=np.int8), (size, 1))
    j = np.arange(n)[None, :]
    for _ in range(t):
        moves = rng.integers(0, n, size=(2, size))
        p, q = moves[0][:, None], moves[1][:, None]
        src = j + ((j >= p) & (j < q)) - ((j > q) & (j <= p))
        src = np.where(j == q, p, src)
        decks = np.take_along_axis(decks, src, axis=1)
    return decks


def rank_permutations(decks: np.ndarray) -> np.ndarray:
    """Vectorized lexicographic (Lehmer) rank of each row."""
    size, n = decks.shape
    ranks = np.zeros(size, dtype=np.int64)
    for i in range(n - 1):
        smaller = (decks[:, i + 1:] < decks[:, i:i + 1]).sum(axis=1)
        ranks += smaller * factorial(n - 1 - i)
    return ranks


def mc_sample(n: int, t: int, trials: int, seed: int) -> MCResult:
    """Empirical law of the deck after t random-to-random moves from the identity.

    For n <= 7 the full histogram over the n! arrangements is kept. Larger
    decks only report summary statistics: the fraction of trials back at the
    identity, the mean number of fixed points, and the position histogram of
    the card that started on top.
    """
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must lie in [1, {MAX_N}]")
    if trials < 1:
        raise ValueError("trials must be positive")
    if t < 0:
        raise ValueError("t must be nonnegative")
    full = n <= FULL_DISTRIBUTION_MAX_N
    counts = np.zeros(factorial(n), dtype=np.int64) if full else None
    at_identity = 0
    fixed_points = 0
    top_card = np.zeros(n, dtype=np.int64)
    ident = np.arange(n)
    for chunk, lo in enumerate(range(0, trials, CHUNK)):
        size = min(CHUNK, trials - lo)
        decks = simulate_decks(n, t, size, _generator(seed, chunk))
        fixed = decks == ident
        at_identity += int(fixed.all(axis=1).sum())
        fixed_points += int(fixed.sum())
        top_card += np.bincount(np.argmax(decks == 0, axis=1), minlength=n)
        if full:
            counts += np.bincount(rank_permutations(decks), minlength=counts.size)
    summary = {
        "identity_fraction": at_identity / trials,
        "mean_fixed_points": fixed_points / trials,
        "top_card_position": (top_card / trials).tolist(),
    }
    return MCResult(n, t, trials, seed, counts, summary)
