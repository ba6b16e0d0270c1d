"""Exact spectrum of the random-to-random shuffle.

Eigenvalues are indexed by pairs (lam, mu) with lam/mu a horizontal strip,

    eig(lam/mu) = (C(n+1, 2) - C(|mu|+1, 2) + diag(lam) - diag(mu)) / n^2,

with multiplicity ``d_lam * d^mu`` for a deck of distinct cards, and
``K_{lam,nu} * d^mu`` (restricted to lam dominating nu) for a deck with
evaluation nu. Values are kept as exact ``Fraction`` objects; float conversion
only happens in :func:`spectral_trace` and the bound evaluators.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, fsum, prod
from typing import Iterable, Iterator

import numpy as np

from .partitions import (
    Partition,
    diag_index,
    dominates,
    enumerate_partitions,
    horizontal_strip_subshapes,
    is_horizontal_strip,
    syt_count,
)
from .tableaux import desarrangement_count, kostka_number

__all__ = [
    "SPECTRUM_CAP",
    "Spectrum",
    "SpectrumEntry",
    "eigenvalue",
    "eigenvalue_numerators",
    "full_spectrum",
    "iter_spectrum_entries",
    "spectral_trace",
    "spectrum_with_evaluation",
]

# 30 cards is ~6e5 (lam, mu) pairs; 40 cards is ~9e6, which no longer fits in
# memory as Python objects. Callers can raise the cap or stream with
# iter_spectrum_entries.
SPECTRUM_CAP = 30


@dataclass(frozen=True, slots=True)
class SpectrumEntry:
    lam: Partition
    mu: Partition
    value: Fraction
    multiplicity: int

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam),
            "mu": list(self.mu),
            "num": self.value.numerator,
            "den": self.value.denominator,
            "multiplicity": str(self.multiplicity),
        }


@dataclass(frozen=True)
class Spectrum:
    """All (lam, mu) entries for one deck, zero multiplicities included.

    Serialization drops the zero-multiplicity entries unless asked not to.
    """

    n: int
    evaluation: Partition
    entries: tuple[SpectrumEntry, ...]

    def nonzero(self) -> list[SpectrumEntry]:
        return [e for e in self.entries if e.multiplicity]

    @property
    def num_states(self) -> int:
        return factorial(self.n) // prod(factorial(p) for p in self.evaluation)

    @property
    def total_multiplicity(self) -> int:
        return sum(e.multiplicity for e in self.entries)

    def trivial(self) -> SpectrumEntry:
        return next(e for e in self.entries if e.lam == Partition([self.n]) and not e.mu)

    def nontrivial(self) -> list[SpectrumEntry]:
        return [e for e in self.entries if e.multiplicity and not (e.lam == Partition([self.n]) and not e.mu)]

    def values(self) -> list[Fraction]:
        """Every eigenvalue repeated by multiplicity, sorted descending."""
        out = []
        for e in self.entries:
            out.extend([e.value] * e.multiplicity)
        out.sort(reverse=True)
        return out

    def to_json(self, include_zero: bool = False) -> dict:
        entries = self.entries if include_zero else self.nonzero()
        return {
            "n": self.n,
            "evaluation": list(self.evaluation),
            "entries": [e.to_json() for e in entries],
        }

    def dumps(self, include_zero: bool = False) -> str:
        return json.dumps(self.to_json(include_zero), indent=1)

    def to_csv(self, include_zero: bool = False) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["lambda", "mu", "num", "den", "multiplicity"])
        for e in self.entries if include_zero else self.nonzero():
            w.writerow([json.dumps(list(e.lam)), json.dumps(list(e.mu)), e.value.numerator, e.value.denominator, e.multiplicity])
        return buf.getvalue()

    @classmethod
    def from_json(cls, data: dict | str) -> "Spectrum":
        if isinstance(data, str):
            data = json.loads(data)
        entries = tuple(
            SpectrumEntry(
                Partition(e["lambda"]),
                Partition(e["mu"]),
                Fraction(int(e["num"]), int(e["den"])),
                int(e["multiplicity"]),
            )
            for e in data["entries"]
        )
        return cls(int(data["n"]), Partition(data["evaluation"]), entries)


def eigenvalue(lam: Iterable[int], mu: Iterable[int]) -> Fraction:
    """Exact eigenvalue attached to the horizontal strip lam/mu.

    >>> eigenvalue([2, 1], [1, 1])
    Fraction(4, 9)
    """
    lam, mu = Partition(lam), Partition(mu)
    n = lam.size
    if n < 1:
        raise ValueError("lam must be a nonempty partition")
    if not is_horizontal_strip(lam, mu):
        raise ValueError(f"{list(lam)}/{list(mu)} is not a horizontal strip")
    return Fraction(_numerator(lam, mu), n * n)


def _numerator(lam: Partition, mu: Partition) -> int:
    n, m = lam.size, mu.size
    return comb(n + 1, 2) - comb(m + 1, 2) + diag_index(lam) - diag_index(mu)


def eigenvalue_numerators(lam: Iterable[int]) -> tuple[np.ndarray, np.ndarray]:
    """``n^2 * eig(lam/mu)`` and ``|mu|`` for every strip-subshape mu of lam.

    Vectorized over the box of interlacing choices ``lam[i+1] <= mu[i] <= lam[i]``,
    in the same order as :func:`horizontal_strip_subshapes`. Both diag(mu) and
    |mu| split into per-row terms, so the whole grid is a sum of broadcasts.
    """
    lam = Partition(lam)
    n = lam.size
    const = comb(n + 1, 2) + diag_index(lam)
    rows = [np.arange(lam[i], lam.part(i + 2) - 1, -1, dtype=np.int64) for i in range(len(lam))]
    size = np.zeros((), dtype=np.int64)
    diag = np.zeros((), dtype=np.int64)
    for i, r in enumerate(rows, start=1):
        size = np.add.outer(size, r)
        diag = np.add.outer(diag, r * (r + 1) // 2 - i * r)
    size, diag = size.ravel(), diag.ravel()
    return const - size * (size + 1) // 2 - diag, size


def iter_spectrum_entries(n: int, evaluation: Iterable[int] | None = None) -> Iterator[SpectrumEntry]:
    """Stream (lam, mu) entries without materializing the spectrum."""
    nu = Partition(evaluation) if evaluation is not None else None
    for lam in enumerate_partitions(n):
        if nu is None:
            weight = syt_count(lam)
        elif dominates(lam, nu):
            weight = kostka_number(lam, nu)
        else:
            continue
        for mu in horizontal_strip_subshapes(lam):
            yield SpectrumEntry(lam, mu, Fraction(_numerator(lam, mu), n * n), weight * desarrangement_count(mu))


def _sorted(entries: Iterable[SpectrumEntry]) -> tuple[SpectrumEntry, ...]:
    # value descending, then lam and mu lexicographically descending
    out = sorted(entries, key=lambda e: e.mu, reverse=True)
    out.sort(key=lambda e: e.lam, reverse=True)
    out.sort(key=lambda e: e.value, reverse=True)
    return tuple(out)


def full_spectrum(n: int, cap: int = SPECTRUM_CAP) -> Spectrum:
    """Spectrum of the random-to-random shuffle on n distinct cards."""
    if not 1 <= n <= cap:
        raise ValueError(f"n must lie in [1, {cap}], got {n}")
    return Spectrum(n, Partition([1] * n), _sorted(iter_spectrum_entries(n)))


def spectrum_with_evaluation(nu: Iterable[int], allow_single_type: bool = False, cap: int = SPECTRUM_CAP) -> Spectrum:
    """Spectrum for a deck holding nu[i] indistinguishable cards of type i."""
    nu = Partition(nu)
    n = nu.size
    if not 1 <= n <= cap:
        raise ValueError(f"|nu| must lie in [1, {cap}], got {n}")
    if nu[0] == n and n > 1 and not allow_single_type:
        raise ValueError("a deck with a single card type has a one-point state space; pass allow_single_type=True")
    return Spectrum(n, nu, _sorted(iter_spectrum_entries(n, nu)))


def spectral_trace(s: Spectrum, t: int, exact: bool = False) -> Fraction | float:
    """``sum multiplicity * value**t``, i.e. the trace of the t-step matrix."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    if exact:
        return sum((e.multiplicity * e.value**t for e in s.entries), Fraction(0))
    return fsum(e.multiplicity * float(e.value) ** t for e in s.entries if e.multiplicity)
