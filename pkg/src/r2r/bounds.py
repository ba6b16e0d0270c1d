"""Computable l2 mixing-time bounds for random-to-random.

Every curve here bounds (or, for the lower-bound witness, is dominated by) the
squared l2 distance ``||P^t(x, .)/pi - 1||_2^2``, which in turn dominates
``4 * TV^2``. Logarithms are natural throughout.

The upper-bound chain, from tightest to loosest, groups eigenvalues by
``l = n - lam_1`` and ``|mu| = l + k``:

* ``exact``    sum over the spectrum of ``mult * eig^(2t)``;
* ``eigb``     each eigenvalue replaced by ``1 - l/n - (k^2 + kl)/n^2``;
* ``m``        the desarrangement counts replaced by ``C(k+l, l-1) d_{lam/lam_1}``
               and ``d_lam`` by ``C(n, l) d_{lam/lam_1}``;
* ``denom``    the base split as ``(1 - l/n)(1 - (k^2+kl)/n^2)``;
* ``initial``  ``sum_l n^l e^{-2tl/n} sum_k C(k+l, l-1) e^{-2t(k^2+kl)/n^2}``.

``initial`` needs no spectrum and is what :func:`analytic_upper_bound` returns.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, exp, fsum, inf, lgamma, log, log1p, sqrt

import numpy as np
from scipy.special import gammaln

from .partitions import enumerate_partitions, horizontal_strip_subshapes, syt_count
from .spectrum import Spectrum, eigenvalue
from .tableaux import desarrangement_count

__all__ = [
    "AnalyticReport",
    "analytic_report",
    "analytic_upper_bound",
    "bound_chain",
    "crude_term",
    "cutoff_time",
    "cyclic_to_random_time",
    "gaussian_inner_bound",
    "inner_sum",
    "inner_sum_stages",
    "l2_bound_exact",
    "largesteig_term",
    "word_lower_time",
    "word_lower_bound_witness",
    "word_witness_floor",
]

TRUNCATE_ABOVE_N = 200
TRUNCATE_REL = 1e-18
_K_BLOCK = 512


def cutoff_time(n: float, c: float) -> float:
    """``(3/4) n ln n - (1/4) n ln ln n + c n``; needs ``n >= 3`` so ln ln n > 0."""
    if n < 3:
        raise ValueError("cutoff_time needs n >= 3")
    return 0.75 * n * log(n) - 0.25 * n * log(log(n)) + c * n


def cyclic_to_random_time(n: float, c: float) -> float:
    """``(3/2) n ln n + c n``, the card-cyclic-to-random l2 mixing time.

    Two cyclic-to-random steps are dominated in l2 by one random-to-random
    step, so twice the random-to-random budget (without the ln ln refinement)
    suffices.
    """
    if n < 3:
        raise ValueError("cyclic_to_random_time needs n >= 3")
    if c <= 0:
        raise ValueError("c must be positive")
    return 1.5 * n * log(n) + c * n


def word_lower_time(n: int, m: int, c: float) -> float:
    """``(n/4) ln m + (n/8) ln n - c n``, where the repeated-card l2 distance is still large."""
    return 0.25 * n * log(m) + 0.125 * n * log(n) - c * n


def _pow(base: float, exponent: float) -> float:
    # base**exponent for base in [0, 1], accurate when base is close to 1
    if base <= 0.0:
        return 0.0 if exponent > 0 else 1.0
    if base < 0.5:
        return base**exponent
    return exp(exponent * log1p(base - 1.0))


def l2_bound_exact(s: Spectrum, t: int) -> float:
    """``sum mult * eig^(2t)`` over the nontrivial spectrum.

    For a deck of distinct cards this is exactly the squared l2 distance from
    any start; for repeated cards it is that distance averaged over starts.
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    return fsum(e.multiplicity * float(e.value) ** (2 * t) for e in s.nontrivial())


def largesteig_term(n: int, t: float) -> float:
    """``sum_{k=1}^{n-1} (n-1) (1 - (n + k^2 + k)/n^2)^(2t)``: the lam = [n-1, 1] block.

    Terms are accumulated from the smallest (largest k) upward.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if t < 0:
        raise ValueError("t must be nonnegative")
    k = np.arange(n - 1, 0, -1, dtype=float)
    x = (n + k * k + k) / float(n * n)
    if t == 0:
        terms = np.full(k.shape, float(n - 1))
    else:
        with np.errstate(divide="ignore"):
            terms = (n - 1) * np.exp(2.0 * t * np.log1p(-x))
    return fsum(terms)


def word_lower_bound_witness(n: int, m: int, t: float) -> float:
    """``sum_{k=1}^{n-1} (m-1) (1 - (n + k^2 + k)/n^2)^(2t)``.

    The lam = [n-1, 1] block for a deck with m card types: ``K_{[n-1,1], nu} = m - 1``
    and ``d^[k,1] = 1``, so this is a sub-sum of the spectral l2 sum.
    """
    if not 2 <= m <= n:
        raise ValueError("need 2 <= m <= n")
    return largesteig_term(n, t) * (m - 1) / (n - 1)


def word_witness_floor(n: int, m: int, t: float) -> float:
    """``(sqrt(n) - 1)(m - 1)(1 - 2/n)^(2t)``, the cruder lower bound for the witness."""
    return (sqrt(n) - 1) * (m - 1) * _pow(1.0 - 2.0 / n, 2 * t)


# ---------------------------------------------------------------------------
# the spectrum-free double sum


def _log_comb(a: np.ndarray, b: int) -> np.ndarray:
    return gammaln(a + 1.0) - gammaln(b + 1.0) - gammaln(a - b + 1.0)


def _log_inner_sum(n: int, l: int, t: float, truncate: bool) -> tuple[float, int]:
    kmax = n - l
    chunks: list[np.ndarray] = []
    last = kmax
    prev = None
    for lo in range(0, kmax + 1, _K_BLOCK):
        k = np.arange(lo, min(kmax, lo + _K_BLOCK - 1) + 1, dtype=float)
        logs = _log_comb(k + l, l - 1) - 2.0 * t * (k * k + k * l) / (n * n)
        if truncate:
            steps = np.diff(logs, prepend=logs[0] if prev is None else prev)
            seen = np.concatenate(chunks + [logs])
            top = seen.max()
            running = np.log(np.cumsum(np.exp(seen - top)))[-len(logs):] + top
            stop = np.nonzero((steps <= 0) & (logs < log(TRUNCATE_REL) + running))[0]
            if stop.size:
                j = int(stop[0])
                chunks.append(logs[: j + 1])
                last = int(k[j])
                break
            prev = logs[-1]
        chunks.append(logs)
    logs = np.concatenate(chunks)
    top = float(logs.max())
    return top + log(fsum(np.exp(logs - top))), last


def inner_sum(n: int, l: int, t: float, truncate: bool | None = None) -> tuple[float, int]:
    """``sum_{k=0}^{n-l} C(k+l, l-1) exp(-2t (k^2 + kl)/n^2)`` and the last k summed.

    For ``n > 200`` (or ``truncate=True``) the sum stops once the terms are
    past their peak and below 1e-18 of the running total.
    """
    if truncate is None:
        truncate = n > TRUNCATE_ABOVE_N
    log_s, last = _log_inner_sum(n, l, t, truncate)
    return _exp(log_s), last


def _exp(x: float) -> float:
    return exp(x) if x < 709.0 else inf


def analytic_upper_bound(n: int, t: float) -> float:
    """Spectrum-free upper bound on the squared l2 distance (may be ``inf``)."""
    return analytic_report(n, t).value


@dataclass(frozen=True)
class AnalyticReport:
    n: int
    t: float
    value: float
    per_l: tuple[float, ...]          # outer terms, l = 1..n-1
    truncation: tuple[int, ...]       # last k summed, per l
    crude: float                      # n! 2^(-2t)
    gaussian: tuple[float, ...]       # e^(2l) (n^2/2t)^(l/2), l = 1..n-1 (l = 1 entry is nan)


def analytic_report(n: int, t: float, truncate: bool | None = None) -> AnalyticReport:
    if n < 2:
        raise ValueError("n must be at least 2")
    if t < 0:
        raise ValueError("t must be nonnegative")
    if truncate is None:
        truncate = n > TRUNCATE_ABOVE_N
    per_l, trunc, gauss = [], [], []
    for l in range(1, n):
        log_s, last = _log_inner_sum(n, l, t, truncate)
        per_l.append(_exp(l * log(n) - 2.0 * t * l / n + log_s))
        trunc.append(last)
        gauss.append(gaussian_inner_bound(n, l, t) if l >= 2 else float("nan"))
    value = fsum(per_l) if inf not in per_l else inf
    return AnalyticReport(n, t, value, tuple(per_l), tuple(trunc), crude_term(n, t), tuple(gauss))


def crude_term(n: int, t: float) -> float:
    """``n! 2^(-2t)``, which dominates every eigenvalue with ``l >= n/2``."""
    return _exp(lgamma(n + 1) - 2.0 * t * log(2.0))


def gaussian_inner_bound(n: int, l: int, t: float) -> float:
    """``e^(2l) (n^2 / 2t)^(l/2)``: closed-form bound on :func:`inner_sum` for ``2 <= l <= n/2``.

    Valid near the cutoff time, where ``t l^2 / 2n^2`` is controlled; it is
    not a bound for arbitrary t.
    """
    if t <= 0:
        return inf
    return _exp(2.0 * l + 0.5 * l * log(n * n / (2.0 * t)))


def inner_sum_stages(n: int, l: int, t: float) -> dict[str, float]:
    """The successive bounds on the inner k-sum, for ``l >= 2`` and ``t > 0``.

    ``bin`` replaces the binomial by a power and completes the square,
    ``cont`` passes to a Gamma integral plus the peak value, and ``gaussian``
    is the closed form. The first two are valid for all t (``cont`` needs
    ``t <= n^2/2``); ``gaussian`` only near the cutoff.
    """
    if l < 2 or t <= 0:
        raise ValueError("need l >= 2 and t > 0")
    log_pref = (l - 1) * log(2.0) - lgamma(l) + t * l * l / (2.0 * n * n)
    y = np.arange(0, n - l + 1, dtype=float) + l / 2.0
    logs = (l - 1) * np.log(y) - 2.0 * t * y * y / (n * n)
    top = float(logs.max())
    binned = _exp(log_pref + top + log(fsum(np.exp(logs - top))))
    log_peak = 0.5 * (l - 1) * log((l - 1) / (2.0 * np.e))
    cont = _exp(log_pref + float(np.logaddexp(gammaln(l / 2.0), log_peak)) + 0.5 * l * log(n * n / (2.0 * t)))
    return {
        "inner": inner_sum(n, l, t, truncate=False)[0],
        "bin": binned,
        "cont": float(cont),
        "gaussian": gaussian_inner_bound(n, l, t),
    }


# ---------------------------------------------------------------------------
# the chain with the true spectrum data


def bound_chain(n: int, t: int) -> dict[str, float]:
    """Evaluate every stage of the upper-bound chain at one (n, t).

    Needs the partitions of n, so it is meant for n up to ~25.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    exact, eigb, m_stage, denom = [], [], [], []
    for lam in enumerate_partitions(n):
        l = n - lam[0]
        d = syt_count(lam)
        d_rest = syt_count(lam.without_first_row())
        by_size: dict[int, int] = {}
        for mu in horizontal_strip_subshapes(lam):
            dm = desarrangement_count(mu)
            if l == 0 and not mu:
                continue  # the trivial eigenvalue
            if dm:
                exact.append(d * dm * float(eigenvalue(lam, mu)) ** (2 * t))
            by_size[mu.size] = by_size.get(mu.size, 0) + dm
        if l == 0:
            continue
        for k in range(0, n - l + 1):
            base = max(1.0 - l / n - (k * k + k * l) / n**2, 0.0)
            eigb.append(d * by_size.get(l + k, 0) * _pow(base, 2 * t))
            m_coef = comb(n, l) * d_rest * comb(k + l, l - 1) * d_rest
            m_stage.append(m_coef * _pow(base, 2 * t))
            split = _pow(1.0 - l / n, 2 * t) * _pow(max(1.0 - (k * k + k * l) / n**2, 0.0), 2 * t)
            denom.append(m_coef * split)
    return {
        "exact": fsum(exact),
        "eigb": fsum(eigb),
        "m": fsum(m_stage),
        "denom": fsum(denom),
        "initial": analytic_upper_bound(n, t),
    }
