"""Property suites run by ``r2r verify``.

Each check returns a :class:`CheckResult`; nothing here raises on a failed
property, so a whole suite always reports.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, factorial

import numpy as np

from .oracle import build_r2r_matrix, build_r2r_multiset, build_r2t_matrix, numeric_eigenvalues
from .partitions import (
    Partition,
    dominates,
    enumerate_partitions,
    horizontal_strip_subshapes,
    syt_count,
)
from .spectrum import (
    eigenvalue,
    eigenvalue_numerators,
    full_spectrum,
    spectrum_with_evaluation,
)
from .tableaux import (
    desarrangement_count,
    enumerate_desarrangements,
    enumerate_syt,
    rsw_forward,
    rsw_inverse,
)

__all__ = ["CheckResult", "SUITES", "MULTISET_DECKS", "run_suite"]

MULTISET_DECKS = ([2, 1], [2, 2], [2, 1, 1], [3, 1], [2, 2, 1])
EIG_TOL = 1e-8


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""


def derangements(n: int) -> int:
    a, b = 1, 0  # D_0, D_1
    if n == 0:
        return a
    for k in range(2, n + 1):
        a, b = b, (k - 1) * (a + b)
    return b


# ---------------------------------------------------------------------------
# spectra


def spectrum_matches_matrix(n: int | None = None, nu=None) -> tuple[bool, str]:
    if nu is None:
        mat, spec = build_r2r_matrix(n), full_spectrum(n)
    else:
        mat, spec = build_r2r_multiset(nu), spectrum_with_evaluation(nu)
    numeric = numeric_eigenvalues(mat)
    formula = np.array([float(v) for v in spec.values()])
    if len(numeric) != len(formula):
        return False, f"{len(numeric)} numeric vs {len(formula)} formula eigenvalues"
    err = float(np.max(np.abs(numeric - formula)))
    return err <= EIG_TOL, f"{len(numeric)} eigenvalues, max deviation {err:.3g}"


def symmetrization_holds(n: int) -> tuple[bool, str]:
    a, p = build_r2t_matrix(n), build_r2r_matrix(n)
    c = a.counts.astype(np.int64)
    ok = np.array_equal(c @ c.T, p.counts) and p.denominator == a.denominator**2
    return ok, f"{n}! = {factorial(n)} states"


def _spectra(n_max: int) -> list[CheckResult]:
    out = []
    for n in range(2, min(n_max, 6) + 1):
        ok, detail = spectrum_matches_matrix(n)
        out.append(CheckResult("spectra", f"formula == matrix, n={n}", ok, detail))
    for nu in MULTISET_DECKS:
        if sum(nu) <= n_max:
            ok, detail = spectrum_matches_matrix(nu=nu)
            out.append(CheckResult("spectra", f"formula == matrix, nu={nu}", ok, detail))
    for n in range(2, min(n_max, 5) + 1):
        ok, detail = symmetrization_holds(n)
        out.append(CheckResult("spectra", f"A A^T == P, n={n}", ok, detail))
    return out


# ---------------------------------------------------------------------------
# bijection


def rsw_round_trip(n: int) -> tuple[bool, str]:
    pairs = 0
    for lam in enumerate_partitions(n):
        images = set()
        for mu in horizontal_strip_subshapes(lam):
            for q in enumerate_desarrangements(mu):
                p = rsw_forward(q, lam)
                if rsw_inverse(p) != (mu, q):
                    return False, f"inverse fails at lam={list(lam)}, q={q.to_json()}"
                images.add(p)
                pairs += 1
        syt = enumerate_syt(lam)
        if len(images) != len(syt):
            return False, f"forward map not onto SYT({list(lam)})"
        for p in syt:
            mu, q = rsw_inverse(p)
            if rsw_forward(q, lam) != p:
                return False, f"forward(inverse) fails at {p.to_json()}"
    return True, f"{pairs} (lam, mu, q) triples"


def _bijection(n_max: int) -> list[CheckResult]:
    out = []
    for n in range(1, min(n_max, 7) + 1):
        ok, detail = rsw_round_trip(n)
        out.append(CheckResult("bijection", f"RSW round trip, n={n}", ok, detail))
    for n in range(0, min(n_max, 8) + 1):
        bad = [
            lam for lam in enumerate_partitions(n)
            if sum(desarrangement_count(mu) for mu in horizontal_strip_subshapes(lam)) != syt_count(lam)
        ]
        out.append(CheckResult("bijection", f"sum_mu d^mu == d_lam, n={n}", not bad, f"failures: {bad}" if bad else ""))
        bad = [mu for mu in enumerate_partitions(n) if desarrangement_count(mu) != len(enumerate_desarrangements(mu))]
        out.append(CheckResult("bijection", f"d^mu recursion == enumeration, n={n}", not bad, f"failures: {bad}" if bad else ""))
    return out


# ---------------------------------------------------------------------------
# identities and eigenvalue structure


def nonnegative(n: int) -> tuple[bool, str]:
    pairs = 0
    for lam in enumerate_partitions(n):
        nums, _ = eigenvalue_numerators(lam)
        pairs += nums.size
        if nums.min() < 0:
            return False, f"negative eigenvalue under lam={list(lam)}"
    return True, f"{pairs} pairs"


def monotone_under_nesting(n: int) -> tuple[bool, str]:
    checked = 0
    for lam in enumerate_partitions(n):
        shapes = horizontal_strip_subshapes(lam)
        vals = {mu: eigenvalue(lam, mu) for mu in shapes}
        for a, b in combinations(shapes, 2):
            small, big = (a, b) if b.contains(a) else (b, a) if a.contains(b) else (None, None)
            if small is None:
                continue
            checked += 1
            if vals[big] > vals[small]:
                return False, f"lam={list(lam)}: eig(/{list(big)}) > eig(/{list(small)})"
    return True, f"{checked} nested pairs"


def ieb_holds(n: int) -> tuple[bool, str]:
    """Every eigenvalue is at most ``1 - l/n - (k^2 + kl)/n^2``, with equality on hooks."""
    for lam in enumerate_partitions(n):
        l = n - lam[0]
        nums, sizes = eigenvalue_numerators(lam)
        k = sizes - l
        bound = n * n - n * l - k * k - k * l
        if (nums > bound).any():
            return False, f"bound exceeded under lam={list(lam)}"
    for l in range(0, n):
        hook = Partition([n - l] + [1] * l)
        for k in range(1, n - l + 1):
            mu = Partition([k] + [1] * l)
            if eigenvalue(hook, mu) * n * n != n * n - n * l - k * k - k * l:
                return False, f"no equality at lam={list(hook)}, mu={list(mu)}"
    return True, ""


def _identities(n_max: int) -> list[CheckResult]:
    out = []
    for n in range(1, min(n_max, 12) + 1):
        s = full_spectrum(n)
        out.append(CheckResult("identities", f"sum multiplicities == n!, n={n}", s.total_multiplicity == factorial(n)))
        grouped: dict[Partition, int] = {}
        for e in s.entries:
            grouped[e.lam] = grouped.get(e.lam, 0) + e.multiplicity
        ok = all(v == syt_count(lam) ** 2 for lam, v in grouped.items())
        out.append(CheckResult("identities", f"per-lam multiplicity == d_lam^2, n={n}", ok))
        ones = [e for e in s.nonzero() if e.value == 1]
        ok = len(ones) == 1 and ones[0].multiplicity == 1 and ones[0].lam == Partition([n]) and not ones[0].mu
        out.append(CheckResult("identities", f"unique eigenvalue 1, n={n}", ok))
    for n in range(0, min(n_max, 10) + 1):
        ok = sum(syt_count(lam) ** 2 for lam in enumerate_partitions(n)) == factorial(n)
        out.append(CheckResult("identities", f"sum d_lam^2 == n!, n={n}", ok))
    for n in range(1, min(n_max, 8) + 1):
        got = sum(syt_count(mu) * desarrangement_count(mu) for mu in enumerate_partitions(n))
        out.append(CheckResult("identities", f"sum d_mu d^mu == D_n, n={n}", got == derangements(n), f"{got} vs {derangements(n)}"))
    for n in range(1, n_max + 1):
        for check, label in ((nonnegative, "eigenvalues >= 0"), (monotone_under_nesting, "monotone under nesting"), (ieb_holds, "first-row bound")):
            if check is monotone_under_nesting and n > 12:
                continue
            ok, detail = check(n)
            out.append(CheckResult("identities", f"{label}, n={n}", ok, detail))
    for n in range(2, min(n_max, 12) + 1):
        ok = all(
            sum(syt_count(lam) ** 2 for lam in enumerate_partitions(n) if n - lam[0] == l)
            <= comb(n, l) * factorial(n) // factorial(n - l)
            for l in range(n)
        )
        out.append(CheckResult("identities", f"sum_(lam_1 = n-l) d_lam^2 <= C(n,l) n!/(n-l)!, n={n}", ok))
    for nu in MULTISET_DECKS:
        if sum(nu) <= n_max:
            s = spectrum_with_evaluation(nu)
            ok = s.total_multiplicity == s.num_states and all(dominates(e.lam, nu) for e in s.entries)
            out.append(CheckResult("identities", f"multiset count == arrangements, nu={nu}", ok))
    return out


SUITES = {"spectra": _spectra, "bijection": _bijection, "identities": _identities}


def run_suite(name: str, n_max: int = 6) -> list[CheckResult]:
    if name == "all":
        return [r for suite in SUITES.values() for r in suite(n_max)]
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    return SUITES[name](n_max)
