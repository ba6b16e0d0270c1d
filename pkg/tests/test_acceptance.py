"""The ten acceptance criteria, one test each.

Each test records a single ``PASS``/``FAIL`` line; ``conftest.py`` prints them
all in the terminal summary, and running this file directly prints them too.
"""

import subprocess
import sys
import time
from fractions import Fraction
from math import exp, factorial

import numpy as np
import pytest

from r2r.bounds import (
    analytic_upper_bound,
    cutoff_time,
    l2_bound_exact,
    largesteig_term,
    word_lower_bound_witness,
    word_lower_time,
    word_witness_floor,
)
from r2r.checks import MULTISET_DECKS, derangements
from r2r.montecarlo import mc_sample
from r2r.oracle import (
    build_r2r_matrix,
    build_r2r_multiset,
    build_r2t_matrix,
    distance_profile,
    evolve_distribution,
    numeric_eigenvalues,
    point_mass,
    tv_distance,
)
from r2r.partitions import enumerate_partitions, horizontal_strip_subshapes, syt_count
from r2r.spectrum import eigenvalue, eigenvalue_numerators, full_spectrum, spectrum_with_evaluation
from r2r.tableaux import StandardTableau, desarrangement_count, enumerate_desarrangements, enumerate_syt, rsw_forward, rsw_inverse

RESULTS: dict[int, str] = {}


def report(k: int, title: str, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {k:>2}: {title} ({detail})"
    RESULTS[k] = line
    print(line)
    assert ok, line


def test_01_spectrum_matches_oracle():
    start = time.perf_counter()
    worst, cases = 0.0, []
    for n in range(2, 7):
        cases.append((build_r2r_matrix(n), full_spectrum(n)))
    for nu in MULTISET_DECKS:
        cases.append((build_r2r_multiset(nu), spectrum_with_evaluation(nu)))
    ok = True
    for mat, spec in cases:
        numeric = numeric_eigenvalues(mat)
        formula = np.array([float(v) for v in spec.values()])
        if numeric.shape != formula.shape or spec.total_multiplicity != mat.size:
            ok = False
            continue
        worst = max(worst, float(np.max(np.abs(numeric - formula))))
    elapsed = time.perf_counter() - start
    ok = ok and worst <= 1e-8 and elapsed <= 300
    report(1, "formula spectrum == oracle eigenvalues", ok, f"{len(cases)} chains, max |diff| {worst:.2e}, {elapsed:.1f}s")


def test_02_counting_identities():
    bad = []
    for n in range(1, 13):
        if full_spectrum(n).total_multiplicity != factorial(n):
            bad.append(f"sum mult n={n}")
    for n in range(0, 9):
        for lam in enumerate_partitions(n):
            if sum(desarrangement_count(mu) for mu in horizontal_strip_subshapes(lam)) != syt_count(lam):
                bad.append(f"strip sum {list(lam)}")
        if sum(syt_count(mu) * desarrangement_count(mu) for mu in enumerate_partitions(n)) != derangements(n):
            bad.append(f"derangements n={n}")
    for n in range(0, 11):
        if sum(syt_count(lam) ** 2 for lam in enumerate_partitions(n)) != factorial(n):
            bad.append(f"sum d^2 n={n}")
    ok = not bad and [derangements(n) for n in (2, 3, 4)] == [1, 2, 9]
    report(2, "exact counting identities", ok, "all hold" if ok else ", ".join(bad[:5]))


def test_03_rsw_round_trip():
    triples = 0
    ok = True
    for n in range(1, 8):
        for lam in enumerate_partitions(n):
            for mu in horizontal_strip_subshapes(lam):
                for q in enumerate_desarrangements(mu):
                    triples += 1
                    ok &= rsw_inverse(rsw_forward(q, lam)) == (mu, q)
            ok &= all(rsw_forward(rsw_inverse(p)[1], lam) == p for p in enumerate_syt(lam))
    q = StandardTableau([[1, 3, 4], [2, 6, 7], [5]])
    worked = rsw_forward(q, [4, 3, 2]).to_json()
    ok &= worked == [[1, 2, 3, 6], [4, 5, 9], [7, 8]]
    report(3, "RSW round trip n <= 7 and worked example", ok, f"{triples} triples, worked pair -> {worked}")


def test_04_eigenvalue_structure():
    start = time.perf_counter()
    pairs, problems = 0, []
    for n in range(1, 41):
        for lam in enumerate_partitions(n):
            nums, sizes = eigenvalue_numerators(lam)
            pairs += nums.size
            if nums.min() < 0:
                problems.append(f"negative under {list(lam)}")
            if n <= 30:
                l = n - lam[0]
                k = sizes - l
                if (nums > n * n - n * l - k * k - k * l).any():
                    problems.append(f"bound fails under {list(lam)}")
        if n <= 30:
            for l in range(n):
                for k in range(1, n - l + 1):
                    if eigenvalue([n - l] + [1] * l, [k] + [1] * l) * n * n != n * n - n * l - k * k - k * l:
                        problems.append(f"no equality n={n} l={l} k={k}")
        if n <= 12:
            for lam in enumerate_partitions(n):
                subs = horizontal_strip_subshapes(lam)
                vals = {mu: eigenvalue(lam, mu) for mu in subs}
                for a in subs:
                    for b in subs:
                        if a != b and b.contains(a) and vals[b] > vals[a]:
                            problems.append(f"not monotone {list(lam)}")
    elapsed = time.perf_counter() - start
    report(4, "nonnegativity n<=40, monotonicity n<=12, first-row bound n<=30", not problems,
           f"{pairs} pairs, {elapsed:.1f}s" if not problems else "; ".join(problems[:3]))


def test_05_bound_chain():
    ok, checked, worst = True, 0, 0.0
    for n in range(2, 7):
        spec = full_spectrum(n)
        for t, tv, chi2 in distance_profile(build_r2r_matrix(n), 60):
            l2 = l2_bound_exact(spec, t)
            checked += 1
            worst = max(worst, abs(l2 - chi2))
            ok &= 4 * tv * tv <= l2 * (1 + 1e-12) + 1e-15
            ok &= abs(l2 - chi2) <= 1e-8 * max(1.0, chi2)
            ok &= l2 <= analytic_upper_bound(n, t)
    report(5, "4 TV^2 <= l2 exact = oracle chi2 <= analytic", ok, f"{checked} (n, t) points, max |l2 - chi2| {worst:.1e}")


def test_06_largesteig_at_cutoff():
    start = time.perf_counter()
    worst_ratio, ok = 0.0, True
    for n in (10**3, 10**4, 10**5):
        for c in (2, 3, 4):
            v = largesteig_term(n, cutoff_time(n, c))
            ok &= v <= exp(-2 * c)
            worst_ratio = max(worst_ratio, v / exp(-2 * c))
    elapsed = time.perf_counter() - start
    ok &= elapsed <= 60
    report(6, "largesteig term <= e^(-2c) at the cutoff time", ok, f"max ratio to e^(-2c) {worst_ratio:.3f}, {elapsed:.2f}s")


def test_07_symmetrized_random_to_top():
    ok = True
    for n in range(1, 6):
        rows = build_r2t_matrix(n)
        # the operator acting on functions is the transpose of the row-stochastic matrix
        a = [[Fraction(int(rows.counts[y, x]), rows.denominator) for y in range(rows.size)] for x in range(rows.size)]
        p = build_r2r_matrix(n)
        size = rows.size
        for x in range(size):
            for y in range(size):
                if sum(a[z][x] * a[z][y] for z in range(size)) != p.entry(x, y):
                    ok = False
    report(7, "transpose(A) A == random-to-random, exact, n <= 5", ok, "A = random-to-top operator")


def test_08_word_lower_bound_witness():
    n, m, c = 100, 4, 0.5
    t = word_lower_time(n, m, c)
    w = word_lower_bound_witness(n, m, t)
    floor = word_witness_floor(n, m, t)
    target = 0.5 * exp(2 * c)
    ok = w > target and floor > target
    report(8, "repeated-card witness > (1/2) e^(2c)", ok, f"t={t:.3f}, witness {w:.4f}, crude floor {floor:.4f}, target {target:.4f}")


def test_09_monte_carlo():
    start = time.perf_counter()
    n, t, trials, seed = 5, 20, 10**6, 20240517
    first = mc_sample(n, t, trials, seed)
    second = mc_sample(n, t, trials, seed)
    exact = tv_distance(evolve_distribution(build_r2r_matrix(n), point_mass(factorial(n)), t))
    empirical = tv_distance(first.distribution())
    elapsed = time.perf_counter() - start
    ok = abs(empirical - exact) <= 0.01 and np.array_equal(first.counts, second.counts) and elapsed <= 120
    report(9, "Monte Carlo TV within 0.01 and bit-identical rerun", ok,
           f"empirical {empirical:.5f} vs exact {exact:.5f}, {elapsed:.1f}s for both runs")


COMMANDS = [
    ["spectrum", "--n", "6"],
    ["spectrum", "--evaluation", "2,2,1", "--format", "csv"],
    ["bounds", "--n", "6", "--c", "2"],
    ["bounds", "--n", "1000", "--c", "2", "--format", "csv"],
    ["verify", "--n-max", "6"],
]


def test_10_determinism():
    ok, sizes = True, []
    for argv in COMMANDS:
        runs = [subprocess.run([sys.executable, "-m", "r2r", *argv], capture_output=True) for _ in range(2)]
        ok &= all(r.returncode == 0 for r in runs) and runs[0].stdout == runs[1].stdout and bool(runs[0].stdout)
        sizes.append(len(runs[0].stdout))
    report(10, "spectrum/bounds/verify byte-identical across runs", ok, f"{len(COMMANDS)} commands, {sum(sizes)} bytes each pass")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
