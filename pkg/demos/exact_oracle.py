"""
Brute force on small decks
==========================

For n <= 6 the whole transition matrix fits in memory. Its eigenvalues match
the formula, it is the symmetrization of random-to-top, and stepping a point
mass forward gives the exact total-variation curve.
"""

import numpy as np

from r2r import full_spectrum
from r2r.bounds import analytic_upper_bound, l2_bound_exact
from r2r.oracle import build_r2r_matrix, build_r2t_matrix, distance_profile, numeric_eigenvalues

n = 5
p = build_r2r_matrix(n)
print(f"{p.size} states, symmetric {p.is_symmetric()}, doubly stochastic {p.is_doubly_stochastic()}")

numeric = numeric_eigenvalues(p)
formula = np.array([float(v) for v in full_spectrum(n).values()])
print("max |numeric - formula| =", np.max(np.abs(numeric - formula)))
jac = numeric_eigenvalues(p, method="jacobi")
print("Jacobi vs LAPACK          =", np.max(np.abs(jac - numeric)))

# Row-stochastic random-to-top A gives P = A A^T.
a = build_r2t_matrix(n).counts.astype(np.int64)
print("A A^T == P exactly:", np.array_equal(a @ a.T, p.counts))

# TV, chi-square and the bounds side by side.
s = full_spectrum(n)
print(f"\n{'t':>3} {'TV':>10} {'4TV^2':>10} {'chi2':>10} {'analytic':>10}")
for t, tv, chi2 in distance_profile(p, 30)[::3]:
    print(f"{t:>3} {tv:10.5f} {4 * tv * tv:10.3g} {chi2:10.3g} {analytic_upper_bound(n, t):10.3g}")
assert all(abs(c - l2_bound_exact(s, t)) < 1e-9 * max(1, c) for t, _, c in distance_profile(p, 30))
