"""
Watching the cutoff through the bounds
======================================

Random-to-random mixes at (3/4) n ln n - (1/4) n ln ln n. The spectrum-free
upper bound and the largest-eigenvalue block both drop from huge to tiny
within a window of order n around that time.
"""

import numpy as np

from r2r.bounds import analytic_report, cutoff_time, largesteig_term, word_lower_bound_witness, word_lower_time

n = 1000
print(f"n={n}")
for c in (-1, 0, 1, 2, 3, 4):
    t = cutoff_time(n, c) if c >= 0 else cutoff_time(n, 0) + c * n
    rep = analytic_report(n, t)
    print(f"  c={c:>2}  t={t:8.1f}  analytic l2^2 <= {rep.value:10.4g}   largest block {largesteig_term(n, t):10.4g}")

# At the cutoff the largest block sits below e^(-2c) for every scale tried.
for n in (10**3, 10**4, 10**5):
    print(n, [round(float(largesteig_term(n, cutoff_time(n, c)) / np.exp(-2 * c)), 3) for c in (2, 3, 4)])

# Where the bound puts its weight: terms by l = n - lam_1.
rep = analytic_report(1000, cutoff_time(1000, 2))
print("\nfirst outer terms:", [f"{x:.3g}" for x in rep.per_l[:5]], "last k summed for l=1:", rep.truncation[0])

# With m card types the [n-1, 1] block shrinks by (m-1)/(n-1) and the deck
# mixes earlier; at this time the block is still large.
n, m, c = 100, 4, 0.5
t = word_lower_time(n, m, c)
print(f"\nn={n}, m={m}: t={t:.2f}, witness {word_lower_bound_witness(n, m, t):.3f} vs (1/2)e^(2c) = {0.5 * np.exp(2 * c):.3f}")
