"""
The spectrum of random-to-random
================================

Each step lifts a uniformly chosen card and reinserts it at a uniformly chosen
position. Eigenvalues are labelled by a partition lam of n and a subshape mu
with lam/mu a horizontal strip, and they are exact rationals with denominator n^2.
"""

from collections import Counter
from fractions import Fraction

from r2r import full_spectrum, spectrum_with_evaluation
from r2r.bounds import l2_bound_exact

# Five distinct cards: 120 eigenvalues in all, most of them repeated.
s = full_spectrum(5)
print(f"n=5: {s.total_multiplicity} eigenvalues over {len(s.nonzero())} (lam, mu) labels")
for e in s.nonzero()[:6]:
    print(f"  eig({list(e.lam)}/{list(e.mu)}) = {e.value}  x{e.multiplicity}")

# The gap comes from lam = [n-1, 1], mu = [1, 1]: 1 - eig = (n + 2)/n^2.
gap = 1 - s.nontrivial()[0].value
print("spectral gap", gap, "vs (n + 2)/n^2 =", Fraction(5 + 2, 25))

# Distinct values with their total multiplicity.
by_value = Counter()
for e in s.nonzero():
    by_value[e.value] += e.multiplicity
print("distinct values:", len(by_value), "largest multiplicity:", max(by_value.values()))

# A deck with repeated cards sees only lam dominating the card-type counts,
# weighted by Kostka numbers.
w = spectrum_with_evaluation([2, 2, 1])
print(f"\ntypes [2,2,1]: {w.num_states} arrangements")
for e in w.nonzero():
    print(f"  eig({list(e.lam)}/{list(e.mu)}) = {e.value}  x{e.multiplicity}")

# The squared l2 distance after t steps is sum mult * eig^(2t).
for t in (0, 5, 10, 20):
    print(f"t={t:>2}  l2^2 = {l2_bound_exact(s, t):.6g}")
