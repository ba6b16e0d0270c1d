"""
Simulating the shuffle
======================

Seeded simulation from the identity deck. Every chunk of 65536 trials gets its
own Philox stream, so a run is fixed by (n, t, trials, seed).
"""

from math import factorial, pi, sqrt

from r2r.montecarlo import mc_sample
from r2r.oracle import build_r2r_matrix, evolve_distribution, point_mass, tv_distance

n, trials, seed = 5, 200_000, 7
m = build_r2r_matrix(n)
print(f"{'t':>3} {'empirical TV':>13} {'exact TV':>10} {'P(identity)':>12}")
for t in (1, 3, 6, 10, 20):
    res = mc_sample(n, t, trials, seed)
    exact = evolve_distribution(m, point_mass(factorial(n)), t)
    print(f"{t:>3} {tv_distance(res.distribution()):13.5f} {tv_distance(exact):10.5f} {res.summary['identity_fraction']:12.5f}")

# Once TV is small the empirical value is dominated by sampling noise: each
# cell is off by about sqrt(2p/(pi N)) in mean absolute value.
print("noise floor ~", round(0.5 * sqrt(2 * factorial(n) / (pi * trials)), 4))

# Larger decks only keep summary statistics.
big = mc_sample(10, 30, 50_000, seed)
print("\nn=10, t=30: mean fixed points", big.summary["mean_fixed_points"])
print("top card position", [round(x, 3) for x in big.summary["top_card_position"]])
