"""
Desarrangement tableaux and the RSW bijection
=============================================

The multiplicity of eig(lam/mu) counts desarrangement tableaux of shape mu:
standard tableaux whose first ascent is even. Sliding the entries of such a
tableau into the strip lam/mu, one cell at a time from left to right, yields a
standard tableau of shape lam, and every tableau of shape lam arises once.
"""

from r2r.partitions import horizontal_strip_subshapes, syt_count
from r2r.tableaux import (
    SkewTableau,
    StandardTableau,
    desarrangement_count,
    enumerate_desarrangements,
    is_desarrangement,
    jdt_slide,
    rsw_forward,
    rsw_inverse,
    smallest_ascent,
)

for rows in ([[1, 3], [2]], [[1, 2], [3]], [[1], [2], [3]], [[1], [2]]):
    t = StandardTableau(rows)
    print(rows, "first ascent", smallest_ascent(t), "desarrangement" if is_desarrangement(t) else "")

# A single jeu-de-taquin slide into an inner corner.
skew = SkewTableau([4, 3], [2], {(1, 3): 2, (1, 4): 5, (2, 1): 1, (2, 2): 3, (2, 3): 4})
print("\nslide into (1,2):", jdt_slide(skew, (1, 2)).to_json())
print("slide into (2,4):", jdt_slide(skew, (2, 4)).to_json())

# The forward map on a worked pair, then back again.
q = StandardTableau([[1, 3, 4], [2, 6, 7], [5]])
p = rsw_forward(q, [4, 3, 2])
print("\nforward:", q.to_json(), "->", p.to_json())
mu, back = rsw_inverse(p)
print("inverse:", p.to_json(), "->", list(mu), back.to_json())

# Counting both sides for lam = [4, 3, 2].
lam = [4, 3, 2]
left = sum(len(enumerate_desarrangements(mu)) for mu in horizontal_strip_subshapes(lam))
print(f"\nsum over strips of d^mu = {left}, d_lam = {syt_count(lam)}")
print("d^[k,1] for k = 1..6:", [desarrangement_count([k, 1]) for k in range(1, 7)])
print("d^mu for a big shape:", desarrangement_count([8, 6, 5, 3, 2, 1]))
