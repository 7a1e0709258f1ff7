"""
Completing the interlacing of two Jacobi zero sets
==================================================

P_n^(a,b) and P_{n+1}^(a+1,b+1) do not interlace in general. Two extra points
E1 <= E2, the zeros of an explicit quadratic, fill the gaps.
"""

# %%
import numpy as np

from interlacing import Jacobi, classify, zeros

fam = Jacobi(6.0, 5.0)
n = 6

p = zeros(fam.recurrence(n), n)
g = zeros(fam.shifted().recurrence(n + 1), n + 1)
ep = fam.extra_points(n)

print("z (degree 6):", np.round(p.array, 6))
print("y (degree 7):", np.round(g.array, 6))
print("E1, E2      :", np.round(ep.as_tuple(), 6))

# %%
# Here both points sit outside the extreme zeros of G, so G already
# interlaces P on its own and the two-point chain holds as well.
rep = classify(fam.variant, p, g, ep.e1, ep.e2)
print(rep.verdict.value, rep.statements)
for name, ok in rep.chains.items():
    print(f"  {name:24s} {ok}")

# %%
# Merging the extra points into z gives n+2 points that strictly
# interlace the n+1 zeros of G.
merged = np.sort(np.r_[p.array, ep.e1, ep.e2])
print(np.all(merged[:-1] < g.array) and np.all(g.array < merged[1:]))
