"""A tour of the bounds for triple packing numbers D(n, k, 3).

A 3-(n, k, 1) packing is a family of k-subsets of an n-set in which
every triple of points lies in at most one block; D(n, k, 3) is the
largest possible number of blocks.  This script walks through the
upper-bound machinery: the Johnson bound, the residue trichotomy that
decides how close to it D(n, k, 3) can get, and the closed formula
known for k = 4.
"""

from triplepack.oracle import max_packing
from triplepack.params import (
    classify,
    j_prime,
    johnson_bound,
    packing_number_k4,
    upper_bound,
)

# ---------------------------------------------------------------------
# The Johnson bound: iterate n/k * (n-1)/(k-1) * (n-2)/(k-2) with
# floors at every level.  Everything else in the package is about how
# far below this ceiling the true packing number sits.
# ---------------------------------------------------------------------
print("Johnson bound J(n, 5, 3) for small n:")
for n in range(7, 15):
    print(f"  J({n}, 5, 3) = {johnson_bound(n, 5, 3)}")

# ---------------------------------------------------------------------
# The trichotomy.  Everything is driven by residues of n - 2 modulo
# k - 2 and its relatives: r != 0 means J is (asymptotically) exact,
# the q-case loses exactly 3, and the p-case drops to the stronger
# ceiling J'.
# ---------------------------------------------------------------------
print("\nCase classification for k = 5:")
for n in range(8, 16):
    label, data = classify(n, 5)
    print(f"  n = {n:2d}: {label.value:<10}", end="")
    if data.r:
        print(f" (r = {data.r})")
    elif data.q_beta is not None:
        print(f" (q = {data.q_beta})")
    else:
        print(f" (p = {data.p})")

print("\nUpper bounds for k = 5 (note the drop in the q- and p-cases):")
for n in range(8, 16):
    j = johnson_bound(n, 5, 3)
    jp = j_prime(n, 5)
    print(f"  n = {n:2d}: J = {j:3d}  J' = {jp:3d}  upper = {upper_bound(n, 5):3d}")

# ---------------------------------------------------------------------
# For k = 4 the packing number is known exactly, for every n, by a
# two-branch closed formula.  The branch-and-bound oracle reproduces it
# from scratch at desk scale -- the package's ground truth.
# ---------------------------------------------------------------------
print("\nk = 4: closed formula vs exhaustive search:")
for n in range(4, 10):
    formula = packing_number_k4(n)
    rep = max_packing(n, 4, 3)
    marker = "ok" if rep.value == formula else "MISMATCH"
    print(f"  n = {n}: formula {formula:3d}  search {rep.value:3d}  [{marker}]")
