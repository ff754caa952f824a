"""Transversal matroids from set systems.

A set system presents the matroid whose independent sets are its partial
transversals.  Three rather different systems all present U(3,6).
"""

from transmat import bitset as bs
from transmat.constructions import figure1_presentation, uniform
from transmat.core import matroid_from_presentation

for label in "abc":
    A = figure1_presentation(label)
    M = matroid_from_presentation(A)
    print(f"({label}) columns {[bs.fmt(c) for c in A]}: rank {M.r}, "
          f"{len(M.bases())} bases, equals U(3,6): {M == uniform(3, 6)}")

# Restricting the columns to X presents the restriction M|X.
A = figure1_presentation("b")
X = bs.to_mask([0, 2, 3, 5])
lhs = matroid_from_presentation(A.restrict(X))
rhs = matroid_from_presentation(A).restrict(X)
print(f"\nrestriction to {bs.fmt(X)}: presented {lhs}, restricted {rhs}, equal: {lhs == rhs}")
