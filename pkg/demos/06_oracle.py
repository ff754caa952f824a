"""Brute-force cross-checks.

The oracle searches every multiset of columns for a presentation, using
nothing but the definition.  On every matroid with at most five elements it
agrees with the beta test; those are all transversal, so M(K4) and the rank-2
matroid with three parallel pairs supply the negatives.
"""

import time

from transmat.constructions import labelled_matroids, mk4, parallel_pairs
from transmat.oracle import oracle_is_transversal
from transmat.transversal import is_transversal

start = time.perf_counter()
total = disagree = 0
for n in range(6):
    for M in labelled_matroids(n):
        total += 1
        disagree += oracle_is_transversal(M) != is_transversal(M).is_transversal
print(f"{total} labelled matroids on <= 5 elements, {disagree} disagreements, "
      f"{time.perf_counter() - start:.1f}s")

for name, M in (("M(K4)", mk4()), ("three parallel pairs", parallel_pairs())):
    print(f"{name}: oracle {oracle_is_transversal(M)}, beta test {is_transversal(M).is_transversal}")
