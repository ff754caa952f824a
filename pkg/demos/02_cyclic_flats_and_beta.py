"""Cyclic flats, and the beta and alpha functions computed over them.

On the rank-4 fixture (two non-spanning circuits {0,1,2,3} and {3,4,5,6}) the
lattice of cyclic flats has four members and beta is 2, 1, 1, 0 on them.
"""

from transmat import bitset as bs
from transmat.constructions import mk4, paper_p7
from transmat.cyclic import antichains, cyclic_flats, filters
from transmat.masonfn import alpha, beta

M = paper_p7()
Z = cyclic_flats(M)
bt, at = beta(M, Z), alpha(M, Z)
print("cyclic flat       rank  beta  alpha")
for F, rF in Z.pairs():
    print(f"{bs.fmt(F):17} {rF:4} {bt[F]:5} {at[F]:6}")
print(f"sum of beta over Z = {sum(bt[F] for F in Z)} = r(M) = {M.r}")

print("\nnonempty antichains:", [[bs.fmt(F) for F in fam] for fam in antichains(Z)])
print("nonempty filters:   ", [[bs.fmt(F) for F in fam] for fam in filters(Z)])

# M(K4): four triangles each carry beta 1, which forces beta(empty) = 3 - 4 = -1.
K = mk4()
print(f"\nM(K4): beta on cyclic flats {beta(K).on_flats()}")
