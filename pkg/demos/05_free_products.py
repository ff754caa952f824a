"""Free products and the laws they satisfy.

Cyclic flats of M [] N follow from those of M and N.  Transversality,
fundamentality and cotransversality hold for the product exactly when they
hold for both factors.
"""

from transmat import bitset as bs
from transmat.constructions import free_product, mk4, paper_p7, uniform
from transmat.cyclic import cyclic_flats
from transmat.fundamental import is_fundamental
from transmat.suite import check_free_product, free_product_zlattice_rule
from transmat.transversal import is_transversal

P = free_product(uniform(1, 2), uniform(1, 2))
print(f"U(1,2) [] U(1,2): rank {P.r}, bases {[bs.fmt(B) for B in P.bases()]}")

for name, M, N in (("U(2,3) [] rank-4 fixture", uniform(2, 3), paper_p7()),
                   ("M(K4) [] U(1,1)", mk4(), uniform(1, 1))):
    P = free_product(M, N)
    rule = free_product_zlattice_rule(M, N) == sorted(cyclic_flats(P).pairs())
    print(f"\n{name}: n={P.n}, r={P.r}, lattice rule holds: {rule}")
    print(f"  transversal {is_transversal(P).is_transversal}, "
          f"fundamental {is_fundamental(P).is_fundamental}")
    print(f"  all laws: {'ok' if not check_free_product(name, M, N) else 'FAILED'}")
