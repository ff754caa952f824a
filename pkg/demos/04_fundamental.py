"""Fundamental transversal matroids, decided six independent ways.

The six criteria must agree on every input.  When they say yes the primary
check also returns a fundamental basis; when they say no it returns the
family of cyclic flats where the equality breaks.
"""

from transmat import bitset as bs
from transmat.constructions import CorpusSpec, build_corpus, paper_p7, uniform
from transmat.fundamental import all_methods, fundamental_extension, is_fundamental

for name, M in (("U(3,6)", uniform(3, 6)), ("rank-4 fixture", paper_p7())):
    v = is_fundamental(M)
    print(f"{name}: {all_methods(M)}")
    if v.is_fundamental:
        print(f"  fundamental basis {bs.fmt(v.basis_certificate)}")
    else:
        fam = [bs.fmt(F) for F in v.violation.family]
        print(f"  violated on {fam}: lhs {v.violation.lhs} vs rhs {v.violation.rhs}")

# Giving each column without a private element a fresh one makes M fundamental.
M1, A = fundamental_extension(paper_p7())
print(f"\nextension adds {M1.n - 7} elements and is fundamental: {is_fundamental(M1).is_fundamental}")

corpus = build_corpus(CorpusSpec(max_n=7, random_count=40))
agree = sum(len(set(all_methods(it.matroid).values())) == 1 for it in corpus)
print(f"six-way agreement on {agree}/{len(corpus)} corpus matroids")
