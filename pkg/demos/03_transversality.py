"""Deciding transversality with a certificate either way.

A positive answer comes with the maximal presentation, a negative one with a
subset on which beta is negative.
"""

from transmat import bitset as bs
from transmat.constructions import figure1_presentation, mk4, paper_p7, uniform
from transmat.core import matroid_from_presentation
from transmat.transversal import complete_presentation, delta_faces, is_transversal

for name, M in (("U(3,6)", uniform(3, 6)), ("rank-4 fixture", paper_p7()), ("M(K4)", mk4())):
    v = is_transversal(M)
    if v.is_transversal:
        cols = [bs.fmt(c) for c in v.presentation]
        back = matroid_from_presentation(v.presentation) == M
        print(f"{name}: transversal, maximal presentation {cols}, presents M again: {back}")
    else:
        print(f"{name}: not transversal, beta({bs.fmt(v.witness)}) = {v.witness_beta}")

# Growing each column by the coloops of its deletion reaches the maximal presentation.
small = figure1_presentation("c")
grown = complete_presentation(uniform(3, 6), small)
print(f"\ncompleting {[bs.fmt(c) for c in small]} gives {[bs.fmt(c) for c in grown]}")

# Faces: element 3 of the rank-4 fixture sits in two columns, yet the cyclic
# flats through it meet only in {3}, of rank 1.
faces = delta_faces(is_transversal(paper_p7()).presentation)
print(f"columns containing element 3: {sorted(faces[3])}")
