"""Transversal and fundamental transversal matroids via cyclic flats."""

from .constructions import free_product, named, paper_p7, mk4, random_transversal, uniform
from .core import (Matroid, SetSystem, matroid_from_bases, matroid_from_circuits,
                   matroid_from_presentation, matroid_from_rank_table, matroids_equal)
from .cyclic import ZLattice, antichains, cyclic_flats, filters, ideals
from .errors import MatroidError, NotTransversalError
from .fundamental import fundamental_bases, fundamental_extension, is_fundamental
from .masonfn import alpha, beta, rhs_inclusion_exclusion
from .transversal import (complete_presentation, delta_faces, is_transversal,
                          maximal_presentation)

__version__ = "0.1.0"

__all__ = [
    "Matroid", "SetSystem", "ZLattice", "MatroidError", "NotTransversalError",
    "matroid_from_bases", "matroid_from_circuits", "matroid_from_presentation",
    "matroid_from_rank_table", "matroids_equal",
    "cyclic_flats", "antichains", "filters", "ideals",
    "beta", "alpha", "rhs_inclusion_exclusion",
    "is_transversal", "maximal_presentation", "complete_presentation", "delta_faces",
    "is_fundamental", "fundamental_bases", "fundamental_extension",
    "free_product", "named", "uniform", "mk4", "paper_p7", "random_transversal",
]
