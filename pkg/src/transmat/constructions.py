"""Free products, named fixtures and corpus generation."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations, product

import numpy as np

from . import bitset as bs
from .core import (Matroid, SetSystem, _check_n, matroid_from_bases, matroid_from_circuits,
                   matroid_from_presentation)
from .errors import AxiomError, MatroidError


def free_product(M: Matroid, N: Matroid, *, max_n: int | None = None) -> Matroid:
    """M [] N on E(M) + E(N); elements of N are shifted to m..m+k-1.

    Bases are the sets B of size r(M)+r(N) with B & E(M) independent in M and
    B & E(N) spanning in N.
    """
    m, k = M.n, N.n
    _check_n(m + k, max_n)
    masks = bs.all_masks(m + k)
    low = masks & ((1 << m) - 1)
    high = masks >> m
    card = bs.cardinalities(m + k)
    ok = ((card == M.r + N.r)
          & (M.ranks[low] == bs.cardinalities(m)[low])
          & (N.ranks[high] == N.r))
    return matroid_from_bases(m + k, (int(b) for b in np.flatnonzero(ok)), validate=False,
                              max_n=max_n)


# -- fixtures ----------------------------------------------------------------------

def uniform(r: int, n: int) -> Matroid:
    if not 0 <= r <= n:
        raise MatroidError(f"uniform matroid needs 0 <= r <= n, got r={r}, n={n}")
    return Matroid(n, np.minimum(bs.cardinalities(n), r), validate=False)


def free(n: int) -> Matroid:
    return uniform(n, n)


def rank0(n: int) -> Matroid:
    return uniform(0, n)


K4_EDGES = tuple(combinations(range(4), 2))


def mk4_circuits() -> list[int]:
    """Triangles and 4-cycles of K4 as edge-index bitmasks."""
    index = {e: i for i, e in enumerate(K4_EDGES)}

    def edges_of(cycle):
        return bs.to_mask(index[tuple(sorted((cycle[i], cycle[(i + 1) % len(cycle)])))]
                          for i in range(len(cycle)))

    tri = [edges_of(t) for t in combinations(range(4), 3)]
    quad = {edges_of((0,) + p) for p in permutations((1, 2, 3))}
    return tri + sorted(quad)


def mk4() -> Matroid:
    return matroid_from_circuits(6, mk4_circuits())


P7_F1 = 0b0001111
P7_F2 = 0b1111000


def paper_p7() -> Matroid:
    """Rank 4 on 7 elements whose only non-spanning circuits are {0,1,2,3}, {3,4,5,6}."""
    fives = [bs.to_mask(c) for c in combinations(range(7), 5)]
    spanning = [c for c in fives if not bs.is_subset(P7_F1, c) and not bs.is_subset(P7_F2, c)]
    return matroid_from_circuits(7, [P7_F1, P7_F2] + spanning)


def parallel_pairs() -> Matroid:
    """Rank 2 on 6 elements with three parallel classes {0,1}, {2,3}, {4,5}."""
    pairs = [(0, 1), (2, 3), (4, 5)]
    triples = [bs.to_mask(t) for t in product(*pairs)]
    return matroid_from_circuits(6, [bs.to_mask(p) for p in pairs] + triples)


FIGURE1 = {
    "a": [[1, 2, 3, 4, 5, 6]] * 3,
    "b": [[1, 2, 5, 6], [1, 2, 3, 4], [3, 4, 5, 6]],
    "c": [[1, 4, 5, 6], [2, 4, 5, 6], [3, 4, 5, 6]],
}


def figure1_presentation(label: str) -> SetSystem:
    """One of the three presentations of U(3,6), with elements 1..6 shifted to 0..5."""
    return SetSystem.from_lists(6, [[e - 1 for e in s] for s in FIGURE1[label]])


NAMED = {
    "uniform": uniform,
    "mk4": mk4,
    "paper_p7": paper_p7,
    "free": free,
    "rank0": rank0,
    "parallel_pairs": parallel_pairs,
}


def named(name: str, *args: int) -> Matroid:
    try:
        make = NAMED[name]
    except KeyError:
        raise MatroidError(f"unknown fixture {name!r}; expected one of {sorted(NAMED)}") from None
    return make(*args)


# -- random and systematic generation ------------------------------------------------

def random_transversal(n: int, r: int, seed: int) -> tuple[SetSystem, Matroid]:
    """r uniformly random subsets of {0..n-1} and the matroid they present."""
    _check_n(n, None)
    rng = np.random.default_rng(seed)
    cols = tuple(int(c) for c in rng.integers(0, 1 << n, size=r))
    A = SetSystem(n, cols)
    return A, matroid_from_presentation(A)


def random_overlap(n: int, seed: int) -> tuple[SetSystem, Matroid]:
    """Transversal matroid with two dependent blocks F1, F2 meeting in few elements.

    Columns are ``a`` copies of E plus complements of F1 and F2, with ``a`` larger
    than |F1 & F2|; such systems are usually not fundamental.  Needs n >= 7.
    """
    if n < 7:
        raise MatroidError(f"random_overlap needs n >= 7, got n={n}")
    _check_n(n, None)
    rng = np.random.default_rng(seed)
    m = int(rng.integers(1, (n - 6) // 2 + 2))
    a = m + 1
    s1 = int(rng.integers(3, n - m - 2))
    perm = [int(e) for e in rng.permutation(n)]
    F1 = bs.to_mask(perm[:m + s1])
    F2 = bs.to_mask(perm[:m] + perm[m + s1:])
    E = bs.full(n)
    b = int(rng.integers(1, bs.popcount(F2) - a))
    c = int(rng.integers(1, bs.popcount(F1) - a))
    A = SetSystem(n, (E,) * a + (E & ~F1,) * b + (E & ~F2,) * c)
    return A, matroid_from_presentation(A)


@lru_cache(maxsize=None)
def _relabellings(n: int) -> np.ndarray:
    """Row p maps each bitmask to its image under the p-th permutation."""
    local = bs.all_masks(n)
    perms = list(permutations(range(n)))
    out = np.zeros((len(perms), 1 << n), dtype=np.int64)
    for row, perm in enumerate(perms):
        for i, p in enumerate(perm):
            out[row] |= ((local >> i) & 1) << p
    return out


def canonical_form(M: Matroid) -> bytes:
    """Lexicographically least rank table over all relabellings of the ground set."""
    tables = M.ranks[_relabellings(M.n)].astype(np.int8)
    order = np.lexsort(tables.T[::-1])
    return tables[order[0]].tobytes()


@lru_cache(maxsize=None)
def labelled_matroids(n: int) -> tuple[Matroid, ...]:
    """Every matroid on the ground set {0..n-1}, by trying every family of equal-size sets."""
    if n > 5:
        raise MatroidError("exhaustive matroid catalog is limited to n <= 5")
    out = []
    for r in range(n + 1):
        candidates = [bs.to_mask(c) for c in combinations(range(n), r)]
        for pick in range(1, 1 << len(candidates)):
            family = [b for k, b in enumerate(candidates) if pick >> k & 1]
            try:
                out.append(matroid_from_bases(n, family))
            except AxiomError:
                continue
    return tuple(out)


@lru_cache(maxsize=None)
def all_matroids(n: int) -> tuple[Matroid, ...]:
    """One representative of every isomorphism class of matroids on n elements."""
    seen: dict[bytes, Matroid] = {}
    for M in labelled_matroids(n):
        seen.setdefault(canonical_form(M), M)
    return tuple(seen[k] for k in sorted(seen))


# -- corpus ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CorpusSpec:
    seed: int = 0
    max_n: int = 8
    random_count: int = 60
    random_n: tuple[int, int] = (2, 8)
    free_product_pairs: int = 30
    free_product_max_n: int = 8
    catalog_max_n: int = 5
    minors_per_matroid: int = 1
    extensions: bool = True
    overlap_count: int = 20
    compounds: bool = True  # free products of the negative fixtures with tiny matroids
    labelled_max_n: int = -1  # every labelled matroid up to this size
    dedupe: bool = True


@dataclass(frozen=True)
class CorpusItem:
    label: str
    matroid: Matroid = field(repr=False)
    presentation: SetSystem | None = field(default=None, repr=False)


def fixtures() -> list[CorpusItem]:
    items = [
        CorpusItem("uniform(3,6)", uniform(3, 6), figure1_presentation("a")),
        CorpusItem("uniform(2,4)", uniform(2, 4)),
        CorpusItem("uniform(1,3)", uniform(1, 3)),
        CorpusItem("uniform(2,3)", uniform(2, 3)),
        CorpusItem("mk4", mk4()),
        CorpusItem("paper_p7", paper_p7()),
        CorpusItem("parallel_pairs", parallel_pairs()),
        CorpusItem("free(3)", free(3)),
        CorpusItem("rank0(2)", rank0(2)),
        CorpusItem("free(0)", free(0)),
    ]
    return items


def build_corpus(spec: CorpusSpec = CorpusSpec()) -> list[CorpusItem]:
    """Fixtures, duals, random transversal matroids, minors, free products, extensions.

    Items are deduplicated by rank table and filtered to n <= spec.max_n.
    Generation is reproducible from ``spec.seed``.
    """
    from .fundamental import fundamental_extension
    from .transversal import is_transversal

    rng = np.random.default_rng(spec.seed)
    items: list[CorpusItem] = []

    base = fixtures()
    items += base
    items += [CorpusItem(f"dual({it.label})", it.matroid.dual()) for it in base]

    lo, hi = spec.random_n
    randoms = []
    for _ in range(spec.random_count):
        n = int(rng.integers(lo, hi + 1))
        r = int(rng.integers(1, min(n, 4) + 1))
        seed = int(rng.integers(0, 2**31))
        A, M = random_transversal(n, r, seed)
        randoms.append(CorpusItem(f"random_transversal(n={n},r={r},seed={seed})", M, A))
    items += randoms
    items += [CorpusItem(f"dual({it.label})", it.matroid.dual()) for it in randoms]

    for it in randoms[: max(0, spec.random_count // 2)]:
        M = it.matroid
        for _ in range(spec.minors_per_matroid):
            if M.n < 2:
                break
            X = int(rng.integers(1, 1 << M.n)) & ~(1 << int(rng.integers(0, M.n)))
            items.append(CorpusItem(f"restrict({it.label},{bs.fmt(X)})", M.restrict(X)))
            items.append(CorpusItem(f"contract({it.label},{bs.fmt(X)})", M.contract(X)))

    lo_overlap = max(7, lo)
    for _ in range(spec.overlap_count if hi >= 7 else 0):
        n = int(rng.integers(lo_overlap, hi + 1))
        seed = int(rng.integers(0, 2**31))
        A, M = random_overlap(n, seed)
        items.append(CorpusItem(f"random_overlap(n={n},seed={seed})", M, A))

    if spec.compounds:
        tiny = [("uniform(0,1)", uniform(0, 1)), ("uniform(1,1)", uniform(1, 1)),
                ("uniform(1,2)", uniform(1, 2))]
        for it in base:
            if it.label not in ("mk4", "paper_p7", "parallel_pairs"):
                continue
            for name, T in tiny:
                if it.matroid.n + T.n <= spec.max_n:
                    items.append(CorpusItem(f"free_product({it.label},{name})",
                                            free_product(it.matroid, T)))
                    items.append(CorpusItem(f"free_product({name},{it.label})",
                                            free_product(T, it.matroid)))

    small = [it for it in items if 1 <= it.matroid.n <= spec.free_product_max_n // 2]
    for _ in range(spec.free_product_pairs if small else 0):
        a = small[int(rng.integers(0, len(small)))]
        b = small[int(rng.integers(0, len(small)))]
        if a.matroid.n + b.matroid.n <= spec.free_product_max_n:
            items.append(CorpusItem(f"free_product({a.label},{b.label})",
                                    free_product(a.matroid, b.matroid)))

    if spec.extensions:
        for it in base + randoms:
            M = it.matroid
            if M.n > spec.max_n - 2 or not is_transversal(M).is_transversal:
                continue
            ext, A = fundamental_extension(M)
            if ext.n <= spec.max_n and ext.n > M.n:
                items.append(CorpusItem(f"extension({it.label})", ext, A))

    for n in range(spec.catalog_max_n + 1):
        for i, M in enumerate(all_matroids(n)):
            items.append(CorpusItem(f"catalog(n={n},#{i})", M))

    for n in range(spec.labelled_max_n + 1):
        for i, M in enumerate(labelled_matroids(n)):
            items.append(CorpusItem(f"labelled(n={n},#{i})", M))

    out: list[CorpusItem] = []
    seen: set[Matroid] = set()
    for it in items:
        if it.matroid.n > spec.max_n:
            continue
        if not spec.dedupe:
            out.append(it)
        elif it.matroid not in seen:
            seen.add(it.matroid)
            out.append(it)
    return out
