"""Matroid kernel: rank tables, constructors, minors and duality.

A :class:`Matroid` on ground set ``{0, ..., n-1}`` is stored as its full rank
table, an integer array of length ``2**n`` indexed by subset bitmask.  Every
query is then a table lookup or a vectorised pass over the table.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from . import bitset as bs
from .errors import AxiomError, GroundSetCapError, MatroidError

DEFAULT_MAX_N = 20

# Hall-condition rank computation packs column incidences into int64 words.
_MAX_HALL_COLUMNS = 62


def _check_n(n: int, max_n: int | None) -> None:
    if n < 0:
        raise MatroidError(f"ground set size n={n} is negative")
    cap = DEFAULT_MAX_N if max_n is None else max_n
    if n > cap:
        raise GroundSetCapError(f"ground set size n={n} exceeds cap max_n={cap}")


def _rank_from_independent(indep: np.ndarray, n: int) -> np.ndarray:
    """r(X) = max |I| over independent I contained in X."""
    out = np.where(indep, bs.cardinalities(n), 0).astype(np.int64)
    for e in range(n):
        v = out.reshape(-1, 2, 1 << e)
        np.maximum(v[:, 1, :], v[:, 0, :], out=v[:, 1, :])
    return out


def rank_axiom_violation(table: np.ndarray, n: int) -> str | None:
    """Describe the first rank-axiom failure of ``table``, or return None."""
    if table.shape != (1 << n,):
        return f"rank table has length {table.shape[0] if table.ndim == 1 else table.shape}, expected {1 << n}"
    if table[0] != 0:
        return f"r(empty) = {table[0]}, expected 0"
    masks = bs.all_masks(n)
    for e in range(n):
        bit = 1 << e
        base = masks[(masks & bit) == 0]
        step = table[base | bit] - table[base]
        bad = np.flatnonzero((step < 0) | (step > 1))
        if bad.size:
            x = int(base[bad[0]])
            return f"unit increase fails: r({bs.fmt(x | bit)}) - r({bs.fmt(x)}) = {int(step[bad[0]])}"
    for e in range(n):
        for f in range(e + 1, n):
            be, bf = 1 << e, 1 << f
            base = masks[(masks & (be | bf)) == 0]
            lhs = table[base | be] + table[base | bf]
            rhs = table[base | be | bf] + table[base]
            bad = np.flatnonzero(lhs < rhs)
            if bad.size:
                x = int(base[bad[0]])
                return (f"submodularity fails at X={bs.fmt(x)}, e={e}, f={f}: "
                        f"{int(lhs[bad[0]])} < {int(rhs[bad[0]])}")
    return None


class Matroid:
    """Immutable matroid given by its rank table.

    ``Matroid(n, table)`` checks the rank axioms unless ``validate=False``.
    """

    __slots__ = ("n", "_table", "_hash")

    def __init__(self, n: int, rank_table, *, validate: bool = True, max_n: int | None = None):
        _check_n(n, max_n)
        table = np.array(rank_table, dtype=np.int64)
        if table.shape != (1 << n,):
            raise AxiomError(f"rank table must have length 2**n = {1 << n}, got {table.size}")
        if validate:
            msg = rank_axiom_violation(table, n)
            if msg:
                raise AxiomError(msg)
        table.setflags(write=False)
        self.n = n
        self._table = table
        self._hash = None

    # -- basic data --------------------------------------------------------
    @property
    def ranks(self) -> np.ndarray:
        """Read-only rank table indexed by subset bitmask."""
        return self._table

    @property
    def ground(self) -> int:
        return (1 << self.n) - 1

    @property
    def r(self) -> int:
        """Rank of the whole matroid."""
        return int(self._table[-1])

    def rank(self, X: int) -> int:
        return int(self._table[bs.check_mask(X, self.n)])

    def nullity(self, X: int) -> int:
        return bs.popcount(X) - self.rank(X)

    def is_independent(self, X: int) -> bool:
        return self.rank(X) == bs.popcount(X)

    def is_basis(self, X: int) -> bool:
        return bs.popcount(X) == self.r and self.rank(X) == self.r

    def closure(self, X: int) -> int:
        rx = self.rank(X)
        out = X
        for e in range(self.n):
            bit = 1 << e
            if not X & bit and self._table[X | bit] == rx:
                out |= bit
        return out

    def is_flat(self, X: int) -> bool:
        return self.closure(X) == X

    def loops(self) -> int:
        return self.closure(0)

    def coloops(self) -> int:
        E, rE = self.ground, self.r
        return bs.to_mask(e for e in range(self.n) if self._table[E & ~(1 << e)] == rE - 1)

    # -- enumerations --------------------------------------------------------
    def bases(self) -> list[int]:
        """Bases in lexicographic order of their sorted element tuples."""
        card = bs.cardinalities(self.n)
        found = np.flatnonzero((card == self.r) & (self._table == self.r))
        return sorted((int(b) for b in found), key=bs.elements)

    def circuits(self) -> list[int]:
        """Minimal dependent sets, ordered by (size, bitmask)."""
        n = self.n
        card = bs.cardinalities(n)
        dep = self._table < card
        masks = bs.all_masks(n)
        has_dep_child = np.zeros_like(dep)
        for e in range(n):
            bit = 1 << e
            with_e = (masks & bit) != 0
            has_dep_child |= with_e & dep[masks & ~bit]
        found = np.flatnonzero(dep & ~has_dep_child)
        return sorted((int(c) for c in found), key=lambda c: (bs.popcount(c), c))

    def flats(self) -> list[int]:
        """All flats ordered by (size, bitmask)."""
        n = self.n
        masks = bs.all_masks(n)
        is_flat = np.ones(1 << n, dtype=bool)
        for e in range(n):
            bit = 1 << e
            without = (masks & bit) == 0
            is_flat &= ~without | (self._table[masks | bit] > self._table)
        found = np.flatnonzero(is_flat)
        return sorted((int(f) for f in found), key=lambda f: (bs.popcount(f), f))

    # -- derived matroids ------------------------------------------------------
    def dual(self) -> "Matroid":
        n = self.n
        masks = bs.all_masks(n)
        table = bs.cardinalities(n) - self.r + self._table[self.ground & ~masks]
        return Matroid(n, table, validate=False)

    def restrict(self, X: int) -> "Matroid":
        """M|X re-indexed to 0..|X|-1 preserving element order."""
        bs.check_mask(X, self.n)
        return Matroid(bs.popcount(X), self._table[_scatter(X)], validate=False)

    def delete(self, X: int) -> "Matroid":
        return self.restrict(self.ground & ~X)

    def contract(self, X: int) -> "Matroid":
        """M/X on E-X re-indexed preserving element order."""
        bs.check_mask(X, self.n)
        rest = self.ground & ~X
        idx = _scatter(rest)
        return Matroid(bs.popcount(rest), self._table[idx | X] - self._table[X], validate=False)

    def relabel(self, perm: Sequence[int]) -> "Matroid":
        """Matroid with element i renamed to perm[i]."""
        if sorted(perm) != list(range(self.n)):
            raise MatroidError(f"{list(perm)} is not a permutation of 0..{self.n - 1}")
        local = bs.all_masks(self.n)
        image = np.zeros(1 << self.n, dtype=np.int64)
        for i, p in enumerate(perm):
            image |= ((local >> i) & 1) << p
        table = np.empty(1 << self.n, dtype=np.int64)
        table[image] = self._table
        return Matroid(self.n, table, validate=False)

    # -- value semantics -------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.n == other.n and np.array_equal(self._table, other._table)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self._table.tobytes()))
        return self._hash

    def __repr__(self) -> str:
        return f"Matroid(n={self.n}, r={self.r})"


def element_map(X: int) -> dict[int, int]:
    """Order-preserving map from the elements of X to 0..|X|-1."""
    return {e: i for i, e in enumerate(bs.elements(X))}


def _scatter(X: int) -> np.ndarray:
    """Array mapping each bitmask over 0..|X|-1 to the matching submask of X."""
    els = bs.elements(X)
    k = len(els)
    local = bs.all_masks(k)
    out = np.zeros(1 << k, dtype=np.int64)
    for i, e in enumerate(els):
        out |= ((local >> i) & 1) << e
    return out


def matroids_equal(M1: Matroid, M2: Matroid) -> bool:
    if M1.n != M2.n:
        raise MatroidError(f"ground sets differ in size: {M1.n} vs {M2.n}")
    return M1 == M2


# -- constructors ----------------------------------------------------------------

def matroid_from_rank_table(n: int, table: Sequence[int], *, validate: bool = True,
                            max_n: int | None = None) -> Matroid:
    return Matroid(n, table, validate=validate, max_n=max_n)


def matroid_from_bases(n: int, bases: Iterable[int], *, validate: bool = True,
                       max_n: int | None = None) -> Matroid:
    _check_n(n, max_n)
    bases = sorted({bs.check_mask(b, n) for b in bases})
    if not bases:
        raise AxiomError("a matroid needs at least one basis")
    sizes = {bs.popcount(b) for b in bases}
    if len(sizes) > 1:
        raise AxiomError(f"bases have unequal sizes {sorted(sizes)}")
    flag = np.zeros(1 << n, dtype=bool)
    flag[bases] = True
    table = _rank_from_independent(bs.down_any(flag, n), n)
    if validate and rank_axiom_violation(table, n):
        raise AxiomError(_exchange_violation(bases))
    return Matroid(n, table, validate=False, max_n=max_n)


def _exchange_violation(bases: list[int]) -> str:
    family = set(bases)
    for b1 in bases:
        for b2 in bases:
            for x in bs.elements(b1 & ~b2):
                if not any((b1 & ~(1 << x)) | (1 << y) in family for y in bs.elements(b2 & ~b1)):
                    return (f"basis exchange fails: B1={bs.fmt(b1)}, B2={bs.fmt(b2)}, x={x}")
    return "basis family does not satisfy the rank axioms"


def matroid_from_circuits(n: int, circuits: Iterable[int], *, validate: bool = True,
                          max_n: int | None = None) -> Matroid:
    _check_n(n, max_n)
    circuits = sorted({bs.check_mask(c, n) for c in circuits})
    if 0 in circuits:
        raise AxiomError("the empty set cannot be a circuit")
    for c1 in circuits:
        for c2 in circuits:
            if c1 != c2 and bs.is_subset(c1, c2):
                raise AxiomError(f"circuit {bs.fmt(c1)} is contained in circuit {bs.fmt(c2)}")
    flag = np.zeros(1 << n, dtype=bool)
    flag[circuits] = True
    table = _rank_from_independent(~bs.up_any(flag, n), n)
    if validate and rank_axiom_violation(table, n):
        raise AxiomError(_elimination_violation(circuits))
    return Matroid(n, table, validate=False, max_n=max_n)


def _elimination_violation(circuits: list[int]) -> str:
    for i, c1 in enumerate(circuits):
        for c2 in circuits[i + 1:]:
            for e in bs.elements(c1 & c2):
                union = (c1 | c2) & ~(1 << e)
                if not any(bs.is_subset(c3, union) for c3 in circuits):
                    return (f"circuit elimination fails: C1={bs.fmt(c1)}, C2={bs.fmt(c2)}, e={e}")
    return "circuit family does not satisfy the rank axioms"


@dataclass(frozen=True)
class SetSystem:
    """Multiset of subsets of {0..n-1}, stored in canonical form.

    Empty sets are dropped and the remaining sets are sorted by decreasing
    bitmask, so two systems are equal iff they are equal as multisets of
    nonempty sets.  Column ``i`` of the system is ``sets[i]``.
    """

    n: int
    sets: tuple[int, ...]

    def __post_init__(self):
        for s in self.sets:
            bs.check_mask(s, self.n)
        object.__setattr__(self, "sets", tuple(sorted((s for s in self.sets if s), reverse=True)))

    @classmethod
    def from_lists(cls, n: int, lists: Iterable[Iterable[int]]) -> "SetSystem":
        return cls(n, tuple(bs.to_mask(s) for s in lists))

    def to_lists(self) -> list[list[int]]:
        return [bs.elements(s) for s in self.sets]

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def __getitem__(self, i: int) -> int:
        return self.sets[i]

    def restrict(self, X: int) -> "SetSystem":
        """(A_1 & X, ..., A_r & X) re-indexed onto 0..|X|-1."""
        emap = element_map(X)
        return SetSystem(len(emap), tuple(
            bs.to_mask(emap[e] for e in bs.elements(s & X)) for s in self.sets))

    def incidence(self) -> list[int]:
        """For each element, the bitmask of columns containing it."""
        inc = [0] * self.n
        for k, s in enumerate(self.sets):
            for e in bs.elements(s):
                inc[e] |= 1 << k
        return inc


def max_matching(X: int, sets: Sequence[int]) -> int:
    """Size of a maximum matching of the elements of X into ``sets``.

    Element x may use set k iff x in sets[k].  Uses scipy's Hopcroft-Karp.
    """
    els = bs.elements(X)
    rows = [i for i, x in enumerate(els) for s in sets if s >> x & 1]
    cols = [k for x in els for k, s in enumerate(sets) if s >> x & 1]
    if not rows:
        return 0
    graph = csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)),
                       shape=(len(els), len(sets)))
    return int((maximum_bipartite_matching(graph, perm_type="column") >= 0).sum())


def matroid_from_presentation(system: SetSystem, *, validate: bool = True,
                              max_n: int | None = None) -> Matroid:
    """Transversal matroid M[A]: r(X) is the maximum matching of X into A."""
    n = system.n
    _check_n(n, max_n)
    # a set repeated more than n times contributes no further matchings
    trimmed: list[int] = []
    for s in sorted(set(system.sets), reverse=True):
        trimmed.extend([s] * min(system.sets.count(s), n))
    if len(trimmed) > _MAX_HALL_COLUMNS:
        table = [max_matching(X, trimmed) for X in range(1 << n)]
        return Matroid(n, table, validate=validate, max_n=max_n)
    inc = SetSystem(n, tuple(trimmed)).incidence()
    nbr = np.zeros(1 << n, dtype=np.int64)
    for e in range(n):
        nbr[1 << e] = inc[e]
    for e in range(n):
        v = nbr.reshape(-1, 2, 1 << e)
        v[:, 1, :] |= v[:, 0, :]
    hall = np.bitwise_count(nbr) >= bs.cardinalities(n)
    table = _rank_from_independent(bs.down_all(hall, n), n)
    return Matroid(n, table, validate=validate, max_n=max_n)
