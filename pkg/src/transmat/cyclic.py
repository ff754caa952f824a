"""The lattice of cyclic flats and enumeration of its antichains, filters, ideals."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

import numpy as np

from . import bitset as bs
from .core import Matroid
from .errors import EnumerationLimitError, NotCyclicFlatError

DEFAULT_ENUM_LIMIT = 10**6


def cyclic_core(M: Matroid, S: int) -> int:
    """Union of the circuits of M contained in S."""
    bs.check_mask(S, M.n)
    r = M.ranks
    while True:
        rs = r[S]
        coloops = [e for e in bs.elements(S) if r[S & ~(1 << e)] < rs]
        if not coloops:
            return S
        S &= ~bs.to_mask(coloops)


def is_cyclic(M: Matroid, S: int) -> bool:
    return cyclic_core(M, S) == S


@dataclass(frozen=True, eq=False)
class ZLattice:
    """Cyclic flats of ``matroid`` sorted by (cardinality, bitmask).

    ``leq[i, j]`` is True iff ``flats[i]`` is contained in ``flats[j]``.
    """

    matroid: Matroid
    flats: tuple[int, ...]
    ranks: tuple[int, ...]
    leq: np.ndarray = field(repr=False)

    def __len__(self) -> int:
        return len(self.flats)

    def __iter__(self):
        return iter(self.flats)

    def __contains__(self, F: int) -> bool:
        return F in self._index

    @property
    def _index(self) -> dict[int, int]:
        idx = self.__dict__.get("_index_cache")
        if idx is None:
            idx = {F: i for i, F in enumerate(self.flats)}
            object.__setattr__(self, "_index_cache", idx)
        return idx

    def index(self, F: int) -> int:
        try:
            return self._index[F]
        except KeyError:
            raise NotCyclicFlatError(f"{bs.fmt(F)} is not a cyclic flat") from None

    def rank_of(self, F: int) -> int:
        return self.ranks[self.index(F)]

    @property
    def bottom(self) -> int:
        return self.flats[0]

    @property
    def top(self) -> int:
        return self.flats[-1]

    def pairs(self) -> list[tuple[int, int]]:
        return [(F, r) for F, r in zip(self.flats, self.ranks)]


def cyclic_flats(M: Matroid) -> ZLattice:
    n = M.n
    r = M.ranks
    masks = bs.all_masks(n)
    ok = np.ones(1 << n, dtype=bool)
    for e in range(n):
        bit = 1 << e
        has = (masks & bit) != 0
        # flat: adding any outside element raises the rank
        ok &= has | (r[masks | bit] > r)
        # cyclic: removing any inside element keeps the rank
        ok &= ~has | (r[masks & ~bit] == r)
    found = sorted((int(F) for F in np.flatnonzero(ok)), key=lambda F: (bs.popcount(F), F))
    arr = np.array(found, dtype=np.int64)
    leq = (arr[:, None] & ~arr[None, :]) == 0
    leq.setflags(write=False)
    return ZLattice(M, tuple(found), tuple(int(r[F]) for F in found), leq)


def _require_members(Z: ZLattice, *flats: int) -> None:
    for F in flats:
        Z.index(F)


def z_join(Z: ZLattice, F: int, G: int) -> int:
    _require_members(Z, F, G)
    return Z.matroid.closure(F | G)


def z_meet(Z: ZLattice, F: int, G: int) -> int:
    _require_members(Z, F, G)
    return cyclic_core(Z.matroid, F & G)


# -- family enumeration ------------------------------------------------------

def _limited(it: Iterator[list[int]], limit: int, what: str) -> Iterator[list[int]]:
    for count, fam in enumerate(it):
        if count >= limit:
            raise EnumerationLimitError(limit, what)
        yield fam


def _antichain_indices(Z: ZLattice) -> Iterator[list[int]]:
    m = len(Z)
    comparable = Z.leq | Z.leq.T

    def extend(chosen: list[int], start: int):
        for j in range(start, m):
            if not any(comparable[i, j] for i in chosen):
                chosen.append(j)
                yield list(chosen)
                yield from extend(chosen, j + 1)
                chosen.pop()

    return extend([], 0)


def antichains(Z: ZLattice, *, include_empty: bool = False,
               limit: int = DEFAULT_ENUM_LIMIT) -> Iterator[list[int]]:
    """Antichains of Z, each as a list of flats in lattice order."""
    def gen():
        if include_empty:
            yield []
        for idx in _antichain_indices(Z):
            yield [Z.flats[i] for i in idx]
    return _limited(gen(), limit, "antichains")


def filters(Z: ZLattice, *, include_empty: bool = False,
            limit: int = DEFAULT_ENUM_LIMIT) -> Iterator[list[int]]:
    """Up-closed families of Z, one per antichain of minimal members."""
    def gen():
        if include_empty:
            yield []
        for idx in _antichain_indices(Z):
            up = Z.leq[idx, :].any(axis=0)
            yield [Z.flats[j] for j in np.flatnonzero(up)]
    return _limited(gen(), limit, "filters")


def ideals(Z: ZLattice, *, include_empty: bool = False,
           limit: int = DEFAULT_ENUM_LIMIT) -> Iterator[list[int]]:
    """Down-closed families of Z, one per antichain of maximal members."""
    def gen():
        if include_empty:
            yield []
        for idx in _antichain_indices(Z):
            down = Z.leq[:, idx].any(axis=1)
            yield [Z.flats[j] for j in np.flatnonzero(down)]
    return _limited(gen(), limit, "ideals")


def subfamilies(Z: ZLattice, *, include_empty: bool = False,
                limit: int = DEFAULT_ENUM_LIMIT) -> Iterator[list[int]]:
    """Every subset of Z, by increasing size."""
    def gen():
        if include_empty:
            yield []
        for k in range(1, len(Z) + 1):
            for combo in combinations(Z.flats, k):
                yield list(combo)
    return _limited(gen(), limit, "subsets")


FAMILY_KINDS = {
    "antichains": antichains,
    "filters": filters,
    "ideals": ideals,
    "subsets": subfamilies,
}


def families(Z: ZLattice, kind: str, **kw) -> Iterator[list[int]]:
    try:
        gen = FAMILY_KINDS[kind]
    except KeyError:
        raise ValueError(f"unknown family kind {kind!r}; expected one of {sorted(FAMILY_KINDS)}") from None
    return gen(Z, **kw)
