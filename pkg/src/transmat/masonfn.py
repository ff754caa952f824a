"""The beta and alpha functions on all subsets, and inclusion-exclusion sums.

``beta(X) = r(M) - r(X) - sum(beta(Y) for cyclic flats Y properly containing X)``
``alpha(X) = |X| - r(X) - sum(alpha(F) for flats F properly contained in X)``

All arithmetic is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import bitset as bs
from .core import Matroid
from .cyclic import ZLattice, cyclic_flats
from .errors import FamilySizeError, InternalConsistencyError, MatroidError

IE_SIZE_CAP = 20
REDUCE_THRESHOLD = 8

UNIONS = "unions"
INTERSECTIONS = "intersections"


@dataclass(frozen=True, eq=False)
class BetaTable:
    values: np.ndarray
    zlattice: ZLattice

    def __getitem__(self, X: int) -> int:
        return int(self.values[X])

    def on_flats(self) -> dict[int, int]:
        return {F: int(self.values[F]) for F in self.zlattice.flats}

    def first_negative(self) -> int | None:
        """Smallest bitmask with a negative value, if any."""
        neg = np.flatnonzero(self.values < 0)
        return int(neg[0]) if neg.size else None


@dataclass(frozen=True, eq=False)
class AlphaTable:
    values: np.ndarray
    zlattice: ZLattice

    def __getitem__(self, X: int) -> int:
        return int(self.values[X])

    def on_flats(self) -> dict[int, int]:
        return {F: int(self.values[F]) for F in self.zlattice.flats}

    def first_negative(self) -> int | None:
        neg = np.flatnonzero(self.values < 0)
        return int(neg[0]) if neg.size else None


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def beta(M: Matroid, Z: ZLattice | None = None) -> BetaTable:
    Z = cyclic_flats(M) if Z is None else Z
    rM = M.r
    m = len(Z)
    on_z = np.zeros(m, dtype=np.int64)
    for i in range(m - 1, -1, -1):
        above = Z.leq[i].copy()
        above[i] = False
        on_z[i] = rM - Z.ranks[i] - on_z[above].sum()
    placed = np.zeros(1 << M.n, dtype=np.int64)
    placed[list(Z.flats)] = on_z
    values = rM - M.ranks - bs.superset_sum(placed, M.n)
    # superset_sum counts Y = X itself, which the recursion excludes
    values[list(Z.flats)] = on_z
    return BetaTable(_readonly(values), Z)


def _alpha_all_flats(M: Matroid) -> np.ndarray:
    n = M.n
    card = bs.cardinalities(n)
    eta = card - M.ranks
    flat_mask = np.zeros(1 << n, dtype=bool)
    flat_mask[M.flats()] = True
    placed = np.zeros(1 << n, dtype=np.int64)
    values = np.zeros(1 << n, dtype=np.int64)
    below = np.zeros(1 << n, dtype=np.int64)
    dirty = False
    for k in range(n + 1):
        level = card == k
        if dirty:
            below = bs.subset_sum(placed, n)
            dirty = False
        values[level] = eta[level] - below[level]
        new = level & flat_mask
        if new.any():
            placed[new] = values[new]
            dirty = True
    return values


def _alpha_cyclic_flats(M: Matroid, Z: ZLattice) -> np.ndarray:
    n = M.n
    eta = bs.cardinalities(n) - M.ranks
    m = len(Z)
    on_z = np.zeros(m, dtype=np.int64)
    for i in range(m):
        below = Z.leq[:, i].copy()
        below[i] = False
        on_z[i] = eta[Z.flats[i]] - on_z[below].sum()
    placed = np.zeros(1 << n, dtype=np.int64)
    placed[list(Z.flats)] = on_z
    values = eta - bs.subset_sum(placed, n)
    values[list(Z.flats)] = on_z
    return values


def alpha(M: Matroid, Z: ZLattice | None = None) -> AlphaTable:
    """Alpha on all subsets, evaluated over all flats and over cyclic flats only.

    The two evaluations must agree; a mismatch raises InternalConsistencyError.
    """
    Z = cyclic_flats(M) if Z is None else Z
    full = _alpha_all_flats(M)
    reduced = _alpha_cyclic_flats(M, Z)
    bad = np.flatnonzero(full != reduced)
    if bad.size:
        X = int(bad[0])
        raise InternalConsistencyError(
            f"alpha({bs.fmt(X)}) is {full[X]} over all flats but {reduced[X]} over cyclic flats")
    return AlphaTable(_readonly(full), Z)


# -- inclusion-exclusion ----------------------------------------------------------

def combine_table(family: Sequence[int], mode: str, n: int) -> np.ndarray:
    """Union (or intersection) of every subfamily, indexed by subfamily bitmask.

    Entry 0 is the empty union (0) or the empty intersection (the ground set).
    """
    if mode == UNIONS:
        out = np.zeros(1, dtype=np.int64)
        for s in family:
            out = np.concatenate([out, out | s])
    elif mode == INTERSECTIONS:
        out = np.full(1, bs.full(n), dtype=np.int64)
        for s in family:
            out = np.concatenate([out, out & s])
    else:
        raise ValueError(f"mode must be {UNIONS!r} or {INTERSECTIONS!r}, got {mode!r}")
    return out


def ie_signs(k: int) -> np.ndarray:
    """(-1)**(|F'|+1) per subfamily bitmask, with 0 for the empty subfamily."""
    sizes = bs.cardinalities(k)
    out = np.where(sizes % 2 == 1, 1, -1).astype(np.int64)
    out[0] = 0
    return out


def _dedupe(family: Iterable[int]) -> list[int]:
    seen: dict[int, None] = {}
    for s in family:
        seen.setdefault(int(s), None)
    return list(seen)


def minimal_members(family: Sequence[int]) -> list[int]:
    return [X for X in family if not any(Y != X and bs.is_subset(Y, X) for Y in family)]


def maximal_members(family: Sequence[int]) -> list[int]:
    return [X for X in family if not any(Y != X and bs.is_subset(X, Y) for Y in family)]


def _ie_full(M: Matroid, family: list[int], mode: str, cap: int) -> int:
    if len(family) > cap:
        raise FamilySizeError(len(family), cap)
    combined = combine_table(family, mode, M.n)
    return int((ie_signs(len(family)) * M.ranks[combined]).sum())


def rhs_inclusion_exclusion(M: Matroid, family: Iterable[int], mode: str = UNIONS, *,
                            reduce: bool | None = None, verify: bool = False,
                            cap: int = IE_SIZE_CAP) -> int:
    """Sum over nonempty subfamilies F' of (-1)**(|F'|+1) * r(union or intersection of F').

    In union mode only the minimal members matter (and only the maximal ones in
    intersection mode).  ``reduce=None`` applies that reduction once the family
    has more than REDUCE_THRESHOLD members; ``verify=True`` also evaluates the
    other route and raises InternalConsistencyError if the two differ.
    """
    family = _dedupe(family)
    if not family:
        raise MatroidError("inclusion-exclusion needs a nonempty family")
    if mode not in (UNIONS, INTERSECTIONS):
        raise ValueError(f"mode must be {UNIONS!r} or {INTERSECTIONS!r}, got {mode!r}")
    if reduce is None:
        reduce = len(family) > REDUCE_THRESHOLD
    reduced = minimal_members(family) if mode == UNIONS else maximal_members(family)
    value = _ie_full(M, reduced if reduce else family, mode, cap)
    if verify:
        other = _ie_full(M, family if reduce else reduced, mode, cap)
        if other != value:
            raise InternalConsistencyError(
                f"inclusion-exclusion: reduced and full sums differ ({value} vs {other})")
    return value


def check_filter(Z: ZLattice, family: Sequence[int]) -> None:
    members = set(family)
    for F in family:
        i = Z.index(F)
        for j in np.flatnonzero(Z.leq[i]):
            if Z.flats[j] not in members:
                raise MatroidError(f"family is not a filter: {bs.fmt(F)} is in it but "
                                   f"{bs.fmt(Z.flats[j])} is not")


def filter_beta_sum(M: Matroid, beta_table: BetaTable, family: Sequence[int]) -> int:
    """Sum of beta over a filter of cyclic flats."""
    check_filter(beta_table.zlattice, family)
    return sum(beta_table[F] for F in _dedupe(family))
