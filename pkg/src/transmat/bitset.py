"""Subsets of {0, ..., n-1} encoded as Python ints (bit e <=> element e)."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

import numpy as np


def to_mask(elements: Iterable[int]) -> int:
    mask = 0
    for e in elements:
        if e < 0:
            raise ValueError(f"negative element {e}")
        mask |= 1 << e
    return mask


def elements(mask: int) -> list[int]:
    """Sorted list of the elements of ``mask``."""
    out = []
    e = 0
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def full(n: int) -> int:
    return (1 << n) - 1


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def check_mask(mask: int, n: int) -> int:
    if mask < 0 or mask >> n:
        raise ValueError(f"subset {mask:#b} not contained in ground set of size {n}")
    return mask


def fmt(mask: int) -> str:
    return "{" + ",".join(map(str, elements(mask))) + "}"


@lru_cache(maxsize=None)
def all_masks(n: int) -> np.ndarray:
    out = np.arange(1 << n, dtype=np.int64)
    out.setflags(write=False)
    return out


@lru_cache(maxsize=None)
def cardinalities(n: int) -> np.ndarray:
    out = np.bitwise_count(all_masks(n)).astype(np.int64)
    out.setflags(write=False)
    return out


def subset_sum(values: np.ndarray, n: int) -> np.ndarray:
    """Zeta transform: out[X] = sum of values[Y] over Y subset of X."""
    out = np.array(values, copy=True)
    for e in range(n):
        v = out.reshape(-1, 2, 1 << e)
        v[:, 1, :] += v[:, 0, :]
    return out


def superset_sum(values: np.ndarray, n: int) -> np.ndarray:
    """out[X] = sum of values[Y] over Y superset of X."""
    out = np.array(values, copy=True)
    for e in range(n):
        v = out.reshape(-1, 2, 1 << e)
        v[:, 0, :] += v[:, 1, :]
    return out


def down_all(flags: np.ndarray, n: int) -> np.ndarray:
    """out[X] = True iff flags[Y] for every Y subset of X."""
    out = np.array(flags, dtype=bool, copy=True)
    for e in range(n):
        v = out.reshape(-1, 2, 1 << e)
        v[:, 1, :] &= v[:, 0, :]
    return out


def up_any(flags: np.ndarray, n: int) -> np.ndarray:
    """out[X] = True iff flags[Y] for some Y subset of X."""
    out = np.array(flags, dtype=bool, copy=True)
    for e in range(n):
        v = out.reshape(-1, 2, 1 << e)
        v[:, 1, :] |= v[:, 0, :]
    return out


def down_any(flags: np.ndarray, n: int) -> np.ndarray:
    """out[X] = True iff flags[Y] for some Y superset of X."""
    out = np.array(flags, dtype=bool, copy=True)
    for e in range(n):
        v = out.reshape(-1, 2, 1 << e)
        v[:, 0, :] |= v[:, 1, :]
    return out
