"""Brute-force oracles, independent of the cyclic-flat machinery.

``oracle_is_transversal`` searches every multiset of columns.  The family of
partial transversals of a prefix of columns is kept as one Python int whose bit
X is set iff subset X is matchable; adding a column A maps I to I + x for each
x in A - I, which is a masked shift of that int.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from . import bitset as bs
from .core import Matroid
from .errors import FamilySizeError, MatroidError

ORACLE_MAX_N = 6


@lru_cache(maxsize=None)
def _lacking(n: int) -> tuple[int, ...]:
    """For each element x, the int with bit X set for every subset X without x."""
    out = []
    for x in range(n):
        v = 0
        for X in range(1 << n):
            if not X >> x & 1:
                v |= 1 << X
        out.append(v)
    return tuple(out)


def _independent_bits(M: Matroid) -> int:
    v = 0
    for X in range(1 << M.n):
        if M.ranks[X] == bs.popcount(X):
            v |= 1 << X
    return v


def _add_column(family: int, column: int, lacking: tuple[int, ...]) -> int:
    out = family
    for x in bs.elements(column):
        out |= (family & lacking[x]) << (1 << x)
    return out


def _brute_cyclic_flats(M: Matroid) -> list[tuple[int, int]]:
    """(flat, rank) pairs for flats that are unions of circuits, by direct scan."""
    n = M.n
    circuits = [C for C in range(1, 1 << n)
                if M.rank(C) < bs.popcount(C)
                and all(M.rank(C & ~(1 << e)) == bs.popcount(C) - 1 for e in bs.elements(C))]
    out = []
    for X in range(1 << n):
        if M.closure(X) != X:
            continue
        union = 0
        for C in circuits:
            if bs.is_subset(C, X):
                union |= C
        if union == X:
            out.append((X, M.rank(X)))
    return out


def oracle_is_transversal(M: Matroid, r_max: int | None = None, *, fast: bool = False,
                          max_n: int = ORACLE_MAX_N) -> bool:
    """True iff some system of at most ``r_max`` sets presents M (exhaustive search).

    ``r_max`` defaults to r(M).  The default search uses nothing beyond the
    definition of a presentation.  ``fast=True`` adds two pruning rules: every
    cyclic flat F meets at most r(F) columns, and every single-element deletion
    must itself be transversal.
    """
    n = M.n
    if n > max_n:
        raise MatroidError(f"oracle search limited to n <= {max_n}, got n={n}")
    r_max = M.r if r_max is None else r_max
    if r_max > M.r + 1:
        raise MatroidError(f"r_max={r_max} exceeds r(M)+1={M.r + 1}")
    if r_max < M.r:
        return False
    if fast and n > 1:
        for e in range(n):
            if not oracle_is_transversal(M.delete(1 << e), fast=True, max_n=max_n):
                return False
    target = _independent_bits(M)
    lacking = _lacking(n)
    flats = _brute_cyclic_flats(M) if fast else []
    columns = range(1 << n)

    def search(family: int, depth: int, start: int, meets: tuple[int, ...]) -> bool:
        if depth == r_max:
            return family == target
        for A in columns[start:]:
            grown = _add_column(family, A, lacking)
            if grown & ~target:
                continue
            if fast:
                new_meets = tuple(m + bool(A & F) for m, (F, _) in zip(meets, flats))
                if any(m > rF for m, (_, rF) in zip(new_meets, flats)):
                    continue
            else:
                new_meets = meets
            if search(grown, depth + 1, A, new_meets):
                return True
        return False

    return search(1, 0, 0, tuple(0 for _ in flats))


def oracle_inclusion_exclusion(M: Matroid, family, mode: str = "unions", *,
                               cap: int = 20) -> tuple[int, int]:
    """Both sides of the rank inequality for ``family``, summed term by term.

    mode "unions":        (r(meet F), sum (-1)**(|F'|+1) r(union F'))
    mode "intersections": (r(union F), sum (-1)**(|F'|+1) r(meet F'))
    """
    family = list(dict.fromkeys(family))
    if not family:
        raise MatroidError("family must be nonempty")
    if len(family) > cap:
        raise FamilySizeError(len(family), cap)
    E = M.ground

    def union(sets):
        out = 0
        for s in sets:
            out |= s
        return out

    def meet(sets):
        out = E
        for s in sets:
            out &= s
        return out

    if mode == "unions":
        lhs_of, term_of = meet, union
    elif mode == "intersections":
        lhs_of, term_of = union, meet
    else:
        raise ValueError(f"unknown mode {mode!r}")
    rhs = 0
    for k in range(1, len(family) + 1):
        sign = 1 if k % 2 else -1
        for sub in combinations(family, k):
            rhs += sign * M.rank(term_of(sub))
    return M.rank(lhs_of(family)), rhs


def oracle_beta(M: Matroid) -> dict[int, int]:
    """Beta on every subset by memoised recursion over brute-force cyclic flats."""
    Z = _brute_cyclic_flats(M)
    rM = M.r
    memo: dict[int, int] = {}

    def value(X: int) -> int:
        if X not in memo:
            memo[X] = rM - M.rank(X) - sum(value(Y) for Y, _ in Z if Y != X and bs.is_subset(X, Y))
        return memo[X]

    return {X: value(X) for X in range(1 << M.n)}


def graphic_rank_table(num_vertices: int, edges) -> list[int]:
    """Rank table of a cycle matroid: vertices minus components of each edge subset."""
    edges = list(edges)
    table = []
    for X in range(1 << len(edges)):
        parent = list(range(num_vertices))

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        rank = 0
        for i in bs.elements(X):
            a, b = find(edges[i][0]), find(edges[i][1])
            if a != b:
                parent[a] = b
                rank += 1
        table.append(rank)
    return table


@dataclass
class Disagreement:
    label: str
    procedure: str
    oracle_value: object
    procedure_value: object


@dataclass
class OracleReport:
    instances_checked: int = 0
    disagreements: list[Disagreement] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "instances_checked": self.instances_checked,
            "disagreements": [vars(d) for d in self.disagreements],
        }
