"""Transversality with certificates: maximal presentations, phi maps, face maps."""

from __future__ import annotations

from dataclasses import dataclass

from . import bitset as bs
from .core import Matroid, SetSystem, matroid_from_presentation
from .cyclic import DEFAULT_ENUM_LIMIT, ZLattice, cyclic_flats, families
from .errors import InternalConsistencyError, NotTransversalError, PresentationError
from .masonfn import UNIONS, BetaTable, beta, rhs_inclusion_exclusion


@dataclass(frozen=True)
class TransversalVerdict:
    is_transversal: bool
    presentation: SetSystem | None = None
    witness: int | None = None
    witness_beta: int | None = None

    @property
    def certificate(self):
        return self.presentation if self.is_transversal else self.witness


def maximal_presentation(M: Matroid, beta_table: BetaTable | None = None) -> SetSystem:
    """Complements of cyclic flats F, each repeated beta(F) times."""
    bt = beta(M) if beta_table is None else beta_table
    neg = bt.first_negative()
    if neg is not None:
        raise NotTransversalError(neg, bt[neg])
    cols: list[int] = []
    for F in bt.zlattice.flats:
        cols.extend([M.ground & ~F] * bt[F])
    return SetSystem(M.n, tuple(cols))


def is_transversal(M: Matroid, beta_table: BetaTable | None = None) -> TransversalVerdict:
    bt = beta(M) if beta_table is None else beta_table
    neg = bt.first_negative()
    if neg is not None:
        return TransversalVerdict(False, witness=neg, witness_beta=bt[neg])
    return TransversalVerdict(True, presentation=maximal_presentation(M, bt))


def _relation(lhs: int, rhs: int) -> str:
    return "<" if lhs < rhs else ">" if lhs > rhs else "="


@dataclass(frozen=True)
class InequalityRecord:
    family: tuple[int, ...]
    lhs: int
    rhs: int
    relation: str


def mason_ingleton_report(M: Matroid, families_kind: str = "antichains", *,
                          Z: ZLattice | None = None,
                          limit: int = DEFAULT_ENUM_LIMIT) -> list[InequalityRecord]:
    """Both sides of r(meet F) <= sum (-1)**(|F'|+1) r(union F') for every family."""
    Z = cyclic_flats(M) if Z is None else Z
    out = []
    for fam in families(Z, families_kind, limit=limit):
        meet = bs.full(M.n)
        for F in fam:
            meet &= F
        lhs = M.rank(meet)
        rhs = rhs_inclusion_exclusion(M, fam, UNIONS)
        out.append(InequalityRecord(tuple(fam), lhs, rhs, _relation(lhs, rhs)))
    return out


def _presents(A: SetSystem, M: Matroid) -> bool:
    return A.n == M.n and matroid_from_presentation(A, validate=False) == M


def complete_presentation(M: Matroid, A: SetSystem) -> SetSystem:
    """Enlarge columns by coloops of M minus the column until all complements are cyclic flats."""
    if not _presents(A, M):
        raise PresentationError("set system does not present the given matroid")
    E = M.ground
    r = M.ranks
    cols = list(A.sets)
    changed = True
    while changed:
        changed = False
        for i, col in enumerate(cols):
            rest = E & ~col
            coloops = bs.to_mask(x for x in bs.elements(rest) if r[rest & ~(1 << x)] < r[rest])
            if coloops:
                cols[i] = col | coloops
                changed = True
                if not _presents(SetSystem(M.n, tuple(cols)), M):
                    raise InternalConsistencyError(
                        f"adding {bs.fmt(coloops)} to column {i} changed the presented matroid")
    Z = cyclic_flats(M)
    for col in cols:
        if E & ~col not in Z:
            raise InternalConsistencyError(f"completed column {bs.fmt(col)} has a non-cyclic-flat complement")
    return SetSystem(M.n, tuple(cols))


# -- phi maps -----------------------------------------------------------------

@dataclass(frozen=True)
class PhiMap:
    """Cyclic flat -> set of (0-based) presentation columns meeting it."""

    assignments: dict[int, frozenset[int]]
    columns: int

    def __getitem__(self, F: int) -> frozenset[int]:
        return self.assignments[F]


def phi_from_presentation(A: SetSystem, Z: ZLattice) -> PhiMap:
    M = Z.matroid
    phi = {F: frozenset(k for k, col in enumerate(A.sets) if F & col) for F in Z.flats}
    seen: dict[frozenset[int], int] = {}
    for F, cols in phi.items():
        if len(cols) != Z.rank_of(F):
            raise PresentationError(f"|phi({bs.fmt(F)})| = {len(cols)} but r = {Z.rank_of(F)}")
        if cols in seen:
            raise PresentationError(f"phi is not injective: {bs.fmt(seen[cols])} and {bs.fmt(F)}")
        seen[cols] = F
    for i, F in enumerate(Z.flats):
        for G in Z.flats[i + 1:]:
            J = M.closure(F | G)
            if phi[J] != phi[F] | phi[G]:
                raise PresentationError(f"phi(cl({bs.fmt(F)} u {bs.fmt(G)})) is not the union")
    return PhiMap(phi, len(A))


@dataclass(frozen=True)
class PhiCheck:
    ok: bool
    family: tuple[int, ...] | None = None
    lhs: int | None = None
    rhs: int | None = None


TRANSVERSAL = "transversal"
FUNDAMENTAL = "fundamental"


def verify_phi(M: Matroid, phi: PhiMap, mode: str = TRANSVERSAL, *,
               Z: ZLattice | None = None, limit: int = DEFAULT_ENUM_LIMIT) -> PhiCheck:
    """Check r(meet F) <= |meet phi(F)| (or equality) over nonempty antichains."""
    if mode not in (TRANSVERSAL, FUNDAMENTAL):
        raise ValueError(f"mode must be {TRANSVERSAL!r} or {FUNDAMENTAL!r}, got {mode!r}")
    Z = cyclic_flats(M) if Z is None else Z
    all_cols = frozenset(range(phi.columns))
    for fam in families(Z, "antichains", limit=limit):
        meet = M.ground
        cols = all_cols
        for F in fam:
            meet &= F
            cols &= phi[F]
        lhs, rhs = M.rank(meet), len(cols)
        bad = lhs > rhs if mode == TRANSVERSAL else lhs != rhs
        if bad:
            return PhiCheck(False, tuple(fam), lhs, rhs)
    return PhiCheck(True)


# -- face maps ------------------------------------------------------------------

def delta_faces(A: SetSystem) -> dict[int, frozenset[int]]:
    """Element -> columns containing it."""
    return {x: frozenset(k for k, col in enumerate(A.sets) if col >> x & 1) for x in range(A.n)}


def delta_of_set(A: SetSystem, X: int) -> frozenset[int]:
    return frozenset(k for k, col in enumerate(A.sets) if col & X)


def private_elements(A: SetSystem) -> list[int]:
    """For each column, the elements lying in that column only."""
    out = []
    for i, col in enumerate(A.sets):
        others = 0
        for j, c in enumerate(A.sets):
            if j != i:
                others |= c
        out.append(col & ~others)
    return out
