"""Fundamental transversal matroids: six independent decision routes.

The primary route checks r(meet F) == sum (-1)**(|F'|+1) r(union F') over every
nonempty antichain F of cyclic flats.  The other routes (filters and beta,
phi maps, fundamental bases, the dual forms, Brylawski's inequality) exist to
cross-check it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import bitset as bs
from .core import Matroid, SetSystem, matroid_from_presentation
from .cyclic import DEFAULT_ENUM_LIMIT, ZLattice, antichains, cyclic_flats, filters, ideals
from .errors import FamilySizeError, InternalConsistencyError, PresentationError
from .masonfn import (IE_SIZE_CAP, INTERSECTIONS, UNIONS, alpha, beta, combine_table,
                      ie_signs, rhs_inclusion_exclusion)
from .transversal import (FUNDAMENTAL, is_transversal, maximal_presentation,
                          phi_from_presentation, private_elements, verify_phi)


@dataclass(frozen=True)
class Violation:
    family: tuple[int, ...]
    lhs: int
    rhs: int


@dataclass(frozen=True)
class FundamentalVerdict:
    is_fundamental: bool
    basis_certificate: int | None = None
    violation: Violation | None = None


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    violation: Violation | None = None


def _meet(n: int, family) -> int:
    out = bs.full(n)
    for F in family:
        out &= F
    return out


def _join(family) -> int:
    out = 0
    for F in family:
        out |= F
    return out


def _iter_fundamental_bases(M: Matroid, Z: ZLattice) -> Iterator[int]:
    r = M.ranks
    for B in M.bases():
        if all(r[B & F] == rF for F, rF in zip(Z.flats, Z.ranks)):
            yield B


def fundamental_bases(M: Matroid, Z: ZLattice | None = None) -> list[int]:
    """Bases B with B & F spanning F for every cyclic flat F, in lexicographic order."""
    Z = cyclic_flats(M) if Z is None else Z
    return list(_iter_fundamental_bases(M, Z))


def first_fundamental_basis(M: Matroid, Z: ZLattice | None = None) -> int | None:
    Z = cyclic_flats(M) if Z is None else Z
    return next(_iter_fundamental_bases(M, Z), None)


def is_fundamental(M: Matroid, *, Z: ZLattice | None = None,
                   limit: int = DEFAULT_ENUM_LIMIT) -> FundamentalVerdict:
    Z = cyclic_flats(M) if Z is None else Z
    for fam in antichains(Z, limit=limit):
        lhs = M.rank(_meet(M.n, fam))
        rhs = rhs_inclusion_exclusion(M, fam, UNIONS)
        if lhs != rhs:
            return FundamentalVerdict(False, violation=Violation(tuple(fam), lhs, rhs))
    basis = first_fundamental_basis(M, Z)
    if basis is None:
        raise InternalConsistencyError("antichain equalities hold but no fundamental basis exists")
    return FundamentalVerdict(True, basis_certificate=basis)


def filter_equality_check(M: Matroid, *, Z: ZLattice | None = None,
                          limit: int = DEFAULT_ENUM_LIMIT) -> CheckResult:
    """sum(beta(Y) for Y in F) == r(M) - r(meet F) on every nonempty filter."""
    Z = cyclic_flats(M) if Z is None else Z
    bt = beta(M, Z)
    for fam in filters(Z, limit=limit):
        lhs = sum(bt[F] for F in fam)
        rhs = M.r - M.rank(_meet(M.n, fam))
        if lhs != rhs:
            return CheckResult(False, Violation(tuple(fam), lhs, rhs))
    return CheckResult(True)


def phi_check(M: Matroid, *, Z: ZLattice | None = None,
              limit: int = DEFAULT_ENUM_LIMIT) -> CheckResult:
    """Equality form of the phi criterion, with phi read off the maximal presentation."""
    Z = cyclic_flats(M) if Z is None else Z
    verdict = is_transversal(M, beta(M, Z))
    if not verdict.is_transversal:
        return CheckResult(False)
    phi = phi_from_presentation(verdict.presentation, Z)
    res = verify_phi(M, phi, FUNDAMENTAL, Z=Z, limit=limit)
    if res.ok:
        return CheckResult(True)
    return CheckResult(False, Violation(res.family, res.lhs, res.rhs))


@dataclass(frozen=True)
class DualFormResult:
    ok: bool
    antichain_violation: Violation | None = None
    ideal_violation: Violation | None = None


def dual_form_check(M: Matroid, *, Z: ZLattice | None = None,
                    limit: int = DEFAULT_ENUM_LIMIT) -> DualFormResult:
    """Union/intersection-swapped equality on antichains, and the alpha sum on ideals.

    The two forms are equivalent; disagreement raises InternalConsistencyError.
    """
    Z = cyclic_flats(M) if Z is None else Z
    anti = None
    for fam in antichains(Z, limit=limit):
        lhs = M.rank(_join(fam))
        rhs = rhs_inclusion_exclusion(M, fam, INTERSECTIONS)
        if lhs != rhs:
            anti = Violation(tuple(fam), lhs, rhs)
            break
    at = alpha(M, Z)
    ideal = None
    for fam in ideals(Z, limit=limit):
        lhs = sum(at[F] for F in fam)
        rhs = M.nullity(_join(fam))
        if lhs != rhs:
            ideal = Violation(tuple(fam), lhs, rhs)
            break
    if (anti is None) != (ideal is None):
        raise InternalConsistencyError(
            f"dual forms disagree: antichain form {'fails' if anti else 'holds'}, "
            f"ideal form {'fails' if ideal else 'holds'}")
    return DualFormResult(anti is None, anti, ideal)


def intersection_closure(Z: ZLattice) -> list[int]:
    """All intersections of nonempty subfamilies of Z, ordered by (size, bitmask)."""
    found = set(Z.flats)
    frontier = set(found)
    while frontier:
        new = {a & b for a in frontier for b in found} - found
        found |= new
        frontier = new
    return sorted(found, key=lambda X: (bs.popcount(X), X))


@dataclass(frozen=True)
class BrylawskiResult:
    inequality_holds: bool
    equality_holds: bool
    violation: Violation | None = None
    strict: Violation | None = None

    @property
    def ok(self) -> bool:
        return self.inequality_holds


def brylawski_check(M: Matroid, *, Z: ZLattice | None = None,
                    cap: int = IE_SIZE_CAP) -> BrylawskiResult:
    """r(union F) >= sum (-1)**(|F'|+1) r(meet F') for every family of intersections.

    Families range over all nonempty subsets of the intersection closure of the
    cyclic flats; ``cap`` bounds the size of that closure.
    """
    Z = cyclic_flats(M) if Z is None else Z
    sets = intersection_closure(Z)
    m = len(sets)
    if m > cap:
        raise FamilySizeError(m, cap)
    r = M.ranks
    lhs = r[combine_table(sets, UNIONS, M.n)]
    rhs = bs.subset_sum(ie_signs(m) * r[combine_table(sets, INTERSECTIONS, M.n)], m)
    lhs[0] = rhs[0] = 0

    def at(idx: int) -> Violation:
        fam = tuple(s for k, s in enumerate(sets) if idx >> k & 1)
        return Violation(fam, int(lhs[idx]), int(rhs[idx]))

    below = np.flatnonzero(lhs < rhs)
    above = np.flatnonzero(lhs > rhs)
    return BrylawskiResult(
        inequality_holds=not below.size,
        equality_holds=not below.size and not above.size,
        violation=at(int(below[0])) if below.size else None,
        strict=at(int(above[0])) if above.size else None,
    )


def fundamental_extension(M: Matroid, presentation: SetSystem | None = None
                          ) -> tuple[Matroid, SetSystem]:
    """Give every column without a private element a fresh element of its own.

    Uses the maximal presentation unless ``presentation`` is supplied.  Fresh
    elements are numbered n, n+1, ... in column order.
    """
    if presentation is None:
        A = maximal_presentation(M)
    else:
        A = presentation
        if A.n != M.n or matroid_from_presentation(A, validate=False) != M:
            raise PresentationError("set system does not present the given matroid")
    cols = list(A.sets)
    fresh = M.n
    for i, priv in enumerate(private_elements(A)):
        if not priv:
            cols[i] |= 1 << fresh
            fresh += 1
    ext = SetSystem(fresh, tuple(cols))
    M1 = matroid_from_presentation(ext)
    if M1.restrict(M.ground) != M:
        raise InternalConsistencyError("fundamental extension does not restrict to the original matroid")
    return M1, ext


METHODS = ("antichain", "filter", "phi", "basis", "dual", "brylawski")


def fundamental_by_method(M: Matroid, method: str, *, Z: ZLattice | None = None,
                          limit: int = DEFAULT_ENUM_LIMIT, cap: int = IE_SIZE_CAP) -> bool:
    Z = cyclic_flats(M) if Z is None else Z
    if method == "antichain":
        return is_fundamental(M, Z=Z, limit=limit).is_fundamental
    if method == "filter":
        return filter_equality_check(M, Z=Z, limit=limit).ok
    if method == "phi":
        return phi_check(M, Z=Z, limit=limit).ok
    if method == "basis":
        return first_fundamental_basis(M, Z) is not None
    if method == "dual":
        return dual_form_check(M, Z=Z, limit=limit).ok
    if method == "brylawski":
        return brylawski_check(M, Z=Z, cap=cap).inequality_holds
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


def all_methods(M: Matroid, **kw) -> dict[str, bool]:
    Z = cyclic_flats(M)
    return {m: fundamental_by_method(M, m, Z=Z, **kw) for m in METHODS}


def is_fundamental_basis(M: Matroid, B: int, Z: ZLattice | None = None) -> bool:
    Z = cyclic_flats(M) if Z is None else Z
    return M.is_basis(B) and all(M.rank(B & F) == rF for F, rF in zip(Z.flats, Z.ranks))

