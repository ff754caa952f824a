"""Invariant suite run by ``transmat check`` over a generated corpus.

Each check function returns a list of :class:`Disagreement` records; an empty
list means every invariant held on that input.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import bitset as bs
from .constructions import CorpusItem, CorpusSpec, build_corpus, free_product
from .core import Matroid, SetSystem, matroid_from_presentation
from .cyclic import cyclic_flats, filters, subfamilies
from .errors import FamilySizeError
from .fundamental import (all_methods, brylawski_check, first_fundamental_basis,
                          is_fundamental, is_fundamental_basis)
from .masonfn import UNIONS, alpha, beta, rhs_inclusion_exclusion
from .oracle import Disagreement, OracleReport, oracle_is_transversal
from .transversal import delta_faces, is_transversal, mason_ingleton_report


@dataclass(frozen=True)
class SuiteOptions:
    oracle_max_n: int = 5
    subset_family_max: int = 10
    brylawski_cap: int = 20


def _fail(out: list, label: str, procedure: str, expected, got) -> None:
    out.append(Disagreement(label, procedure, expected, got))


def _meet(n: int, fam) -> int:
    out = bs.full(n)
    for F in fam:
        out &= F
    return out


def _join(fam) -> int:
    out = 0
    for F in fam:
        out |= F
    return out


def check_identities(label: str, M: Matroid, out: list) -> None:
    Z = cyclic_flats(M)
    bt = beta(M, Z)
    E = M.ground
    total = sum(bt[F] for F in Z.flats)
    if total != M.r:
        _fail(out, label, "beta_sum_over_Z", M.r, total)
    for F, rF in Z.pairs():
        up = sum(bt[Y] for Y in Z.flats if bs.is_subset(F, Y))
        if up != M.r - rF:
            _fail(out, label, "beta_sum_above_flat", M.r - rF, up)
        meeting = sum(bt[Y] for Y in Z.flats if F & (E & ~Y))
        if meeting != rF:
            _fail(out, label, "beta_sum_meeting_complement", rF, meeting)
    for fam in filters(Z):
        lhs = sum(bt[F] for F in fam)
        rhs = M.r - rhs_inclusion_exclusion(M, fam, UNIONS, reduce=True, verify=True)
        if lhs != rhs:
            _fail(out, label, "filter_beta_sum", rhs, lhs)
    D = M.dual()
    bd = beta(D)
    at = alpha(M, Z)
    masks = bs.all_masks(M.n)
    mismatch = np.flatnonzero(at.values != bd.values[E & ~masks])
    if mismatch.size:
        _fail(out, label, "alpha_dual_beta", int(bd.values[E & ~int(mismatch[0])]),
              int(at.values[mismatch[0]]))
    zset = set(Z.flats)
    flats = M.flats()
    for F in flats:
        if F not in zset and at[F] != 0:
            _fail(out, label, "alpha_noncyclic_flat", 0, at[F])
        below = sum(at[G] for G in flats if bs.is_subset(G, F))
        if below != M.nullity(F):
            _fail(out, label, "alpha_sum_below_flat", M.nullity(F), below)
    ZD = cyclic_flats(D)
    expect = sorted((E & ~F, bs.popcount(E & ~F) - M.r + rF) for F, rF in Z.pairs())
    if sorted(ZD.pairs()) != expect:
        _fail(out, label, "cyclic_flat_duality", expect, sorted(ZD.pairs()))
    if D.dual() != M:
        _fail(out, label, "dual_involution", True, False)


def check_transversal(label: str, M: Matroid, presentation: SetSystem | None,
                      opts: SuiteOptions, out: list) -> None:
    Z = cyclic_flats(M)
    bt = beta(M, Z)
    verdict = is_transversal(M, bt)
    by_beta = verdict.is_transversal
    by_anti = all(r.relation != ">" for r in mason_ingleton_report(M, "antichains", Z=Z))
    by_filt = all(r.relation != ">" for r in mason_ingleton_report(M, "filters", Z=Z))
    if not by_beta == by_anti == by_filt:
        _fail(out, label, "transversal_equivalence", by_beta, (by_anti, by_filt))
    if len(Z) <= opts.subset_family_max:
        by_all = all(r.relation != ">" for r in mason_ingleton_report(M, "subsets", Z=Z))
        if by_all != by_beta:
            _fail(out, label, "transversal_equivalence_subsets", by_beta, by_all)
    if M.n <= opts.oracle_max_n:
        oracle = oracle_is_transversal(M)
        if oracle != by_beta:
            _fail(out, label, "oracle_is_transversal", oracle, by_beta)
    cot = alpha(M, Z).first_negative() is None
    if cot != is_transversal(M.dual()).is_transversal:
        _fail(out, label, "cotransversal_alpha", not cot, cot)
    if presentation is not None:
        check_presentation(label, M, presentation, out)
    if not by_beta:
        return
    A = verdict.presentation
    if matroid_from_presentation(A) != M:
        _fail(out, label, "round_trip", True, False)
    check_presentation(label, M, A, out)
    for i, col in enumerate(A.sets):
        for x in bs.elements(M.ground & ~col):
            grown = list(A.sets)
            grown[i] = col | (1 << x)
            if matroid_from_presentation(SetSystem(M.n, tuple(grown))) == M:
                _fail(out, label, "maximality", f"column {i} + {x} changes M", "unchanged")
    if not M.coloops() and len(A) != M.r:
        _fail(out, label, "nonempty_column_count", M.r, len(A))


def check_presentation(label: str, M: Matroid, A: SetSystem, out: list) -> None:
    """Column complements are flats; each cyclic flat meets r(F) columns."""
    E = M.ground
    for col in A.sets:
        if not M.is_flat(E & ~col):
            _fail(out, label, "column_complement_flat", True, False)
    for F, rF in cyclic_flats(M).pairs():
        meets = sum(1 for col in A.sets if F & col)
        if meets != rF:
            _fail(out, label, "cyclic_flat_meets_rank_columns", rF, meets)
    n = M.n
    step = 1 if n <= 6 else max(1, (1 << n) // 32)
    for X in range(0, 1 << n, step):
        if matroid_from_presentation(A.restrict(X)) != M.restrict(X):
            _fail(out, label, "presentation_restriction", bs.fmt(X), "differs")
            break


def check_fundamental(label: str, M: Matroid, opts: SuiteOptions, out: list) -> None:
    Z = cyclic_flats(M)
    try:
        verdicts = all_methods(M, cap=opts.brylawski_cap)
    except FamilySizeError as exc:
        _fail(out, label, "six_way_agreement", "within cap", str(exc))
        return
    if len(set(verdicts.values())) != 1:
        _fail(out, label, "six_way_agreement", "all equal", verdicts)
        return
    fund = verdicts["antichain"]
    bry = brylawski_check(M, Z=Z, cap=opts.brylawski_cap)
    if bry.inequality_holds != bry.equality_holds:
        _fail(out, label, "brylawski_inequality_forces_equality", bry.inequality_holds,
              bry.equality_holds)
    D = M.dual()
    if is_fundamental(D).is_fundamental != fund:
        _fail(out, label, "fundamental_self_dual", fund, not fund)
    if fund and not is_transversal(M).is_transversal:
        _fail(out, label, "fundamental_implies_transversal", True, False)
    if not fund:
        return
    B = first_fundamental_basis(M, Z)
    if not is_fundamental_basis(D, M.ground & ~B):
        _fail(out, label, "fundamental_basis_complement", True, False)
    r = M.ranks
    if len(Z) <= opts.subset_family_max:
        for fam in subfamilies(Z):
            U, I = _join(fam), _meet(M.n, fam)
            if r[U] != bs.popcount(B & U) or r[I] != bs.popcount(B & I):
                _fail(out, label, "fundamental_basis_counts_ranks", bs.fmt(B), [bs.fmt(F) for F in fam])
                break
    A = is_transversal(M).presentation
    faces = delta_faces(A)
    coloops = M.coloops()
    for x in range(M.n):
        if coloops >> x & 1:
            continue
        containing = [F for F in Z.flats if F >> x & 1]
        expect = M.rank(_meet(M.n, containing))
        if len(faces[x]) != expect:
            _fail(out, label, "face_size_equals_meet_rank", expect, len(faces[x]))


def check_item(item: CorpusItem, opts: SuiteOptions = SuiteOptions()) -> list[Disagreement]:
    out: list[Disagreement] = []
    check_identities(item.label, item.matroid, out)
    check_transversal(item.label, item.matroid, item.presentation, opts, out)
    check_fundamental(item.label, item.matroid, opts, out)
    return out


def free_product_zlattice_rule(M: Matroid, N: Matroid) -> list[tuple[int, int]]:
    """Cyclic flats of M [] N predicted from those of M and N."""
    EM = M.ground
    ZM, ZN = cyclic_flats(M), cyclic_flats(N)
    preds = [(F, rF) for F, rF in ZM.pairs() if F != EM]
    preds += [(EM | (G << M.n), M.r + rG) for G, rG in ZN.pairs() if G != 0]
    if EM in ZM and 0 in ZN:
        preds.append((EM, M.r))
    return sorted(preds)


def check_free_product(label: str, M: Matroid, N: Matroid) -> list[Disagreement]:
    out: list[Disagreement] = []
    P = free_product(M, N)
    got = sorted(cyclic_flats(P).pairs())
    want = free_product_zlattice_rule(M, N)
    if got != want:
        _fail(out, label, "free_product_cyclic_flats", want, got)

    def pair(f):
        return f(P), (f(M) and f(N))

    tr = lambda X: is_transversal(X).is_transversal  # noqa: E731
    fu = lambda X: is_fundamental(X).is_fundamental  # noqa: E731
    co = lambda X: is_transversal(X.dual()).is_transversal  # noqa: E731
    both = lambda X: tr(X) and co(X)  # noqa: E731
    for name, f in (("transversal", tr), ("fundamental", fu), ("cotransversal", co),
                    ("bitransversal", both)):
        p, mn = pair(f)
        if p != mn:
            _fail(out, label, f"free_product_closure_{name}", mn, p)
    swapped = free_product(N.dual(), M.dual())
    # N* [] M* lists E(N) first; move it back behind E(M)
    perm = [M.n + i for i in range(N.n)] + list(range(M.n))
    if swapped.relabel(perm) != P.dual():
        _fail(out, label, "free_product_duality", True, False)
    if P.restrict(M.ground) != M:
        _fail(out, label, "free_product_deletion", True, False)
    if P.contract(M.ground) != N:
        _fail(out, label, "free_product_contraction", True, False)
    return out


def random_pairs(count: int, seed: int, max_total: int = 10,
                 pool: list[CorpusItem] | None = None) -> list[tuple[str, Matroid, Matroid]]:
    rng = np.random.default_rng(seed)
    pool = pool if pool is not None else build_corpus(CorpusSpec(seed=seed, max_n=6,
                                                                  random_count=30))
    pool = [it for it in pool if it.matroid.n <= max_total - 1]
    out = []
    while len(out) < count:
        a = pool[int(rng.integers(0, len(pool)))]
        b = pool[int(rng.integers(0, len(pool)))]
        if a.matroid.n + b.matroid.n <= max_total:
            out.append((f"{a.label} [] {b.label}", a.matroid, b.matroid))
    return out


def _check_pair(args):
    return check_free_product(*args)


def run_check(corpus: list[CorpusItem], pairs=(), *, jobs: int = 1,
              opts: SuiteOptions = SuiteOptions()) -> OracleReport:
    """Run every per-matroid check and every free-product check.

    Results are in corpus order regardless of ``jobs``.
    """
    report = OracleReport()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            per_item = list(pool.map(check_item, corpus, [opts] * len(corpus), chunksize=4))
            per_pair = list(pool.map(_check_pair, list(pairs), chunksize=4))
    else:
        per_item = [check_item(it, opts) for it in corpus]
        per_pair = [check_free_product(*p) for p in pairs]
    for d in per_item + per_pair:
        report.disagreements.extend(d)
    report.instances_checked = len(corpus) + len(per_pair)
    return report

