"""Acceptance criteria, one test per criterion.

Each criterion prints a single ``PASS``/``FAIL`` line (shown in the terminal
summary under pytest, or on stdout with ``python tests/test_acceptance.py``).
Runtime limits are part of each criterion.
"""

from __future__ import annotations

import sys
import time
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from transmat import bitset as bs
from transmat.constructions import (CorpusSpec, build_corpus, figure1_presentation, mk4,
                                    paper_p7, uniform)
from transmat.core import SetSystem, matroid_from_circuits, matroid_from_presentation
from transmat.cyclic import cyclic_flats, filters
from transmat.fundamental import all_methods, is_fundamental, is_fundamental_basis
from transmat.masonfn import UNIONS, alpha, beta, rhs_inclusion_exclusion
from transmat.oracle import oracle_is_transversal
from transmat.suite import check_free_product, random_pairs
from transmat.transversal import delta_faces, is_transversal, maximal_presentation

RESULTS: dict[int, str] = {}

F1, F2 = bs.to_mask([0, 1, 2, 3]), bs.to_mask([3, 4, 5, 6])
E6, E7 = bs.full(6), bs.full(7)

# the default corpus, enlarged; every matroid has n <= 8
MAIN_SPEC = CorpusSpec(seed=2024, max_n=8, random_count=150, random_n=(2, 8),
                       free_product_pairs=60, free_product_max_n=8)


def record(k: int, ok: bool, elapsed: float, limit: float | None, detail: str) -> bool:
    within = limit is None or elapsed < limit
    budget = f" (limit {limit:g}s)" if limit is not None else ""
    line = f"{'PASS' if ok and within else 'FAIL'} criterion {k}: {detail}; {elapsed:.2f}s{budget}"
    RESULTS[k] = line
    print(line)
    return ok and within


def three_parallel_pairs():
    pairs = [(0, 1), (2, 3), (4, 5)]
    triples = [bs.to_mask([a, b, c]) for a in pairs[0] for b in pairs[1] for c in pairs[2]]
    return matroid_from_circuits(6, [bs.to_mask(p) for p in pairs] + triples)


def criterion_1():
    fails = []
    M = uniform(3, 6)
    presented = [matroid_from_presentation(figure1_presentation(x)) for x in "abc"]
    if not all(P == M for P in presented):
        fails.append("figure-1 presentations differ")
    if maximal_presentation(M) != SetSystem(6, (E6, E6, E6)):
        fails.append("maximal presentation is not ([6],[6],[6])")
    if not is_transversal(M).is_transversal:
        fails.append("not transversal")
    v = is_fundamental(M)
    if not (v.is_fundamental and v.basis_certificate is not None
            and is_fundamental_basis(M, v.basis_certificate)):
        fails.append("no fundamental verdict with basis certificate")
    return not fails, "; ".join(fails) or "U36 presentations, ([6],[6],[6]), transversal, fundamental"


def criterion_2():
    fails = []
    M = paper_p7()
    Z = cyclic_flats(M)
    if Z.pairs() != [(0, 0), (F1, 3), (F2, 3), (E7, 4)]:
        fails.append(f"Z = {Z.pairs()}")
    bt = beta(M, Z)
    if [bt[F] for F in (0, F1, F2, E7)] != [2, 1, 1, 0]:
        fails.append("beta values")
    v = is_transversal(M)
    if not v.is_transversal or v.presentation != SetSystem(7, (E7, E7, bs.to_mask([4, 5, 6]),
                                                              bs.to_mask([0, 1, 2]))):
        fails.append("transversal certificate")
    f = is_fundamental(M)
    if f.is_fundamental or (f.violation.family, f.violation.lhs, f.violation.rhs) != ((F1, F2), 1, 2):
        fails.append("fundamental violation")
    meet = E7
    for F in Z:
        if F >> 3 & 1:
            meet &= F
    if len(delta_faces(v.presentation)[3]) != 2 or M.rank(meet) != 1:
        fails.append("face of element 3")
    return not fails, "; ".join(fails) or "Z, beta, certificate, violation {F1,F2} 1<2, |D(3)|=2 > 1"


def criterion_3():
    M = mk4()
    v = is_transversal(M)
    ok_proc = not v.is_transversal and v.witness == 0 and v.witness_beta == -1
    oracle = oracle_is_transversal(M, 3)
    return ok_proc and oracle is False, (
        f"procedure witness beta({bs.fmt(v.witness)})={v.witness_beta}, oracle(r_max=3)={oracle}")


def criterion_4():
    # Only 498 distinct matroids live on ground sets {0..n-1} with n <= 5, so the
    # instance count comes from every one of them plus the generator streams
    # (randoms, duals, minors, free products) kept without deduplication.
    exhaustive = build_corpus(CorpusSpec(seed=7, max_n=5, random_count=0, free_product_pairs=0,
                                         extensions=False, labelled_max_n=5))
    generated = build_corpus(CorpusSpec(seed=7, max_n=5, random_count=300, random_n=(1, 5),
                                        free_product_pairs=200, free_product_max_n=5,
                                        catalog_max_n=-1, dedupe=False))
    instances = [(it.label, it.matroid) for it in exhaustive + generated]
    instances += [("mk4", mk4()), ("three parallel pairs", three_parallel_pairs())]
    small = sum(1 for _, M in instances if M.n <= 5)
    distinct = len({M for _, M in instances if M.n <= 5})
    bad = [label for label, M in instances
           if oracle_is_transversal(M) != is_transversal(M).is_transversal]
    negatives = sum(1 for _, M in instances if not is_transversal(M).is_transversal)
    ok = not bad and small >= 500
    return ok, (f"{small} instances with n<=5 ({distinct} distinct) + 2 at n=6, "
                f"{negatives} non-transversal, {len(bad)} disagreements"
                + (f" first {bad[0]}" if bad else ""))


@pytest.fixture(scope="module")
def main_corpus():
    return build_corpus(MAIN_SPEC)


def criterion_5(corpus):
    bad = []
    counts = {True: 0, False: 0}
    for it in corpus:
        verdicts = all_methods(it.matroid)
        if len(set(verdicts.values())) != 1:
            bad.append(it.label)
        counts[verdicts["antichain"]] += 1
    return not bad, (f"{len(corpus)} matroids n<=8 ({counts[True]} fundamental, "
                     f"{counts[False]} not), {len(bad)} disagreements")


def identity_failures(M):
    fails = []
    Z = cyclic_flats(M)
    bt = beta(M, Z)
    E = M.ground
    if sum(bt[F] for F in Z) != M.r:
        fails.append("beta sum over Z")
    for F, rF in Z.pairs():
        if sum(bt[Y] for Y in Z if F & Y == F) != M.r - rF:
            fails.append("beta sum above a cyclic flat")
    for fam in filters(Z):
        full = rhs_inclusion_exclusion(M, fam, UNIONS, reduce=False)
        reduced = rhs_inclusion_exclusion(M, fam, UNIONS, reduce=True)
        if full != reduced or sum(bt[F] for F in fam) != M.r - full:
            fails.append("filter identity")
    at = alpha(M, Z)
    if not np.array_equal(at.values, beta(M.dual()).values[E & ~bs.all_masks(M.n)]):
        fails.append("alpha/dual beta")
    zset = set(Z)
    if any(at[F] != 0 for F in M.flats() if F not in zset):
        fails.append("alpha on noncyclic flat")
    want = sorted((E & ~F, bs.popcount(E & ~F) - M.r + rF) for F, rF in Z.pairs())
    if sorted(cyclic_flats(M.dual()).pairs()) != want:
        fails.append("cyclic flat duality")
    return fails


def criterion_6(corpus):
    bad = [(it.label, f) for it in corpus for f in identity_failures(it.matroid)]
    return not bad, f"{len(corpus)} matroids, {len(bad)} identity failures" + (
        f" first {bad[0]}" if bad else "")


def criterion_7(corpus):
    bad = []
    checked = 0
    for it in corpus:
        M = it.matroid
        if not is_transversal(M).is_transversal:
            continue
        checked += 1
        A = maximal_presentation(M)
        if matroid_from_presentation(A) != M:
            bad.append((it.label, "round trip"))
            continue
        for i, col in enumerate(A):
            for x in bs.elements(M.ground & ~col):
                grown = list(A.sets)
                grown[i] |= 1 << x
                if matroid_from_presentation(SetSystem(M.n, tuple(grown)), validate=False) == M:
                    bad.append((it.label, f"column {i} + {x}"))
    return not bad, f"{checked} transversal matroids, {len(bad)} failures" + (
        f" first {bad[0]}" if bad else "")


def criterion_8(corpus):
    pairs = random_pairs(120, seed=5, max_total=10, pool=corpus)
    # plus every non-fundamental corpus item against small partners, in both orders
    rng = np.random.default_rng(5)
    partners = [it for it in corpus if 1 <= it.matroid.n <= 3]
    for it in corpus:
        if is_fundamental(it.matroid).is_fundamental:
            continue
        other = partners[int(rng.integers(0, len(partners)))]
        if it.matroid.n + other.matroid.n <= 10:
            pairs.append((f"{it.label} [] {other.label}", it.matroid, other.matroid))
            pairs.append((f"{other.label} [] {it.label}", other.matroid, it.matroid))
    bad = [d for label, M, N in pairs for d in check_free_product(label, M, N)]
    negative = sum(1 for _, M, N in pairs
                   if not (is_transversal(M).is_transversal and is_transversal(N).is_transversal))
    return not bad and len(pairs) >= 100, (
        f"{len(pairs)} pairs with combined n<=10 ({negative} with a non-transversal "
        f"factor), {len(bad)} failures") + (
        f" first {bad[0].procedure} on {bad[0].label}" if bad else "")


def timed(k, limit, fn, *args):
    start = time.perf_counter()
    ok, detail = fn(*args)
    return record(k, ok, time.perf_counter() - start, limit, detail)


def test_criterion_1_u36():
    assert timed(1, 1.0, criterion_1), RESULTS[1]


def test_criterion_2_rank4_counterexample():
    assert timed(2, 1.0, criterion_2), RESULTS[2]


def test_criterion_3_mk4():
    assert timed(3, 300.0, criterion_3), RESULTS[3]


def test_criterion_4_oracle_agreement():
    assert timed(4, 600.0, criterion_4), RESULTS[4]


def test_criterion_5_six_way_agreement(main_corpus):
    assert timed(5, 600.0, criterion_5, main_corpus), RESULTS[5]


def test_criterion_6_identities(main_corpus):
    assert timed(6, None, criterion_6, main_corpus), RESULTS[6]


def test_criterion_7_round_trip_maximality(main_corpus):
    assert timed(7, None, criterion_7, main_corpus), RESULTS[7]


def test_criterion_8_free_products(main_corpus):
    assert timed(8, 300.0, criterion_8, main_corpus), RESULTS[8]


if __name__ == "__main__":
    corpus = build_corpus(MAIN_SPEC)
    runs = [(1, 1.0, criterion_1), (2, 1.0, criterion_2), (3, 300.0, criterion_3),
            (4, 600.0, criterion_4), (5, 600.0, criterion_5, corpus),
            (6, None, criterion_6, corpus), (7, None, criterion_7, corpus),
            (8, 300.0, criterion_8, corpus)]
    results = [timed(*r) for r in runs]
    sys.exit(0 if all(results) else 1)
