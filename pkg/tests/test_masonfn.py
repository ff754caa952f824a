import numpy as np
import pytest

from transmat import bitset as bs
from transmat.constructions import CorpusSpec, build_corpus, mk4, paper_p7, uniform
from transmat.core import matroid_from_circuits
from transmat.cyclic import cyclic_flats, filters
from transmat.errors import FamilySizeError, MatroidError
from transmat.masonfn import (INTERSECTIONS, UNIONS, alpha, beta, filter_beta_sum,
                              maximal_members, minimal_members, rhs_inclusion_exclusion)
from transmat.oracle import oracle_beta, oracle_inclusion_exclusion

from conftest import S

F1, F2 = S(0, 1, 2, 3), S(3, 4, 5, 6)
E7 = (1 << 7) - 1


@pytest.fixture(scope="module")
def corpus():
    return build_corpus(CorpusSpec(max_n=7, random_count=30, free_product_pairs=10))


class TestBeta:
    def test_u36(self):
        M = uniform(3, 6)
        bt = beta(M)
        assert bt[M.ground] == 0 and bt[0] == 3
        full_rank = [X for X in range(1, 1 << 6) if M.rank(X) == 3 and X != M.ground]
        assert all(bt[X] == 0 for X in full_rank)
        assert bt.first_negative() is None

    def test_p7(self):
        bt = beta(paper_p7())
        assert bt.on_flats() == {0: 2, F1: 1, F2: 1, E7: 0}

    def test_mk4(self):
        M = mk4()
        bt = beta(M)
        assert bt[0] == -1
        assert [bt[F] for F in cyclic_flats(M) if bs.popcount(F) == 3] == [1, 1, 1, 1]
        assert bt.first_negative() == 0

    def test_matches_memo_recursion(self, corpus):
        for it in corpus:
            if it.matroid.n > 6:
                continue
            ref = oracle_beta(it.matroid)
            got = beta(it.matroid).values
            assert all(got[X] == v for X, v in ref.items()), it.label

    def test_sum_identities(self, corpus):
        for it in corpus:
            M = it.matroid
            Z = cyclic_flats(M)
            bt = beta(M, Z)
            assert sum(bt[F] for F in Z) == M.r
            for F, rF in Z.pairs():
                assert sum(bt[Y] for Y in Z if F & Y == F) == M.r - rF
                assert sum(bt[Y] for Y in Z if F & ~Y) == rF

    def test_table_is_read_only(self):
        with pytest.raises(ValueError):
            beta(uniform(1, 2)).values[0] = 7


class TestAlpha:
    def test_u13(self):
        M = uniform(1, 3)
        at = alpha(M)
        assert at[M.ground] == 2
        assert all(at[F] == 0 for F in M.flats() if F != M.ground)

    def test_dual_of_beta_u24(self):
        M = uniform(2, 4)
        at, bd = alpha(M), beta(M.dual())
        assert all(at[X] == bd[M.ground & ~X] for X in range(16))

    def test_loop_at_bottom(self):
        M = matroid_from_circuits(3, [S(0)])
        at = alpha(M)
        bottom = M.closure(0)
        assert bottom == S(0)
        assert at[bottom] == M.nullity(bottom) >= 1

    def test_p7(self):
        at = alpha(paper_p7())
        assert at.on_flats() == {0: 0, F1: 1, F2: 1, E7: 1}

    def test_identities(self, corpus):
        for it in corpus:
            M = it.matroid
            at = alpha(M)
            bd = beta(M.dual())
            masks = bs.all_masks(M.n)
            assert np.array_equal(at.values, bd.values[M.ground & ~masks])
            zset = set(cyclic_flats(M))
            flats = M.flats()
            for X in flats:
                if X not in zset:
                    assert at[X] == 0
                assert sum(at[F] for F in flats if F & X == F) == M.nullity(X)


class TestInclusionExclusion:
    def test_p7_filter_values(self):
        M = paper_p7()
        bt = beta(M)
        fam = [F1, F2, E7]
        assert filter_beta_sum(M, bt, fam) == 2
        assert M.r - rhs_inclusion_exclusion(M, fam) == 2
        assert M.r - M.rank(F1 & F2) == 3

    def test_top_filter(self):
        M = paper_p7()
        assert filter_beta_sum(M, beta(M), [E7]) == 0 == M.r - M.rank(E7)

    def test_whole_lattice_filter(self, corpus):
        for it in corpus:
            M = it.matroid
            Z = cyclic_flats(M)
            assert filter_beta_sum(M, beta(M, Z), list(Z)) == M.r - M.rank(Z.bottom) == M.r

    def test_not_a_filter(self):
        M = paper_p7()
        with pytest.raises(MatroidError, match="not a filter"):
            filter_beta_sum(M, beta(M), [F1])

    def test_p7_antichain(self):
        M = paper_p7()
        assert rhs_inclusion_exclusion(M, [F1, F2]) == 2
        assert oracle_inclusion_exclusion(M, [F1, F2]) == (1, 2)
        assert rhs_inclusion_exclusion(M, [F1, F2], INTERSECTIONS) == 6 - 1

    def test_singleton(self):
        M = paper_p7()
        for F in cyclic_flats(M):
            for mode in (UNIONS, INTERSECTIONS):
                assert rhs_inclusion_exclusion(M, [F], mode) == M.rank(F)
                assert oracle_inclusion_exclusion(M, [F], mode) == (M.rank(F), M.rank(F))

    def test_reduction_agrees_on_filters(self, corpus):
        for it in corpus:
            M = it.matroid
            bt = beta(M)
            for fam in filters(cyclic_flats(M)):
                red = rhs_inclusion_exclusion(M, fam, reduce=True, verify=True)
                assert red == rhs_inclusion_exclusion(M, fam, reduce=False)
                assert filter_beta_sum(M, bt, fam) == M.r - red

    def test_matches_oracle_on_random_families(self, corpus):
        rng = np.random.default_rng(11)
        count = 0
        for it in corpus:
            M = it.matroid
            Z = cyclic_flats(M)
            for _ in range(8):
                k = int(rng.integers(1, min(len(Z), 6) + 1))
                fam = [Z.flats[i] for i in rng.choice(len(Z), size=k, replace=False)]
                for mode in (UNIONS, INTERSECTIONS):
                    _, rhs = oracle_inclusion_exclusion(M, fam, mode)
                    assert rhs_inclusion_exclusion(M, fam, mode) == rhs
                    assert rhs_inclusion_exclusion(M, fam, mode, reduce=True) == rhs
                    count += 1
        assert count > 500

    def test_cap(self):
        M = uniform(5, 21 - 1)
        fam = [1 << i for i in range(20)] + [3]
        with pytest.raises(FamilySizeError):
            rhs_inclusion_exclusion(M, fam, reduce=False)
        with pytest.raises(FamilySizeError):
            oracle_inclusion_exclusion(M, fam)

    def test_empty_family(self):
        with pytest.raises(MatroidError):
            rhs_inclusion_exclusion(uniform(1, 2), [])

    def test_members(self):
        fam = [S(0), S(0, 1), S(2), S(0, 1, 2)]
        assert minimal_members(fam) == [S(0), S(2)]
        assert maximal_members(fam) == [S(0, 1, 2)]
