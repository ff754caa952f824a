
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from transmat import bitset as bs
from transmat.constructions import mk4, mk4_circuits, paper_p7, rank0, uniform
from transmat.core import (SetSystem, element_map, matroid_from_bases,
                           matroid_from_circuits, matroid_from_presentation,
                           matroid_from_rank_table, matroids_equal, max_matching,
                           rank_axiom_violation)
from transmat.errors import AxiomError, GroundSetCapError, MatroidError
from transmat.oracle import graphic_rank_table

from conftest import S, brute_rank_from_sets


class TestConstructors:
    def test_u23_from_bases(self):
        M = matroid_from_bases(3, [S(0, 1), S(0, 2), S(1, 2)])
        assert M.rank(S(0, 1, 2)) == 2
        assert M.rank(S(0)) == 1
        assert M == uniform(2, 3)

    def test_empty_ground_set(self):
        M = matroid_from_bases(0, [0])
        assert M.n == 0 and M.r == 0
        assert list(M.ranks) == [0]

    def test_unequal_bases_rejected(self):
        with pytest.raises(AxiomError, match="unequal"):
            matroid_from_bases(4, [S(0, 1), S(0, 1, 2)])

    def test_exchange_violation_rejected(self):
        with pytest.raises(AxiomError):
            matroid_from_bases(4, [S(0, 1), S(2, 3)])

    def test_no_bases_rejected(self):
        with pytest.raises(AxiomError):
            matroid_from_bases(2, [])

    def test_loop_from_circuits(self):
        M = matroid_from_circuits(2, [S(0)])
        assert M.rank(S(0)) == 0
        assert M.rank(S(1)) == 1
        assert M.loops() == S(0)

    def test_p7_from_circuits(self):
        M = paper_p7()
        assert M.n == 7 and M.r == 4
        non_spanning = [C for C in M.circuits() if M.rank(C) < M.r]
        assert non_spanning == [S(0, 1, 2, 3), S(3, 4, 5, 6)]

    def test_mk4_matches_graphic_oracle(self):
        edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
        oracle = graphic_rank_table(4, edges)
        assert list(mk4().ranks) == oracle
        assert mk4().r == 3

    def test_mk4_circuit_count(self):
        circuits = mk4().circuits()
        assert len(circuits) == 7
        assert sorted(bs.popcount(C) for C in circuits) == [3, 3, 3, 3, 4, 4, 4]
        assert sorted(circuits) == sorted(mk4_circuits())

    def test_clutter_required(self):
        with pytest.raises(AxiomError):
            matroid_from_circuits(3, [S(0, 1), S(0, 1, 2)])

    def test_elimination_violation(self):
        # {0,1} and {1,2} force a circuit inside {0,2}
        with pytest.raises(AxiomError):
            matroid_from_circuits(3, [S(0, 1), S(1, 2)])

    def test_rank_table_validation(self):
        with pytest.raises(AxiomError, match="unit increase"):
            matroid_from_rank_table(1, [0, 2])
        with pytest.raises(AxiomError):
            matroid_from_rank_table(2, [0, 1, 1, 1, 1])
        with pytest.raises(AxiomError, match="empty"):
            matroid_from_rank_table(1, [1, 1])
        # two parallel-but-independent elements violate submodularity
        assert rank_axiom_violation(np.array([0, 1, 1, 2]), 2) is None
        assert rank_axiom_violation(np.array([0, 0, 1, 0]), 2) is not None

    def test_validation_can_be_skipped(self):
        M = matroid_from_rank_table(1, [0, 2], validate=False)
        assert M.rank(1) == 2

    def test_ground_set_cap(self):
        with pytest.raises(GroundSetCapError):
            matroid_from_bases(4, [0], max_n=3)
        with pytest.raises(GroundSetCapError):
            matroid_from_presentation(SetSystem(21, ()))


class TestPresentation:
    def test_figure1_a_is_u36(self):
        A = SetSystem.from_lists(6, [range(6)] * 3)
        assert matroid_from_presentation(A) == uniform(3, 6)

    def test_figure1_b_is_u36(self):
        A = SetSystem.from_lists(6, [[0, 1, 4, 5], [0, 1, 2, 3], [2, 3, 4, 5]])
        assert matroid_from_presentation(A) == uniform(3, 6)

    def test_empty_system(self):
        M = matroid_from_presentation(SetSystem(3, ()))
        assert M.r == 0 and M.loops() == M.ground

    def test_canonical_form(self):
        A = SetSystem(4, (S(0), 0, S(1, 2), S(0)))
        B = SetSystem(4, (S(1, 2), S(0), S(0)))
        assert A == B
        assert A.sets == (S(1, 2), S(0), S(0))
        assert len(A) == 3

    def test_agrees_with_brute_matching(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            n = int(rng.integers(1, 6))
            sets = [int(rng.integers(0, 1 << n)) for _ in range(int(rng.integers(0, 4)))]
            M = matroid_from_presentation(SetSystem(n, tuple(sets)))
            live = [s for s in sets if s]
            for X in range(1 << n):
                assert M.rank(X) == brute_rank_from_sets(X, live)
                assert max_matching(X, live) == M.rank(X)

    def test_many_repeated_columns(self):
        # more than 62 columns forces the matching fallback; repeats are trimmed to n
        A = SetSystem(3, tuple([S(0, 1, 2)] * 70))
        assert matroid_from_presentation(A) == uniform(3, 3)
        # 63 distinct columns avoiding element 6: 6 is a loop, the rest are free
        M = matroid_from_presentation(SetSystem(7, tuple(range(1, 64))))
        assert M.loops() == S(6)
        assert M.rank(S(0, 1, 2, 3, 4, 5)) == 6
        assert max_matching(S(0, 6), [S(0), S(0, 1)]) == 1

    def test_restriction_reindexes(self):
        A = SetSystem.from_lists(4, [[0, 2], [2, 3]])
        assert A.restrict(S(2, 3)).to_lists() == [[0, 1], [0]]


class TestQueries:
    def test_u23_closure_nullity(self):
        M = uniform(2, 3)
        assert M.closure(S(0)) == S(0)
        assert M.nullity(S(0)) == 0
        assert M.closure(S(0, 1)) == M.ground

    def test_p7_queries(self):
        M = paper_p7()
        X = S(0, 1, 2, 3)
        assert M.rank(X) == 3
        assert M.nullity(X) == 1
        assert M.closure(X) == X
        assert M.is_flat(X)

    def test_loops_coloops(self):
        M = matroid_from_circuits(3, [S(0)])
        assert M.loops() == S(0)
        assert M.coloops() == S(1, 2)
        assert uniform(2, 3).coloops() == 0

    def test_bases_lex_order(self):
        assert uniform(2, 3).bases() == [S(0, 1), S(0, 2), S(1, 2)]
        assert len(uniform(3, 6).bases()) == 20

    def test_flats_match_closure_scan(self):
        M = paper_p7()
        assert set(M.flats()) == {M.closure(X) for X in range(1 << M.n)}

    def test_circuits_are_minimal_dependent(self):
        M = mk4()
        for C in M.circuits():
            assert not M.is_independent(C)
            assert all(M.is_independent(C & ~(1 << e)) for e in bs.elements(C))


class TestMinorsAndDuality:
    def test_dual_u23(self):
        assert uniform(2, 3).dual() == uniform(1, 3)

    def test_dual_rank0(self):
        assert rank0(2).dual() == uniform(2, 2)

    def test_dual_mk4(self):
        D = mk4().dual()
        assert D.r == 3
        assert D.dual() == mk4()

    def test_restrict_u36(self):
        assert uniform(3, 6).restrict(S(0, 1, 2)) == uniform(3, 3)

    def test_restrict_p7(self):
        R = paper_p7().restrict(S(0, 1, 2, 3))
        assert R.n == 4 and R.r == 3
        assert R.circuits() == [S(0, 1, 2, 3)]

    def test_order_preserving_reindex(self):
        M = matroid_from_circuits(4, [S(1, 3)])
        R = M.restrict(S(1, 2, 3))
        assert R.circuits() == [S(0, 2)]
        assert element_map(S(1, 2, 3)) == {1: 0, 2: 1, 3: 2}

    def test_contract(self):
        M = uniform(2, 4)
        C = M.contract(S(0))
        assert C == uniform(1, 3)
        assert M.delete(S(0)) == uniform(2, 3)

    def test_relabel(self):
        M = matroid_from_circuits(3, [S(0)])
        assert M.relabel([2, 0, 1]).loops() == S(2)
        with pytest.raises(MatroidError):
            M.relabel([0, 0, 1])


class TestEquality:
    def test_reflexive(self):
        assert matroids_equal(paper_p7(), paper_p7())

    def test_figure1_a_b(self):
        a = matroid_from_presentation(SetSystem.from_lists(6, [range(6)] * 3))
        b = matroid_from_presentation(SetSystem.from_lists(6, [[0, 1, 4, 5], [0, 1, 2, 3], [2, 3, 4, 5]]))
        assert matroids_equal(a, b)

    def test_different(self):
        assert not matroids_equal(uniform(2, 3), uniform(1, 3))

    def test_size_mismatch(self):
        with pytest.raises(MatroidError):
            matroids_equal(uniform(1, 2), uniform(1, 3))

    def test_hashable(self):
        assert len({uniform(2, 3), uniform(2, 3), uniform(1, 3)}) == 2


@st.composite
def presentations(draw, max_n=6, max_cols=4):
    n = draw(st.integers(0, max_n))
    cols = draw(st.lists(st.integers(0, (1 << n) - 1), max_size=max_cols))
    return SetSystem(n, tuple(cols))


class TestProperties:
    @settings(max_examples=60, deadline=None)
    @given(presentations(), st.data())
    def test_presentation_restriction_law(self, A, data):
        X = data.draw(st.integers(0, (1 << A.n) - 1))
        assert matroid_from_presentation(A.restrict(X)) == matroid_from_presentation(A).restrict(X)

    @settings(max_examples=60, deadline=None)
    @given(presentations())
    def test_matching_rank_monotone_submodular(self, A):
        r = matroid_from_presentation(A, validate=False).ranks
        n = A.n
        for X in range(1 << n):
            for Y in range(1 << n):
                assert r[X] + r[Y] >= r[X | Y] + r[X & Y]
                if X & Y == X:
                    assert r[X] <= r[Y]

    @settings(max_examples=60, deadline=None)
    @given(presentations())
    def test_dual_involution(self, A):
        M = matroid_from_presentation(A)
        assert M.dual().dual() == M
        assert matroid_from_rank_table(M.n, list(M.dual().ranks)) == M.dual()

    @settings(max_examples=40, deadline=None)
    @given(presentations(max_n=5))
    def test_bases_and_circuits_round_trip(self, A):
        M = matroid_from_presentation(A)
        assert matroid_from_bases(M.n, M.bases()) == M
        assert matroid_from_circuits(M.n, M.circuits()) == M


def test_matroid_is_immutable():
    M = uniform(1, 2)
    with pytest.raises(ValueError):
        M.ranks[1] = 0
