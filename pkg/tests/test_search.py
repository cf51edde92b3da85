from fractions import Fraction

import pytest

from gpfree import (
    density_report,
    enumerate_gps,
    exclusion_lower_bound,
    find_gp,
    gp_hypergraph,
    greedy_gp_free,
    improved_bound,
    max_gp_free_exact,
    squarefree_set,
)
from oracles import (
    is_gp_free_by_edges,
    max_gp_free_by_all_subsets,
    max_gp_free_by_removals,
    mobius_squarefree_count,
)


class TestHypergraph:
    def test_edges_match_enumeration(self):
        hg = gp_hypergraph(50, 3)
        assert set(hg.edges) == set(enumerate_gps(50, 3))
        assert hg.n == 50 and hg.k == 3

    def test_edge_order(self):
        hg = gp_hypergraph(20, 3)
        maxima = [e[-1] for e in hg.edges]
        assert maxima == sorted(maxima)


class TestOracleAgreement:
    def test_removal_oracle_matches_full_subset_scan(self):
        # validates the faster oracle itself on literal 2^n enumeration
        for n in range(1, 13):
            assert max_gp_free_by_removals(n, 3) == max_gp_free_by_all_subsets(n, 3)

    def test_exact_matches_removal_oracle(self):
        for n in range(1, 21):
            assert max_gp_free_exact(n, 3).max_size == max_gp_free_by_removals(n, 3)
        for n in (10, 16, 20):
            for k in (4, 5):
                assert max_gp_free_exact(n, k).max_size == max_gp_free_by_removals(n, k)


class TestExact:
    def test_n10(self):
        result = max_gp_free_exact(10, 3)
        assert result.max_size == 8
        assert result.optimal
        assert len(result.witness) == 8
        assert find_gp(result.witness, 3) is None

    def test_n4_single_edge(self):
        result = max_gp_free_exact(4, 3)
        assert result.max_size == 3

    def test_n3_no_edges(self):
        result = max_gp_free_exact(3, 3)
        assert result.max_size == 3
        assert result.witness == (1, 2, 3)
        assert result.nodes_explored == 0

    def test_witness_is_gp_free_by_independent_check(self):
        for n in (25, 40):
            result = max_gp_free_exact(n, 3)
            assert is_gp_free_by_edges(set(result.witness), n, 3)

    def test_certificate_inequality(self):
        for n in range(1, 61):
            result = max_gp_free_exact(n, 3)
            assert n - result.max_size >= exclusion_lower_bound(n, 3)

    def test_budget_exhaustion_returns_incumbent(self):
        full = max_gp_free_exact(90, 3)
        capped = max_gp_free_exact(90, 3, node_budget=2)
        assert not capped.optimal
        assert capped.nodes_explored < 50  # budget cuts each component off early
        assert capped.max_size <= full.max_size
        assert find_gp(capped.witness, 3) is None

    def test_determinism(self):
        a = max_gp_free_exact(70, 3)
        b = max_gp_free_exact(70, 3)
        assert (a.max_size, a.witness, a.nodes_explored, a.optimal) == (
            b.max_size,
            b.witness,
            b.nodes_explored,
            b.optimal,
        )

    def test_timeout_degrades_gracefully(self):
        result = max_gp_free_exact(95, 3, timeout=0.0)
        assert not result.optimal
        assert find_gp(result.witness, 3) is None
        assert result.max_size <= 95


class TestGreedy:
    def test_n10(self):
        result = greedy_gp_free(10, 3)
        assert result.witness == (1, 2, 3, 5, 6, 7, 8, 10)
        assert result.max_size == 8

    def test_n4(self):
        assert greedy_gp_free(4, 3).witness == (1, 2, 3)

    def test_trivial_full_set(self):
        for k in (3, 4, 6):
            n = 2 ** (k - 1) - 1
            result = greedy_gp_free(n, k)
            assert result.witness == tuple(range(1, n + 1))
            assert result.optimal

    def test_never_beats_exact(self):
        for n in range(1, 41):
            assert greedy_gp_free(n, 3).max_size <= max_gp_free_exact(n, 3).max_size

    def test_witness_gp_free(self):
        for n, k in [(200, 3), (500, 4)]:
            result = greedy_gp_free(n, k)
            assert find_gp(result.witness, k) is None
            assert not result.optimal


class TestSquarefree:
    def test_n10(self):
        assert squarefree_set(10) == {1, 2, 3, 5, 6, 7, 10}

    def test_n1(self):
        assert squarefree_set(1) == {1}

    def test_n100_count(self):
        assert len(squarefree_set(100)) == 61

    def test_counts_match_mobius_oracle(self):
        for n in (1, 2, 10, 99, 1000, 4096, 10**5):
            assert len(squarefree_set(n)) == mobius_squarefree_count(n)

    def test_gp_free_for_k3(self):
        for n in (50, 500, 10**4):
            assert find_gp(squarefree_set(n), 3) is None

    def test_at_most_exact_maximum(self):
        for n in (20, 40, 60):
            assert len(squarefree_set(n)) <= max_gp_free_exact(n, 3).max_size

    def test_rejects_bad_n(self):
        with pytest.raises(ValueError):
            squarefree_set(0)


class TestDensityReport:
    def test_exact_n10(self):
        report = density_report(10, 3, "exact")
        assert report.size == 8
        assert report.density == Fraction(4, 5)
        assert report.bound == improved_bound(3)
        assert report.excluded == 2
        assert report.certified_exclusions <= 2
        assert report.optimal

    @pytest.mark.parametrize("method", ["exact", "greedy", "squarefree"])
    def test_trivial_full_density(self, method):
        report = density_report(3, 3, method)
        assert report.density == 1

    def test_squarefree_method(self):
        report = density_report(1000, 3, "squarefree")
        assert report.size == len(squarefree_set(1000))
        assert not report.optimal

    def test_squarefree_density_at_desk_scale(self):
        report = density_report(10**6, 3, "squarefree")
        assert Fraction(6076, 10**4) <= report.density <= Fraction(6082, 10**4)
        assert report.excluded >= report.certified_exclusions

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            density_report(10, 3, "magic")
