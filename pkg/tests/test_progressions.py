import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gpfree import (
    BRUTE_FORCE_CAP,
    TERM_LIMIT,
    Progression,
    Ratio,
    TermOverflowError,
    as_progression,
    brute_force_gps,
    canonical_ratio,
    enumerate_gps,
    expand,
    find_gp,
    is_gp_free,
)
from gpfree.progressions import gps_to_lines


class TestCanonicalRatio:
    def test_gcd_reduction(self):
        assert canonical_ratio(6, 4) == Ratio(3, 2)

    def test_orientation_swap(self):
        assert canonical_ratio(2, 3) == Ratio(3, 2)

    def test_ratio_one_rejected(self):
        with pytest.raises(ValueError):
            canonical_ratio(5, 5)
        with pytest.raises(ValueError):
            canonical_ratio(10, 10)

    @pytest.mark.parametrize("p,q", [(0, 1), (1, 0), (-2, 3), (3, -2)])
    def test_nonpositive_rejected(self, p, q):
        with pytest.raises(ValueError):
            canonical_ratio(p, q)

    @given(st.integers(1, 10**6), st.integers(1, 10**6))
    def test_invariants(self, p, q):
        if p == q:
            with pytest.raises(ValueError):
                canonical_ratio(p, q)
            return
        r = canonical_ratio(p, q)
        assert r.p > r.q >= 1
        assert math.gcd(r.p, r.q) == 1
        assert r.as_fraction() == max(Fraction(p, q), Fraction(q, p))

    def test_unreduced_ratio_constructor_rejected(self):
        with pytest.raises(ValueError):
            Ratio(4, 2)
        with pytest.raises(ValueError):
            Ratio(2, 3)

    def test_str(self):
        assert str(Ratio(2, 1)) == "2"
        assert str(Ratio(5, 3)) == "5/3"


class TestExpand:
    def test_ratio_three_halves(self):
        assert expand(Progression(1, Ratio(3, 2), 4)) == [8, 12, 18, 27]

    def test_smallest_progression(self):
        assert expand(Progression(1, Ratio(2, 1), 3)) == [1, 2, 4]

    def test_five_thirds(self):
        # 9*29, 15*29, 25*29
        assert expand(Progression(29, Ratio(5, 3), 3)) == [261, 435, 725]

    def test_overflow_reported(self):
        with pytest.raises(TermOverflowError):
            expand(Progression(1, Ratio(2, 1), 100))

    def test_bad_progression_params(self):
        with pytest.raises(ValueError):
            Progression(0, Ratio(2, 1), 3)
        with pytest.raises(ValueError):
            Progression(1, Ratio(2, 1), 2)

    @given(
        st.integers(1, 10**4),
        st.integers(1, 40),
        st.integers(1, 40),
        st.integers(3, 8),
    )
    def test_roundtrip_with_as_progression(self, m, p, q, k):
        if p == q:
            return
        prog = Progression(m, canonical_ratio(p, q), k)
        terms = expand(prog)
        assert all(b > a for a, b in zip(terms, terms[1:]))
        assert as_progression(terms) == prog

    def test_as_progression_rejects_non_gp(self):
        with pytest.raises(ValueError):
            as_progression([1, 2, 3])
        with pytest.raises(ValueError):
            as_progression([1, 2])
        with pytest.raises(ValueError):
            as_progression([4, 2, 1])


class TestEnumerate:
    def test_n10(self):
        assert set(enumerate_gps(10, 3)) == {(1, 2, 4), (2, 4, 8), (1, 3, 9), (4, 6, 9)}

    def test_below_smallest_progression(self):
        assert enumerate_gps(3, 3) == []

    def test_n100_count(self):
        # independently: sum over p of phi(p) * floor(100 / p^2)
        assert len(enumerate_gps(100, 3)) == 105

    def test_order_is_p_q_m_lexicographic(self):
        assert enumerate_gps(10, 3) == [(1, 2, 4), (2, 4, 8), (1, 3, 9), (4, 6, 9)]

    def test_no_duplicates_and_in_range(self):
        for n, k in [(60, 3), (80, 4), (200, 5)]:
            gps = enumerate_gps(n, k)
            assert len(gps) == len(set(gps))
            for g in gps:
                assert len(g) == k
                assert 1 <= g[0] and g[-1] <= n
                assert all(b > a for a, b in zip(g, g[1:]))
                assert expand(as_progression(g)) == list(g)

    def test_monotone_in_n(self):
        for n in range(1, 60):
            assert set(enumerate_gps(n, 3)) <= set(enumerate_gps(n + 1, 3))

    def test_bad_domain(self):
        with pytest.raises(ValueError):
            enumerate_gps(0, 3)
        with pytest.raises(ValueError):
            enumerate_gps(10, 2)
        with pytest.raises(TermOverflowError):
            enumerate_gps(TERM_LIMIT + 1, 3)


class TestBruteForce:
    def test_matches_enumerate_small(self):
        for n in (10, 25, 40):
            assert set(brute_force_gps(n, 3)) == set(enumerate_gps(n, 3))

    def test_n15_k4(self):
        assert brute_force_gps(15, 4) == [(1, 2, 4, 8)]

    def test_empty(self):
        assert brute_force_gps(3, 3) == []

    def test_guard(self):
        n = 300
        assert math.comb(n, 5) > BRUTE_FORCE_CAP
        with pytest.raises(ValueError):
            brute_force_gps(n, 5)


class TestFindGp:
    def test_ratio_three_halves_witness(self):
        assert find_gp({8, 12, 18, 27}, 4) == (8, 12, 18, 27)

    def test_too_small(self):
        assert find_gp({5, 9}, 3) is None
        assert find_gp(set(), 3) is None

    def test_free_set(self):
        assert find_gp({1, 2, 3, 5, 6, 7, 8, 10}, 3) is None
        assert is_gp_free({1, 2, 3, 5, 6, 7, 8, 10}, 3)

    def test_first_witness_in_enumeration_order(self):
        assert find_gp(set(range(1, 11)), 3) == (1, 2, 4)

    @settings(max_examples=60)
    @given(st.sets(st.integers(1, 40), min_size=3, max_size=14))
    def test_agrees_with_enumeration(self, members):
        witness = find_gp(members, 3)
        contained = [g for g in enumerate_gps(max(members), 3) if set(g) <= members]
        if witness is None:
            assert not contained
        else:
            assert set(witness) <= members
            assert witness in contained

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            find_gp({0, 1, 2}, 3)

    def test_rejects_small_k_even_for_small_sets(self):
        with pytest.raises(ValueError):
            find_gp({1}, 2)


def test_gps_to_lines():
    assert gps_to_lines([(1, 2, 4), (4, 6, 9)]) == "1,2,4\n4,6,9"
