import random
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

import pytest
from hypothesis import given, settings

from conftest import graphs
from hypembed.bounds import (
    bound_report,
    bw_balanced_multipartite,
    bw_clique_product,
    bw_folded_hypercube,
    bw_hypercube,
    closed_form_bw,
    dilation_lower_bound,
    dilation_upper_from_antimatching,
    ec_lower_bound,
    has_perfect_antimatching,
    lindsey_lex_edge_count,
    wl_lower_bound,
)
from hypembed.graph import (
    Graph,
    GuardError,
    clique_product,
    complete_graph,
    complete_multipartite,
    cycle,
    folded_hypercube,
    hypercube,
    wheel,
)


def exhaustive_perfect_pairing(g):
    """Does the complement of g split into disjoint non-adjacent pairs?"""

    @lru_cache(maxsize=None)
    def solve(remaining):
        if not remaining:
            return True
        first = (remaining & -remaining).bit_length() - 1
        rest = remaining & ~(1 << first)
        for v in range(g.order):
            if rest >> v & 1 and not g.has_edge(first, v):
                if solve(rest & ~(1 << v)):
                    return True
        return False

    return solve((1 << g.order) - 1)


class TestAntiMatching:
    def test_k4(self):
        assert has_perfect_antimatching(complete_graph(4)) is None

    def test_c4(self):
        assert has_perfect_antimatching(cycle(4)).pairs == ((0, 2), (1, 3))

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_wheel(self, n):
        assert has_perfect_antimatching(wheel(2**n)) is None

    def test_odd_order(self):
        assert has_perfect_antimatching(Graph(5, ())) is None

    @settings(max_examples=300)
    @given(graphs(0, 10))
    def test_matches_exhaustive_pairing(self, g):
        am = has_perfect_antimatching(g)
        assert (am is not None) == exhaustive_perfect_pairing(g)
        if am is not None:
            assert 2 * len(am) == g.order
            assert not any(g.has_edge(a, b) for a, b in am.pairs)

    def test_large_complement(self):
        g = complete_multipartite([32] * 4)
        assert has_perfect_antimatching(g) is not None


class TestDilationBounds:
    @pytest.mark.parametrize(
        "n,delta,want",
        [(4, 15, 4), (4, 12, 3), (3, 1, 1), (4, 0, 0), (4, 14, 3), (4, 11, 3), (4, 10, 2)],
    )
    def test_lower_bound(self, n, delta, want):
        assert dilation_lower_bound(n, delta) == want

    @pytest.mark.parametrize("n", range(1, 9))
    def test_lower_bound_definition(self, n):
        from math import comb

        for delta in range(2**n):
            ks = [k for k in range(1, n + 2) if sum(comb(n, i) for i in range(1, k)) < delta]
            assert dilation_lower_bound(n, delta) == max(ks, default=0)

    def test_impossible_degree(self):
        with pytest.raises(ValueError):
            dilation_lower_bound(3, 8)

    def test_upper_from_antimatching(self):
        assert dilation_upper_from_antimatching(complete_graph(16)) == 4
        assert dilation_upper_from_antimatching(complete_multipartite([4, 4, 4, 4])) == 3
        assert dilation_upper_from_antimatching(wheel(16)) == 4

    def test_upper_needs_power_of_two(self):
        with pytest.raises(ValueError):
            dilation_upper_from_antimatching(cycle(6))


class TestCongestionAndWirelength:
    def test_folded(self):
        assert ec_lower_bound(bw_folded_hypercube(3), bw_hypercube(3)) == (Fraction(2), 2)

    def test_zero(self):
        assert ec_lower_bound(0, 4) == (Fraction(0), 0)

    def test_k4444(self):
        assert ec_lower_bound(bw_balanced_multipartite(4, 2), bw_hypercube(4)) == (Fraction(6), 6)

    def test_ceiling(self):
        assert ec_lower_bound(5, 4) == (Fraction(5, 4), 2)

    def test_bad_host(self):
        with pytest.raises(ValueError):
            ec_lower_bound(3, 0)

    def test_wl(self):
        assert wl_lower_bound(3, 8) == 24
        assert wl_lower_bound(4, 48) == 192
        assert wl_lower_bound(5, 0) == 0


class TestClosedForms:
    def test_multipartite(self):
        assert bw_balanced_multipartite(2, 1) == 2
        assert bw_balanced_multipartite(4, 2) == 48
        for n in range(2, 9):
            for p in range(1, n):
                assert bw_balanced_multipartite(2**p, 2 ** (n - p - 1)) == 2 ** (2 * n - p - 2) * (2**p - 1)

    @pytest.mark.parametrize("t,r", [(1, 1), (2, 0)])
    def test_multipartite_range(self, t, r):
        with pytest.raises(ValueError):
            bw_balanced_multipartite(t, r)

    def test_clique_product(self):
        assert bw_clique_product([1, 2]) == 2
        assert bw_clique_product([2, 4]) == 16
        for n in range(2, 13, 2):
            assert bw_clique_product([2 ** (n // 2 - 1), 2 ** (n // 2)]) == 2 ** (3 * n // 2 - 2)

    def test_clique_product_order(self):
        with pytest.raises(ValueError):
            bw_clique_product([2, 3])

    def test_cited(self):
        assert bw_hypercube(3) == 4
        assert bw_folded_hypercube(3) == 8
        assert bw_hypercube(2) == 2

    @pytest.mark.parametrize("t,r", [(2, 1), (3, 1), (3, 2), (4, 2), (5, 3)])
    def test_cauchy_schwarz_step(self, t, r):
        g = complete_multipartite([2 * r] * t)
        rng = random.Random(t * 100 + r)
        for _ in range(200):
            a = set(rng.sample(range(g.order), t * r))
            inside = sum(1 for u, v in g.edges if u in a and v in a)
            assert 2 * inside <= r * r * t * (t - 1)


class TestLindsey:
    def test_examples(self):
        assert lindsey_lex_edge_count([2, 2], 2) == 1
        assert lindsey_lex_edge_count([2, 2], 1) == 0
        assert lindsey_lex_edge_count([2, 2], 4) == 4

    @pytest.mark.parametrize("p", [[2, 3], [2, 2, 3], [3, 4, 5]])
    def test_against_tuple_enumeration(self, p):
        order = sorted(product(*(range(1, k + 1) for k in p)))
        for m in range(1, len(order) + 1):
            first = order[:m]
            direct = sum(1 for a, b in combinations(first, 2) if sum(x != y for x, y in zip(a, b)) == 1)
            assert lindsey_lex_edge_count(p, m) == direct

    def test_full_product(self):
        g = clique_product([4, 8])
        assert lindsey_lex_edge_count([4, 8], 32) == g.size

    def test_errors(self):
        with pytest.raises(ValueError):
            lindsey_lex_edge_count([2, 2], 5)
        with pytest.raises(ValueError):
            lindsey_lex_edge_count([3, 2], 2)
        with pytest.raises(GuardError):
            lindsey_lex_edge_count([1024, 2048], 3)


class TestReport:
    def test_k4444(self):
        r = bound_report(complete_multipartite([4, 4, 4, 4]), 4)
        assert (r.dilation_lb, r.wirelength_lb, r.congestion_lb_int, r.bw_used, r.bw_source) == (3, 192, 6, 48, "closed-form")
        assert r.congestion_lb_exact == Fraction(6)

    def test_folded(self):
        r = bound_report(folded_hypercube(3), 3)
        assert (r.wirelength_lb, r.congestion_lb_int, r.bw_source) == (24, 2, "closed-form")

    def test_oracle_fallback(self):
        r = bound_report(cycle(8), 3)
        assert (r.bw_used, r.bw_source, r.wirelength_lb) == (2, "oracle", 6)

    def test_user_supplied(self):
        r = bound_report(cycle(8), 3, 3)
        assert (r.bw_used, r.bw_source, r.congestion_lb_exact, r.congestion_lb_int) == (3, "user-supplied", Fraction(3, 4), 1)

    def test_invariants(self):
        for g, n in [(hypercube(4), 4), (wheel(8), 3), (clique_product([4, 4]), 4)]:
            r = bound_report(g, n)
            assert r.wirelength_lb == n * r.bw_used
            assert r.congestion_lb_int == -(-r.congestion_lb_exact.numerator // r.congestion_lb_exact.denominator)

    def test_recognized_families(self):
        assert closed_form_bw(hypercube(4)) == 8
        assert closed_form_bw(clique_product([4, 4])) == 16
        assert closed_form_bw(complete_multipartite([3, 3])) is None
        assert closed_form_bw(cycle(8)) is None

    def test_order_mismatch(self):
        with pytest.raises(ValueError):
            bound_report(cycle(6), 3)

    def test_guard(self):
        with pytest.raises(GuardError):
            bound_report(cycle(32), 5)
