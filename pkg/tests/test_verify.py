import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from vizing.errors import BudgetExceededError, InvalidInputError, PreconditionError
from vizing.graph import cycle_graph, empty_graph, erdos_renyi, path_graph
from vizing.product import cartesian_product
from vizing.solver import gamma_bruteforce
from vizing.verify import (check_corollary_bound, check_pair, check_theorem_condition,
                           max_order_under_bound, suen_tarr_holds, vizing_holds)


class TestCheckPair:
    def test_p2_p2(self):
        r = check_pair(path_graph(2), path_graph(2))
        assert gamma_bruteforce(cartesian_product(path_graph(2), path_graph(2)).graph).gamma == 2
        assert (r.gamma_g, r.gamma_h, r.gamma_product) == (1, 1, 2)
        assert r.vizing_holds

    def test_c4_c4(self):
        r = check_pair(cycle_graph(4), cycle_graph(4))
        assert gamma_bruteforce(cartesian_product(cycle_graph(4), cycle_graph(4)).graph).gamma == 4
        assert (r.gamma_g, r.gamma_h, r.gamma_product) == (2, 2, 4)
        assert r.vizing_holds and r.suen_tarr_holds and r.theorem_condition

    def test_k1_k1(self):
        r = check_pair(empty_graph(1), empty_graph(1))
        assert (r.gamma_g, r.gamma_h, r.gamma_product) == (1, 1, 1)
        assert r.vizing_holds

    def test_p_column(self):
        assert check_pair(cycle_graph(4), cycle_graph(4)).corollary_bound_holds is None
        r = check_pair(cycle_graph(4), cycle_graph(4), p=0.5)
        assert r.corollary_bound_holds is True and r.p_used == 0.5
        # |H| = 1 fails the precondition, so the column stays empty
        assert check_pair(empty_graph(1), empty_graph(1), p=0.5).corollary_bound_holds is None

    def test_budget_label(self):
        g = erdos_renyi(30, 0.2, 3)
        with pytest.raises(BudgetExceededError, match="gamma"):
            check_pair(g, path_graph(2), budget=1)

    @settings(max_examples=80, deadline=None)
    @given(graphs(max_n=5), graphs(max_n=5))
    def test_inequalities_hold(self, g, h):
        r = check_pair(g, h)
        assert r.vizing_holds and r.suen_tarr_holds
        assert r.vizing_holds == (r.gamma_product >= r.gamma_g * r.gamma_h)


def test_suen_tarr_boundary():
    # 2*3 >= 2*2 + 2 holds with equality, 2*2 does not
    assert suen_tarr_holds(2, 2, 3)
    assert not suen_tarr_holds(2, 2, 2)
    assert suen_tarr_holds(1, 3, 2)
    assert not vizing_holds(2, 2, 3)


class TestTheoremCondition:
    def test_examples(self):
        assert check_theorem_condition(empty_graph(4), empty_graph(4), 2, 2)
        assert not check_theorem_condition(empty_graph(3), empty_graph(9), 2, 3)
        assert check_theorem_condition(empty_graph(25), empty_graph(25), 5, 5)

    @given(st.integers(1, 30), st.integers(1, 30), st.integers(1, 6), st.integers(1, 6))
    def test_symmetric(self, a, b, x, y):
        g, h = empty_graph(a), empty_graph(b)
        assert check_theorem_condition(g, h, x, y) == check_theorem_condition(h, g, y, x)


class TestCorollary:
    def test_equality_16(self):
        assert check_corollary_bound(16, 16, 0.5)

    def test_17_fails(self):
        assert not check_corollary_bound(17, 16, 0.5)

    def test_equality_2_32(self):
        assert check_corollary_bound(2 ** 32, 256, 0.5)
        # one past 2**32 sits inside the 1e-9 log tolerance; 2**32 * 1.001 does not
        assert check_corollary_bound(2 ** 32 + 1, 256, 0.5)
        assert not check_corollary_bound(int(2 ** 32 * 1.001), 256, 0.5)

    def test_h2_bound(self):
        assert max_order_under_bound(2, 0.5, 100) == 4

    def test_errors(self):
        with pytest.raises(InvalidInputError):
            check_corollary_bound(4, 4, 1.0)
        with pytest.raises(InvalidInputError):
            check_corollary_bound(4, 4, -0.1)
        with pytest.raises(InvalidInputError):
            check_corollary_bound(4, 4, 0.0)
        with pytest.raises(InvalidInputError):
            check_corollary_bound(4, 1, 0.5)
        with pytest.raises(PreconditionError):
            check_corollary_bound(3, 4, 0.5)

    @pytest.mark.parametrize("h", range(2, 64))
    def test_integer_power_cross_check(self, h):
        # q = 2: any |G| <= 2**floor(e) passes, any |G| > 2**ceil(e) fails
        e = h / math.log2(h)
        lo, hi = math.floor(e), math.ceil(e)
        if 2 ** lo >= h:
            assert check_corollary_bound(2 ** lo, h, 0.5)
        if 2 ** hi + 1 >= h:
            assert not check_corollary_bound(2 ** hi + 1, h, 0.5)

    @pytest.mark.parametrize("k", [1, 2, 4])
    def test_exact_powers(self, k):
        # h = 2**2**k makes the exponent h / log2 h an integer
        h = 2 ** 2 ** k
        bound = 2 ** (h // 2 ** k)
        if bound < h:
            return
        assert check_corollary_bound(bound, h, 0.5)
        assert not check_corollary_bound(bound * 2, h, 0.5)

    @pytest.mark.parametrize("p", [0.1, 0.3, 0.5, 0.9])
    def test_max_order_is_threshold(self, p):
        for h in range(2, 40):
            m = max_order_under_bound(h, p, 10 ** 6)
            if m is None:
                assert not check_corollary_bound(h, h, p)
                continue
            assert check_corollary_bound(m, h, p)
            if m < 10 ** 6:
                assert not check_corollary_bound(m + 1, h, p)
