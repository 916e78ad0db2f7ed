import math

import pytest

from ppicod.bounds import is_infeasible
from ppicod.errors import CapExceeded, ParameterError
from ppicod.gf2 import gaussian_binomial, rank
from ppicod.instance import Instance
from ppicod.oracle import (
    SEARCH_BUDGET,
    count_valid_codes,
    optimal_linear_length,
    pattern_sizes,
    prove_linear_infeasible,
    scan_dimension,
    search_cost,
    valid_codes,
)
from ppicod.validator import validate_linear


class TestOptimal:
    def test_m6_s2(self):
        r = optimal_linear_length(Instance(6, 2), 3)
        assert (r.status, r.ell_star) == ("Found", 2)
        # every 1-dim subspace is rejected before dimension 2 is entered
        assert r.checked_by_dim[1] == gaussian_binomial(6, 1) == 63
        assert r.checked_by_dim[2] <= gaussian_binomial(6, 2) == 651
        assert validate_linear(r.witness.generator, Instance(6, 2)).valid

    def test_m5_s3_infeasible(self):
        r = optimal_linear_length(Instance(5, 3), 5)
        assert r.status == "InfeasibleLinear" and r.witness is None
        assert r.subspaces_checked == sum(gaussian_binomial(5, k) for k in range(1, 6)) == 373

    def test_two_users(self):
        r = optimal_linear_length(Instance(2, 1), 2)
        assert r.ell_star == 1 and r.witness.generator.to_messages() == [[1, 2]]

    def test_inconclusive(self):
        r = optimal_linear_length(Instance(7, 3), 1)
        assert r.status == "Inconclusive" and r.searched_up_to == 1

    def test_bad_ell_max(self):
        with pytest.raises(ParameterError):
            optimal_linear_length(Instance(5, 2), 6)

    def test_cap(self):
        assert SEARCH_BUDGET == search_cost(10, 3) == 6522989
        with pytest.raises(CapExceeded):
            optimal_linear_length(Instance(11, 2), 3)
        with pytest.raises(CapExceeded):
            optimal_linear_length(Instance(10, 2), 4)

    def test_deterministic_witness(self):
        a = optimal_linear_length(Instance(7, 2), 3)
        b = optimal_linear_length(Instance(7, 2), 3)
        assert a.witness == b.witness

    def test_workers_do_not_change_witness(self):
        inst = Instance(7, 2)
        a = optimal_linear_length(inst, 3, workers=1)
        b = optimal_linear_length(inst, 3, workers=2)
        assert a.witness == b.witness and a.checked_by_dim == b.checked_by_dim

    def test_witness_minimality_by_re_search(self):
        inst = Instance(8, 2)
        r = optimal_linear_length(inst, 3)
        for k in range(1, r.ell_star):
            assert scan_dimension(inst, k, stop_first=False)[2] == 0

    def test_json(self):
        d = optimal_linear_length(Instance(2, 1), 2).to_dict()
        assert d["status"] == "Found" and d["witness"]["rows"] == [[1, 2]]


class TestProofs:
    @pytest.mark.parametrize("m,s", [(5, 1), (5, 3), (7, 1), (7, 5), (3, 1)])
    def test_infeasible(self, m, s):
        assert prove_linear_infeasible(Instance(m, s))

    @pytest.mark.parametrize("m,s", [(6, 1), (6, 4), (7, 2)])
    def test_feasible(self, m, s):
        assert not prove_linear_infeasible(Instance(m, s))

    def test_cap(self):
        with pytest.raises(CapExceeded):
            prove_linear_infeasible(Instance(9, 1))

    def test_infeasible_clause_matches_oracle(self):
        for m in range(2, 8):
            for s in range(1, m):
                inst = Instance(m, s)
                assert prove_linear_infeasible(inst) == is_infeasible(inst), (m, s)


class TestCounting:
    @pytest.mark.parametrize("ell", range(1, 6))
    def test_impossible_instance(self, ell):
        assert count_valid_codes(Instance(5, 3), ell) == 0

    def test_two_users(self):
        assert count_valid_codes(Instance(2, 1), 1) == 1

    def test_m4_s2_regression(self):
        # frozen from the first oracle run: span{w1+w3} and span{w2+w4}
        assert count_valid_codes(Instance(4, 2), 1) == 2
        found = [c.to_messages() for c in valid_codes(Instance(4, 2), 1)]
        assert [[1, 3]] in found

    def test_counts_match_enumeration(self):
        inst = Instance(6, 2)
        for k in (1, 2, 3):
            codes = list(valid_codes(inst, k))
            assert len(codes) == count_valid_codes(inst, k)
            assert all(rank(c) == k and validate_linear(c, inst).valid for c in codes)

    def test_pattern_sizes_sum(self):
        for m in range(1, 7):
            for k in range(1, m + 1):
                assert sum(pattern_sizes(m, k)) == gaussian_binomial(m, k)

    def test_cap(self):
        with pytest.raises(CapExceeded):
            count_valid_codes(Instance(9, 2), 1)


def test_g1_small_s_within_band():
    from ppicod.bounds import classify

    for m in range(3, 11):
        for s in range(1, m):
            inst = Instance(m, s)
            if 2 * s >= m or is_infeasible(inst):
                continue
            rep = classify(inst, False)
            ell_max = min(rep.lin_upper, m)
            if search_cost(m, ell_max) > SEARCH_BUDGET:
                continue
            r = optimal_linear_length(inst, ell_max)
            assert r.found and rep.lin_lower <= r.ell_star <= rep.lin_upper, (m, s)
            assert r.ell_star >= math.ceil((m // s) / 2)
