"""Exact packing oracle and the leave-nonexistence search."""

import pytest

from triplepack.errors import InvalidParameterError, WrongCaseError
from triplepack.multigraph import Multigraph
from triplepack.oracle import (
    BlockCollection,
    ReportStatus,
    max_packing,
    search_leave_nonexistence,
    verify_packing,
)
from triplepack.params import johnson_bound, packing_number_k4


class TestVerifyPacking:
    def test_accepts_valid(self):
        bc = BlockCollection(6, 3, 2, 1, ((0, 1, 2), (3, 4, 5), (0, 3, 4)))
        assert not verify_packing(bc)  # (3,4) covered twice
        bc = BlockCollection(6, 3, 2, 1, ((0, 1, 2), (3, 4, 5), (0, 3, 5)))
        assert not verify_packing(bc)  # (3,5) covered twice
        bc = BlockCollection(6, 3, 2, 1, ((0, 1, 2), (0, 3, 4), (1, 3, 5)))
        assert verify_packing(bc)

    def test_rejects_malformed_block(self):
        assert not verify_packing(BlockCollection(5, 3, 2, 1, ((0, 1, 1),)))
        assert not verify_packing(BlockCollection(5, 3, 2, 1, ((0, 1, 9),)))


class TestMaxPacking:
    def test_fano(self):
        rep = max_packing(7, 3, 2)
        assert rep.status is ReportStatus.OPTIMAL and rep.value == 7
        assert verify_packing(BlockCollection(7, 3, 2, 1, rep.witness))

    def test_k4_agreement_small(self):
        # the k = 4 closed formula, reproduced by exhaustive search
        for n in range(4, 9):
            rep = max_packing(n, 4, 3)
            assert rep.status is ReportStatus.OPTIMAL
            assert rep.value == packing_number_k4(n), n

    def test_witness_meeting_johnson_is_optimal(self):
        rep = max_packing(9, 4, 3)
        assert rep.value == 18 == johnson_bound(9, 4, 3)
        assert rep.status is ReportStatus.OPTIMAL

    def test_frozen_9_5(self):
        # far below J(9,5,3) = 7: desk-scale reality of the small-n gap
        rep = max_packing(9, 5, 3)
        assert rep.status is ReportStatus.OPTIMAL and rep.value == 3

    def test_budget(self):
        rep = max_packing(13, 4, 3, budget=10)
        assert rep.status is ReportStatus.BUDGET

    def test_rejects_bad_order(self):
        with pytest.raises(InvalidParameterError):
            max_packing(3, 4, 3)


class TestLeaveNonexistence:
    def test_wrong_case(self):
        with pytest.raises(WrongCaseError):
            search_leave_nonexistence(9, 5)

    def test_unreachable_weight_is_immediate(self):
        # xi = J leaves total weight 2, below any brick: none-exists
        rep = search_leave_nonexistence(14, 5, xi_target=johnson_bound(14, 5, 3))
        assert rep.status is ReportStatus.NONE_EXISTS

    def test_relaxed_witness_small_target(self):
        # xi = 35 leaves weight 7: relaxed mode finds 2K7 quickly; the
        # full J - 2 run lives in the acceptance suite
        rep = search_leave_nonexistence(14, 5, xi_target=35, relax=True)
        assert rep.status is ReportStatus.WITNESS_FOUND
        total = sum(2 * g.edge_count() for g in rep.witness)
        assert total == 14 * 13 * 12 - 5 * 4 * 3 * 35
        assert sum(g.n for g in rep.witness) <= 14

    def test_witness_pieces_decompose(self):
        from triplepack.decomp import SearchStatus, find_triangle_decomposition

        rep = search_leave_nonexistence(14, 5, xi_target=35, relax=True)
        for g in rep.witness:
            res = find_triangle_decomposition(g)
            assert res.status is SearchStatus.FOUND
