"""Group divisible designs: predicates, search, assembly, juxtaposition."""

import pytest

from triplepack.decomp import SearchStatus, verify_decomposition
from triplepack.errors import DisjointnessError, InvalidParameterError
from triplepack.gdd import (
    GddInstance,
    GddShape,
    assemble_simple_gdd,
    gadget_multigraph,
    gdd_block_count,
    juxtapose,
    lgdd_exists,
    search_disjoint_simple_gdds,
    search_simple_gdd,
    simple_gdd_exists,
    simple_ts_exists,
    verify_gdd,
)


class TestPredicates:
    def test_simple_ts(self):
        assert simple_ts_exists(7, 1)
        assert not simple_ts_exists(8, 1)
        assert simple_ts_exists(9, 1)
        assert not simple_ts_exists(7, 6)  # lam > u - 2

    def test_lgdd_exception(self):
        assert not lgdd_exists(1, 7, 1)  # the lone exception
        assert lgdd_exists(1, 9, 1)

    def test_simple_gdd(self):
        assert simple_gdd_exists(2, 3, 2)
        assert not simple_gdd_exists(2, 3, 3)  # parity: lam*g*(u-1) odd
        assert not simple_gdd_exists(1, 7, 6)  # lam above g(u-2)

    def test_block_count(self):
        assert gdd_block_count(1, 7, 1) == 7
        assert gdd_block_count(2, 3, 2) == 8
        with pytest.raises(InvalidParameterError):
            gdd_block_count(1, 5, 1)


class TestShapes:
    def test_shape_order(self):
        assert GddShape(((2, 3),), 3, 1).v == 6
        with pytest.raises(InvalidParameterError):
            GddShape(((2, 1),), 3, 1)  # a single group is not a GDD

    def test_gadget_multigraph(self):
        g = gadget_multigraph(2, 3, 2)
        assert g.n == 6
        assert g.mult(0, 1) == 0       # same group
        assert g.mult(0, 2) == 2       # cross
        assert g.edge_count() == 2 * (4 * 3)


class TestSearch:
    def test_fano_as_gdd(self):
        status, inst, _ = search_simple_gdd(1, 7, 1)
        assert status is SearchStatus.FOUND
        assert verify_gdd(inst)
        assert len(inst.blocks) == 7

    def test_search_matches_predicate_grid(self):
        for g in range(1, 5):
            for u in range(2, 11):
                if g * u > 10 or u < 3:
                    continue
                for lam in range(1, 9):
                    status, inst, _ = search_simple_gdd(g, u, lam)
                    assert (status is SearchStatus.FOUND) == simple_gdd_exists(
                        g, u, lam
                    ), (g, u, lam)
                    if inst is not None:
                        assert verify_gdd(inst)
                        assert verify_decomposition(
                            gadget_multigraph(g, u, lam), inst.blocks
                        )

    def test_search_cap(self):
        with pytest.raises(InvalidParameterError):
            search_simple_gdd(4, 4, 1)

    def test_disjoint_search_and_juxtapose(self):
        status, insts = search_disjoint_simple_gdds(2, 6, 1, count=2)
        assert status is SearchStatus.FOUND and len(insts) == 2
        union = juxtapose(insts)
        assert union.lam == 2
        assert verify_gdd(union)

    def test_disjoint_beyond_capacity(self):
        # lam = 2 = g(u-2) uses every transverse triple of 2^3 already
        status, insts = search_disjoint_simple_gdds(2, 3, 2, count=2)
        assert status is not SearchStatus.FOUND and len(insts) == 1

    def test_juxtapose_rejects_overlap(self):
        status, inst, _ = search_simple_gdd(1, 7, 1)
        with pytest.raises(DisjointnessError):
            juxtapose([inst, inst])

    def test_assemble_hard_index(self):
        # (3,5)-GDD(2^6): slow for plain backtracking, fast by
        # complementing three disjoint index-1 designs
        inst = assemble_simple_gdd(2, 6, 5)
        assert inst is not None
        assert verify_gdd(inst)
        assert verify_decomposition(gadget_multigraph(2, 6, 5), inst.blocks)

    def test_assemble_extremes(self):
        # lam = cap: all transverse triples
        cap = 2 * (3 - 2)
        inst = assemble_simple_gdd(2, 3, cap)
        assert inst is not None and verify_gdd(inst)
        assert assemble_simple_gdd(2, 3, cap + 1) is None


class TestVerifyGdd:
    def test_rejects_within_group_pair(self):
        inst = GddInstance(
            groups=((0, 1), (2, 3)),
            blocks=((0, 1, 2),),
            lam=1,
        )
        assert not verify_gdd(inst)

    def test_rejects_repeated_block(self):
        status, good, _ = search_simple_gdd(2, 3, 2)
        doubled = GddInstance(
            groups=good.groups, blocks=good.blocks + good.blocks[:1], lam=good.lam
        )
        assert not verify_gdd(doubled)
