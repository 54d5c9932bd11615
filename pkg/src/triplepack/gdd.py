"""Group divisible designs: existence predicates, small exact search,
juxtaposition, and the complete-multipartite gadget graphs.

A (k, lam)-GDD is a point set partitioned into >= 2 groups together with
k-subset blocks covering every cross-group pair exactly lam times and no
within-group pair; simple means no repeated block.  Only k = 3 designs
are searched or constructed here; general k is accepted for verification
of imported instances.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .decomp import (
    DecompositionResult,
    SearchStatus,
    find_triangle_decomposition,
)
from .errors import DisjointnessError, InvalidParameterError
from .multigraph import Multigraph


@dataclass(frozen=True)
class GddShape:
    """Group type g1^u1 ... gs^us with block size k and index lam."""

    group_sizes: tuple  # ((g1, u1), ..., (gs, us)), gi distinct
    k: int
    lam: int

    def __post_init__(self):
        if self.k < 2 or self.lam < 1:
            raise InvalidParameterError("need k >= 2, lam >= 1")
        if sum(u for _, u in self.group_sizes) < 2:
            raise InvalidParameterError("a GDD needs at least 2 groups")
        if any(g < 1 or u < 1 for g, u in self.group_sizes):
            raise InvalidParameterError("group sizes and counts must be >= 1")

    @property
    def v(self) -> int:
        return sum(g * u for g, u in self.group_sizes)


@dataclass(frozen=True)
class GddInstance:
    """Points 0..v-1, a partition into groups, and the block list."""

    groups: tuple  # tuple of tuples of points
    blocks: tuple  # tuple of sorted tuples, each a k-subset
    lam: int
    k: int = 3

    @property
    def v(self) -> int:
        return sum(len(g) for g in self.groups)


def verify_gdd(inst: GddInstance, require_simple: bool = True) -> bool:
    """Exhaustive check of the GDD pair conditions.

    Every cross-group pair must lie in exactly lam blocks, no block may
    contain two points of one group, and with ``require_simple`` no block
    may repeat.
    """
    pts = sorted(p for grp in inst.groups for p in grp)
    if pts != list(range(inst.v)) or len(inst.groups) < 2:
        return False
    group_of = {}
    for i, grp in enumerate(inst.groups):
        for p in grp:
            group_of[p] = i
    if require_simple and len(set(inst.blocks)) != len(inst.blocks):
        return False
    cover = {}
    for b in inst.blocks:
        if len(b) != inst.k or len(set(b)) != inst.k:
            return False
        for x, y in combinations(sorted(b), 2):
            if group_of[x] == group_of[y]:
                return False
            cover[(x, y)] = cover.get((x, y), 0) + 1
    for x in range(inst.v):
        for y in range(x + 1, inst.v):
            expect = 0 if group_of[x] == group_of[y] else inst.lam
            if cover.get((x, y), 0) != expect:
                return False
    return True


# ---------------------------------------------------------------------------
# existence predicates
# ---------------------------------------------------------------------------


def simple_ts_exists(u: int, lam: int) -> bool:
    """Existence of a simple (3, lam)-GDD(1^u), i.e. a simple triple
    system: 1 <= lam <= u-2, lam(u-1) even, lam*u*(u-1) divisible by 6."""
    if u < 1:
        raise InvalidParameterError("need u >= 1")
    return (
        1 <= lam <= u - 2
        and lam * (u - 1) % 2 == 0
        and lam * u * (u - 1) % 6 == 0
    )


def lgdd_exists(g: int, u: int, lam: int) -> bool:
    """Existence of a (3, lam)-LGDD(g^u): a partition of all transverse
    triples into disjoint simple (3, lam)-GDD(g^u)s.

    Conditions: lam*g*(u-1) even, lam*g^2*u*(u-1) divisible by 3,
    g*u*(u-2) divisible by lam, u >= 3, and (lam, g, u) != (1, 1, 7).
    """
    if g < 1 or u < 1 or lam < 1:
        raise InvalidParameterError("need g, u, lam >= 1")
    return (
        lam * g * (u - 1) % 2 == 0
        and lam * g * g * u * (u - 1) % 3 == 0
        and g * u * (u - 2) % lam == 0
        and u >= 3
        and (lam, g, u) != (1, 1, 7)
    )


def simple_gdd_exists(g: int, u: int, lam: int) -> bool:
    """Existence of a simple (3, lam)-GDD(g^u): lam*g*(u-1) even,
    lam*g^2*u*(u-1) divisible by 3, u >= 3, 1 <= lam <= g(u-2)."""
    if g < 1 or u < 1 or lam < 1:
        raise InvalidParameterError("need g, u, lam >= 1")
    return (
        lam * g * (u - 1) % 2 == 0
        and lam * g * g * u * (u - 1) % 3 == 0
        and u >= 3
        and 1 <= lam <= g * (u - 2)
    )


# ---------------------------------------------------------------------------
# gadgets and search
# ---------------------------------------------------------------------------


def gadget_multigraph(g: int, u: int, edge_mult: int) -> Multigraph:
    """Complete u-partite multigraph, parts of size g, every cross pair at
    multiplicity edge_mult.  Its distinct triangle decompositions are
    exactly the simple (3, edge_mult)-GDD(g^u)s on these groups."""
    if g < 1 or u < 1 or edge_mult < 1:
        raise InvalidParameterError("need g, u, edge_mult >= 1")
    if u == 1:
        return Multigraph(g)
    within = {
        (i * g + a, i * g + b): 0
        for i in range(u)
        for a in range(g)
        for b in range(a + 1, g)
    }
    out = Multigraph(g * u, base=edge_mult, mult_map=within)
    out.validate()
    return out


def _contiguous_groups(g: int, u: int) -> tuple:
    return tuple(tuple(range(i * g, (i + 1) * g)) for i in range(u))


SEARCH_CAP = 12  # largest gu attempted by exact search


def search_simple_gdd(g: int, u: int, lam: int, budget: int | None = None):
    """Exact search for a simple (3, lam)-GDD(g^u) on contiguous groups.

    Returns (status, instance-or-None, nodes).  NONE is exhaustive: no
    such design exists.  The search space is the distinct triangle
    decompositions of the gadget multigraph.
    """
    if g * u > SEARCH_CAP:
        raise InvalidParameterError(f"search capped at gu <= {SEARCH_CAP}")
    if u < 2:
        raise InvalidParameterError("need u >= 2")
    res = find_triangle_decomposition(gadget_multigraph(g, u, lam), budget=budget)
    if res.status is not SearchStatus.FOUND:
        return res.status, None, res.nodes
    inst = GddInstance(groups=_contiguous_groups(g, u), blocks=res.cliques, lam=lam)
    assert verify_gdd(inst, require_simple=True)
    return SearchStatus.FOUND, inst, res.nodes


def search_disjoint_simple_gdds(
    g: int, u: int, lam: int, count: int, budget: int | None = None
):
    """Greedily search ``count`` pairwise disjoint simple (3, lam)-GDD(g^u)s
    (each new search forbids all previously used blocks).  Returns
    (status, tuple-of-instances); NONE here is not an exhaustive proof."""
    instances = []
    used = ()
    for _ in range(count):
        res = find_triangle_decomposition(
            gadget_multigraph(g, u, lam), budget=budget, forbidden=used
        )
        if res.status is not SearchStatus.FOUND:
            return res.status, tuple(instances)
        inst = GddInstance(
            groups=_contiguous_groups(g, u), blocks=res.cliques, lam=lam
        )
        instances.append(inst)
        used = used + res.cliques
    return SearchStatus.FOUND, tuple(instances)


def _transverse_triples(g: int, u: int) -> set:
    """All triples of 0..gu-1 with pairwise distinct contiguous groups."""
    pts = range(g * u)
    return {
        (a, b, c)
        for a, b, c in combinations(pts, 3)
        if a // g != b // g and b // g != c // g and a // g != c // g
    }


def assemble_simple_gdd(
    g: int, u: int, lam: int, budget: int | None = None
) -> GddInstance | None:
    """Construct a simple (3, lam)-GDD(g^u) on contiguous groups, trying
    cheap routes before exact search.

    Routes, in order: juxtaposition of disjoint minimal-index designs
    summing to lam; the same for the complementary index cap - lam,
    complemented within the transverse triples (every cross pair lies in
    exactly cap = g(u-2) of them); exact search.  Returns None only when
    every route failed inconclusively; when simple_gdd_exists is false
    the caller should not ask.
    """
    cap = g * (u - 2)
    if not 0 <= lam <= cap:
        return None
    targets = sorted(((lam, False), (cap - lam, True)), key=lambda t: t[0])
    for target, complement in targets:
        if target == 0:
            blocks = tuple(sorted(_transverse_triples(g, u))) if complement else ()
        else:
            base = next(
                (b for b in range(1, target + 1)
                 if target % b == 0 and simple_gdd_exists(g, u, b)),
                None,
            )
            if base is None:
                continue
            status, insts = search_disjoint_simple_gdds(
                g, u, base, target // base, budget=budget
            )
            if status is not SearchStatus.FOUND:
                continue
            blocks = tuple(sorted(b for inst in insts for b in inst.blocks))
            if complement:
                blocks = tuple(sorted(_transverse_triples(g, u) - set(blocks)))
        inst = GddInstance(groups=_contiguous_groups(g, u), blocks=blocks, lam=lam)
        if verify_gdd(inst, require_simple=True):
            return inst
    status, inst, _ = search_simple_gdd(g, u, lam, budget=budget)
    return inst if status is SearchStatus.FOUND else None


def juxtapose(instances) -> GddInstance:
    """Union of pairwise disjoint simple GDDs on common groups: a simple
    GDD whose index is the sum of the indices."""
    instances = list(instances)
    if not instances:
        raise InvalidParameterError("need at least one instance")
    first = instances[0]
    all_blocks = []
    for inst in instances:
        if inst.groups != first.groups:
            raise InvalidParameterError("instances must share the same groups")
        if inst.k != first.k:
            raise InvalidParameterError("instances must share block size")
        all_blocks.extend(inst.blocks)
    if len(set(all_blocks)) != len(all_blocks):
        raise DisjointnessError("block sets are not pairwise disjoint")
    return GddInstance(
        groups=first.groups,
        blocks=tuple(sorted(all_blocks)),
        lam=sum(inst.lam for inst in instances),
        k=first.k,
    )


def gdd_block_count(g: int, u: int, lam: int) -> int:
    """Number of blocks of any (3, lam)-GDD(g^u): lam*g^2*u*(u-1)/6."""
    num = lam * g * g * u * (u - 1)
    if num % 6 != 0:
        raise InvalidParameterError("parameters violate block-count divisibility")
    return num // 6
