"""Ground-truth engines: exact maximum-packing computation for tiny
parameters, and exhaustive nonexistence search for leave multigraphs.

These are deliberately independent of the construction modules so that
their answers can be frozen into tests as oracle values.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .decomp import SearchStatus, find_triangle_decomposition
from .errors import InvalidParameterError
from .multigraph import Multigraph
from .params import johnson_bound


@dataclass(frozen=True)
class BlockCollection:
    n: int
    k: int
    t: int
    lam: int
    blocks: tuple


def verify_packing(bc: BlockCollection) -> bool:
    """Exhaustive check that every t-subset lies in at most lam blocks."""
    cover = {}
    for b in bc.blocks:
        if len(b) != bc.k or len(set(b)) != bc.k:
            return False
        if not all(0 <= x < bc.n for x in b):
            return False
        for sub in combinations(sorted(b), bc.t):
            cover[sub] = cover.get(sub, 0) + 1
            if cover[sub] > bc.lam:
                return False
    return True


class ReportStatus(enum.Enum):
    OPTIMAL = "optimal"
    LOWER_BOUND_ONLY = "lower-bound-only"
    NONE_EXISTS = "none-exists"
    BUDGET = "budget-exceeded"
    WITNESS_FOUND = "witness-found"


@dataclass(frozen=True)
class SearchReport:
    status: ReportStatus
    value: int | None
    witness: tuple | None
    nodes_explored: int


# ---------------------------------------------------------------------------
# maximum packing
# ---------------------------------------------------------------------------


class _Budget:
    __slots__ = ("limit", "nodes")

    def __init__(self, limit):
        self.limit = limit
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        return self.limit is not None and self.nodes > self.limit


def _decide_packing(n, k, t, target, budget):
    """Does a 1-packing with exactly ``target`` blocks exist?

    Walks t-subsets in lex order; the current smallest uncovered t-subset
    is either left uncovered (spending leave budget) or covered by a
    block whose minimal t-subset it is.  Returns (True, blocks),
    (False, None) for exhausted, or (None, None) on budget.
    """
    total = comb(n, t)
    leave_budget = total - target * comb(k, t)
    if leave_budget < 0:
        return False, None
    subsets = list(combinations(range(n), t))
    index = {s: i for i, s in enumerate(subsets)}
    covered = [False] * total
    chosen = []

    def cover_block(block, flag):
        for sub in combinations(block, t):
            covered[index[sub]] = flag

    def recurse(pos, leave, blocks_left):
        if budget.tick():
            return None
        while pos < total and covered[pos]:
            pos += 1
        if blocks_left == 0:
            uncovered = (total - pos) - sum(covered[pos:])
            return uncovered <= leave
        if pos == total:
            return False  # blocks left but nothing uncovered
        tau = subsets[pos]
        top = tau[-1]
        # cover tau by a block whose minimal t-subset is tau
        ext = [
            v
            for v in range(top + 1, n)
            if all(not covered[index[tuple(sorted(s + (v,)))]]
                   for s in combinations(tau, t - 1))
        ]
        for extra in combinations(ext, k - t):
            block = tau + extra
            if any(
                covered[index[sub]] for sub in combinations(block, t)
            ):
                continue
            cover_block(block, True)
            chosen.append(block)
            res = recurse(pos, leave, blocks_left - 1)
            if res:
                return res
            chosen.pop()
            cover_block(block, False)
            if res is None:
                return None
        if leave > 0:
            covered[pos] = True
            res = recurse(pos + 1, leave - 1, blocks_left)
            covered[pos] = False
            return res
        return False

    if target == 0:
        return True, ()
    # first block fixed to {0..k-1} up to relabeling
    first = tuple(range(k))
    cover_block(first, True)
    chosen.append(first)
    res = recurse(0, leave_budget, target - 1)
    if res is True:
        out = tuple(chosen)
        assert verify_packing(BlockCollection(n, k, t, 1, out))
        return True, out
    cover_block(first, False)
    return (None, None) if res is None else (False, None)


def max_packing(n: int, k: int, t: int = 3, budget: int | None = None) -> SearchReport:
    """Exact maximum size of a t-(n, k, 1) packing, desk scale.

    Tries targets downward from the Johnson bound.  A witness meeting the
    bound is certified optimal without exhaustion; otherwise optimality
    requires exhausting the larger target first.
    """
    if not n >= k >= t >= 1:
        raise InvalidParameterError(f"need n >= k >= t >= 1, got {(n, k, t)}")
    state = _Budget(budget)
    ceiling = johnson_bound(n, k, t)
    exhausted_above = True
    for target in range(ceiling, -1, -1):
        found, blocks = _decide_packing(n, k, t, target, state)
        if found:
            status = (
                ReportStatus.OPTIMAL
                if (target == ceiling or exhausted_above)
                else ReportStatus.LOWER_BOUND_ONLY
            )
            return SearchReport(status, target, blocks, state.nodes)
        if found is None:
            exhausted_above = False
            if state.limit is not None and state.nodes > state.limit:
                return SearchReport(ReportStatus.BUDGET, None, None, state.nodes)
    return SearchReport(ReportStatus.BUDGET, None, None, state.nodes)


# ---------------------------------------------------------------------------
# leave nonexistence
# ---------------------------------------------------------------------------


def _partitions_fixed_length(total, length, cap):
    """Non-increasing positive integer sequences of given length and sum."""
    def rec(remaining, length, high):
        if length == 0:
            if remaining == 0:
                yield ()
            return
        for first in range(min(high, remaining - length + 1), 0, -1):
            for rest in rec(remaining - first, length - 1, first):
                yield (first,) + rest

    yield from rec(total, length, cap)


def _connected(v, mat):
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in range(v):
            if y not in seen and mat[x][y] > 0:
                seen.add(y)
                stack.append(y)
    return len(seen) == v


def _prefix_swap_smaller(v, mat, upto, i):
    """Would transposing vertices i, i+1 (both <= upto) make the prefix
    rows 0..upto lex-smaller?  Rows 0..upto are complete, so the
    permuted prefix is fully known even mid-enumeration."""
    perm = list(range(v))
    perm[i], perm[i + 1] = perm[i + 1], perm[i]
    for a in range(upto + 1):
        ra = mat[perm[a]]
        for b in range(v):
            sv, fv = ra[perm[b]], mat[a][b]
            if sv != fv:
                return sv < fv
    return False


def _swap_canonical(v, mat, deltas):
    """Reject matrices improvable by swapping adjacent equal-degree
    vertices (keeps the lex-minimal representative of each orbit)."""
    flat = tuple(tuple(row) for row in mat)
    for i in range(v - 1):
        if deltas[i] != deltas[i + 1]:
            continue
        perm = list(range(v))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        swapped = tuple(
            tuple(flat[perm[a]][perm[b]] for b in range(v)) for a in range(v)
        )
        if swapped < flat:
            return False
    return True


def _bricks_of_weight(w, unit, prune=True):
    """Yield connected candidate leave components ("bricks") of weight w.

    A brick has v vertices of degrees 12 * delta_x (so weight w = sum of
    deltas), pair multiplicities that are positive multiples of ``unit``
    and at most v - 2, realized as a symmetric matrix enumerated row by
    row.  Candidates violating the common-neighbor necessity (a pair of
    multiplicity m needs m distinct common neighbors for its triangles)
    are pruned during the fill; they can never decompose.
    """
    for v in range(3, w + 1):
        for deltas in _partitions_fixed_length(w, v, w):
            # row sums in units
            if any(12 * d % unit for d in deltas):
                continue
            rows = [12 * d // unit for d in deltas]
            cap = (v - 2) // unit
            if cap < 1 or any(r > cap * (v - 1) for r in rows):
                continue
            mat = [[0] * v for _ in range(v)]
            rem = list(rows)
            # multiplicity m*unit needs m*unit common neighbors, so the
            # endpoint has > m*unit distinct neighbors, each of >= 1 unit
            vcap = [(r - 1) // unit for r in rows]

            def fill(x, y):
                if x == v:
                    if _connected(v, mat):
                        if not prune or _swap_canonical(v, mat, deltas):
                            yield tuple(tuple(r) for r in mat)
                    return
                if y == v:
                    if rem[x] != 0:
                        return
                    # a pair of multiplicity m*unit needs m*unit distinct
                    # common neighbors (one per triangle); rows <= x are
                    # complete, so check pairs (yy, x) exactly
                    row_x = mat[x]
                    for yy in range(x):
                        m = mat[yy][x]
                        if m and unit * m > sum(
                            1 for z in range(v) if row_x[z] and mat[yy][z]
                        ):
                            return
                    if prune and any(
                        deltas[i] == deltas[i + 1]
                        and _prefix_swap_smaller(v, mat, x, i)
                        for i in range(x)
                    ):
                        return
                    # all later rows must still be completable among
                    # themselves: enough pair slots, and an even total
                    future = v - x - 2
                    if any(rem[z] > cap * future for z in range(x + 1, v)):
                        return
                    if sum(rem[x + 1 :]) % 2 != 0:
                        return
                    yield from fill(x + 1, x + 2)
                    return
                if rem[x] > cap * (v - y):
                    return
                hi = min(cap, vcap[x], vcap[y], rem[x], rem[y])
                for m in range(hi, -1, -1):
                    mat[x][y] = mat[y][x] = m
                    rem[x] -= m
                    rem[y] -= m
                    yield from fill(x, y + 1)
                    rem[x] += m
                    rem[y] += m
                    mat[x][y] = mat[y][x] = 0

            yield from fill(0, 1)


def _decomposable_brick_weights(max_weight, unit, prune=True, trace=None):
    """Weights w <= max_weight admitting a triangle-decomposable brick.

    Returns dict w -> example brick (multiplicity matrix) or None.
    """
    out = {}
    for w in range(3, max_weight + 1):
        found = None
        for mat in _bricks_of_weight(w, unit, prune=prune):
            v = len(mat)
            g = Multigraph(
                v,
                base=0,
                mult_map={
                    (i, j): mat[i][j] * unit
                    for i in range(v)
                    for j in range(i + 1, v)
                    if mat[i][j]
                },
            )
            res = find_triangle_decomposition(g)
            if trace is not None:
                trace.append((w, v, res.status.value))
            if res.status is SearchStatus.FOUND:
                found = g
                break
        out[w] = found
    return out


def _reaches(weights: dict, total: int) -> bool:
    """Can coins with a known graph sum (with repetition) to total?"""
    coins = [w for w, g in weights.items() if g is not None]
    ok = [False] * (total + 1)
    ok[0] = True
    for s in range(1, total + 1):
        ok[s] = any(c <= s and ok[s - c] for c in coins)
    return ok[total]


def search_leave_nonexistence(
    n: int,
    k: int,
    xi_target: int | None = None,
    relax: bool = False,
    prune: bool = True,
) -> SearchReport:
    """Exhaustive check that no leave multigraph certifies a packing one
    short of the Johnson bound's neighborhood: specifically, for (n, k)
    with J - 3 conjectured, that no G on n vertices satisfies

      2|E| = n(n-1)(n-2) - k(k-1)(k-2)(J - 2),  deg = 0 mod (k-1)(k-2),
      mult = 0 mod (k-2),  G triangle-decomposable.

    Components ("bricks") are enumerated exhaustively by weight
    (degree-sum / (k-1)(k-2) per component); G exists iff some multiset
    of decomposable brick weights reaches the total weight.  With
    ``relax`` the multiplicity condition is dropped (a sanity mode that
    must find a witness); ``prune`` disables symmetry breaking for
    cross-validation.

    Currently specialized to parameter shapes like (14, 5): r = 0,
    alpha = 0, deg unit 12, total weight 2|E| / 12.
    """
    from .errors import WrongCaseError
    from .params import CaseLabel, classify

    label, _ = classify(n, k)
    if label is not CaseLabel.Q_NONZERO:
        raise WrongCaseError(
            f"({n},{k}) is {label.value}, expected r = 0, alpha = 0, beta != 0"
        )
    target = johnson_bound(n, k, 3) - 2 if xi_target is None else xi_target
    twice_edges = n * (n - 1) * (n - 2) - k * (k - 1) * (k - 2) * target
    deg_unit = (k - 1) * (k - 2)
    if twice_edges < 0 or twice_edges % deg_unit != 0:
        return SearchReport(ReportStatus.NONE_EXISTS, target, None, 0)
    total_weight = twice_edges // deg_unit
    unit = 1 if relax else k - 2

    trace: list = []
    weights: dict = {}
    if relax:
        # cheap exact coins first: lam*K_m components with degrees a
        # multiple of the degree unit and a Dehon decomposition; if these
        # already reach the total, no brick enumeration is needed
        from .decomp import dehon_conditions
        from .multigraph import complete

        for m in range(3, n + 1):
            for lam in range(1, m - 1):
                if lam * (m - 1) % deg_unit:
                    continue
                w = m * lam * (m - 1) // deg_unit
                if 3 <= w <= total_weight and w not in weights and dehon_conditions(m, lam):
                    weights[w] = complete(m, lam)
    if not _reaches(weights, total_weight):
        enumerated = _decomposable_brick_weights(
            min(total_weight, n), unit, prune=prune, trace=trace
        )
        for w, g in enumerated.items():
            if weights.get(w) is None:
                weights[w] = g
    coins = [w for w, g in weights.items() if g is not None]

    # unbounded coin reachability of the total weight
    reachable = [False] * (total_weight + 1)
    reachable[0] = True
    parent = [None] * (total_weight + 1)
    for s in range(1, total_weight + 1):
        for c in coins:
            if c <= s and reachable[s - c]:
                reachable[s] = True
                parent[s] = c
                break
    if reachable[total_weight]:
        pieces = []
        s = total_weight
        while s:
            pieces.append(weights[parent[s]])
            s -= parent[s]
        assert sum(p.n for p in pieces) <= n, "witness exceeds the vertex budget"
        witness = tuple(pieces)
        return SearchReport(
            ReportStatus.WITNESS_FOUND, target, witness, len(trace)
        )
    return SearchReport(ReportStatus.NONE_EXISTS, target, None, len(trace))
