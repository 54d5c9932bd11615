"""Distinct triangle decompositions: exact search, verification, and the
greedy clique-reduction procedure for multiplicities above a target level.

The exact engine is pair-driven backtracking: branch on the uncovered
pair with the fewest completing third vertices, choosing all triangles
through that pair at once.  "Distinct" means no triangle (as a vertex
set) is used twice, so the triangles through a pair have pairwise
distinct third vertices.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import InvalidParameterError
from .multigraph import Multigraph

Triple = tuple[int, int, int]


class SearchStatus(enum.Enum):
    FOUND = "found"
    NONE = "none-found"
    BUDGET = "budget-exceeded"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class DecompositionResult:
    status: SearchStatus
    cliques: tuple | None
    nodes: int


def dehon_conditions(n: int, lam: int) -> bool:
    """Existence of a distinct triangle decomposition of lam*K_n:
    lam(n-1) even, 3 | lam*n*(n-1), lam <= n-2."""
    if n < 3 or lam < 1:
        raise InvalidParameterError(f"need n >= 3, lam >= 1, got {(n, lam)}")
    return lam * (n - 1) % 2 == 0 and lam * n * (n - 1) % 3 == 0 and lam <= n - 2


def verify_decomposition(g: Multigraph, cliques) -> bool:
    """True iff the cliques are pairwise distinct and cover every pair
    exactly its multiplicity many times."""
    seen = set()
    cover = {}
    for c in cliques:
        key = tuple(sorted(c))
        if len(set(key)) != len(key) or key in seen:
            return False
        seen.add(key)
        for a, b in combinations(key, 2):
            cover[(a, b)] = cover.get((a, b), 0) + 1
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if cover.get((u, v), 0) != g.mult(u, v):
                return False
    return True


# ---------------------------------------------------------------------------
# exact triangle search
# ---------------------------------------------------------------------------


class _Budget:
    __slots__ = ("limit", "nodes")

    def __init__(self, limit):
        self.limit = limit
        self.nodes = 0

    def tick(self) -> bool:
        self.nodes += 1
        return self.limit is not None and self.nodes > self.limit


def _triangle_search(rem: dict, vertices, chosen_set: set, budget: _Budget):
    """Cover every pair exactly rem[pair] times by distinct triangles.

    Returns (status, list-of-triples).  ``rem`` is mutated and restored.
    ``chosen_set`` holds forbidden triples (and grows with the partial
    solution).
    """
    uncovered = [p for p, m in rem.items() if m > 0]
    if not uncovered:
        return SearchStatus.FOUND, []
    # most-constrained pair first
    best = None
    for (u, v) in uncovered:
        cands = [
            w
            for w in vertices
            if w != u
            and w != v
            and rem.get(_p(u, w), 0) >= 1
            and rem.get(_p(v, w), 0) >= 1
            and _t(u, v, w) not in chosen_set
        ]
        need = rem[(u, v)]
        if need > len(cands):
            return SearchStatus.NONE, None
        width = comb(len(cands), need)
        if best is None or width < best[0]:
            best = (width, (u, v), need, cands)
            if width == 1:
                break
    _, (u, v), need, cands = best
    saw_budget = False
    for subset in combinations(cands, need):
        if budget.tick():
            return SearchStatus.BUDGET, None
        triples = [_t(u, v, w) for w in subset]
        rem[(u, v)] = 0
        for w in subset:
            rem[_p(u, w)] -= 1
            rem[_p(v, w)] -= 1
        chosen_set.update(triples)
        status, rest = _triangle_search(rem, vertices, chosen_set, budget)
        chosen_set.difference_update(triples)
        rem[(u, v)] = need
        for w in subset:
            rem[_p(u, w)] += 1
            rem[_p(v, w)] += 1
        if status is SearchStatus.FOUND:
            return status, triples + rest
        if status is SearchStatus.BUDGET:
            saw_budget = True
            break
    return (SearchStatus.BUDGET if saw_budget else SearchStatus.NONE), None


def _p(a, b):
    return (a, b) if a < b else (b, a)


def _t(a, b, c):
    return tuple(sorted((a, b, c)))


def _quick_infeasible(g: Multigraph) -> bool:
    """Sound necessary conditions: even degrees and |E| divisible by 3."""
    if g.edge_count() % 3 != 0:
        return True
    return any(d % 2 != 0 for d in g.degrees())


def _uniform_multipartite_shape(g: Multigraph):
    """If g is lam * (complete multipartite, equal part sizes) on its active
    vertices, return (active, parts, lam); else None."""
    active = g.active_vertices()
    if not active:
        return None
    lam = None
    non_edge = {x: set() for x in active}
    for i, u in enumerate(active):
        for v in active[i + 1 :]:
            m = g.mult(u, v)
            if m == 0:
                non_edge[u].add(v)
                non_edge[v].add(u)
            else:
                if lam is None:
                    lam = m
                elif m != lam:
                    return None
    if lam is None:
        return None
    parts = []
    assigned = set()
    for u in active:
        if u in assigned:
            continue
        part = {u} | non_edge[u]
        # parts must be mutually non-adjacent cliques of the complement
        for x in part:
            if non_edge[x] | {x} != part:
                return None
        parts.append(sorted(part))
        assigned |= part
    if len({len(p) for p in parts}) != 1:
        return None
    return active, parts, lam


def _all_transverse_triples(parts) -> list:
    out = []
    flat = []
    for i, part in enumerate(parts):
        flat.extend((v, i) for v in part)
    verts = sorted(flat)
    for (a, pa), (b, pb), (c, pc) in combinations(verts, 3):
        if pa != pb and pb != pc and pa != pc:
            out.append(_t(a, b, c))
    return out


def find_triangle_decomposition(
    g: Multigraph, budget: int | None = None, forbidden=()
) -> DecompositionResult:
    """Exact search for a distinct triangle decomposition of g.

    FOUND comes with a verified set of triangles; NONE is a proof of
    nonexistence (the space was exhausted, possibly via sound counting
    arguments); BUDGET is inconclusive.  For uniform complete multipartite
    inputs with multiplicity above half the per-pair triple capacity, the
    search runs on the complementary multiplicity and complements the
    answer inside the set of transverse triples.
    """
    budget_state = _Budget(budget)
    if g.edge_count() == 0:
        return DecompositionResult(SearchStatus.FOUND, (), 0)
    if _quick_infeasible(g):
        return DecompositionResult(SearchStatus.NONE, None, 0)

    if not forbidden:
        shape = _uniform_multipartite_shape(g)
        if shape is not None:
            active, parts, lam = shape
            cap = len(active) - 2 * len(parts[0])
            if lam > cap:
                return DecompositionResult(SearchStatus.NONE, None, 0)
            if 2 * lam > cap:
                mirror = Multigraph(
                    g.n,
                    base=0,
                    mult_map={
                        _p(u, v): cap - lam
                        for i, u in enumerate(active)
                        for v in active[i + 1 :]
                        if g.mult(u, v) > 0
                    },
                )
                res = find_triangle_decomposition(mirror, budget=budget)
                if res.status is not SearchStatus.FOUND:
                    return res
                keep = set(res.cliques)
                out = tuple(t for t in _all_transverse_triples(parts) if t not in keep)
                assert verify_decomposition(g, out)
                return DecompositionResult(SearchStatus.FOUND, out, res.nodes)

    rem = {}
    vertices = g.active_vertices()
    for i, u in enumerate(vertices):
        for v in vertices[i + 1 :]:
            rem[(u, v)] = g.mult(u, v)
    chosen = set(_t(*c) for c in forbidden)
    status, triples = _triangle_search(rem, vertices, chosen, budget_state)
    if status is SearchStatus.FOUND:
        out = tuple(sorted(triples))
        assert verify_decomposition(g, out)
        return DecompositionResult(status, out, budget_state.nodes)
    return DecompositionResult(status, None, budget_state.nodes)


# ---------------------------------------------------------------------------
# greedy clique reduction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StallEvent:
    vertex: int
    neighbor: int
    partial: tuple


@dataclass(frozen=True)
class ReductionTrace:
    """Full working state of the greedy reduction procedure."""

    q: int
    lam: int
    lam_prime: int
    order: tuple
    gamma: dict  # x -> tuple of neighbors with input multiplicity > lam
    cliques: tuple
    residual: Multigraph
    appearance: dict
    stalls: tuple

    def stalled(self) -> bool:
        return bool(self.stalls)


def clique_reduction(
    g: Multigraph,
    q: int,
    lam: int,
    lam_prime: int,
    vertex_order=None,
) -> ReductionTrace:
    """Greedily remove distinct q-cliques so that pairs with multiplicity
    above ``lam`` are cleared.

    For each vertex x (in ``vertex_order``) and each y with input
    multiplicity above lam, cliques through (x, y) are removed until the
    pair has no edges left; additional clique vertices are chosen valid
    (adjacent to everything picked so far, not repeating a chosen clique)
    with minimal appearance count, ties to the smallest label.  When no
    valid vertex exists the pair is abandoned and a stall is recorded.
    """
    if q < 3:
        raise InvalidParameterError("need q >= 3")
    if lam > lam_prime:
        raise InvalidParameterError("need lam <= lam_prime")
    if g.max_mult() > lam_prime:
        raise InvalidParameterError("multiplicities exceed lam_prime")
    order = tuple(vertex_order) if vertex_order is not None else tuple(range(g.n))
    if sorted(order) != list(range(g.n)):
        raise InvalidParameterError("vertex_order must be a permutation of 0..n-1")

    rem = {}
    for u in range(g.n):
        for v in range(u + 1, g.n):
            m = g.mult(u, v)
            if m > 0:
                rem[(u, v)] = m
    gamma = {
        x: tuple(
            y for y in range(g.n) if y != x and g.mult(x, y) > lam
        )
        for x in range(g.n)
    }
    appearance = {x: 0 for x in range(g.n)}
    chosen = []
    chosen_set = set()
    stalls = []

    def edge(a, b):
        return rem.get(_p(a, b), 0)

    for xi in order:
        for x in gamma[xi]:
            while edge(xi, x) >= 1:
                members = [xi, x]
                ok = True
                for j in range(1, q - 1):
                    last = j == q - 2
                    best = None
                    for y in range(g.n):
                        if y in members:
                            continue
                        if any(edge(y, m) < 1 for m in members):
                            continue
                        if last and tuple(sorted(members + [y])) in chosen_set:
                            continue
                        key = (appearance[y], y)
                        if best is None or key < best[0]:
                            best = (key, y)
                    if best is None:
                        ok = False
                        break
                    members.append(best[1])
                if not ok:
                    stalls.append(StallEvent(xi, x, tuple(members)))
                    break
                clique = tuple(sorted(members))
                chosen.append(clique)
                chosen_set.add(clique)
                for a, b in combinations(clique, 2):
                    rem[_p(a, b)] -= 1
                for v in clique:
                    appearance[v] += 1

    residual = Multigraph(g.n, base=0, mult_map={p: m for p, m in rem.items() if m})
    return ReductionTrace(
        q=q,
        lam=lam,
        lam_prime=lam_prime,
        order=order,
        gamma=gamma,
        cliques=tuple(chosen),
        residual=residual,
        appearance=appearance,
        stalls=tuple(stalls),
    )


def decompose_via_reduction(
    g: Multigraph, q: int, lam: int, lam_prime: int, budget: int | None = None
) -> DecompositionResult:
    """Reduce high multiplicities greedily, decompose the residual exactly,
    and return the union (distinct across both parts).

    Only q = 3 is supported for the residual search.  NONE is returned
    only when no cliques were removed and the residual search exhausted;
    after a nonempty or stalled reduction a failed residual search is
    merely INCONCLUSIVE (a different reduction might still work).
    """
    if q != 3:
        raise InvalidParameterError("residual decomposition search supports q = 3 only")
    trace = clique_reduction(g, q, lam, lam_prime)
    res = find_triangle_decomposition(
        trace.residual, budget=budget, forbidden=trace.cliques
    )
    if res.status is SearchStatus.FOUND:
        combined = tuple(sorted(trace.cliques + res.cliques))
        assert verify_decomposition(g, combined)
        return DecompositionResult(SearchStatus.FOUND, combined, res.nodes)
    if res.status is SearchStatus.NONE and not trace.cliques and not trace.stalled():
        return DecompositionResult(SearchStatus.NONE, None, res.nodes)
    if res.status is SearchStatus.BUDGET:
        return DecompositionResult(SearchStatus.BUDGET, None, res.nodes)
    return DecompositionResult(SearchStatus.INCONCLUSIVE, None, res.nodes)
