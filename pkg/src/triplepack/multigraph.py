"""Multigraph carrier type used by every construction and search.

Representation: a uniform background multiplicity ``base`` plus a sparse
map of exceptional pairs.  Leave graphs are either sparse (base 0) or
"complete multigraph plus a sparse perturbation" (case r != 0), and the
split keeps both cheap at n in the thousands.

Vertices are labeled 0..n-1, no loops, multiplicities are non-negative
integers; a pair absent from the map has multiplicity ``base``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InfeasibleSequenceError, InvalidParameterError


def _pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Multigraph:
    n: int
    base: int = 0
    mult_map: dict = field(default_factory=dict)  # pair -> multiplicity != base

    def __post_init__(self):
        if self.n < 0 or self.base < 0:
            raise InvalidParameterError("vertex count and base must be non-negative")
        # normalize: drop entries equal to base, reject loops / negatives
        clean = {}
        for (u, v), m in self.mult_map.items():
            if u == v:
                raise InvalidParameterError("loops are not allowed")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidParameterError(f"vertex out of range in pair {(u, v)}")
            if m < 0:
                raise InvalidParameterError("negative multiplicity")
            if m != self.base:
                clean[_pair(u, v)] = m
        object.__setattr__(self, "mult_map", clean)

    # -- queries ---------------------------------------------------------

    def mult(self, u: int, v: int) -> int:
        if u == v:
            return 0
        return self.mult_map.get(_pair(u, v), self.base)

    def degrees(self) -> list[int]:
        deg = [self.base * (self.n - 1)] * self.n
        for (u, v), m in self.mult_map.items():
            deg[u] += m - self.base
            deg[v] += m - self.base
        return deg

    def degree(self, x: int) -> int:
        d = self.base * (self.n - 1)
        for (u, v), m in self.mult_map.items():
            if u == x or v == x:
                d += m - self.base
        return d

    def edge_count(self) -> int:
        """Total edge multiplicity |E(G)| (parallel edges counted)."""
        total = self.base * self.n * (self.n - 1) // 2
        for m in self.mult_map.values():
            total += m - self.base
        return total

    def support_pairs(self):
        """Iterate (u, v, mult) over pairs with multiplicity >= 1."""
        if self.base > 0:
            for u in range(self.n):
                for v in range(u + 1, self.n):
                    m = self.mult(u, v)
                    if m > 0:
                        yield u, v, m
        else:
            for (u, v), m in sorted(self.mult_map.items()):
                if m > 0:
                    yield u, v, m

    def to_dense_dict(self) -> dict:
        """Pair -> multiplicity for all pairs with multiplicity >= 1."""
        return {(u, v): m for u, v, m in self.support_pairs()}

    def active_vertices(self) -> list[int]:
        return [x for x, d in enumerate(self.degrees()) if d > 0]

    def max_mult(self) -> int:
        mx = self.base if self.n >= 2 and (
            len(self.mult_map) < self.n * (self.n - 1) // 2
        ) else 0
        for m in self.mult_map.values():
            mx = max(mx, m)
        return mx

    def validate(self) -> None:
        """Check the degree identity sum(deg) = 2|E|."""
        assert sum(self.degrees()) == 2 * self.edge_count()

    def __eq__(self, other):
        if not isinstance(other, Multigraph):
            return NotImplemented
        if self.n != other.n:
            return False
        if self.base == other.base:
            return self.mult_map == other.mult_map
        # different bases can still describe the same graph if every pair is
        # listed explicitly in one of them
        return all(
            self.mult(u, v) == other.mult(u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
        )

    def __hash__(self):
        return hash((self.n, self.base, tuple(sorted(self.mult_map.items()))))


# -- builders ------------------------------------------------------------


def complete(n: int, lam: int) -> Multigraph:
    """The multigraph lam*K_n (every pair at multiplicity lam)."""
    if n < 1 or lam < 0:
        raise InvalidParameterError(f"need n >= 1, lam >= 0, got {(n, lam)}")
    g = Multigraph(n, base=lam)
    g.validate()
    return g


def disjoint_union(graphs, pad_to_n: int) -> Multigraph:
    """Relabel the graphs side by side and pad with isolated vertices."""
    total = sum(g.n for g in graphs)
    if pad_to_n < total:
        raise InvalidParameterError(
            f"pad_to_n={pad_to_n} smaller than total order {total}"
        )
    mult = {}
    offset = 0
    for g in graphs:
        for u, v, m in g.support_pairs():
            mult[(u + offset, v + offset)] = m
        offset += g.n
    out = Multigraph(pad_to_n, base=0, mult_map=mult)
    out.validate()
    return out


def scale(g: Multigraph, lam: int) -> Multigraph:
    """Multiply every multiplicity by lam."""
    if lam < 0:
        raise InvalidParameterError("lam must be >= 0")
    out = Multigraph(
        g.n, base=g.base * lam, mult_map={p: m * lam for p, m in g.mult_map.items()}
    )
    out.validate()
    return out


def overlay(g: Multigraph, h: Multigraph) -> Multigraph:
    """Edge-disjoint union on a common vertex set (pointwise sum)."""
    if g.n != h.n:
        raise InvalidParameterError(f"order mismatch: {g.n} != {h.n}")
    base = g.base + h.base
    mult = {}
    for p in set(g.mult_map) | set(h.mult_map):
        mult[p] = g.mult_map.get(p, g.base) + h.mult_map.get(p, h.base)
    out = Multigraph(g.n, base=base, mult_map=mult)
    out.validate()
    return out


def is_q2_divisible(g: Multigraph, q: int) -> bool:
    """True iff C(q,2) divides |E(G)| and q-1 divides every degree."""
    if q < 3:
        raise InvalidParameterError("need q >= 3")
    if g.edge_count() % (q * (q - 1) // 2) != 0:
        return False
    return all(d % (q - 1) == 0 for d in g.degrees())


# -- degree sequence realization ----------------------------------------


def erdos_gallai_feasible(seq) -> bool:
    """Erdős–Gallai test for realizability as a simple graph.

    The tail sum of min(d_i, r) is evaluated with suffix sums plus a
    bisection for the crossover index, so the whole test is O(n log n).
    """
    from bisect import bisect_left

    d = sorted(seq, reverse=True)
    n = len(d)
    if any(x < 0 or x > n - 1 for x in d):
        return False
    if sum(d) % 2 != 0:
        return False
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + d[i]
    neg = [-x for x in d]  # ascending, for bisection
    prefix = 0
    for r in range(1, n + 1):
        prefix += d[r - 1]
        # j = first index with d[j] <= r (d is non-increasing)
        j = max(r, bisect_left(neg, -r))
        tail = r * (j - r) + suffix[j]
        if prefix > r * (r - 1) + tail:
            return False
        if d[r - 1] < r:  # later inequalities cannot fail
            break
    return True


def realize_degree_sequence(seq) -> Multigraph:
    """Deterministic Havel–Hakimi realization of a degree sequence.

    Returns a simple graph (all multiplicities <= 1) with exactly the
    requested degrees, or raises InfeasibleSequenceError.  Uses bucket
    queues so that the cost is O(n + |E|) even for large near-regular
    sequences; ties are broken by bucket insertion order, which is fixed
    for a fixed input.
    """
    seq = list(seq)
    n = len(seq)
    if not erdos_gallai_feasible(seq):
        raise InfeasibleSequenceError(f"degree sequence not realizable: {seq}")
    residual = list(seq)
    maxdeg = max(residual, default=0)
    buckets = [[] for _ in range(maxdeg + 1)]
    for v in range(n - 1, -1, -1):  # so that pops yield smallest labels first
        buckets[residual[v]].append(v)
    edges = {}
    top = maxdeg
    while True:
        while top > 0 and not buckets[top]:
            top -= 1
        if top == 0:
            break
        x = buckets[top].pop()
        d = residual[x]
        # collect the d highest-residual other vertices
        chosen = []
        level = top
        while len(chosen) < d and level > 0:
            while buckets[level] and len(chosen) < d:
                y = buckets[level].pop()
                if residual[y] > 0:
                    chosen.append(y)
            level -= 1
        if len(chosen) < d:
            raise InfeasibleSequenceError(f"degree sequence not realizable: {seq}")
        residual[x] = 0
        for y in chosen:
            edges[_pair(x, y)] = 1
            residual[y] -= 1
            buckets[residual[y]].append(y)
    g = Multigraph(n, base=0, mult_map=edges)
    assert g.degrees() == seq, "realization degree check failed"
    return g


# -- leave-graph condition report ---------------------------------------


@dataclass(frozen=True)
class LeaveConditionReport:
    """Per-condition pass/fail for a candidate leave multigraph.

    Conditions (for claimed packing size xi and multiplicity cap sigma):
      edge_total:  2|E| = n(n-1)(n-2) - k(k-1)(k-2) * xi
      degrees:     deg(x) = (n-1)(n-2)  mod (k-1)(k-2), all x
      mults:       m(x,y) = n-2  mod (k-2), all pairs
      mult_cap:    m(x,y) <= sigma, all pairs
    Triangle-decomposability (the remaining condition of the reduction)
    is checked separately by the decomposition module.
    """

    edge_total: bool
    degrees: bool
    mults: bool
    mult_cap: bool

    def all_pass(self) -> bool:
        return self.edge_total and self.degrees and self.mults and self.mult_cap


def check_leave_conditions(
    g: Multigraph, n: int, k: int, xi: int, sigma: int
) -> LeaveConditionReport:
    """Report which leave-graph conditions hold for (g, n, k, xi, sigma)."""
    if g.n != n:
        raise InvalidParameterError(f"graph order {g.n} != n = {n}")
    edge_total = 2 * g.edge_count() == n * (n - 1) * (n - 2) - k * (k - 1) * (
        k - 2
    ) * xi
    target_deg = (n - 1) * (n - 2) % ((k - 1) * (k - 2))
    degrees = all(d % ((k - 1) * (k - 2)) == target_deg for d in g.degrees())
    target_m = (n - 2) % (k - 2)
    mults_ok = g.base % (k - 2) == target_m or len(g.mult_map) == n * (n - 1) // 2
    cap_ok = g.base <= sigma or len(g.mult_map) == n * (n - 1) // 2
    for m in g.mult_map.values():
        if m % (k - 2) != target_m:
            mults_ok = False
        if m > sigma:
            cap_ok = False
    return LeaveConditionReport(
        edge_total=edge_total, degrees=degrees, mults=mults_ok, mult_cap=cap_ok
    )
