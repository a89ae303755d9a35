"""Exact matching preclusion number with verifiable certificates.

The solver is a branch-and-bound over the hitting-set view of the problem:
every preclusion set must delete at least one edge of each perfect (even
order) or almost-perfect (odd order) matching. Nodes are pruned with the
incumbent and with an edge-counting bound derived from Tutte/Berge barriers.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .graph import Edge, Graph, GraphInputError, bits, degree_stats, delete_edges, norm_edge
from .matching import (
    DeficiencyWitness,
    _mates,
    classify,
    odd_component_count,
    tutte_berge_witness,
)

DEFAULT_ORACLE_CAP = 16


class OracleCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class PreclusionCertificate:
    F: tuple[Edge, ...]
    witness: DeficiencyWitness


@dataclass(frozen=True)
class UpperBounds:
    even_delta: Optional[int] = None
    odd_xi: Optional[int] = None
    odd_two_vertex: Optional[int] = None

    def present(self) -> dict[str, int]:
        return {k: v for k, v in self.__dict__.items() if v is not None}


@dataclass(frozen=True)
class MpResult:
    value: Optional[int]
    certificate: Optional[PreclusionCertificate]
    bounds_used: dict[str, int] = field(default_factory=dict)
    nodes: int = 0

    @property
    def precludable(self) -> bool:
        return self.value is not None

    def display(self) -> str:
        return "not precludable" if self.value is None else str(self.value)


# -- upper bounds --------------------------------------------------------------------

def _isolating_set(g: Graph, rows: Sequence[int], *vertices: int) -> list[Edge]:
    out = set()
    for v in vertices:
        for u in bits(rows[v]):
            out.add(norm_edge(u, v))
    return sorted(out)


def _bound_sets(g: Graph) -> dict[str, list[Edge]]:
    """Explicit edge sets realising each applicable upper bound."""
    sets: dict[str, list[Edge]] = {}
    if g.n < 2:
        return sets
    d = g.degrees()
    delta = min(d)
    if g.n % 2 == 0:
        v = d.index(delta)
        sets["even_delta"] = _isolating_set(g, g.rows, v)
        return sets
    if g.m:
        u, v = min(g.edges(), key=lambda e: (d[e[0]] + d[e[1]], e))
        sets["odd_xi"] = _isolating_set(g, g.rows, u, v)
    best = None
    for v in (w for w in range(g.n) if d[w] == delta):
        rest = [r & ~(1 << v) for r in g.rows]
        cand = min((rest[w].bit_count(), w) for w in range(g.n) if w != v)
        if best is None or cand[0] < best[0]:
            best = (cand[0], v, cand[1])
    if best is not None:
        sets["odd_two_vertex"] = _isolating_set(g, g.rows, best[1], best[2])
    return sets


def upper_bounds(g: Graph) -> UpperBounds:
    if g.n < 2:
        return UpperBounds()
    st = degree_stats(g)
    if g.n % 2 == 0:
        return UpperBounds(even_delta=st.delta)
    odd_xi = None if st.xi is None else st.xi + 1
    return UpperBounds(odd_xi=odd_xi, odd_two_vertex=len(_bound_sets(g)["odd_two_vertex"]))


# -- lower bounds --------------------------------------------------------------------

ENUM_BUDGET = 4000


def _min_touching(rows: Sequence[int], order: list[int], degs: list[int], t: int, s: int, cap: int,
                  cutoff: float) -> float:
    """Minimum over t-sets T of ``touch(T) - min(e(T), cap) - maxS e(T, S)``.

    ``maxS`` ranges over s-sets disjoint from T. Returns ``cutoff`` when no T
    does better.
    """
    n = len(order)
    pair = t * (t - 1) // 2
    slack = pair + min(pair, cap) + s * t
    sd = [degs[v] for v in order]
    best = cutoff

    def dfs(start: int, chosen: int, size: int, dsum: int, e: int) -> None:
        nonlocal best
        if size == t:
            val = dsum - e - min(e, cap)
            if s:
                links = sorted(((rows[u] & chosen).bit_count() for u in range(n) if not chosen >> u & 1),
                               reverse=True)
                val -= sum(links[:s])
            if val < best:
                best = val
            return
        need = t - size
        for i in range(start, n - need + 1):
            if dsum + sum(sd[i:i + need]) - slack >= best:
                return
            v = order[i]
            dfs(i + 1, chosen | (1 << v), size + 1, dsum + sd[i], e + (rows[v] & chosen).bit_count())

    dfs(0, 0, 0, 0, 0)
    return best


def barrier_lower_bound(rows: Sequence[int], n: int, goal: float = 0) -> int:
    """Lower bound on the edges needed to destroy all (almost-)perfect matchings.

    A preclusion set leaves a barrier ``S`` (``|S| = s``) whose removal splits the
    rest into ``q = s + 2`` (even n) or ``s + 3`` (odd n) odd groups with no edge
    left between groups. With ``T`` the union of all groups but the largest, the
    deleted edges number at least ``touch(T) - e(T, S) - sum e(P)`` where
    ``touch(T)`` counts edges with an endpoint in ``T`` and the sum runs over the
    groups inside ``T``. The group sum is at most
    ``e(T)`` and at most ``C(|T| - q + 2, 2)``. Small ``T`` are enumerated,
    larger ones use the smallest degrees and ``e(T, S) <= s|T|``.

    The result is exact whenever it is ``>= goal``; once the running minimum
    drops below ``goal`` the scan stops early and returns that smaller value.
    """
    degs = [r.bit_count() for r in rows]
    order = sorted(range(n), key=lambda v: (degs[v], v))
    prefix = [0]
    for v in order:
        prefix.append(prefix[-1] + degs[v])
    parity = n & 1
    best = math.inf
    s = 0
    while s + (s + 2 + parity) <= n:
        k = s + 1 + parity  # groups other than the largest
        t = k
        while t <= n - s - 1 and (n - s - t) * k >= t:
            cap = math.comb(t - k + 1, 2)
            pair = t * (t - 1) // 2
            relaxed = prefix[t] - pair - min(pair, cap) - s * t
            if relaxed < best:
                if math.comb(n, t) <= ENUM_BUDGET:
                    val = _min_touching(rows, order, degs, t, s, cap, best)
                else:
                    val = relaxed
                best = min(best, val)
                if best < goal:
                    return max(0, best)
            t += 2
        s += 1
    if best is math.inf:
        return 0
    return max(0, best)


def _peel_lower_bound(rows: list[int], n: int) -> int:
    count = 0
    while True:
        mate = _mates(rows, n)
        if any(x == -1 for x in mate):
            return count
        count += 1
        for v, u in enumerate(mate):
            rows[v] &= ~(1 << u)


def edge_disjoint_pm_lower_bound(g: Graph) -> int:
    """Number of edge-disjoint perfect matchings found by greedy peeling."""
    if g.n % 2:
        raise GraphInputError("edge-disjoint perfect matching bound needs even order")
    if g.n == 0:
        return 0
    return _peel_lower_bound(list(g.rows), g.n)


# -- certificates --------------------------------------------------------------------

def _certificate(g: Graph, F: Sequence[Edge]) -> PreclusionCertificate:
    F = tuple(sorted(norm_edge(*e) for e in F))
    return PreclusionCertificate(F, tutte_berge_witness(delete_edges(g, F)))


def verify_certificate(g: Graph, cert: PreclusionCertificate) -> bool:
    """True iff deleting ``F`` leaves ``S`` as a strict Tutte (even n) / Berge
    (odd n) violator. Malformed certificates raise :class:`GraphInputError`."""
    h = delete_edges(g, cert.F)
    mask = 0
    for v in cert.witness.S:
        if not 0 <= v < g.n or mask >> v & 1:
            raise GraphInputError(f"witness vertex {v} invalid or repeated")
        mask |= 1 << v
    odd = odd_component_count(h, mask)
    return odd > len(cert.witness.S) + (g.n & 1)


# -- branch and bound -------------------------------------------------------------

class _Search:
    def __init__(self, g: Graph, limit: int, best: Optional[list[Edge]]):
        self.g = g
        self.n = g.n
        self.limit = limit  # only sets strictly smaller than this are sought
        self.best = best
        self.nodes = 0

    def run(self) -> None:
        rows = list(self.g.rows)
        self._node(rows, [], _mates(rows, self.n), 0)

    def _node(self, rows: list[int], F: list[Edge], mate: list[int], forbidden: int) -> None:
        self.nodes += 1
        n = self.n
        if sum(1 for x in mate if x == -1) > (n & 1):
            self.limit = len(F)
            self.best = list(F)
            return
        if len(F) + 1 >= self.limit:
            return
        if len(F) + barrier_lower_bound(rows, n, self.limit - len(F)) >= self.limit:
            return
        pairs = [(v, u) for v, u in enumerate(mate) if u > v]
        # forbidden holds edges already fully explored by an earlier sibling
        choices = [e for e in pairs if not forbidden >> self._eid(e) & 1]
        banned = forbidden
        for u, v in choices:
            if len(F) + 1 >= self.limit:
                return
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
            child = list(mate)
            child[u] = child[v] = -1
            F.append((u, v))
            self._node(rows, F, _mates(rows, n, child), banned)
            F.pop()
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            banned |= 1 << self._eid((u, v))

    def _eid(self, e: Edge) -> int:
        return e[0] * self.n + e[1]


def _fast_zero(g: Graph) -> bool:
    return not classify(g).matchable


def mp(g: Graph) -> MpResult:
    """Exact matching preclusion number with an optimal certificate."""
    if _fast_zero(g):
        return MpResult(0, _certificate(g, ()), {}, 1)
    sets = _bound_sets(g)
    bounds = {k: len(v) for k, v in sets.items()}
    if not sets:
        # matchable with nothing to delete below: order 0 or 1
        return MpResult(None, None, bounds, 1)
    name = min(sets, key=lambda k: (len(sets[k]), k))
    best = sets[name]
    lb = barrier_lower_bound(g.rows, g.n, len(best))
    if g.n % 2 == 0 and lb < len(best):
        lb = max(lb, edge_disjoint_pm_lower_bound(g))
    if lb >= len(best):
        return MpResult(len(best), _certificate(g, best), bounds, 1)
    search = _Search(g, len(best), best)
    search.run()
    return MpResult(len(search.best), _certificate(g, search.best), bounds, search.nodes)


def mp_decision(g: Graph, k: int) -> Optional[PreclusionCertificate]:
    """A certificate with at most ``k`` edges if ``mp(g) <= k``, else None."""
    if k < 0:
        raise ValueError("budget must be non-negative")
    if _fast_zero(g):
        return _certificate(g, ())
    for F in _bound_sets(g).values():
        if len(F) <= k:
            return _certificate(g, F)
    lb = barrier_lower_bound(g.rows, g.n, k + 1)
    if g.n % 2 == 0 and g.n and lb <= k:
        lb = max(lb, edge_disjoint_pm_lower_bound(g))
    if lb > k:
        return None
    search = _Search(g, k + 1, None)
    search.run()
    return None if search.best is None else _certificate(g, search.best)


# -- brute-force oracle ---------------------------------------------------------------

def _has_pm(rows: Sequence[int], mask: int) -> bool:
    if not mask:
        return True
    low = mask & -mask
    v = low.bit_length() - 1
    rest = mask ^ low
    cand = rows[v] & rest
    while cand:
        b = cand & -cand
        if _has_pm(rows, rest ^ b):
            return True
        cand ^= b
    return False


def matchable_bruteforce(rows: Sequence[int], n: int) -> bool:
    """Matchability by exhaustive pairing, independent of the blossom engine."""
    full = (1 << n) - 1
    if n % 2 == 0:
        return _has_pm(rows, full)
    return any(_has_pm(rows, full ^ (1 << v)) for v in range(n))


def brute_force_mp(g: Graph, *, cap: int = DEFAULT_ORACLE_CAP, override: bool = False) -> MpResult:
    """Smallest preclusion set by enumerating edge subsets in order of size."""
    edges = g.edges()
    m = len(edges)
    if m > cap and not override:
        raise OracleCapExceeded(f"{m} edges exceeds oracle cap {cap}: up to 2^{m} = {2 ** m} subsets")
    for k in range(m + 1):
        for F in itertools.combinations(edges, k):
            rows = list(g.rows)
            for u, v in F:
                rows[u] &= ~(1 << v)
                rows[v] &= ~(1 << u)
            if not matchable_bruteforce(rows, g.n):
                return MpResult(k, _certificate(g, F))
    return MpResult(None, None)
