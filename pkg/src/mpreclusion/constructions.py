"""Canonical generators for the extremal graph families.

Every generator uses fixed vertex labels so its graph6 output is stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil

from .graph import Edge, Graph, GraphInputError, delete_edges, disjoint_union, join, make_graph, norm_edge
from .matching import Matching, Tag, classify


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise GraphInputError(msg)


def complete(n: int) -> Graph:
    _require(n >= 0, "order must be non-negative")
    return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty(n: int) -> Graph:
    _require(n >= 0, "order must be non-negative")
    return make_graph(n)


def path(n: int) -> Graph:
    _require(n >= 1, "path needs at least one vertex")
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _require(n >= 3, "cycle needs at least three vertices")
    return make_graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def star(n: int) -> Graph:
    """K_{1,n-1} with centre 0."""
    _require(n >= 1, "star needs at least one vertex")
    return make_graph(n, [(0, i) for i in range(1, n)])


def near_pm_plus_isolated(n: int) -> Graph:
    """(n-1)/2 disjoint edges and one isolated vertex (the last one)."""
    _require(n >= 3 and n % 2 == 1, "near_pm_plus_isolated needs odd n >= 3")
    return make_graph(n, [(2 * i, 2 * i + 1) for i in range((n - 1) // 2)])


def graph_from_edges(n: int, edge_sets) -> Graph:
    """Union of pairwise edge-disjoint edge collections on n vertices."""
    return make_graph(n, [e for es in edge_sets for e in es])


# -- decompositions of complete graphs -----------------------------------------------

@dataclass(frozen=True)
class OneFactorization:
    host_n: int
    factors: tuple[Matching, ...]


@dataclass(frozen=True)
class NearPerfectDecomposition:
    host_m: int
    factors: tuple[Matching, ...]
    missed: tuple[int, ...]


@dataclass(frozen=True)
class HamDecomposition:
    host_n: int
    cycles: tuple[tuple[int, ...], ...]  # vertex sequences, closing edge implied

    def cycle_edges(self, j: int) -> list[Edge]:
        c = self.cycles[j]
        return [norm_edge(c[i], c[(i + 1) % len(c)]) for i in range(len(c))]


def one_factorization(n: int) -> OneFactorization:
    """Round-robin 1-factorization of K_n: vertex n-1 is fixed, the rest rotate."""
    _require(n >= 2 and n % 2 == 0, "one_factorization needs even n >= 2")
    k = n - 1
    factors = []
    for r in range(k):
        pairs = [norm_edge(n - 1, r)]
        pairs += [norm_edge((r + i) % k, (r - i) % k) for i in range(1, n // 2)]
        factors.append(Matching(tuple(sorted(pairs))))
    return OneFactorization(n, tuple(factors))


def near_perfect_decomposition(m: int) -> NearPerfectDecomposition:
    """K_m (m odd) as m almost-perfect matchings; round r leaves vertex r out."""
    _require(m >= 3 and m % 2 == 1, "near_perfect_decomposition needs odd m >= 3")
    factors = []
    for r in range(m):
        pairs = [norm_edge((r + i) % m, (r - i) % m) for i in range(1, (m - 1) // 2 + 1)]
        factors.append(Matching(tuple(sorted(pairs))))
    return NearPerfectDecomposition(m, tuple(factors), tuple(range(m)))


def ham_decomposition(n: int) -> HamDecomposition:
    """Walecki decomposition of K_n (n odd) into (n-1)/2 Hamiltonian cycles.

    Vertices 0..n-2 sit on a circle, n-1 is the hub. Cycle j runs
    hub, j, j+1, j-1, j+2, j-2, ..., j+h (indices mod n-1, h = (n-1)/2).
    """
    _require(n >= 3 and n % 2 == 1, "ham_decomposition needs odd n >= 3")
    k = n - 1
    h = k // 2
    cycles = []
    for j in range(1, h + 1):
        seq = [n - 1, j % k]
        for i in range(1, h + 1):
            seq.append((j + i) % k)
            if i < h:
                seq.append((j - i) % k)
        cycles.append(tuple(seq))
    return HamDecomposition(n, tuple(cycles))


def one_factor_union(n: int, k: int) -> Graph:
    """Union of the first k factors of :func:`one_factorization`; k-regular."""
    _require(0 <= k <= n - 1, "need 0 <= k <= n-1")
    fac = one_factorization(n)
    return graph_from_edges(n, (f.edges for f in fac.factors[:k]))


def ham_cycle_union(n: int, c: int) -> Graph:
    """Union of the first c Walecki cycles on n (odd) vertices."""
    dec = ham_decomposition(n)
    _require(0 <= c <= len(dec.cycles), f"need 0 <= c <= {(n - 1) // 2}")
    return graph_from_edges(n, (dec.cycle_edges(j) for j in range(c)))


def _cover_problems(n: int, edge_lists: list[list[Edge]]) -> list[str]:
    seen: dict[Edge, int] = {}
    out = []
    for idx, es in enumerate(edge_lists):
        for e in es:
            if e in seen:
                out.append(f"edge {e} appears in parts {seen[e]} and {idx}")
            seen[e] = idx
    missing = n * (n - 1) // 2 - len(seen)
    if missing:
        out.append(f"{missing} edges of K_{n} are not covered")
    return out


def check_one_factorization(dec: OneFactorization) -> list[str]:
    """Problems found (empty when valid): count, perfectness, disjointness, coverage."""
    n = dec.host_n
    out = []
    if len(dec.factors) != n - 1:
        out.append(f"expected {n - 1} factors, got {len(dec.factors)}")
    for i, f in enumerate(dec.factors):
        if classify(make_graph(n, f.edges)).tag is not Tag.PERFECT or len(f) != n // 2:
            out.append(f"factor {i} is not a perfect matching")
    return out + _cover_problems(n, [list(f.edges) for f in dec.factors])


def check_near_perfect_decomposition(dec: NearPerfectDecomposition) -> list[str]:
    m = dec.host_m
    out = []
    if len(dec.factors) != m or sorted(dec.missed) != list(range(m)):
        out.append("missed vertices are not a bijection onto the factors")
    for i, f in enumerate(dec.factors):
        c = classify(make_graph(m, f.edges))
        if c.tag is not Tag.ALMOST_PERFECT or len(f) != (m - 1) // 2:
            out.append(f"factor {i} is not an almost-perfect matching")
        elif i < len(dec.missed) and dec.missed[i] in f.covered:
            out.append(f"factor {i} covers its declared missed vertex {dec.missed[i]}")
    return out + _cover_problems(m, [list(f.edges) for f in dec.factors])


def check_ham_decomposition(dec: HamDecomposition) -> list[str]:
    n = dec.host_n
    out = []
    if len(dec.cycles) != (n - 1) // 2:
        out.append(f"expected {(n - 1) // 2} cycles, got {len(dec.cycles)}")
    for j, c in enumerate(dec.cycles):
        if sorted(c) != list(range(n)):
            out.append(f"cycle {j} does not visit every vertex exactly once")
            continue
        g = make_graph(n, dec.cycle_edges(j))
        if set(g.degrees()) != {2} or not g.is_connected():
            out.append(f"cycle {j} is not a spanning 2-regular connected subgraph")
        elif classify(g).tag is not Tag.ALMOST_PERFECT:
            out.append(f"cycle {j} has no almost-perfect matching")
    return out + _cover_problems(n, [dec.cycle_edges(j) for j in range(len(dec.cycles))])


# -- near-complete families ---------------------------------------------------------

def complete_minus(n: int, kind: str, t: int = 0) -> Graph:
    """K_n minus a canonical edge set on the lowest vertices.

    ``kind`` is ``"one_edge"`` (remove 01), ``"p3"`` (remove 01, 12) or
    ``"matching"`` (remove 01, 23, ... , t edges).
    """
    _require(n >= 3, "complete_minus needs n >= 3")
    if kind == "one_edge":
        removed = [(0, 1)]
    elif kind == "p3":
        removed = [(0, 1), (1, 2)]
    elif kind == "matching":
        _require(0 <= t and 2 * t <= n, "matching size must satisfy 2t <= n")
        removed = [(2 * i, 2 * i + 1) for i in range(t)]
    else:
        raise GraphInputError(f"unknown kind {kind!r}")
    return delete_edges(complete(n), removed)


def f_witness(n: int, k: int) -> Graph:
    """Order-n graph with one edge fewer than the f(n, k) threshold and mp < k.

    Even n: K_{k-1} joined with K_{n-k} + K_1. Odd n: K_{n-2} on 0..n-3 plus
    u = n-2 joined to the first ceil((k-1)/2) and v = n-1 to the first
    floor((k-1)/2) clique vertices. For even k = 1 and odd k = 2 one vertex
    ends up isolated, so those two witnesses are disconnected.
    """
    if n % 2 == 0:
        _require(n >= 2 and 1 <= k <= n - 1, "even n needs 1 <= k <= n-1")
        return join(complete(k - 1), disjoint_union(complete(n - k), complete(1)))
    _require(n >= 3 and 2 <= k <= 2 * n - 3, "odd n needs 2 <= k <= 2n-3")
    base = n - 2
    u, v = n - 2, n - 1
    a = ceil((k - 1) / 2)
    b = (k - 1) - a
    clique = [(i, j) for i in range(base) for j in range(i + 1, base)]
    return make_graph(n, clique + [(i, u) for i in range(a)] + [(i, v) for i in range(b)])


def example_5_1(n: int) -> Graph:
    """K_{n-5} on 0..n-6 plus v1..v5 = n-5..n-1 with edges 0-v1..0-v4 and v5-v1."""
    _require(n >= 12, "example_5_1 needs n >= 12")
    base = n - 5
    v = [base + i for i in range(5)]
    edges = [(i, j) for i in range(base) for j in range(i + 1, base)]
    edges += [(0, v[i]) for i in range(4)] + [(v[0], v[4])]
    return make_graph(n, edges)


def theorem_5_6_graph(n: int, r: int) -> Graph:
    """First r almost-perfect factors of K_{n-1} plus a universal vertex n-1.

    ``r = 0`` gives the star K_{1,n-1}.
    """
    _require(n >= 4 and n % 2 == 0 and 0 <= r <= n - 1, "need even n >= 4 and 0 <= r <= n-1")
    dec = near_perfect_decomposition(n - 1)
    edges = [e for f in dec.factors[:r] for e in f.edges]
    edges += [(i, n - 1) for i in range(n - 1)]
    return make_graph(n, edges)


GENERATORS = {
    "complete": lambda n, k=None: complete(n),
    "empty": lambda n, k=None: empty(n),
    "path": lambda n, k=None: path(n),
    "cycle": lambda n, k=None: cycle(n),
    "star": lambda n, k=None: star(n),
    "near-pm-plus-isolated": lambda n, k=None: near_pm_plus_isolated(n),
    "one-factor-union": lambda n, k: one_factor_union(n, k),
    "ham-cycle-union": lambda n, k: ham_cycle_union(n, k),
    "complete-minus-edge": lambda n, k=None: complete_minus(n, "one_edge"),
    "complete-minus-p3": lambda n, k=None: complete_minus(n, "p3"),
    "complete-minus-matching": lambda n, k: complete_minus(n, "matching", k),
    "f-witness": lambda n, k: f_witness(n, k),
    "example-5-1": lambda n, k=None: example_5_1(n),
    "thm-5-6": lambda n, k: theorem_5_6_graph(n, k),
}
"""Generator name -> callable(n, k); ``k`` is the secondary parameter where one exists."""

NEEDS_K = {"one-factor-union", "ham-cycle-union", "complete-minus-matching", "f-witness", "thm-5-6"}
