"""Maximum matching, matchability classes and Tutte-Berge witnesses."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Sequence

from .graph import Edge, Graph, bits


@dataclass(frozen=True)
class Matching:
    edges: tuple[Edge, ...]

    @property
    def covered(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)

    def __len__(self) -> int:
        return len(self.edges)

    @classmethod
    def from_mates(cls, mate: Sequence[int]) -> "Matching":
        return cls(tuple(sorted((v, u) for v, u in enumerate(mate) if u > v)))


class Tag(str, Enum):
    PERFECT = "perfect"
    ALMOST_PERFECT = "almost_perfect"
    NEITHER = "neither"


@dataclass(frozen=True)
class MatchClass:
    tag: Tag
    missed: Optional[int] = None

    @property
    def matchable(self) -> bool:
        return self.tag is not Tag.NEITHER


@dataclass(frozen=True)
class DeficiencyWitness:
    S: tuple[int, ...]
    odd_components: int

    @property
    def excess(self) -> int:
        return self.odd_components - len(self.S)


@dataclass(frozen=True)
class GallaiEdmonds:
    D: frozenset[int]
    A: frozenset[int]
    C: frozenset[int]


def _mates(rows: Sequence[int], n: int, start: Optional[Sequence[int]] = None) -> list[int]:
    """Edmonds' blossom algorithm on bitmask rows.

    Free vertices are processed in increasing order and neighbours are scanned
    in increasing order, so the result is a deterministic function of the input
    (and of ``start``, a valid partial matching to extend).
    """
    adj = [bits(r) for r in rows]
    match = list(start) if start is not None else [-1] * n

    def find_path(root: int) -> int:
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] == -1:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return _flip(to, parent)
                    used[match[to]] = True
                    queue.append(match[to])
        return -1

    def _flip(v: int, parent: list[int]) -> int:
        end = v
        while v != -1:
            pv = parent[v]
            ppv = match[pv]
            match[v] = pv
            match[pv] = v
            v = ppv
        return end

    for v in range(n):
        if match[v] == -1 and adj[v]:
            find_path(v)
    return match


def max_matching(g: Graph) -> Matching:
    return Matching.from_mates(_mates(g.rows, g.n))


def matching_number(g: Graph) -> int:
    return sum(1 for v, u in enumerate(_mates(g.rows, g.n)) if u > v)


def deficiency(g: Graph) -> int:
    return g.n - 2 * matching_number(g)


def classify(g: Graph) -> MatchClass:
    mate = _mates(g.rows, g.n)
    free = [v for v in range(g.n) if mate[v] == -1]
    if not free:
        return MatchClass(Tag.PERFECT)
    if len(free) == 1:
        return MatchClass(Tag.ALMOST_PERFECT, free[0])
    return MatchClass(Tag.NEITHER)


def is_matching(g: Graph, edges: Iterable[Edge]) -> bool:
    seen = 0
    for u, v in edges:
        if not g.has_edge(u, v) or (seen >> u & 1) or (seen >> v & 1):
            return False
        seen |= (1 << u) | (1 << v)
    return True


def odd_component_count(g: Graph, removed: int = 0) -> int:
    """Number of odd-order components of ``g`` minus the vertex bitmask ``removed``."""
    within = g.vertex_mask & ~removed
    return sum(c.bit_count() & 1 for c in g.components(within))


def gallai_edmonds(g: Graph) -> GallaiEdmonds:
    """Gallai-Edmonds partition from the definition: ``v`` is in D iff some
    maximum matching misses it, i.e. deleting ``v`` keeps the matching number."""
    nu = matching_number(g)
    d_mask = 0
    for v in range(g.n):
        cleared = tuple(0 if u == v else r & ~(1 << v) for u, r in enumerate(g.rows))
        if sum(1 for w, u in enumerate(_mates(cleared, g.n)) if u > w) == nu:
            d_mask |= 1 << v
    nbrs = 0
    for v in bits(d_mask):
        nbrs |= g.rows[v]
    a_mask = nbrs & ~d_mask
    c_mask = g.vertex_mask & ~(d_mask | a_mask)
    return GallaiEdmonds(frozenset(bits(d_mask)), frozenset(bits(a_mask)), frozenset(bits(c_mask)))


def tutte_berge_witness(g: Graph) -> DeficiencyWitness:
    """Barrier ``S`` attaining ``o(G - S) - |S| = deficiency(G)``."""
    a = sorted(gallai_edmonds(g).A)
    mask = 0
    for v in a:
        mask |= 1 << v
    return DeficiencyWitness(tuple(a), odd_component_count(g, mask))
