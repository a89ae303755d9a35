"""Exhaustive enumeration of small graphs.

Labeled graphs of order n are indexed by the integer mask of
:meth:`Graph.to_mask`, so scanning masks in increasing order is scanning
graph6 strings in lexicographic order. :class:`LabeledTable` computes
invariants of *all* ``2^(n(n-1)/2)`` labeled graphs at once with numpy.
Its mp column comes from the deletion recurrence

    mp(G) = 0                           if G has no (almost-)perfect matching
    mp(G) = 1 + min_{e in E(G)} mp(G - e)   otherwise

evaluated layer by layer in edge count, which shares no code with the
branch-and-bound solver.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import Iterator

import numpy as np

from ..graph import Graph, upper_triangle_pairs

MAX_ENUM_N = 7
NOT_PRECLUDABLE = -1


class EnumerationCapExceeded(RuntimeError):
    pass


def check_cap(n: int, cap: int = MAX_ENUM_N) -> None:
    if n > cap:
        count = 2 ** (n * (n - 1) // 2)
        raise EnumerationCapExceeded(f"n={n} exceeds enumeration cap {cap} ({count} labeled graphs)")


def _pair_bit(n: int) -> dict[tuple[int, int], int]:
    pairs = upper_triangle_pairs(n)
    m = len(pairs)
    return {p: m - 1 - k for k, p in enumerate(pairs)}


def _matching_masks(n: int) -> list[int]:
    """Masks of all perfect (n even) or almost-perfect (n odd) matchings of K_n."""
    bit = _pair_bit(n)
    out = []

    def rec(left: tuple[int, ...], acc: int) -> None:
        if len(left) <= 1:
            out.append(acc)
            return
        v = left[0]
        for i in range(1, len(left)):
            u = left[i]
            rec(left[1:i] + left[i + 1:], acc | (1 << bit[(v, u)]))

    verts = tuple(range(n))
    if n % 2 == 0:
        rec(verts, 0)
    else:
        for miss in verts:
            rec(tuple(v for v in verts if v != miss), 0)
    return out


class LabeledTable:
    """Invariants of every labeled graph of order ``n`` (2 <= n <= 7)."""

    def __init__(self, n: int):
        check_cap(n)
        if n < 2:
            raise ValueError("tables start at n = 2")
        self.n = n
        self.m = n * (n - 1) // 2
        self.full = (1 << self.m) - 1
        masks = np.arange(1 << self.m, dtype=np.uint32)
        self.masks = masks
        self.edges = np.bitwise_count(masks).astype(np.int8)
        bit = _pair_bit(n)

        matchable = np.zeros(masks.size, dtype=bool)
        for mm in _matching_masks(n):
            matchable |= (masks & np.uint32(mm)) == mm
        self.matchable = matchable

        deg = np.zeros((n, masks.size), dtype=np.int8)
        nbr = np.zeros((n, masks.size), dtype=np.uint8)
        for (i, j), b in bit.items():
            on = ((masks >> np.uint32(b)) & 1).astype(np.uint8)
            deg[i] += on
            deg[j] += on
            nbr[i] |= on << np.uint8(j)
            nbr[j] |= on << np.uint8(i)
        self.degrees = deg
        self.min_degree = deg.min(axis=0)
        self.max_degree = deg.max(axis=0)

        reach = np.ones(masks.size, dtype=np.uint8)
        for _ in range(n):
            grown = reach.copy()
            for v in range(n):
                grown |= np.where((reach >> np.uint8(v)) & 1, nbr[v], 0).astype(np.uint8)
            reach = grown
        self.connected = reach == (1 << n) - 1

        self.mp = self._mp_column(bit)

    def _mp_column(self, bit: dict) -> np.ndarray:
        mp = np.zeros(self.masks.size, dtype=np.int16)
        positions = sorted(bit.values())
        for layer in range(self.m + 1):
            idx = np.flatnonzero((self.edges == layer) & self.matchable).astype(np.uint32)
            if idx.size == 0:
                continue
            if layer == 0:
                mp[idx] = NOT_PRECLUDABLE
                continue
            best = np.full(idx.size, np.iinfo(np.int16).max, dtype=np.int16)
            for b in positions:
                has = ((idx >> np.uint32(b)) & 1).astype(bool)
                sub = mp[idx[has] ^ np.uint32(1 << b)]
                # a sub-graph that cannot be precluded never occurs for n >= 2
                best[has] = np.minimum(best[has], sub)
            mp[idx] = best + 1
        return mp

    def complement_index(self) -> np.ndarray:
        return (self.full ^ self.masks).astype(np.int64)

    def complement_mp(self) -> np.ndarray:
        return self.mp[self.complement_index()]

    def _adj(self, b: int) -> np.ndarray:
        return ((self.masks >> np.uint32(b)) & 1).astype(np.int8)

    def xi(self) -> np.ndarray:
        """Minimum edge-degree; -1 for the edgeless graph."""
        big = np.int16(4 * self.n)
        out = np.full(self.masks.size, big, dtype=np.int16)
        for (i, j), b in _pair_bit(self.n).items():
            val = self.degrees[i].astype(np.int16) + self.degrees[j] - 2
            out = np.where(self._adj(b) == 1, np.minimum(out, val), out)
        out[out == big] = -1
        return out

    def two_vertex_bound(self) -> np.ndarray:
        """delta(G) + min delta(G - v) over minimum-degree vertices v."""
        n = self.n
        bit = _pair_bit(n)
        big = np.int16(4 * n)
        best = np.full(self.masks.size, big, dtype=np.int16)
        for v in range(n):
            rest = np.full(self.masks.size, big, dtype=np.int16)
            for u in range(n):
                if u != v:
                    d = self.degrees[u].astype(np.int16) - self._adj(bit[(u, v) if u < v else (v, u)])
                    rest = np.minimum(rest, d)
            best = np.where(self.degrees[v] == self.min_degree, np.minimum(best, rest), best)
        return self.min_degree.astype(np.int16) + best

    def regular(self) -> np.ndarray:
        return self.min_degree == self.max_degree

    def graph(self, mask: int) -> Graph:
        return Graph.from_mask(self.n, int(mask))


@lru_cache(maxsize=None)
def labeled_table(n: int) -> LabeledTable:
    return LabeledTable(n)


@lru_cache(maxsize=None)
def iso_representatives(n: int) -> tuple[int, ...]:
    """Smallest mask of every isomorphism class, ascending.

    The smallest mask in an orbit is the lexicographically least upper-triangle
    adjacency string over all vertex permutations.
    """
    check_cap(n)
    m = n * (n - 1) // 2
    if m == 0:
        return (0,)
    bit = _pair_bit(n)
    src = [bit[p] for p in upper_triangle_pairs(n)]
    perm_pos = []
    for perm in itertools.permutations(range(n)):
        row = []
        for i, j in upper_triangle_pairs(n):
            a, b = perm[i], perm[j]
            row.append(bit[(a, b) if a < b else (b, a)])
        perm_pos.append(row)
    pos = np.array(perm_pos, dtype=np.uint32)
    src_arr = np.array(src, dtype=np.uint32)
    seen = np.zeros(1 << m, dtype=bool)
    reps = []
    total = 1 << m
    ptr = 0
    chunk = 1 << 16
    while ptr < total:
        free = np.flatnonzero(~seen[ptr:ptr + chunk])
        if free.size == 0:
            ptr += chunk
            continue
        x = ptr + int(free[0])
        reps.append(x)
        on = ((x >> src_arr) & 1).astype(np.uint32)
        images = (on[None, :] << pos).sum(axis=1, dtype=np.uint64)
        seen[images] = True
        ptr = x + 1
    return tuple(reps)


def enumerate_graphs(n: int, mode: str = "labeled") -> Iterator[Graph]:
    """All graphs of order n: every labeled graph, or one per isomorphism class."""
    check_cap(n)
    if mode == "labeled":
        m = n * (n - 1) // 2
        for mask in range(1 << m):
            yield Graph.from_mask(n, mask)
    elif mode == "up_to_iso":
        for mask in iso_representatives(n):
            yield Graph.from_mask(n, mask)
    else:
        raise ValueError(f"unknown mode {mode!r}")


def labeled_count(n: int) -> int:
    return 2 ** math.comb(n, 2)
