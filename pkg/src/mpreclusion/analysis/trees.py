"""Tree enumeration: Prüfer sequences (labeled) and free trees (up to isomorphism)."""

from __future__ import annotations

import heapq
import itertools
import random
from typing import Iterator, Sequence

from ..graph import Graph, make_graph


def prufer_to_tree(seq: Sequence[int], n: int) -> Graph:
    if n < 2 or len(seq) != n - 2:
        raise ValueError("a Prüfer sequence for n vertices has length n-2 (n >= 2)")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return make_graph(n, edges)


def all_labeled_trees(n: int) -> Iterator[Graph]:
    """All n^(n-2) labeled trees, in lexicographic Prüfer order."""
    if n == 1:
        yield make_graph(1)
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield prufer_to_tree(seq, n)


def random_labeled_trees(n: int, count: int, seed: int) -> Iterator[Graph]:
    rng = random.Random(seed)
    for _ in range(count):
        yield prufer_to_tree([rng.randrange(n) for _ in range(n - 2)], n)


def _centers(g: Graph) -> list[int]:
    deg = g.degrees()
    layer = [v for v in range(g.n) if deg[v] <= 1]
    left = g.n
    while left > 2:
        left -= len(layer)
        nxt = []
        for v in layer:
            for u in g.neighbors(v):
                deg[u] -= 1
                if deg[u] == 1:
                    nxt.append(u)
        layer = nxt
    return layer


def _ahu(g: Graph, root: int, parent: int) -> str:
    kids = sorted(_ahu(g, u, root) for u in g.neighbors(root) if u != parent)
    return "(" + "".join(kids) + ")"


def tree_canonical(g: Graph) -> str:
    """AHU encoding rooted at the centre(s); equal strings iff isomorphic trees."""
    if g.n == 0:
        return ""
    return min(_ahu(g, c, -1) for c in _centers(g))


def free_trees(n: int) -> list[Graph]:
    """One tree per isomorphism class, grown leaf by leaf from smaller classes."""
    if n < 1:
        return []
    level = {tree_canonical(make_graph(1)): make_graph(1)}
    for size in range(2, n + 1):
        nxt: dict[str, Graph] = {}
        for t in level.values():
            for v in range(t.n):
                grown = make_graph(size, t.edges() + [(v, size - 1)])
                nxt.setdefault(tree_canonical(grown), grown)
        level = nxt
    return [level[k] for k in sorted(level)]
