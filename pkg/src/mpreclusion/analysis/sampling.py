"""Seeded random graphs and an order-preserving parallel map."""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Optional, Sequence, TypeVar

from ..graph import Graph, complement, make_graph, upper_triangle_pairs

T = TypeVar("T")
R = TypeVar("R")


def random_graph(n: int, rng: random.Random, p: Optional[float] = None) -> Graph:
    """G(n, p); when p is None it is itself drawn uniformly so densities vary."""
    if p is None:
        p = rng.random()
    return make_graph(n, [e for e in upper_triangle_pairs(n) if rng.random() < p])


def random_connected_graph(n: int, rng: random.Random, p: Optional[float] = None) -> Graph:
    """Random spanning tree (random attachment order) plus G(n, p) edges."""
    order = list(range(n))
    rng.shuffle(order)
    tree = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    if p is None:
        p = rng.random()
    extra = {e for e in upper_triangle_pairs(n) if e not in tree and rng.random() < p}
    return make_graph(n, sorted(tree | extra))


def near_complete(n: int, missing: int, rng: random.Random) -> Graph:
    """K_n with ``missing`` uniformly chosen edges removed."""
    gone = rng.sample(upper_triangle_pairs(n), missing)
    return complement(make_graph(n, gone))


def bounded_codegree(n: int, cap: int, rng: random.Random, exact: bool = True) -> Graph:
    """K_n minus a random edge set whose maximum degree is ``cap``.

    Pairs are added greedily in random order while both endpoints stay below
    ``cap``; with ``exact`` the result is retried until some vertex reaches it.
    """
    pairs = upper_triangle_pairs(n)
    while True:
        rng.shuffle(pairs)
        deg = [0] * n
        gone = []
        stop = rng.randrange(1, len(pairs) + 1)
        for u, v in pairs[:stop]:
            if deg[u] < cap and deg[v] < cap:
                deg[u] += 1
                deg[v] += 1
                gone.append((u, v))
        if not exact or cap == 0 or max(deg) == cap:
            return complement(make_graph(n, gone))


def parallel_map(fn: Callable[[T], R], items: Sequence[T] | Iterable[T], threads: int = 1) -> list[R]:
    """``[fn(x) for x in items]``, optionally across worker processes; order is kept."""
    items = list(items)
    if threads <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    chunk = max(1, len(items) // (threads * 4))
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items, chunksize=chunk))
