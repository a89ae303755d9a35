"""Brute-force values of the extremal functions s, f and g.

* s(n, k): fewest edges of an order-n graph with mp = k.
* f(n, k): least m such that every *connected* order-n graph with at least
  m edges has mp >= k.
* g(n, k): greatest m such that every order-n graph with at most m edges
  has mp <= k.

Witnesses are the first qualifying graph in scan order (ascending mask, i.e.
graph6 lexicographic order).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

from ..graph import Graph
from ..preclusion import mp
from .enumeration import check_cap, iso_representatives, labeled_table
from .reports import ExtremalValue

MODES = ("labeled", "up_to_iso")


@dataclass(frozen=True)
class Columns:
    """Per-graph invariants aligned by position; masks ascend."""

    n: int
    masks: np.ndarray
    mp: np.ndarray
    edges: np.ndarray
    connected: np.ndarray


@lru_cache(maxsize=None)
def columns(n: int, mode: str = "labeled") -> Columns:
    check_cap(n)
    if n < 2:
        raise ValueError("extremal scans start at n = 2")
    if mode == "labeled":
        t = labeled_table(n)
        return Columns(n, t.masks.astype(np.int64), t.mp, t.edges, t.connected)
    if mode != "up_to_iso":
        raise ValueError(f"unknown mode {mode!r}")
    reps = iso_representatives(n)
    graphs = [Graph.from_mask(n, x) for x in reps]
    return Columns(
        n,
        np.array(reps, dtype=np.int64),
        np.array([mp(g).value for g in graphs], dtype=np.int16),
        np.array([g.m for g in graphs], dtype=np.int8),
        np.array([g.is_connected() for g in graphs], dtype=bool),
    )


def _first(cols: Columns, sel: np.ndarray) -> Graph:
    return Graph.from_mask(cols.n, int(cols.masks[np.flatnonzero(sel)[0]]))


def brute_s(n: int, k: int, mode: str = "labeled") -> ExtremalValue:
    cols = columns(n, mode)
    hit = cols.mp == k
    if not hit.any():
        return ExtremalValue(n, k, None)
    low = int(cols.edges[hit].min())
    return ExtremalValue(n, k, low, _first(cols, hit & (cols.edges == low)))


def brute_f(n: int, k: int, mode: str = "labeled") -> ExtremalValue:
    """Witness: a connected graph with f - 1 edges and mp < k (absent when f = 0)."""
    cols = columns(n, mode)
    bad = cols.connected & (cols.mp < k)
    if not bad.any():
        return ExtremalValue(n, k, 0)
    top = int(cols.edges[bad].max())
    return ExtremalValue(n, k, top + 1, _first(cols, bad & (cols.edges == top)))


def brute_g(n: int, k: int, mode: str = "labeled") -> ExtremalValue:
    """Witness: a graph with g + 1 edges and mp > k (absent when no graph exceeds k)."""
    cols = columns(n, mode)
    over = cols.mp > k
    if not over.any():
        return ExtremalValue(n, k, comb(n, 2))
    low = int(cols.edges[over].min())
    return ExtremalValue(n, k, low - 1, _first(cols, over & (cols.edges == low)))


def max_mp(n: int, mode: str = "labeled") -> int:
    return int(columns(n, mode).mp.max())
