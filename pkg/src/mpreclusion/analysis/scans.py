"""Nordhaus-Gaddum scans of mp(G) + mp(complement G) and mp(G) * mp(complement G)."""

from __future__ import annotations

import random
from typing import Optional

import numpy as np

from ..graph import Graph, complement
from ..preclusion import mp
from .enumeration import MAX_ENUM_N, labeled_table
from .reports import Counterexample, Mode, Status, TheoremReport
from .sampling import parallel_map, random_graph

SAMPLED_MAX_N = 12


def sum_bound(n: int) -> int:
    return n - 1 if n % 2 == 0 else 2 * n - 3


def product_bound(n: int) -> Optional[int]:
    """None where no product bound is claimed (odd n < 5)."""
    if n % 2 == 0:
        return ((n - 1 + 1) // 2) * ((n - 1) // 2)
    return (n - 2) ** 2 if n >= 5 else None


def mp_pair(g: Graph) -> tuple[int, int]:
    return mp(g).value, mp(complement(g)).value


def _stats(sums: np.ndarray, prods: np.ndarray) -> dict:
    return {
        "max_sum": int(sums.max()),
        "max_product": int(prods.max()),
        "sums_attained": sorted(int(x) for x in np.unique(sums)),
    }


def nordhaus_gaddum_scan(n: int, *, samples: int = 500, seed: int = 0, threads: int = 1) -> TheoremReport:
    """Check the sum and product bounds over every labeled graph (n <= 7) or a seeded sample."""
    params = {"n": n}
    if n < 3 or n > SAMPLED_MAX_N:
        return TheoremReport("Thm5.1", params, Status.SKIPPED, note="scans cover 3 <= n <= 12")
    sb, pb = sum_bound(n), product_bound(n)
    if n <= MAX_ENUM_N:
        t = labeled_table(n)
        a = t.mp.astype(np.int32)
        b = t.complement_mp().astype(np.int32)
        sums, prods = a + b, a * b
        bad = sums > sb
        if pb is not None:
            bad |= prods > pb
        report = TheoremReport("Thm5.1", params, Status.VERIFIED, Mode.EXHAUSTIVE_LABELED)
        graph_of = lambda i: t.graph(i)  # noqa: E731
    else:
        rng = random.Random(seed)
        graphs = [random_graph(n, rng) for _ in range(samples)]
        pairs = np.array(parallel_map(mp_pair, graphs, threads), dtype=np.int32)
        sums, prods = pairs[:, 0] + pairs[:, 1], pairs[:, 0] * pairs[:, 1]
        bad = sums > sb
        if pb is not None:
            bad |= prods > pb
        params["samples"] = samples
        report = TheoremReport("Thm5.1", params, Status.VERIFIED, Mode.SAMPLED, seed=seed)
        graph_of = lambda i: graphs[i]  # noqa: E731
    report.details = _stats(sums, prods) | {"sum_bound": sb, "product_bound": pb}
    if bad.any():
        i = int(np.flatnonzero(bad)[0])
        report.status = Status.COUNTEREXAMPLE
        report.counterexample = Counterexample(graph_of(i), {"sum": int(sums[i]), "product": int(prods[i])})
    return report
