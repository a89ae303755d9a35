"""Theorem registry: one checker per claim, run at desk scale.

``verify(theorem_id, **params)`` returns a :class:`TheoremReport`. Claims are
checked exhaustively over labeled graphs when n <= 7, and otherwise on seeded
samples or on the named constructions. Parameters outside a claim's stated
hypothesis produce ``skipped_out_of_range`` without testing anything.
"""

from __future__ import annotations

import random
import time
from math import ceil, comb
from typing import Any, Callable, Iterable, Optional

import numpy as np

from .. import constructions as C
from ..graph import Graph, complement, degree_stats, delete_edges
from ..preclusion import mp, upper_bounds
from .enumeration import MAX_ENUM_N, labeled_table
from .extremal import brute_f, brute_g, brute_s, max_mp
from .reports import Counterexample, Mode, Status, TheoremReport
from .sampling import bounded_codegree, near_complete, parallel_map, random_connected_graph, random_graph
from .scans import SAMPLED_MAX_N, mp_pair, nordhaus_gaddum_scan, product_bound, sum_bound
from .trees import free_trees, random_labeled_trees, tree_canonical

Checker = Callable[..., TheoremReport]
REGISTRY: dict[str, Checker] = {}


def register(theorem_id: str) -> Callable[[Checker], Checker]:
    def deco(fn: Checker) -> Checker:
        REGISTRY[theorem_id] = fn
        return fn
    return deco


def verify(theorem_id: str, **params: Any) -> TheoremReport:
    try:
        fn = REGISTRY[theorem_id]
    except KeyError:
        raise KeyError(f"unknown theorem id {theorem_id!r}; known: {', '.join(sorted(REGISTRY))}") from None
    return fn(**params)


# -- helpers ------------------------------------------------------------------------

def _skip(tid: str, params: dict, why: str, **details: Any) -> TheoremReport:
    return TheoremReport(tid, params, Status.SKIPPED, note=why, details=details)


def _from_table(tid: str, params: dict, n: int, bad: np.ndarray, observed: Callable[[int], dict],
                details: Optional[dict] = None) -> TheoremReport:
    """Report over the labeled table; ``bad`` flags violating masks."""
    rep = TheoremReport(tid, params, Status.VERIFIED, Mode.EXHAUSTIVE_LABELED, details=details or {})
    rep.details.setdefault("graphs_checked", int(bad.size))
    if bad.any():
        i = int(np.flatnonzero(bad)[0])
        rep.status = Status.COUNTEREXAMPLE
        rep.counterexample = Counterexample(labeled_table(n).graph(i), observed(i))
    return rep


def _from_graphs(tid: str, params: dict, mode: Mode, graphs: Iterable[Graph],
                 check: Callable[[Graph], Optional[dict]], seed: Optional[int] = None,
                 details: Optional[dict] = None) -> TheoremReport:
    """``check`` returns None when a graph agrees with the claim, else observed values."""
    rep = TheoremReport(tid, params, Status.VERIFIED, mode, seed=seed, details=details or {})
    count = 0
    for g in graphs:
        count += 1
        bad = check(g)
        if bad is not None:
            rep.status = Status.COUNTEREXAMPLE
            rep.counterexample = Counterexample(g, bad)
            break
    rep.details.setdefault("graphs_checked", count)
    return rep


def _value(g: Graph) -> int:
    return mp(g).value


def _complement_edges(g: Graph) -> list[tuple[int, int]]:
    return complement(g).edges()


def _is_k_minus_e(g: Graph) -> bool:
    return len(_complement_edges(g)) == 1


def _is_k_minus_p3(g: Graph) -> bool:
    ce = _complement_edges(g)
    return len(ce) == 2 and len({*ce[0], *ce[1]}) == 3


def _table(n: int):
    return labeled_table(n)


# -- complete graphs and upper bounds --------------------------------------------------

def mp_complete_formula(n: int) -> Optional[int]:
    """The closed form for mp(K_n), or None where none is claimed (odd n < 9)."""
    if n >= 2 and n % 2 == 0:
        return n - 1
    if n >= 9 and n % 2 == 1:
        return 2 * n - 3
    return None


@register("Thm2.1")
def _thm2_1(n: int) -> TheoremReport:
    params = {"n": n}
    want = mp_complete_formula(n)
    if want is None:
        got = _value(C.complete(n)) if n >= 2 else None
        return _skip("Thm2.1", params, "formula claimed for even n >= 2 and odd n >= 9 only", mp_computed=got)
    t0 = time.perf_counter()
    got = _value(C.complete(n))
    rep = TheoremReport("Thm2.1", params, Status.VERIFIED, Mode.CONSTRUCTIVE,
                        details={"mp": got, "expected": want, "seconds": round(time.perf_counter() - t0, 4)})
    if got != want:
        rep.status = Status.COUNTEREXAMPLE
        rep.counterexample = Counterexample(C.complete(n), {"mp": got, "expected": want})
    return rep


def _sample(n: int, samples: int, seed: int, connected: bool = False) -> list[Graph]:
    rng = random.Random(seed)
    make = random_connected_graph if connected else random_graph
    return [make(n, rng) for _ in range(samples)]


def _bound_claim(tid: str, n: int, samples: int, seed: int, threads: int,
                 table_bad: Callable[[Any], np.ndarray], field: str, need_odd: bool) -> TheoremReport:
    params = {"n": n}
    if n < 3 or (need_odd and n % 2 == 0) or (not need_odd and n % 2 == 1):
        return _skip(tid, params, "parity or order outside the hypothesis")
    if n <= MAX_ENUM_N:
        t = _table(n)
        return _from_table(tid, params, n, table_bad(t), lambda i: {"mp": int(t.mp[i])})
    graphs = _sample(n, samples, seed)
    values = parallel_map(_value, graphs, threads)
    params["samples"] = samples

    def check(pair):
        g, v = pair
        b = getattr(upper_bounds(g), field)
        return None if b is None or v <= b else {"mp": v, field: b}

    rep = _from_graphs(tid, params, Mode.SAMPLED, zip(graphs, values), check, seed=seed)
    if rep.counterexample is not None:
        rep.counterexample = Counterexample(rep.counterexample.graph[0], rep.counterexample.observed)
    return rep


@register("Prop2.1")
def _prop2_1(n: int, samples: int = 300, seed: int = 0, threads: int = 1) -> TheoremReport:
    """Odd order: mp <= xi + 1."""
    def bad(t):
        xi = t.xi()
        return (xi >= 0) & (t.mp > xi + 1)
    return _bound_claim("Prop2.1", n, samples, seed, threads, bad, "odd_xi", need_odd=True)


@register("Prop2.3")
def _prop2_3(n: int, samples: int = 300, seed: int = 0, threads: int = 1) -> TheoremReport:
    """Odd order: mp <= delta(G) + delta(G - v) at a minimum-degree vertex v."""
    return _bound_claim("Prop2.3", n, samples, seed, threads,
                        lambda t: t.mp > t.two_vertex_bound(), "odd_two_vertex", need_odd=True)


@register("Obs1.1")
def _obs1_1(n: int, samples: int = 100, seed: int = 0, threads: int = 1) -> TheoremReport:
    """Spanning-subgraph monotonicity, mp <= delta for even order, and single-edge stability."""
    params = {"n": n}
    if n < 2:
        return _skip("Obs1.1", params, "needs n >= 2")
    if n <= MAX_ENUM_N:
        t = _table(n)
        a = t.mp.astype(np.int32)
        bad = (a > t.min_degree) if n % 2 == 0 else np.zeros(a.size, dtype=bool)
        for b in range(t.m):
            has = ((t.masks >> np.uint32(b)) & 1).astype(bool)
            sub = a[t.masks ^ np.uint32(1 << b)]
            # deleting one edge never raises mp and lowers it by at most one;
            # chaining single deletions covers every spanning subgraph
            bad |= has & ((sub > a) | (sub < a - 1))
        return _from_table("Obs1.1", params, n, bad, lambda i: {"mp": int(a[i]), "delta": int(t.min_degree[i])})
    rng = random.Random(seed)
    params["samples"] = samples

    def check(g: Graph) -> Optional[dict]:
        v = _value(g)
        if n % 2 == 0 and v > degree_stats(g).delta:
            return {"mp": v, "delta": degree_stats(g).delta}
        for e in g.edges():
            w = _value(delete_edges(g, [e]))
            if not v - 1 <= w <= v:
                return {"mp": v, "edge": list(e), "mp_minus_edge": w}
        return None

    graphs = [random_graph(n, rng) for _ in range(samples)]
    return _from_graphs("Obs1.1", params, Mode.SAMPLED, graphs, check, seed=seed)


@register("Prop2.2")
def _prop2_2(n: int, samples: int = 200, seed: int = 0, threads: int = 1) -> TheoremReport:
    """Connected graphs: mp <= n-1 (even n >= 2) or <= 2n-3 (odd n >= 9)."""
    params = {"n": n}
    cap = mp_complete_formula(n)
    if cap is None:
        return _skip("Prop2.2", params, "upper bound claimed for even n >= 2 and odd n >= 9 only")
    if n <= MAX_ENUM_N:
        t = _table(n)
        return _from_table("Prop2.2", params, n, t.connected & ((t.mp > cap) | (t.mp < 0)),
                           lambda i: {"mp": int(t.mp[i]), "bound": cap})
    graphs = _sample(n, samples, seed, connected=True)
    values = parallel_map(_value, graphs, threads)
    params["samples"] = samples
    rep = _from_graphs("Prop2.2", params, Mode.SAMPLED, range(len(graphs)),
                       lambda i: None if 0 <= values[i] <= cap else {"mp": values[i], "bound": cap}, seed=seed)
    if rep.counterexample is not None:
        rep.counterexample = Counterexample(graphs[rep.counterexample.graph], rep.counterexample.observed)
    return rep


# -- characterizations --------------------------------------------------------------

@register("Prop3.2")
def _prop3_2(n: int, samples: int = 200, seed: int = 0, threads: int = 1) -> TheoremReport:
    """mp = k >= 1 implies delta <= n/2 + k - 2."""
    params = {"n": n}
    if n < 2:
        return _skip("Prop3.2", params, "needs n >= 2")
    if n <= MAX_ENUM_N:
        t = _table(n)
        k = t.mp.astype(np.int32)
        bad = (k >= 1) & (2 * t.min_degree.astype(np.int32) > n + 2 * k - 4)
        return _from_table("Prop3.2", params, n, bad,
                           lambda i: {"mp": int(k[i]), "delta": int(t.min_degree[i]), "bound": n / 2 + int(k[i]) - 2})
    graphs = _sample(n, samples, seed)
    values = parallel_map(_value, graphs, threads)
    params["samples"] = samples

    def check(i: int) -> Optional[dict]:
        d, k = degree_stats(graphs[i]).delta, values[i]
        return None if k < 1 or 2 * d <= n + 2 * k - 4 else {"mp": k, "delta": d}

    rep = _from_graphs("Prop3.2", params, Mode.SAMPLED, range(samples), check, seed=seed)
    if rep.counterexample is not None:
        rep.counterexample = Counterexample(graphs[rep.counterexample.graph], rep.counterexample.observed)
    return rep


def _iff(g: Graph, target: int, claim: Callable[[Graph], bool]) -> Optional[dict]:
    v = _value(g)
    lhs, rhs = v == target, claim(g)
    return None if lhs == rhs else {"mp": v, "target": target, "mp_equals_target": lhs, "condition": rhs}


@register("Prop3.4")
def _prop3_4(n: int) -> TheoremReport:
    """Even n >= 2: mp = n-1 iff G is complete."""
    params = {"n": n}
    if n < 2 or n % 2:
        return _skip("Prop3.4", params, "needs even n >= 2")
    if n <= MAX_ENUM_N:
        t = _table(n)
        bad = (t.mp == n - 1) != (t.edges == comb(n, 2))
        return _from_table("Prop3.4", params, n, bad, lambda i: {"mp": int(t.mp[i]), "edges": int(t.edges[i])})
    fam = [C.complete(n), C.complete_minus(n, "one_edge"), C.complete_minus(n, "p3"),
           C.complete_minus(n, "matching", n // 2)]
    return _from_graphs("Prop3.4", params, Mode.CONSTRUCTIVE, fam,
                        lambda g: _iff(g, n - 1, lambda h: h.m == comb(n, 2)))


@register("Thm3.3")
def _thm3_3(n: int, samples: int = 60, seed: int = 0) -> TheoremReport:
    """Even n >= 4: mp = n-2 iff delta = n-2."""
    params = {"n": n}
    if n < 4 or n % 2:
        return _skip("Thm3.3", params, "needs even n >= 4")
    if n <= MAX_ENUM_N:
        t = _table(n)
        bad = (t.mp == n - 2) != (t.min_degree == n - 2)
        return _from_table("Thm3.3", params, n, bad, lambda i: {"mp": int(t.mp[i]), "delta": int(t.min_degree[i])})
    rng = random.Random(seed)
    fam = [C.complete(n)] + [C.complete_minus(n, "matching", s) for s in range(1, n // 2 + 1)]
    fam += [C.complete_minus(n, "p3")]
    fam += [near_complete(n, rng.randint(1, n), rng) for _ in range(samples)]
    params["samples"] = samples
    return _from_graphs("Thm3.3", params, Mode.SAMPLED, fam,
                        lambda g: _iff(g, n - 2, lambda h: degree_stats(h).delta == n - 2), seed=seed)


@register("Thm3.5a")
def _thm3_5a(n: int, k: int, samples: int = 20, seed: int = 0) -> TheoremReport:
    """Even n >= 4k + 6: mp = n-k iff delta = n-k."""
    params = {"n": n, "k": k}
    if n % 2 or k < 1 or n < 4 * k + 6:
        return _skip("Thm3.5a", params, "needs even n and n >= 4k + 6")
    rng = random.Random(seed)
    fam = [complement(C.one_factor_union(n, j)) for j in range(0, k + 2) if j <= n - 1]
    for cap in (k - 2, k - 1, k):
        if cap >= 0:
            fam += [bounded_codegree(n, cap, rng) for _ in range(samples)]
    params["samples"] = samples
    return _from_graphs("Thm3.5a", params, Mode.CONSTRUCTIVE, fam,
                        lambda g: _iff(g, n - k, lambda h: degree_stats(h).delta == n - k), seed=seed)


def _odd_near_complete_family(n: int, samples: int, rng: random.Random, most: int) -> list[Graph]:
    fam = [C.complete(n), C.complete_minus(n, "one_edge"), C.complete_minus(n, "p3")]
    fam += [C.complete_minus(n, "matching", t) for t in range(2, (n - 1) // 2 + 1)]
    fam += [near_complete(n, rng.randint(1, most), rng) for _ in range(samples)]
    return fam


@register("Prop3.5")
def _prop3_5(n: int, samples: int = 30, seed: int = 0) -> TheoremReport:
    params = {"n": n}
    if n < 9 or n % 2 == 0:
        return _skip("Prop3.5", params, "needs odd n >= 9")
    fam = _odd_near_complete_family(n, samples, random.Random(seed), 4)
    params["samples"] = samples
    return _from_graphs("Prop3.5", params, Mode.CONSTRUCTIVE, fam,
                        lambda g: _iff(g, 2 * n - 3, lambda h: h.m == comb(n, 2)), seed=seed)


@register("Thm3.5")
def _thm3_5(n: int, samples: int = 30, seed: int = 0) -> TheoremReport:
    params = {"n": n}
    if n < 9 or n % 2 == 0:
        return _skip("Thm3.5", params, "needs odd n >= 9")
    fam = _odd_near_complete_family(n, samples, random.Random(seed), 4)
    params["samples"] = samples
    return _from_graphs("Thm3.5", params, Mode.CONSTRUCTIVE, fam,
                        lambda g: _iff(g, 2 * n - 4, _is_k_minus_e), seed=seed)


def odd_2n5_condition(g: Graph) -> bool:
    n = g.n
    return (degree_stats(g).delta == n - 2 and not _is_k_minus_e(g)) or _is_k_minus_p3(g)


@register("Thm3.6")
def _thm3_6(n: int, samples: int = 40, seed: int = 0) -> TheoremReport:
    params = {"n": n}
    if n < 13 or n % 2 == 0:
        return _skip("Thm3.6", params, "needs odd n >= 13")
    rng = random.Random(seed)
    fam = _odd_near_complete_family(n, samples, rng, 6)
    fam += [bounded_codegree(n, 1, rng) for _ in range(samples // 2)]
    params["samples"] = samples
    return _from_graphs("Thm3.6", params, Mode.CONSTRUCTIVE, fam,
                        lambda g: _iff(g, 2 * n - 5, odd_2n5_condition), seed=seed,
                        details={"scope": "named families and perturbations only; not all graphs"})


# -- extremal functions ---------------------------------------------------------------

def _closed_compare(tid: str, params: dict, rows: list[tuple[int, Optional[int], Any, Any]],
                    mode: Mode) -> TheoremReport:
    """rows: (k, brute value, claimed value or (lo, hi) range, witness of the brute value)."""
    rep = TheoremReport(tid, params, Status.VERIFIED, mode)
    table = {}
    for k, got, want, wit in rows:
        table[str(k)] = {"brute": got, "claimed": list(want) if isinstance(want, tuple) else want}
        ok = (want[0] <= got <= want[1]) if isinstance(want, tuple) else got == want
        if not ok and rep.status is Status.VERIFIED:
            rep.status = Status.COUNTEREXAMPLE
            rep.counterexample = Counterexample(wit, {"k": k, "brute": got, "claimed": table[str(k)]["claimed"]})
    rep.details["values"] = table
    return rep


def _witness_rows(tid: str, params: dict, items: list[tuple[Any, Graph, int, Callable[[int, int], bool]]],
                  note: str = "") -> TheoremReport:
    """items: (label, graph, expected edge count, predicate(mp, edges))."""
    rep = TheoremReport(tid, params, Status.VERIFIED, Mode.WITNESS_ONLY, note=note)
    out = {}
    for label, g, edges, ok in items:
        v = _value(g)
        out[str(label)] = {"mp": v, "edges": g.m}
        if (g.m != edges or not ok(v, g.m)) and rep.status is Status.VERIFIED:
            rep.status = Status.COUNTEREXAMPLE
            rep.counterexample = Counterexample(g, {"label": label, "mp": v, "edges": g.m, "expected_edges": edges})
    rep.details["witnesses"] = out
    return rep


def small_s_values_odd(n: int) -> list[int]:
    return [0, (n - 1) // 2, n - 1, n]


@register("Lem4.1")
def _lem4_1(n: int) -> TheoremReport:
    params = {"n": n}
    if n < 3 or n % 2 == 0:
        return _skip("Lem4.1", params, "needs odd n >= 3")
    want = small_s_values_odd(n)
    if n <= MAX_ENUM_N:
        rows = []
        for k in range(4):
            r = brute_s(n, k)
            rows.append((k, r.value, want[k], r.witness))
        return _closed_compare("Lem4.1", params, rows, Mode.EXHAUSTIVE_LABELED)
    fam = [C.empty(n), C.near_pm_plus_isolated(n), C.path(n), C.cycle(n)]
    return _witness_rows("Lem4.1", params,
                         [(k, g, want[k], lambda v, m, k=k: v == k) for k, g in enumerate(fam)],
                         note="witnesses attain the values; minimality not re-proved beyond n = 7")


def s_upper_odd(n: int, k: int) -> int:
    return min(ceil(k / 3), (n - 1) // 2) * n


def s_lower_odd(n: int, k: int) -> float:
    return n * (n - 1) * k / (4 * n - 6)


def trim_to_mp(g: Graph, k: int) -> Graph:
    """Delete edges in lexicographic order until mp drops to exactly k.

    Each deletion lowers mp by at most one, so a start with mp >= k always
    passes through k.
    """
    v = _value(g)
    if v < k:
        raise ValueError("start graph has mp below the target")
    for e in g.edges():
        if v == k:
            break
        h = delete_edges(g, [e])
        w = _value(h)
        g, v = h, w
    return g


def s_odd_witness(n: int, k: int) -> Graph:
    """Union of ceil(k/3) Walecki cycles, trimmed to mp exactly k."""
    c = min(ceil(k / 3), (n - 1) // 2)
    return trim_to_mp(C.ham_cycle_union(n, c), k)


@register("Thm4.3")
def _thm4_3(n: int) -> TheoremReport:
    params = {"n": n}
    if n < 2:
        return _skip("Thm4.3", params, "needs n >= 2")
    if n % 2 == 0:
        if n <= MAX_ENUM_N:
            rows = []
            for k in range(n):
                r = brute_s(n, k)
                rows.append((k, r.value, n * k // 2, r.witness))
            return _closed_compare("Thm4.3", params, rows, Mode.EXHAUSTIVE_LABELED)
        items = [(k, C.one_factor_union(n, k), n * k // 2, lambda v, m, k=k: v == k) for k in range(n)]
        return _witness_rows("Thm4.3", params, items, note="one-factor unions attain nk/2; minimality not re-proved")
    if n < 5:
        return _skip("Thm4.3", params, "odd part needs n >= 5")
    ks = range(4, 2 * n - 5)
    if n <= MAX_ENUM_N:
        rows = []
        for k in ks:
            r = brute_s(n, k)
            rows.append((k, r.value, (ceil(s_lower_odd(n, k) - 1e-9), s_upper_odd(n, k)), r.witness))
        return _closed_compare("Thm4.3", params, rows, Mode.EXHAUSTIVE_LABELED)
    items = []
    for k in ks:
        g = s_odd_witness(n, k)
        lo, hi = s_lower_odd(n, k), s_upper_odd(n, k)
        items.append((k, g, g.m, lambda v, m, k=k, lo=lo, hi=hi: v == k and lo <= m <= hi))
    if n >= 13:
        full = comb(n, 2)
        items += [
            ("2n-3", C.complete(n), full, lambda v, m: v == 2 * n - 3),
            ("2n-4", C.complete_minus(n, "one_edge"), full - 1, lambda v, m: v == 2 * n - 4),
            ("2n-5", C.complete_minus(n, "matching", (n - 1) // 2), full - (n - 1) // 2,
             lambda v, m: v == 2 * n - 5),
        ]
    for k, g in enumerate([C.empty(n), C.near_pm_plus_isolated(n), C.path(n), C.cycle(n)]):
        items.append((f"s{k}", g, small_s_values_odd(n)[k], lambda v, m, k=k: v == k))
    return _witness_rows("Thm4.3", params, items,
                         note="witnesses only: mp values and edge counts inside the claimed bounds; "
                              "minimality for n >= 13 is not re-proved")


@register("g-observation")
def _g_obs(n: int) -> TheoremReport:
    params = {"n": n}
    if n < 2 or n > MAX_ENUM_N:
        return _skip("g-observation", params, "brute force covers 2 <= n <= 7")
    rows = []
    for k in range(max_mp(n)):
        g = brute_g(n, k)
        rows.append((k, g.value, brute_s(n, k + 1).value - 1, g.witness))
    return _closed_compare("g-observation", params, rows, Mode.EXHAUSTIVE_LABELED)


@register("Cor4.2")
def _cor4_2(n: int) -> TheoremReport:
    params = {"n": n}
    if n % 2 == 0:
        if n < 4:
            return _skip("Cor4.2", params, "even part needs n >= 4")
        if n <= MAX_ENUM_N:
            rows = []
            for k in range(n - 1):
                r = brute_g(n, k)
                rows.append((k, r.value, n * (k + 1) // 2 - 1, r.witness))
            return _closed_compare("Cor4.2", params, rows, Mode.EXHAUSTIVE_LABELED)
        items = [(k, C.one_factor_union(n, k + 1), n * (k + 1) // 2, lambda v, m, k=k: v == k + 1)
                 for k in range(n - 1)]
        return _witness_rows("Cor4.2", params, items, note="graphs with g+1 edges and mp = k+1")
    if n < 5:
        return _skip("Cor4.2", params, "odd part needs n >= 5")
    ks = range(3, 2 * n - 6)
    if n <= MAX_ENUM_N:
        rows = []
        for k in ks:
            r = brute_g(n, k)
            rows.append((k, r.value, (ceil(s_lower_odd(n, k + 1) - 1 - 1e-9), s_upper_odd(n, k + 1) - 1), r.witness))
        return _closed_compare("Cor4.2", params, rows, Mode.EXHAUSTIVE_LABELED)
    items = []
    for k in ks:
        g = s_odd_witness(n, k + 1)
        items.append((k, g, g.m, lambda v, m, k=k: v == k + 1 and m - 1 <= s_upper_odd(n, k + 1) - 1))
    if n >= 15:
        full = comb(n, 2)
        h = (n - 1) // 2
        items += [
            ("g(2n-4)", C.complete(n), full, lambda v, m: v == 2 * n - 3),
            ("g(2n-5)", C.complete_minus(n, "one_edge"), full - 1, lambda v, m: v == 2 * n - 4),
            ("g(2n-6)", C.complete_minus(n, "matching", h), full - h, lambda v, m: v == 2 * n - 5),
            ("g(0)", C.near_pm_plus_isolated(n), h, lambda v, m: v == 1),
            ("g(1)", C.path(n), n - 1, lambda v, m: v == 2),
            ("g(2)", C.cycle(n), n, lambda v, m: v == 3),
        ]
    return _witness_rows("Cor4.2", params, items,
                         note="witnesses only: each has g+1 edges and mp = k+1; maximality not re-proved")


def f_closed(n: int, k: int) -> Optional[int]:
    if n % 2 == 0 and n >= 2 and 1 <= k <= n - 1:
        return comb(n - 1, 2) + k
    if n % 2 == 1 and n >= 3 and 2 <= k <= 2 * n - 3:
        return comb(n - 2, 2) + k
    return None


def f_k_range(n: int) -> range:
    return range(1, n) if n % 2 == 0 else range(2, 2 * n - 2)


@register("Thm4.1")
def _thm4_1(n: int, k: Optional[int] = None) -> TheoremReport:
    params: dict[str, Any] = {"n": n} if k is None else {"n": n, "k": k}
    ks = list(f_k_range(n)) if k is None else [k]
    if n < 2 or any(f_closed(n, j) is None for j in ks):
        return _skip("Thm4.1", params, "needs 1 <= k <= n-1 (even n) or 2 <= k <= 2n-3 (odd n)")
    if n <= MAX_ENUM_N:
        rows = []
        for j in ks:
            r = brute_f(n, j)
            rows.append((j, r.value, f_closed(n, j), r.witness))
        return _closed_compare("Thm4.1", params, rows, Mode.EXHAUSTIVE_LABELED)
    items = [(j, C.f_witness(n, j), f_closed(n, j) - 1, lambda v, m, j=j: v < j) for j in ks]
    return _witness_rows("Thm4.1", params, items, note="witnesses with f-1 edges and mp < k; upper bound not re-proved")


# -- Nordhaus-Gaddum ------------------------------------------------------------------

@register("Thm5.1")
def _thm5_1(n: int, samples: int = 500, seed: int = 0, threads: int = 1) -> TheoremReport:
    return nordhaus_gaddum_scan(n, samples=samples, seed=seed, threads=threads)


@register("Thm5.2")
def _thm5_2(n: int, samples: int = 30, seed: int = 0, threads: int = 1) -> TheoremReport:
    """Odd n >= 9: sum = 2n-3 iff G or its complement is complete."""
    params = {"n": n}
    if n < 9 or n % 2 == 0:
        return _skip("Thm5.2", params, "needs odd n >= 9")
    rng = random.Random(seed)
    fam = _odd_near_complete_family(n, samples, rng, 4)
    fam += [complement(g) for g in fam]
    fam += [random_graph(n, rng) for _ in range(samples)]
    pairs = parallel_map(mp_pair, fam, threads)
    target = 2 * n - 3
    params["samples"] = samples

    def check(i: int) -> Optional[dict]:
        a, b = pairs[i]
        lhs = a + b == target
        rhs = fam[i].m in (0, comb(n, 2))
        return None if lhs == rhs else {"mp": a, "mp_complement": b}

    rep = _from_graphs("Thm5.2", params, Mode.CONSTRUCTIVE, range(len(fam)), check, seed=seed)
    if rep.counterexample is not None:
        rep.counterexample = Counterexample(fam[rep.counterexample.graph], rep.counterexample.observed)
    return rep


def _even_sampled_family(n: int, samples: int, rng: random.Random) -> list[Graph]:
    fam = [C.one_factor_union(n, k) for k in range(n)]
    return fam + [random_graph(n, rng) for _ in range(samples)]


def _regular_degree(g: Graph) -> Optional[int]:
    d = g.degrees()
    return d[0] if g.n and min(d) == max(d) else None


@register("Thm5.3")
def _thm5_3(n: int, samples: int = 100, seed: int = 0, threads: int = 1) -> TheoremReport:
    """Even n: sum = n-1 implies G is regular."""
    params = {"n": n}
    if n < 2 or n % 2 or n > SAMPLED_MAX_N:
        return _skip("Thm5.3", params, "needs even 2 <= n <= 12")
    if n <= MAX_ENUM_N:
        t = _table(n)
        s = t.mp.astype(np.int32) + t.complement_mp()
        hit = s == n - 1
        return _from_table("Thm5.3", params, n, hit & ~t.regular(), lambda i: {"sum": int(s[i])},
                           details={"sum_attaining_graphs": int(hit.sum())})
    fam = _even_sampled_family(n, samples, random.Random(seed))
    pairs = parallel_map(mp_pair, fam, threads)
    params["samples"] = samples
    rep = _from_graphs("Thm5.3", params, Mode.SAMPLED, range(len(fam)),
                       lambda i: None if sum(pairs[i]) != n - 1 or _regular_degree(fam[i]) is not None
                       else {"sum": sum(pairs[i])}, seed=seed)
    if rep.counterexample is not None:
        rep.counterexample = Counterexample(fam[rep.counterexample.graph], rep.counterexample.observed)
    return rep


@register("Thm5.5")
def _thm5_5(n: int, samples: int = 100, seed: int = 0, threads: int = 1) -> TheoremReport:
    """Even n: product at its bound implies ceil((n-1)/2)- or floor((n-1)/2)-regular."""
    params = {"n": n}
    if n < 2 or n % 2 or n > SAMPLED_MAX_N:
        return _skip("Thm5.5", params, "needs even 2 <= n <= 12")
    pb = product_bound(n)
    degs = {n // 2, n // 2 - 1}
    if n <= MAX_ENUM_N:
        t = _table(n)
        p = t.mp.astype(np.int32) * t.complement_mp()
        hit = p == pb
        ok_deg = t.regular() & np.isin(t.min_degree, list(degs))
        return _from_table("Thm5.5", params, n, hit & ~ok_deg, lambda i: {"product": int(p[i])},
                           details={"product_attaining_graphs": int(hit.sum()), "bound": pb})
    fam = _even_sampled_family(n, samples, random.Random(seed))
    pairs = parallel_map(mp_pair, fam, threads)
    params["samples"] = samples
    rep = _from_graphs("Thm5.5", params, Mode.SAMPLED, range(len(fam)),
                       lambda i: None if pairs[i][0] * pairs[i][1] != pb or _regular_degree(fam[i]) in degs
                       else {"product": pairs[i][0] * pairs[i][1]}, seed=seed)
    if rep.counterexample is not None:
        rep.counterexample = Counterexample(fam[rep.counterexample.graph], rep.counterexample.observed)
    return rep


@register("Thm5.6")
def _thm5_6(n: int) -> TheoremReport:
    """Even n >= 4: every sum r in [0, n-1] is realized with mp(G) = r, mp(complement) = 0."""
    params = {"n": n}
    if n % 2 == 1:
        if 3 <= n <= MAX_ENUM_N:
            t = _table(n)
            sums = sorted(int(x) for x in np.unique(t.mp.astype(np.int32) + t.complement_mp()))
            return _skip("Thm5.6", params, "no claim for odd n; attained sums recorded only",
                         sums_attained=sums, exploratory=True)
        return _skip("Thm5.6", params, "no claim for odd n")
    if n < 4:
        return _skip("Thm5.6", params, "needs even n >= 4")
    rep = TheoremReport("Thm5.6", params, Status.VERIFIED, Mode.CONSTRUCTIVE)
    seen = {}
    for r in range(n):
        g = C.theorem_5_6_graph(n, r)
        a, b = mp_pair(g)
        seen[str(r)] = [a, b]
        if (a, b) != (r, 0) and rep.status is Status.VERIFIED:
            rep.status = Status.COUNTEREXAMPLE
            rep.counterexample = Counterexample(g, {"r": r, "mp": a, "mp_complement": b})
    rep.details["mp_pairs"] = seen
    return rep


@register("Obs5.1")
def _obs5_1(n: int) -> TheoremReport:
    """Product is zero iff G or its complement is not matchable."""
    params = {"n": n}
    if n < 2 or n > MAX_ENUM_N:
        return _skip("Obs5.1", params, "exhaustive check covers 2 <= n <= 7")
    t = _table(n)
    p = t.mp.astype(np.int32) * t.complement_mp()
    unmatchable = ~t.matchable | ~t.matchable[t.complement_index()]
    return _from_table("Obs5.1", params, n, (p == 0) != unmatchable, lambda i: {"product": int(p[i])})


@register("Obs5.2")
def _obs5_2(m: int) -> TheoremReport:
    params = {"m": m}
    if m < 3 or m % 2 == 0:
        return _skip("Obs5.2", params, "needs odd m >= 3")
    problems = C.check_near_perfect_decomposition(C.near_perfect_decomposition(m))
    rep = TheoremReport("Obs5.2", params, Status.VERIFIED, Mode.CONSTRUCTIVE, details={"problems": problems})
    if problems:
        rep.status = Status.COUNTEREXAMPLE
        rep.counterexample = Counterexample(C.complete(m), {"problems": problems})
    return rep


@register("Ex5.1")
def _ex5_1(n: int) -> TheoremReport:
    params = {"n": n}
    if n < 12:
        return _skip("Ex5.1", params, "needs n >= 12")
    g = C.example_5_1(n)
    h = complement(g)
    obs = {"mp": _value(g), "mp_complement": _value(h),
           "connected": g.is_connected(), "complement_connected": h.is_connected()}
    rep = TheoremReport("Ex5.1", params, Status.VERIFIED, Mode.CONSTRUCTIVE, details=obs)
    if obs != {"mp": 0, "mp_complement": 0, "connected": True, "complement_connected": True}:
        rep.status = Status.COUNTEREXAMPLE
        rep.counterexample = Counterexample(g, obs)
    return rep


def _tree_pair_zero(t: Graph) -> bool:
    return _value(t) == 0 and _value(complement(t)) == 0


def _is_star(t: Graph) -> bool:
    return max(t.degrees()) == t.n - 1


@register("Prop5.1")
def _prop5_1(n: int, prufer_samples: int = 100_000, seed: int = 0) -> TheoremReport:
    """Trees of order n >= 9: mp(T) = mp(complement T) = 0 iff n even and T is the star."""
    params = {"n": n}
    if n < 9 or n > 12:
        return _skip("Prop5.1", params, "claim needs n >= 9; tree scans cover n <= 12")
    claim = lambda t: n % 2 == 0 and _is_star(t)  # noqa: E731
    trees = free_trees(n)
    rep = _from_graphs("Prop5.1", params, Mode.EXHAUSTIVE_ISO, trees,
                       lambda t: None if _tree_pair_zero(t) == claim(t)
                       else {"both_zero": not claim(t), "star": _is_star(t)})
    rep.details["tree_classes"] = len(trees)
    if prufer_samples and rep.ok:
        # labeled cross-check: every sampled Prüfer tree lands in a scanned class
        known = {tree_canonical(t) for t in trees}
        stray = sum(1 for t in random_labeled_trees(n, prufer_samples, seed) if tree_canonical(t) not in known)
        rep.details["prufer_samples"] = prufer_samples
        rep.details["prufer_unmatched_classes"] = stray
        rep.seed = seed
        params["prufer_samples"] = prufer_samples
    return rep


def theorem_ids() -> list[str]:
    return sorted(REGISTRY)


def default_suite() -> list[tuple[str, dict]]:
    """The desk-scale parameter set the ``scan`` command runs."""
    suite: list[tuple[str, dict]] = []
    suite += [("Thm2.1", {"n": n}) for n in (2, 4, 6, 8, 10, 12, 9, 11, 13)]
    suite += [("Prop2.1", {"n": n}) for n in (3, 5, 7, 9)]
    suite += [("Prop2.3", {"n": n}) for n in (3, 5, 7, 9)]
    suite += [("Obs1.1", {"n": n}) for n in range(2, 8)]
    suite += [("Prop2.2", {"n": n}) for n in (2, 4, 6, 8, 9, 11)]
    suite += [("Prop3.2", {"n": n}) for n in range(3, 9)]
    suite += [("Prop3.4", {"n": n}) for n in (4, 6, 8)]
    suite += [("Thm3.3", {"n": n}) for n in (4, 6, 8, 10)]
    suite += [("Thm3.5a", {"n": 10, "k": 1}), ("Thm3.5a", {"n": 14, "k": 2})]
    suite += [("Prop3.5", {"n": n}) for n in (9, 11)]
    suite += [("Thm3.5", {"n": n}) for n in (9, 11)]
    suite += [("Thm3.6", {"n": 13})]
    suite += [("Lem4.1", {"n": n}) for n in (3, 5, 7, 9, 11)]
    suite += [("Thm4.3", {"n": n}) for n in (4, 5, 6, 7, 8, 9)]
    suite += [("g-observation", {"n": n}) for n in range(2, 8)]
    suite += [("Cor4.2", {"n": n}) for n in (4, 5, 6, 7)]
    suite += [("Thm4.1", {"n": n}) for n in (4, 5, 6, 7, 8, 9)]
    suite += [("Thm5.1", {"n": n}) for n in range(3, 13)]
    suite += [("Thm5.2", {"n": n}) for n in (9, 11)]
    suite += [("Thm5.3", {"n": n}) for n in (2, 4, 6, 8)]
    suite += [("Thm5.5", {"n": n}) for n in (2, 4, 6, 8)]
    suite += [("Thm5.6", {"n": n}) for n in (4, 5, 6, 7, 8)]
    suite += [("Obs5.1", {"n": n}) for n in range(2, 8)]
    suite += [("Obs5.2", {"m": m}) for m in range(3, 16, 2)]
    suite += [("Ex5.1", {"n": n}) for n in (12, 13, 14)]
    suite += [("Prop5.1", {"n": n, "prufer_samples": 10_000}) for n in (9, 10)]
    return suite

