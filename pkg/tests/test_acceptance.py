"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Lines are also collected and repeated in the terminal summary.
"""

from __future__ import annotations

import random
import time
from math import comb

from conftest import ACCEPTANCE_LINES, AUDIT
from mpreclusion.analysis.enumeration import labeled_table
from mpreclusion.analysis.extremal import brute_f, brute_s
from mpreclusion.analysis.registry import f_closed, f_k_range, verify
from mpreclusion.analysis.reports import Status
from mpreclusion.analysis.scans import nordhaus_gaddum_scan, sum_bound
from mpreclusion.constructions import (
    GENERATORS,
    check_ham_decomposition,
    check_near_perfect_decomposition,
    check_one_factorization,
    complete,
    f_witness,
    ham_decomposition,
    near_perfect_decomposition,
    one_factorization,
    theorem_5_6_graph,
)
from mpreclusion.graph import Graph, complement, delete_edges, make_graph
from mpreclusion.matching import DeficiencyWitness, gallai_edmonds, max_matching, odd_component_count, tutte_berge_witness
from mpreclusion.preclusion import PreclusionCertificate, brute_force_mp, mp, verify_certificate

import oracles


def report(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}: {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


def test_criterion_1_complete_graph_values():
    cases = {n: n - 1 for n in (2, 4, 6, 8, 10, 12)} | {n: 2 * n - 3 for n in (9, 11, 13)}
    bad, slowest = [], 0.0
    for n, want in cases.items():
        t0 = time.perf_counter()
        got = mp(complete(n)).value
        took = time.perf_counter() - t0
        slowest = max(slowest, took)
        if got != want or took >= 10:
            bad.append((n, got, want, round(took, 2)))
    report(1, not bad, f"{len(cases)} complete graphs, slowest {slowest:.3f}s, mismatches {bad}")


def test_criterion_2_solver_equals_oracle():
    t0 = time.perf_counter()
    mismatches = []
    pairs = [(i, j) for i in range(6) for j in range(i + 1, 6)]
    for mask in range(1 << 15):
        g = make_graph(6, [p for b, p in enumerate(pairs) if mask >> b & 1])
        if mp(g).value != brute_force_mp(g).value:
            mismatches.append(mask)
    rng = random.Random(2024)
    sampled = 0
    while sampled < 1000:
        n = rng.choice((7, 8))
        all_pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        g = make_graph(n, rng.sample(all_pairs, rng.randint(0, 16)))
        if mp(g).value != brute_force_mp(g).value:
            mismatches.append(g)
        sampled += 1
    took = time.perf_counter() - t0
    ok = not mismatches and took < 600
    report(2, ok, f"32768 order-6 graphs + {sampled} random (n in 7,8; m <= 16), "
                  f"{len(mismatches)} discrepancies, {took:.1f}s")


def test_criterion_3_small_s_values_odd_orders():
    bad = []
    for n in (5, 7):
        want = [0, (n - 1) // 2, n - 1, n]
        got = [brute_s(n, k).value for k in range(4)]
        if got != want:
            bad.append((n, got, want))
    report(3, not bad, f"brute s(n,k) for n in 5,7 and k in 0..3, mismatches {bad}")


def test_criterion_4_s_values_order_six():
    got = [brute_s(6, k).value for k in range(6)]
    want = [3 * k for k in range(6)]
    report(4, got == want, f"brute s(6,k) = {got}, expected {want}")


def test_criterion_5_f_values_and_witnesses():
    problems = []
    for k in range(1, 6):
        got, want = brute_f(6, k).value, comb(5, 2) + k
        if got != want:
            problems.append(f"f(6,{k})={got} not {want}")
    for k in range(2, 8):
        got, want = brute_f(7, k).value, comb(5, 2) + k
        if got != want:
            problems.append(f"f(7,{k})={got} not {want}")
    witness_bad = []
    for n in (6, 7, 8, 9):
        for k in f_k_range(n):
            g = f_witness(n, k)
            if g.m != f_closed(n, k) - 1 or mp(g).value >= k:
                witness_bad.append((n, k))
    values = "; ".join(problems) if problems else "all brute values match"
    witnesses = f"witness failures {witness_bad}" if witness_bad else "witnesses for n=6..9 attain f-1 edges with mp < k"
    report(5, not problems and not witness_bad, f"{values}; {witnesses}")


def test_criterion_6_characterizations():
    runs = [("Prop3.4", {"n": 6}), ("Thm3.3", {"n": 6}),
            ("Thm3.5a", {"n": 10, "k": 1}), ("Thm3.5a", {"n": 14, "k": 2}),
            ("Thm3.5", {"n": 9}), ("Thm3.5", {"n": 11}), ("Thm3.6", {"n": 13})]
    results = [(tid, p, verify(tid, **p)) for tid, p in runs]
    bad = [(tid, p, r.status.value) for tid, p, r in results if r.status is not Status.VERIFIED]
    modes = sorted({f"{tid}:{r.mode.value}" for tid, _, r in results})
    report(6, not bad, f"{len(runs)} checks ({', '.join(modes)}), not verified: {bad}")


def test_criterion_7_nordhaus_gaddum():
    parts: dict[str, list[str]] = {"bounds": [], "max sum": [], "regularity": [], "every r realized": []}
    for n in (4, 5, 6, 7):
        rep = nordhaus_gaddum_scan(n)
        if rep.status is not Status.VERIFIED:
            parts["bounds"].append(f"n={n} violated by {rep.counterexample.to_dict()}")
        if rep.details["max_sum"] != sum_bound(n):
            parts["max sum"].append(f"n={n} observed {rep.details['max_sum']} not {sum_bound(n)}")
    for n in (4, 6):
        t = labeled_table(n)
        sums = t.mp.astype(int) + t.complement_mp().astype(int)
        top = sums == sums.max()
        if not t.regular()[top].all() or verify("Thm5.3", n=n).status is not Status.VERIFIED:
            parts["regularity"].append(f"n={n} has an irregular sum-attaining graph")
    for n in (4, 6, 8):
        for r in range(n):
            g = theorem_5_6_graph(n, r)
            if mp(g).value != r or mp(complement(g)).value != 0:
                parts["every r realized"].append(f"n={n} r={r}")
    detail = "; ".join(f"{name}: {'ok' if not bad else ', '.join(bad)}" for name, bad in parts.items())
    report(7, not any(parts.values()), detail)


def test_criterion_8_decompositions():
    problems = []
    for n in range(2, 17, 2):
        problems += [f"1F n={n}: {p}" for p in check_one_factorization(one_factorization(n))]
    for m in range(3, 16, 2):
        problems += [f"NP m={m}: {p}" for p in check_near_perfect_decomposition(near_perfect_decomposition(m))]
        problems += [f"HD n={m}: {p}" for p in check_ham_decomposition(ham_decomposition(m))]
    report(8, not problems, f"even n <= 16 and odd m,n <= 15, problems {problems[:3]}")


def _corrupted(g: Graph, c: PreclusionCertificate) -> list[PreclusionCertificate]:
    """Edge dropped from F, or a vertex of an odd component of (G - F) - S moved into S."""
    out = [PreclusionCertificate(c.F[:i] + c.F[i + 1:], c.witness) for i in range(len(c.F))]
    h = delete_edges(g, c.F)
    S = set(c.witness.S)
    for comp in h.components(within=h.vertex_mask & ~sum(1 << v for v in S)):
        if bin(comp).count("1") % 2:
            x = (comp & -comp).bit_length() - 1
            out.append(PreclusionCertificate(c.F, DeficiencyWitness(tuple(sorted(S | {x})), 0)))
    return out


def test_criterion_9_certificate_soundness():
    before = AUDIT["checked"]
    corpus: list[Graph] = [Graph.from_mask(n, x) for n in range(2, 6) for x in range(1 << comb(n, 2))]
    rng = random.Random(99)
    for _ in range(1500):
        n = rng.randint(3, 12)
        corpus.append(make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)
                                     if rng.random() < rng.uniform(0.3, 1.0)]))
    corpus += [GENERATORS["complete"](n, None) for n in range(2, 14)]
    unsound, fuzz_total, fuzz_accepted = 0, 0, 0
    for g in corpus:
        r = mp(g)
        if r.value is None:
            continue
        if not verify_certificate(g, r.certificate):
            unsound += 1
        if r.value >= 1:
            for bad in _corrupted(g, r.certificate):
                fuzz_total += 1
                fuzz_accepted += verify_certificate(g, bad)
    audited = AUDIT["checked"] - before
    ok = unsound == 0 and fuzz_accepted == 0 and fuzz_total > 0
    report(9, ok, f"{audited} certificates audited here ({AUDIT['checked']} so far this session), "
                  f"{unsound} unsound, {fuzz_accepted}/{fuzz_total} corrupted accepted")


def _matching_checks(g: Graph) -> list[str]:
    out = []
    nu = len(max_matching(g))
    if nu != oracles.graph_max_matching(g):
        out.append("size")
    w = tutte_berge_witness(g)
    ge = gallai_edmonds(g)
    if tuple(sorted(ge.A)) != tuple(sorted(w.S)):
        out.append("witness is not the Gallai-Edmonds set A")
    odd = odd_component_count(g, sum(1 << v for v in w.S))
    if odd != w.odd_components or odd - len(w.S) != g.n - 2 * nu:
        out.append("Tutte-Berge equality")
    return out


def test_criterion_10_matching_engine():
    failures = []
    count = 0
    for n in range(0, 7):
        for x in range(1 << comb(n, 2)):
            g = Graph.from_mask(n, x)
            count += 1
            if _matching_checks(g):
                failures.append(g)
    rng = random.Random(10)
    for _ in range(10_000):
        n = rng.randint(1, 10)
        p = rng.random()
        g = make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])
        count += 1
        if _matching_checks(g):
            failures.append(g)
    report(10, not failures, f"{count} graphs, {len(failures)} failures")
