from __future__ import annotations

from math import comb

import pytest

from mpreclusion.constructions import (
    GENERATORS,
    NEEDS_K,
    check_ham_decomposition,
    check_near_perfect_decomposition,
    check_one_factorization,
    complete,
    complete_minus,
    cycle,
    empty,
    example_5_1,
    f_witness,
    ham_cycle_union,
    ham_decomposition,
    near_perfect_decomposition,
    near_pm_plus_isolated,
    one_factor_union,
    one_factorization,
    path,
    star,
    theorem_5_6_graph,
)
from mpreclusion.graph import GraphInputError, complement, to_graph6
from mpreclusion.preclusion import brute_force_mp, mp


def value(g) -> int:
    return mp(g).value


def test_basic_family_values():
    assert value(path(5)) == 2
    assert value(cycle(7)) == 3
    assert value(empty(5)) == 0
    assert star(5).degree(0) == 4


def test_cycle_needs_three_vertices():
    with pytest.raises(GraphInputError):
        cycle(2)


@pytest.mark.parametrize("n, m", [(3, 1), (5, 2), (7, 3)])
def test_near_pm_plus_isolated(n, m):
    g = near_pm_plus_isolated(n)
    assert g.m == m and value(g) == 1


def test_one_factorization_small_cases():
    d = one_factorization(4)
    assert len(d.factors) == 3
    assert sorted(e for f in d.factors for e in f.edges) == complete(4).edges()
    d = one_factorization(6)
    assert len(d.factors) == 5 and all(len(f) == 3 for f in d.factors)
    assert check_one_factorization(d) == []


@pytest.mark.parametrize("n", range(2, 17, 2))
def test_one_factorization_is_valid(n):
    assert check_one_factorization(one_factorization(n)) == []


@pytest.mark.parametrize("m", range(3, 16, 2))
def test_near_perfect_decomposition_is_valid(m):
    d = near_perfect_decomposition(m)
    assert check_near_perfect_decomposition(d) == []
    assert sorted(d.missed) == list(range(m))
    assert all(len(f) == (m - 1) // 2 for f in d.factors)


@pytest.mark.parametrize("n", range(3, 16, 2))
def test_ham_decomposition_is_valid(n):
    d = ham_decomposition(n)
    assert len(d.cycles) == (n - 1) // 2
    assert check_ham_decomposition(d) == []


def test_validators_catch_broken_decompositions():
    d = one_factorization(6)
    broken = type(d)(d.host_n, (d.factors[0], d.factors[0]) + d.factors[2:])
    assert check_one_factorization(broken)
    d = near_perfect_decomposition(5)
    broken = type(d)(d.host_m, d.factors, (0,) * 5)
    assert check_near_perfect_decomposition(broken)


@pytest.mark.parametrize("n", [4, 6, 8, 10])
def test_one_factor_unions_have_mp_k(n):
    for k in range(n):
        g = one_factor_union(n, k)
        assert g.m == n * k // 2 and value(g) == k


def test_complete_minus_values():
    assert value(complete_minus(13, "one_edge")) == 22
    assert value(complete_minus(13, "p3")) == 21
    assert value(complete_minus(10, "matching", 5)) == 8


def test_complete_minus_parameter_checks():
    with pytest.raises(GraphInputError):
        complete_minus(2, "one_edge")
    with pytest.raises(GraphInputError):
        complete_minus(6, "matching", 4)
    with pytest.raises(GraphInputError):
        complete_minus(6, "triangle")


def test_f_witness_examples():
    g = f_witness(8, 3)
    assert g.m == 23 and value(g) < 3
    g = f_witness(9, 2)
    assert g.m == 22 and value(g) < 2
    g = f_witness(6, 1)
    assert g.m == 10 and g.degree(5) == 0 and value(g) == 0


@pytest.mark.parametrize("n", range(4, 12))
def test_f_witness_edge_counts(n):
    ks = range(1, n) if n % 2 == 0 else range(2, 2 * n - 2)
    base = comb(n - 1, 2) if n % 2 == 0 else comb(n - 2, 2)
    for k in ks:
        g = f_witness(n, k)
        assert g.m == base + k - 1 and value(g) < k


def test_f_witness_range_checks():
    with pytest.raises(GraphInputError):
        f_witness(6, 6)
    with pytest.raises(GraphInputError):
        f_witness(7, 1)


@pytest.mark.parametrize("n", [12, 13, 14])
def test_unmatchable_pair_family_is_connected_both_ways(n):
    g = example_5_1(n)
    h = complement(g)
    assert g.is_connected() and h.is_connected()
    assert value(g) == 0 and value(h) == 0


def test_unmatchable_pair_family_needs_twelve_vertices():
    with pytest.raises(GraphInputError):
        example_5_1(11)


def test_universal_vertex_family_examples():
    g = theorem_5_6_graph(6, 3)
    assert value(g) == 3 and value(complement(g)) == 0
    assert value(theorem_5_6_graph(4, 1)) == 1
    g = theorem_5_6_graph(8, 7)
    assert value(g) == 7 and complement(g).degree(7) == 0


@pytest.mark.parametrize("n", [4, 6, 8, 10])
def test_universal_vertex_family_realises_every_value(n):
    for r in range(n):
        g = theorem_5_6_graph(n, r)
        assert value(g) == r and value(complement(g)) == 0


def test_ham_cycle_unions_agree_with_oracle():
    for n, c in [(5, 1), (5, 2), (7, 1)]:
        g = ham_cycle_union(n, c)
        assert value(g) == brute_force_mp(g, override=True).value


SAMPLE_ARGS = {
    "complete": (12,), "empty": (12,), "path": (12,), "cycle": (12,), "star": (12,),
    "near-pm-plus-isolated": (11,), "one-factor-union": (12, 3), "ham-cycle-union": (11, 3),
    "complete-minus-edge": (11,), "complete-minus-p3": (11,), "complete-minus-matching": (12, 4),
    "f-witness": (12, 3), "example-5-1": (12,), "thm-5-6": (12, 5),
}


def test_every_generator_is_covered_and_deterministic():
    assert set(SAMPLE_ARGS) == set(GENERATORS)
    for name, args in SAMPLE_ARGS.items():
        assert to_graph6(GENERATORS[name](*args)) == to_graph6(GENERATORS[name](*args))


def test_generators_reject_missing_secondary_parameter():
    for name in NEEDS_K:
        with pytest.raises(TypeError):
            GENERATORS[name](8)

