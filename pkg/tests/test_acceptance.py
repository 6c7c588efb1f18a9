"""Acceptance suite: one test per criterion, each printing a verdict line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines; the full run takes a couple of minutes, dominated by the perfect
matching at (12, 90, 2) and the radius-2 sweeps.
"""

import random
from fractions import Fraction

import pytest

from domap.asymptotic import psi, psi_all_brute, psi_family
from domap.ball import ball_size, iter_ball
from domap.bounds import nu_lower_bound
from domap.constructions import (
    EXAMPLE_342_TABLE,
    example_342,
    extend_n,
    product,
    relax_w,
    shorten,
    w1_perfect,
    w2_degree_sequence,
    w2_recursive,
)
from domap.fulllp import (
    average_over_group,
    build_full_program,
    edge_orbits,
    edge_permutations,
    group_elements,
    is_feasible,
    objective,
    permute_vector,
)
from domap.graphs import DominationGraph
from domap.mapping import verify_mapping, verify_table
from domap.matching import (
    build_compatibility,
    decide_all_graphs,
    decide_graph,
    max_matching,
)
from domap.reduced_lp import build_reduced_lp, dump_astar, solve_reduced_lp
from domap.words import weight, word_to_str

from test_reduced_lp import ASTAR_2_4_1, ASTAR_3_4_2


def _report(criterion: str, detail: str) -> None:
    print(f"{criterion} PASS: {detail}")


def test_ac1_golden_verification():
    graphs = [
        [(1, 1), (1, 2), (2, 1), (2, 3), (3, 4)],
        [(1, 2), (2, 1), (2, 3), (3, 4)],
        [(1, 1), (1, 2), (2, 3), (3, 4)],
    ]
    for edges in graphs:
        assert verify_table(3, 4, 2, EXAMPLE_342_TABLE, edges).ok
    broken = DominationGraph.from_degrees((1, 1, 2))
    verdict = verify_table(3, 4, 2, EXAMPLE_342_TABLE, broken.edges())
    assert not verdict.ok and verdict.reason == "domination"
    _report("AC1", "worked table accepts its three graphs, rejects the broken blocks")


def test_ac2_bit_exact_reduced_matrices():
    assert dump_astar(build_reduced_lp(2, 4, 1)) == ASTAR_2_4_1
    assert dump_astar(build_reduced_lp(3, 4, 2)) == ASTAR_3_4_2
    _report("AC2", "5x5 and 11x17 reduced matrices reproduced byte for byte")


def test_ac3_matching_golden():
    h = build_compatibility(DominationGraph.from_degrees((2, 2)), 1)
    ball = list(iter_ball(4, 1))
    edges = [(word_to_str(x, 2), word_to_str(ball[r], 4)) for x, r in h.edges()]
    expected = [
        ("00", "0000"),
        ("01", "0000"), ("01", "0001"), ("01", "0010"),
        ("10", "0000"), ("10", "0100"), ("10", "1000"),
        ("11", "0000"), ("11", "0001"), ("11", "0010"), ("11", "0100"), ("11", "1000"),
    ]
    assert edges == expected
    assert max_matching(h).size == 4
    _report("AC3", "the (2,4,1) compatibility graph has the 12 edges, matching 4")


def test_ac4_perfect_parameters():
    cases = [(2, 3, 1), (12, 90, 2), (11, 23, 3)]
    cases += [(m, (1 << m) - 1, 1) for m in range(1, 7)]
    for m, n, w in cases:
        optimum = solve_reduced_lp(build_reduced_lp(m, n, w)).optimum
        assert optimum == 1 << m, (m, n, w, optimum)
    for m, n, w in [(2, 3, 1), (11, 23, 3), (12, 90, 2)]:
        exists, mapping = decide_graph(DominationGraph.equitable(m, n), w)
        assert exists
        assert verify_mapping(mapping).ok
        assert mapping.is_perfect()
    _report("AC4", "all perfect parameter sets reach 2**m; mappings extracted")


def test_ac5_bound_tightness_w3():
    for m in range(3, 10):
        degrees = (1,) * 3 + (2,) * (m - 3)
        graph = DominationGraph.from_degrees(degrees)
        exists, mapping = decide_graph(graph, 3)
        assert exists, m
        assert verify_mapping(mapping).ok
        assert mapping.n == 2 * m - 3
    for m in range(3, 7):
        assert not decide_all_graphs(m, 2 * m - 4, 3).exists
    _report("AC5", "length 2m-3 achievable for m=3..9, impossible below for m<=6")


def test_ac6_radius2_table():
    pairs = [(4, 6), (6, 11), (8, 23), (10, 45)]
    for m, n in pairs:
        result = decide_all_graphs(m, n, 2)
        assert result.exists, (m, n)
        assert verify_mapping(result.mapping).ok
        assert result.equitable_succeeded
        assert not decide_all_graphs(m, n - 1, 2).exists, (m, n - 1)
    _report("AC6", "radius-2 search values confirmed, and n-1 impossible")


@pytest.mark.slow
def test_ac6_radius2_slow_pair():
    exists, mapping = decide_graph(DominationGraph.equitable(12, 90), 2)
    assert exists and verify_mapping(mapping).ok and mapping.is_perfect()
    assert ball_size(89, 2) < 1 << 12  # and hence no graph can work at 89
    assert not decide_all_graphs(12, 89, 2).exists
    _report("AC6-slow", "(12,90) perfect and (12,89) impossible")


def test_ac7_koenig_egervary_agreement():
    checked = 0
    for w in (1, 2, 3):
        for m in range(1, 9):
            low = nu_lower_bound(m, w)
            for n in range(low, low + 4):
                lp_opt = solve_reduced_lp(build_reduced_lp(m, n, w)).optimum
                h = build_compatibility(DominationGraph.equitable(m, n), w)
                assert lp_opt == max_matching(h).size, (m, n, w)
                checked += 1
    assert checked == 96
    _report("AC7", f"matching size equals the exact optimum on {checked} instances")


def test_ac8_construction_suite():
    for m in range(1, 9):
        mapping = w1_perfect(m)
        assert verify_mapping(mapping).ok
        assert sorted(mapping.table) == sorted(iter_ball((1 << m) - 1, 1))
    for level in range(1, 5):
        mapping = w2_recursive(level)
        assert verify_mapping(mapping).ok
        assert mapping.params == (2 * level + 1, 1 << (level + 1), 2)
        assert tuple(sorted(mapping.graph.degrees)) == w2_degree_sequence(level)
    doubled = product(example_342(), example_342())
    assert doubled.params == (6, 8, 4)
    assert verify_mapping(doubled).ok
    grown = extend_n(relax_w(example_342()))
    assert verify_mapping(grown).ok and grown.params == (3, 5, 3)
    shrunk = shorten(doubled, 6)
    assert verify_mapping(shrunk).ok and shrunk.params == (5, 7, 4)
    _report("AC8", "radius-1 bijections, radius-2 recursion, products, derived maps")


def test_ac9_psi_oracle_equivalence():
    instances = 0
    for m in range(1, 7):
        for n in range(m, 4 * m):  # delta = floor(n/m) <= 3
            graph = DominationGraph.equitable(m, n)
            delta = n // m
            for w in (1, 2, 3):
                brute = psi_all_brute(graph, w)
                for v in range(1 << m):
                    assert psi(v, graph, w) == brute.get(v, 0)
                    if weight(v) == w:
                        j = sum(
                            1
                            for i in range(m)
                            if (v >> (m - 1 - i)) & 1 and graph.degrees[i] == delta
                        )
                        assert psi(v, graph, w) == delta**j * (delta + 1) ** (w - j)
                assert psi_family(range(1 << m), graph, w) == ball_size(n, w)
                instances += 1
    _report("AC9", f"brute force equals the formula on {instances} (m,n,w) instances")


def test_ac10_symmetry_invariance():
    rng = random.Random(425)
    total = 0
    for m, n, w in [(2, 4, 1), (3, 4, 2)]:
        program = build_full_program(DominationGraph.equitable(m, n), w)
        group = group_elements(program.graph, w)
        perms = edge_permutations(program, group)
        orbits = edge_orbits(program, perms)
        for _ in range(500):
            raw = [Fraction(rng.randint(0, 8), 8) for _ in program.edges]
            worst = max(
                sum(f * v for f, v in zip(row, raw)) for row in program.matrix
            )
            if worst > 1:
                raw = [v * Fraction(rng.randint(0, 8), 8) / worst for v in raw]
            assert is_feasible(program, raw)
            pi = perms[rng.randrange(len(perms))]
            permuted = permute_vector(raw, pi)
            assert is_feasible(program, permuted)
            assert objective(permuted) == objective(raw)
            averaged = average_over_group(raw, perms)
            assert is_feasible(program, averaged)
            assert objective(averaged) == objective(raw)
            for orbit in orbits:
                assert len({averaged[e] for e in orbit}) == 1
            total += 1
    assert total == 1000
    _report("AC10", "1000 random vectors: permutation-stable, averages orbit-regular")
