import pytest

from domap.ball import ball_size, iter_ball, rank
from domap.errors import DimensionError, DomainError
from domap.graphs import DominationGraph, dominates, iter_dominated
from domap.words import is_descendant


def test_from_degrees_blocks_consecutive():
    g = DominationGraph.from_degrees((2, 1, 1))
    assert g.owners == (0, 0, 1, 2)
    assert g.blocks() == ((1, 2), (3,), (4,))
    assert g.degrees == (2, 1, 1)


def test_degree_distribution():
    g = DominationGraph.from_degrees((1, 2, 2))
    assert g.degree_distribution() == (1, 2)
    assert sum(g.degree_distribution()) == g.m
    assert sum(i * d for i, d in enumerate(g.degree_distribution(), 1)) == g.n


def test_equitable_layout():
    g = DominationGraph.equitable(12, 90)
    assert g.degrees == (8,) * 6 + (7,) * 6
    assert g.is_equitable
    assert not DominationGraph.from_degrees((1, 3)).is_equitable


def test_isolated_vertex_rejected():
    with pytest.raises(DomainError):
        DominationGraph(2, 1, (0,))
    with pytest.raises(DomainError):
        DominationGraph.from_degrees((0, 2))


def test_dominates_worked_edges():
    g = DominationGraph.from_degrees((2, 2))
    assert dominates(0b01, 0b0001, g)
    assert not dominates(0b00, 0b0001, g)
    assert dominates(0b00, 0b0000, g)
    for y in iter_ball(4, 1):
        assert dominates(0b11, y, g)


def test_dominates_rejects_oversized_words():
    g = DominationGraph.from_degrees((2, 2))
    with pytest.raises(DimensionError):
        dominates(0b100, 0, g)
    with pytest.raises(DimensionError):
        dominates(0b11, 1 << 4, g)


def test_dominates_monotone_in_descendant_order():
    g = DominationGraph.from_degrees((2, 1, 1))
    for x in range(8):
        for xp in range(8):
            if not is_descendant(x, xp):
                continue
            for y in iter_ball(4, 2):
                if dominates(x, y, g):
                    assert dominates(xp, y, g)


def test_allowed_masks_monotone():
    g = DominationGraph.from_degrees((1, 2, 3))
    for x in range(8):
        for xp in range(8):
            if is_descendant(x, xp):
                assert g.allowed_mask(x) & ~g.allowed_mask(xp) == 0


def test_iter_dominated_matches_ball_scan():
    for degrees in [(2, 2), (1, 2, 2), (3, 1, 2)]:
        g = DominationGraph.from_degrees(degrees)
        for w in (1, 2, 3):
            for x in range(1 << g.m):
                expected = [
                    rank(y, g.n, w)
                    for y in iter_ball(g.n, w)
                    if dominates(x, y, g)
                ]
                assert list(iter_dominated(x, g, w)) == sorted(expected)


def test_all_zero_word_dominates_only_zero():
    g = DominationGraph.from_degrees((2, 2, 1))
    assert list(iter_dominated(0, g, 2)) == [0]


def test_arbitrary_owner_order():
    # the same degree multiset, blocks assigned out of vertex order
    g = DominationGraph(3, 4, (1, 0, 1, 2))
    assert g.degrees == (1, 2, 1)
    assert g.blocks() == ((2,), (1, 3), (4,))
    assert ball_size(g.n, 2) == 11
