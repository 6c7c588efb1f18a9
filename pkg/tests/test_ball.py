from math import comb

import pytest

from domap.ball import BallParams, ball_size, iter_ball, iter_weight_class, rank, unrank
from domap.errors import DomainError
from domap.words import weight


def test_ball_size_small():
    assert ball_size(4, 2) == 11  # 1 + 4 + 6


def test_ball_size_perfect_parameters():
    assert ball_size(23, 3) == 2048
    assert ball_size(90, 2) == 4096
    assert ball_size(3, 1) == 4


def test_ball_size_radius_at_least_length_is_cube():
    assert ball_size(5, 5) == 32
    assert ball_size(5, 9) == 32


def test_ball_size_rejects_bad_params():
    with pytest.raises(DomainError):
        ball_size(0, 1)
    with pytest.raises(DomainError):
        ball_size(3, -1)


@pytest.mark.parametrize("n", [1, 2, 5, 9, 13, 16])
def test_ball_size_matches_weight_filter(n):
    for w in range(4):
        expected = sum(1 for y in range(1 << n) if weight(y) <= w)
        assert ball_size(n, w) == expected


def test_unrank_zero_is_zero_word():
    for n, w in [(1, 1), (4, 2), (9, 3)]:
        assert unrank(0, n, w) == 0


def test_canonical_order_weight_one():
    # weight-1 words in lexicographic order: 0001 < 0010 < 0100 < 1000
    assert unrank(1, 4, 1) == 0b0001
    assert unrank(2, 4, 1) == 0b0010
    assert unrank(4, 4, 1) == 0b1000


def test_iter_ball_is_canonical_order():
    got = list(iter_ball(4, 2))
    assert got[:5] == [0b0000, 0b0001, 0b0010, 0b0100, 0b1000]
    assert len(got) == 11
    weights = [weight(y) for y in got]
    assert weights == sorted(weights)
    for k in range(3):
        cls = [y for y in got if weight(y) == k]
        assert cls == sorted(cls)


def test_rank_unrank_roundtrip_exhaustive():
    for n in range(1, 13):
        for w in range(0, 4):
            size = ball_size(n, w)
            for r in range(size):
                assert rank(unrank(r, n, w), n, w) == r
            seen = sorted(unrank(r, n, w) for r in range(size))
            assert len(set(seen)) == size


def test_rank_rejects_out_of_ball():
    with pytest.raises(DomainError):
        rank(0b111, 3, 2)
    with pytest.raises(DomainError):
        unrank(11, 4, 2)
    with pytest.raises(DomainError):
        unrank(-1, 4, 2)


def test_weight_class_sizes():
    for n in (3, 6, 10):
        for k in range(n + 1):
            assert len(list(iter_weight_class(n, k))) == comb(n, k)


def test_ball_params():
    p = BallParams(23, 3)
    assert p.size == 2048
    with pytest.raises(DomainError):
        BallParams(2, -1)
