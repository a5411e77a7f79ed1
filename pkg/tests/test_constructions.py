import itertools
import random

import pytest

from gapdeck.constructions import (
    ConstructionPair,
    classical_mt,
    concat_swap,
    exact_deck_family,
    padded_mt,
    padded_mt_trimmed,
    s_padded_mt,
)
from gapdeck.deck import GapParams, deck_equal, exact_deck_equal, signature, verify_eq7
from gapdeck.oracle import classical_deck_naive


def test_padded_base_pair():
    pair = padded_mt(1)
    assert pair.x == (0, 0, 1, 0)
    assert pair.y == (0, 1, 0, 0)
    assert pair.params == GapParams(2, 1)


def test_padded_recursion_step():
    pair = padded_mt(2)
    assert pair.x == (0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0)
    assert pair.y == (0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0)


@pytest.mark.parametrize("k", range(1, 6))
def test_padded_pairs_verify_four_way(k):
    pair = padded_mt(k)
    assert len(pair.x) == 4 * (2**k - 1)
    assert verify_eq7(pair.x, pair.y, GapParams(2, k)).all_equal


@pytest.mark.parametrize("k", range(1, 6))
def test_trimmed_padded_pairs(k):
    pair = padded_mt_trimmed(k)
    assert len(pair.x) == 4 * (2**k - 1) - 2
    assert pair.trimmed
    assert deck_equal(pair.x, pair.y, GapParams(2, k))


def test_s_padded_reduces_to_padded_at_s_two():
    for k in (1, 2, 3, 4):
        assert s_padded_mt(2, k).x == padded_mt(k).x
        assert s_padded_mt(2, k).y == padded_mt(k).y
        assert s_padded_mt(2, k, trimmed=True).x == padded_mt_trimmed(k).x


@pytest.mark.parametrize("s", (3, 4))
@pytest.mark.parametrize("k", (1, 2, 3))
def test_s_padded_pairs_verify(s, k):
    pair = s_padded_mt(s, k)
    assert len(pair.x) == (5 * s - 2) * 2 ** (k - 1) - 3 * s + 2
    assert verify_eq7(pair.x, pair.y, GapParams(s, k)).all_equal
    trimmed = s_padded_mt(s, k, trimmed=True)
    assert len(trimmed.x) == (5 * s - 2) * 2 ** (k - 1) - 5 * s + 4
    assert deck_equal(trimmed.x, trimmed.y, GapParams(s, k))


def test_s_padded_rejects_gap_below_two():
    with pytest.raises(ValueError):
        s_padded_mt(1, 2)


def test_classical_pairs_share_full_ungapped_deck():
    for k in (1, 2, 3, 4, 5):
        pair = classical_mt(k)
        assert len(pair.x) == 2**k
        assert pair.params == GapParams(1, k)
        assert deck_equal(pair.x, pair.y, GapParams(1, k))
    assert classical_mt(2).x == (0, 1, 1, 0)
    assert classical_mt(2).y == (1, 0, 0, 1)


def test_concat_swap_lifts_deck_depth():
    rng = random.Random(5)
    for k in (1, 2):
        # gather classically k-deck-equal pairs by brute force
        pairs = []
        for n in range(2, 8):
            groups = {}
            for bits in itertools.product((0, 1), repeat=n):
                key = tuple(sorted(classical_deck_naive(bits, k).items()))
                groups.setdefault(key, []).append(bits)
            for members in groups.values():
                pairs.extend(itertools.combinations(members, 2))
        for x, y in rng.sample(pairs, 30):
            cx, cy = concat_swap(x, y)
            assert cx == x + y and cy == y + x
            assert exact_deck_equal(cx, cy, GapParams(1, k + 1))


def test_exact_deck_family_length_and_content():
    x = exact_deck_family((1, 0, 1), (0, 0), s=2)
    assert x == (1, 0, 0, 0, 1)
    sig = signature(x, GapParams(2, 3))
    slice3 = sig.length_slice(3)
    # exactly one depth-3 subsequence exists and it is z itself
    assert sum(slice3) == 1
    patterns = list(itertools.product((0, 1), repeat=3))
    assert dict(zip(patterns, slice3))[(1, 0, 1)] == 1


def test_exact_deck_family_members_collide_on_exact_deck_only():
    a = exact_deck_family((1, 1, 0), (0, 1), s=2)
    b = exact_deck_family((1, 1, 0), (1, 0), s=2)
    params = GapParams(2, 3)
    assert a != b
    assert exact_deck_equal(a, b, params)
    assert not deck_equal(a, b, params)


def test_exact_deck_family_arity_check():
    with pytest.raises(ValueError):
        exact_deck_family((1, 0, 1), (0,), s=2)  # needs (k-1)(s-1) = 2 fills
    assert exact_deck_family((1, 0), (0,), s=2) == (1, 0, 0)
    # gap 3, depth 2 needs (k-1)(s-1) = 2 fill bits
    assert exact_deck_family((1, 0), (0, 0), s=3) == (1, 0, 0, 0)


def test_construction_pair_validation():
    with pytest.raises(ValueError):
        ConstructionPair((0, 1), (0, 1, 0), GapParams(2, 1), "whatever")
    with pytest.raises(ValueError):
        ConstructionPair((0, 1), (0, 1), GapParams(2, 1), "whatever")
