"""The dynamic program must agree with naive enumeration everywhere it runs."""
import itertools
import random

from gapdeck.deck import GapParams, count_gapped, enumerate_deck, signature
from gapdeck.oracle import (
    count_gapped_naive,
    deck_equal_naive,
    enumerate_deck_naive,
    signature_counts_naive,
)


def test_signatures_match_naive_exhaustive_small():
    # every string up to length 9, all gaps 1..3, depth 4
    for s in (1, 2, 3):
        params = GapParams(s, 4)
        for n in range(1, 10):
            for bits in itertools.product((0, 1), repeat=n):
                assert signature(bits, params).counts == signature_counts_naive(
                    bits, params
                )


def test_count_gapped_matches_naive_random():
    rng = random.Random(31)
    for _ in range(300):
        n = rng.randint(1, 18)
        s = rng.randint(1, 4)
        lw = rng.randint(1, 4)
        x = tuple(rng.randint(0, 1) for _ in range(n))
        w = tuple(rng.randint(0, 1) for _ in range(lw))
        assert count_gapped(w, x, s) == count_gapped_naive(w, x, s)


def test_enumerate_deck_matches_naive():
    rng = random.Random(8)
    for _ in range(50):
        n = rng.randint(0, 12)
        x = tuple(rng.randint(0, 1) for _ in range(n))
        params = GapParams(rng.randint(1, 3), rng.randint(1, 3))
        assert enumerate_deck(x, params) == enumerate_deck_naive(x, params)


def test_deck_equal_naive_agrees_on_known_pairs():
    p = GapParams(2, 2)
    assert deck_equal_naive((0, 1, 0, 0, 1, 1), (0, 0, 1, 1, 0, 1), p)
    assert not deck_equal_naive((1, 0, 0, 1), (0, 1, 1, 0), p)
