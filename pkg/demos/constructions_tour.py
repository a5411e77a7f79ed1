"""
Confusable-pair constructions
=============================

Three recursive families of string pairs that share decks to prescribed
depth: the swap-concatenation pair (gap 1), the zero-padded pair (gap 2),
and its generalisation to arbitrary gaps. Each doubles in depth per level,
so a handful of levels already defeats deep deck observations.
"""
from gapdeck import (
    GapParams,
    classical_mt,
    deck_equal,
    padded_mt,
    padded_mt_trimmed,
    s_padded_mt,
    verify_eq7,
)

# Gap 1 (every subsequence counts): x -> xy, y -> yx squares the ambiguity.
for k in (1, 2, 3):
    pair = classical_mt(k)
    print(f"swap-concat level {k}: "
          f"{''.join(map(str, pair.x))} / {''.join(map(str, pair.y))} "
          f"-> deck equal to depth {k}: {deck_equal(pair.x, pair.y, GapParams(1, k))}")

# Gap 2: the padded pair proves the 4(2^k-1)-2 upper bound. The untrimmed
# version satisfies the stronger four-way property (the decks stay equal
# after dropping the first bit, the last bit, or both).
print()
for k in (1, 2, 3, 4):
    pair = padded_mt(k)
    rep = verify_eq7(pair.x, pair.y, GapParams(2, k))
    trimmed = padded_mt_trimmed(k)
    print(f"padded level {k}: length {len(pair.x)}, four-way equal: {rep.all_equal}; "
          f"trimmed length {len(trimmed.x)}, deck equal: "
          f"{deck_equal(trimmed.x, trimmed.y, GapParams(2, k))}")

# Arbitrary gap s >= 2: same recursion with s-dependent padding, giving
# length (5s-2)*2^(k-1) - 5s + 4 after trimming.
print()
for s in (3, 4):
    pair = s_padded_mt(s, 2, trimmed=True)
    print(f"gap {s}, depth 2 trimmed pair of length {len(pair.x)}: "
          f"{''.join(map(str, pair.x))} / {''.join(map(str, pair.y))}, "
          f"deck equal: {deck_equal(pair.x, pair.y, GapParams(s, 2))}")
