"""
Gapped decks from first principles
==================================

A gapped subsequence takes its letters at positions that are at least s
apart. The depth-k deck of a string is the multiset of all its gapped
subsequences of length 1..k. This walk-through counts a few by hand and
shows why deck equality is strictly finer slice by slice.
"""
from gapdeck import GapParams, count_gapped, deck_equal, enumerate_deck, exact_deck_equal

# In 1001 with gap 2 the eligible index pairs are (0,2), (0,3), (1,3),
# reading 10, 11, 01 - so the pattern 10 occurs exactly once.
print("occurrences of 10 in 1001, gap 2:", count_gapped((1, 0), (1, 0, 0, 1), 2))
print("occurrences of 11 in 01110, gap 2:", count_gapped((1, 1), (0, 1, 1, 1, 0), 2))

# The whole depth-2 deck of 1001, entries in length-then-lex order.
print("\ndeck of 1001 at gap 2, depth 2:")
for pattern, count in enumerate_deck((1, 0, 0, 1), GapParams(2, 2)):
    print("  ", "".join(map(str, pattern)), count)

# The classic distinction: 01110 and 10001 share the multiset of gapped
# pairs but differ already in how many ones they contain.
x, y = (0, 1, 1, 1, 0), (1, 0, 0, 0, 1)
print("\n01110 vs 10001 at gap 2:")
print("  same exact depth-2 slice:", exact_deck_equal(x, y, GapParams(2, 2)))
print("  same full deck up to depth 2:", deck_equal(x, y, GapParams(2, 2)))

# The smallest genuinely confusable pair at gap 2: length 6, depth 2.
a, b = (0, 1, 0, 0, 1, 1), (0, 0, 1, 1, 0, 1)
print("\n010011 vs 001101 share the full depth-2 deck:",
      deck_equal(a, b, GapParams(2, 2)))
