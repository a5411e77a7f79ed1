"""
Wildcard patterns and the substitution harness
==============================================

Patterns over X, Y, J (J matches either letter) induce an equivalence on
two-letter strings: agree on every pattern count in a family. Substituting
zero-padded binary strings for X and Y turns equivalent pattern pairs into
long binary pairs - the engine behind the recursive upper bound. This
script also demonstrates, honestly, where that transfer breaks down.
"""
from gapdeck import (
    GapParams,
    Lemma3Instance,
    USetSpec,
    count_wildcard,
    enumerate_deck,
    enumerate_U,
    lemma3_check,
    padded_mt,
    search_SU,
    substitute,
)

# Counting with a wildcard: JX in YXYX has 4 occurrences.
print("count of JX in YXYX:", count_wildcard("JX", "YXYX"))

# The family U_1(2): patterns of length 1..2 with exactly one letter.
print("U_1(2) =", enumerate_U(USetSpec.single(1, 2)))

# The smallest pair equivalent under U_1(3) u U_2(2) has length 7.
r = search_SU(3, 2)
p, q = r.witnesses[0]
print(f"minimal U(3,2)-equivalent pair: {p} / {q} (length {r.n})")

# Substitute the depth-1 padded pair for the letters.
pair = padded_mt(1)
hp = substitute(p, pair.x, pair.y)
hq = substitute(q, pair.x, pair.y)
print("substituted strings have length", len(hp))

# The harness evaluates hypothesis and conclusion flags without asserting
# anything. On this instance the hypotheses hold but the depth-4 decks of
# the substituted strings differ - by two occurrences of pattern 0000.
rep = lemma3_check(Lemma3Instance(x=pair.x, y=pair.y, p=p, q=q, k=1, sigma=1))
print("\nharness flags:", rep.to_record())

deck_p = dict(enumerate_deck(hp, GapParams(2, 4)))
deck_q = dict(enumerate_deck(hq, GapParams(2, 4)))
diffs = {w: (deck_p.get(w, 0), deck_q.get(w, 0))
         for w in set(deck_p) | set(deck_q)
         if deck_p.get(w, 0) != deck_q.get(w, 0)}
print("differing depth-4 counts:")
for w in sorted(diffs):
    print("  ", "".join(map(str, w)), diffs[w])
