"""
Upper-bound formulas and tables
===============================

Every closed-form and recursive bound on the minimal confusable length,
evaluated and tabulated: the padded-construction bound, its gap-s
generalisation, the counting bound for wildcard equivalence, the
three-way recursion built from it, and the asymptotic closed form.
"""
from gapdeck import (
    best_bound,
    closed_form_bound,
    corollary_rec_bound,
    dudik_su_bound,
    kappa,
    padded_bound,
    s_padded_bound,
    summary_table,
    table2,
)

# The construction bound 4(2^k-1)-2 and its gap-s form.
print("padded bound, k=1..6:   ", [padded_bound(k) for k in range(1, 7)])
print("gap-3 version, k=1..6:  ", [s_padded_bound(3, k) for k in range(1, 7)])

# Wildcard-equivalence counting bound: kappa and the floor evaluation.
print("\nkappa(3,2) =", kappa(3, 2), " -> bound", dudik_su_bound(3, 2))

# The recursion trades depth k for k/3 at the cost of a multiplicative
# factor; the base case keeps the construction bound.
print("recursive bound at depths 3, 4, 13, 40:",
      [corollary_rec_bound(K) for K in (3, 4, 13, 40)])

# Best-known summary for small depths (exact values up to 4).
print("\n k  best bound")
for row in summary_table():
    print(f"{row.k:>3}  {row.value}")

# Asymptotic closed form, valid from depth 28 on (ceil rounding).
print("\n k  closed form")
for row in table2():
    print(f"{row.k:>3}  {row.value}")
assert closed_form_bound(28) == 42742211
