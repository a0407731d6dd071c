"""Reachable sums of binary choices in Z_p and the sequence that hits a target."""

# %%
from zsramsey.zp import ChoicePair, cauchy_davenport_bound, reachable_sums, select_sequence, sum_choices

p = 7
pairs = [ChoicePair.of(a, b, p) for a, b in [(0, 3), (2, 2), (1, 5), (4, 6), (0, 1), (3, 4), (2, 6)]]

# %%
# One prefix at a time: pairs with two distinct elements grow the reachable set
# by at least one residue until all of Z_p is covered.
table = reachable_sums(pairs)
for i in range(len(pairs) + 1):
    sizes = [pr.size for pr in pairs[:i]]
    lower = cauchy_davenport_bound(sizes, p) if sizes else 1
    print(f"prefix {i}: {sorted(table.prefix(i))}  (at least {lower})")

# %%
# Walk the parent links back from each target. Ties prefer the first element.
for target in range(p):
    choice = select_sequence(pairs, target, table)
    print(target, choice, "->", sum_choices(pairs, choice))
