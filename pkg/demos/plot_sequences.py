"""
Aitken's array and partition statistics
=======================================

"""

# Bell numbers run down the right edge of the triangle
from superchar.sequences import aitken, arcs_seq, dim_seq, nst_seq, reconcile_b3

print(aitken(6).pretty())

# totals of arcs, spans and self-nestings, by enumeration and by formula
for n in range(1, 8):
    print(n, [(f(n), f(n, "formula")) for f in (arcs_seq, dim_seq, nst_seq)])

# the three-index recursion matches the counts once shifted by one row
r = reconcile_b3(7)
print(len(r["same_index_disagreements"]), "same-index differences, explained:", r["explained"])
