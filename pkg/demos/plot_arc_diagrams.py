"""
Set partitions as arc diagrams
==============================

"""

# every set partition of [n] is a set of arcs joining consecutive block elements
from superchar import enumerate_arc_sets, parse_arc_set
from superchar.arcs import cflt, nst, parts

for lam in enumerate_arc_sets(4):
    print(f"{str(lam):22s} blocks={[sorted(b) for b in parts(lam)]}  dimv={lam.dimv}  rnode={lam.rnode}")

# nesting counts outer/inner pairs; the conflict set is where characters vanish
lam = parse_arc_set("n=6:1-5,2-3,3-4,4-6")
print("dim", lam.dim, "self-nesting", nst(lam, lam))
print("conflicts", sorted(cflt(lam)))
