"""
Splitting top-degree classes
============================

Adjoining roots of the outermost uniformizer kills top-degree classes.  The
constructed degree matches the period, which pins the index down.
"""

from galois_symbols import build_tower
from galois_symbols.splitting import index_bounds, split_composite, split_top
from galois_symbols.symcalc import CanonicalClass

T = build_tower(7, 6, ["t1", "t2"])

for a in range(6):
    x = CanonicalClass.top(T, a)
    b = index_bounds(x)
    print(f"{a}*(c, t1, t2): period {b.period}, splitting degree {b.degree}, equal {b.equal}")

# composite m: one prime at a time, in either order
x = CanonicalClass.top(T, 1)
for order in ((2, 3), (3, 2)):
    cert = split_composite(x, order)
    print(order, [s.describe() for s in cert.chain], "replays:", cert.replay())

# the restriction record along a prime-order chain
cert = split_top(CanonicalClass.top(build_tower(7, 3, ["t"]), 2))
for step, cls in zip((None,) + cert.chain, cert.record):
    print(step.describe() if step else "start", "->", cls)
