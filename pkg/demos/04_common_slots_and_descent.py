"""
One extension for many classes, and descent when mu_l is missing
================================================================
"""

import random

from galois_symbols import build_tower
from galois_symbols.splitting import common_slot_local, cyclotomic_descent
from galois_symbols.symcalc import CanonicalClass

rng = random.Random(0)
T = build_tower(13, 12, ["t"])

# however many classes there are, a single Kummer step of degree dividing m splits them
for size in (3, 30, 300):
    classes = [CanonicalClass.top(T, rng.randrange(12)) for _ in range(size)]
    cert = common_slot_local(classes)
    print(size, "classes -> degree", cert.degree, "all split:", cert.all_split)

# F_7 has no 5th roots of unity; go up to F_7^4 and come back with cor o res = 4
report = cyclotomic_descent(7, 5)
for claim, holds in report.inferences:
    print(("ok  " if holds else "FAIL"), claim)
print("splitting degree over K:", report.splitting_degree)
