"""
Towers, element classes and canonical symbols
=============================================

A tower F_q((t1))((t2)) with coefficients mod m, the classes of K^x mod m-th
powers, and how symbol sums reduce to a canonical basis.
"""

from galois_symbols import build_tower, normalize, parse_symbol_expr
from galois_symbols.symcalc import CanonicalClass

# q = 7, m = 6: mu_6 lies in F_7, so the full calculus is available
T = build_tower(7, 6, ["t1", "t2"])
print(T, "cd =", T.cd, "full calculus:", T.full_calculus)

# the base generator c is the smallest primitive root mod 7; -1 = c^3
print("-1 =", T.minus_one())

# each degree has a basis indexed by subsets of {c, t1, t2}
for k in range(T.cd + 1):
    print(k, CanonicalClass.basis(T, k))

# (t1, t1) = (-1, t1) = 3 (c, t1)
x = normalize(parse_symbol_expr("(t1, t1)", T))
print("(t1, t1) =", x)

# multilinearity and antisymmetry in one go
s = parse_symbol_expr("(c^2*t1, t2) + (t2, c*t1)", T)
print(s, "=", normalize(s))

# the period is the additive order of the class
top = normalize(parse_symbol_expr("3*(c, t1, t2)", T))
print("period of", top, "is", top.period())

# a field with no mu_m in the base only supports descent
print(build_tower(7, 5, ["t"]).full_calculus)
