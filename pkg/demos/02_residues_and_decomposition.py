"""
Residues and the xi1 + (xi2, pi) decomposition
==============================================
"""

from galois_symbols import build_tower, normalize, parse_symbol_expr
from galois_symbols.residue import (
    bilocal_decompose,
    case2a_reduce,
    decompose,
    decompose_symbol_rewrite,
    replay_trace,
    residue_map,
)
from galois_symbols.symcalc import CanonicalClass

T = build_tower(7, 3, ["pi", "delta"])
s = parse_symbol_expr("(c*delta, pi*delta^2)", T)
x = normalize(s)
print("x =", x)

# residue at the outermost uniformizer lands over F_7((pi))
print("residue:", residue_map(x))

d = decompose(x)
print("xi1 =", d.xi1, " xi2 =", d.xi2, " recombines:", d.recombine() == x)

# the same thing done slot by slot, recording every relation used
rw = decompose_symbol_rewrite(s)
for step in rw.trace:
    print(f"  {step.rule:12s} {step.before}  ->  {step.after}")
print("units part:", rw.units, " ramified part:", rw.ramified)
print("every step is an equality:", replay_trace(rw.trace))

# four-way split along the two uniformizers
b = bilocal_decompose(parse_symbol_expr("(c*pi, delta, pi*delta)", T))
print("xi1..xi4:", b.xi1, "|", b.xi2, "|", b.xi3, "|", b.xi4)

# (xi4, pi, delta) rewritten with the common slot g = u pi delta
rep = case2a_reduce(CanonicalClass(T, 1, {(0,): 1}), T.element(2))
for expr, value in rep.chain:
    print(f"  {expr:32s} = {value}")
print("g =", rep.g)
