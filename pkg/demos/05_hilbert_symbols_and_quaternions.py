"""
Hilbert symbols by brute force, quaternion algebras over Q
==========================================================
"""

from galois_symbols.numoracle import (
    REAL,
    QuaternionInput,
    hilbert_reciprocity_product,
    hilbert_symbol,
    quaternion_ramification,
    tate_common_slot,
)

print("(-1,-1)_inf =", hilbert_symbol(-1, -1, REAL))
print("(7,7)_7     =", hilbert_symbol(7, 7, 7))
print("(2,5)_5     =", hilbert_symbol(2, 5, 5))

# the product over all places is always +1
print(all(hilbert_reciprocity_product(a, b) == 1 for a in range(1, 20) for b in range(-20, 0)))

for a, b in ((-1, -1), (-1, -3), (2, 5), (1, 7)):
    print((a, b), "ramified at", quaternion_ramification(QuaternionInput(a, b)).to_json())

# one quadratic field splitting several algebras at once
slot = tate_common_slot([(-1, -1), (-1, -3), (2, 5)])
print(f"Q(sqrt({slot.d})) splits them all:", slot.to_json()["verification"])
