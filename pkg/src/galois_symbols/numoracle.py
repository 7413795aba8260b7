"""Independent ground truth over the rationals.

Hilbert symbols are decided by searching for zeros of z^2 = a x^2 + b y^2
modulo p (odd p) or 8 (p = 2) that Hensel's lemma lifts; no reciprocity law
or Legendre-symbol formula is used, so the symbolic engine can be checked
against it.  On top sit quaternion ramification sets and a common quadratic
splitting field for a list of quaternion algebras.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import count, product
from math import prod

from .arith import factorize, is_prime, is_squarefree, squarefree_part, valuation
from .errors import ModulusMismatch, PreconditionError, ReciprocityViolation, ZeroInput

REAL = "inf"


def _normalized_form(a, b, p):
    """Diagonal ternary form equivalent to a x^2 + b y^2 - z^2 with at most one coefficient divisible by p."""
    a, b = squarefree_part(a), squarefree_part(b)
    if a % p == 0 and b % p == 0:
        # z = p z': divide by p
        return (a // p, b // p, -p)
    return (a, b, -1)


def _isotropic(coeffs, p):
    """Brute-force search for a Hensel-liftable zero of sum c_i x_i^2.

    At most one coefficient is divisible by p (exactly once).  A zero modulo
    p^k (k = 1 for odd p, 3 for p = 2) with some unit-coefficient variable a
    unit lifts; every primitive p-adic zero reduces to such a point.
    """
    mod = p ** (3 if p == 2 else 1)
    return _search(tuple(c % mod for c in coeffs), p, mod)


@lru_cache(maxsize=None)
def _search(cs, p, mod):
    units = [i for i, c in enumerate(cs) if c % p]
    w = units[-1]
    others = [i for i in range(3) if i != w]
    # value of c_w z^2 -> residues z reaching it
    reach = {}
    for z in range(mod):
        reach.setdefault(cs[w] * z * z % mod, []).append(z)
    for x, y in product(range(mod), repeat=2):
        rest = (cs[others[0]] * x * x + cs[others[1]] * y * y) % mod
        for z in reach.get(-rest % mod, ()):
            v = {others[0]: x, others[1]: y, w: z}
            if any(v[i] % p for i in units):
                return True
    return False


def hilbert_symbol(a, b, place):
    """(a, b)_v in {+1, -1}; ``place`` is a prime or ``"inf"``."""
    if a == 0 or b == 0:
        raise ZeroInput("Hilbert symbol of zero")
    if place == REAL:
        return -1 if a < 0 and b < 0 else 1
    if not is_prime(place):
        raise PreconditionError(f"{place} is not a place of Q")
    return 1 if _isotropic(_normalized_form(a, b, place), place) else -1


def is_local_square(d, place):
    """Whether the nonzero integer d is a square in Q_v (brute-force residues)."""
    if place == REAL:
        return d > 0
    p = place
    v = valuation(d, p)
    if v % 2:
        return False
    u = d // p ** v
    mod = 8 if p == 2 else p
    return any((x * x - u) % mod == 0 for x in range(1, mod, 2 if p == 2 else 1))


def tame_symbol_oracle(a, b, q, m):
    """Exponent on the base generator of the tame symbol (-1)^(alpha beta) u^beta v^-alpha.

    ``a = (alpha, u)`` and ``b = (beta, v)`` give valuations and the exponents
    of the unit parts on the generator of F_q^x.
    """
    if (q - 1) % m:
        raise ModulusMismatch(f"m = {m} does not divide q - 1 = {q - 1}")
    alpha, u = a
    beta, v = b
    minus_one = 0 if q % 2 == 0 else (q - 1) // 2
    return (alpha * beta * minus_one + beta * u - alpha * v) % m


@dataclass(frozen=True)
class QuaternionInput:
    a: int
    b: int

    def __post_init__(self):
        if self.a == 0 or self.b == 0:
            raise ZeroInput("quaternion algebra with a zero entry")
        object.__setattr__(self, "a", squarefree_part(self.a))
        object.__setattr__(self, "b", squarefree_part(self.b))

    def __str__(self):
        return f"({self.a},{self.b})"


@dataclass(frozen=True)
class PlaceSet:
    primes: frozenset = frozenset()
    real: bool = False

    def __iter__(self):
        yield from sorted(self.primes)
        if self.real:
            yield REAL

    def __len__(self):
        return len(self.primes) + self.real

    def to_json(self):
        return [str(v) for v in self]


def candidate_places(a, b):
    return sorted({2} | set(factorize(abs(a * b)))) + [REAL]


def quaternion_ramification(qa):
    """Places where (a, b) is a division algebra; checks that there is an even number."""
    ram = [v for v in candidate_places(qa.a, qa.b) if hilbert_symbol(qa.a, qa.b, v) == -1]
    places = PlaceSet(frozenset(v for v in ram if v != REAL), REAL in ram)
    if len(places) % 2:
        raise ReciprocityViolation(f"odd ramification set {places.to_json()} for {qa}")
    return places


@dataclass(frozen=True)
class TateSlot:
    d: int
    ramification: dict = field(repr=False)
    verification: tuple = ()

    @property
    def verified(self):
        return all(ok for _, ok in self.verification)

    def to_json(self):
        return {"d": self.d,
                "ramification": {str(k): v.to_json() for k, v in self.ramification.items()},
                "verification": [{"place": str(p), "nonsquare": ok} for p, ok in self.verification],
                "verified": self.verified}


def _crt_bound(places):
    """Modulus of the CRT system whose solutions are admissible: a finite search bound."""
    return 8 * prod(p for p in places.primes if p != 2) + 1


def tate_common_slot(algebras):
    """Squarefree d such that Q(sqrt d) splits every algebra in the list.

    d must be a nonsquare at each ramified place.  The smallest |d| is taken,
    negative first on ties.  d = 1 (no extension) when nothing ramifies.
    """
    algebras = [a if isinstance(a, QuaternionInput) else QuaternionInput(*a) for a in algebras]
    if not algebras:
        raise PreconditionError("need at least one quaternion algebra")
    ramification = {qa: quaternion_ramification(qa) for qa in algebras}
    primes = frozenset().union(*(r.primes for r in ramification.values()))
    real = any(r.real for r in ramification.values())
    union = PlaceSet(primes, real)
    places = list(union)
    if not places:
        return TateSlot(1, ramification, ())
    bound = _crt_bound(union)
    for size in count(1):
        if size > bound:
            raise AssertionError("no admissible d below the CRT bound")
        for d in (-size, size):
            if d == 1 or not is_squarefree(d):
                continue
            if all(not is_local_square(d, v) for v in places):
                table = tuple((v, not is_local_square(d, v)) for v in places)
                return TateSlot(d, ramification, table)


def hilbert_reciprocity_product(a, b):
    return prod(hilbert_symbol(a, b, v) for v in candidate_places(a, b))
