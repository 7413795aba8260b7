"""Small exact number-theory helpers (trial division scale)."""
from math import gcd


def factorize(n):
    """Prime factorization of ``n >= 1`` as a list of primes in ascending order, with multiplicity."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out = []
    p = 2
    while p * p <= n:
        while n % p == 0:
            out.append(p)
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return out


def is_prime(n):
    return n >= 2 and factorize(n) == [n]


def prime_power(q):
    """Return ``(p, k)`` with ``q == p**k``, or ``None`` if q is not a prime power."""
    if q < 2:
        return None
    fs = factorize(q)
    if len(set(fs)) != 1:
        return None
    return fs[0], len(fs)


def squarefree_part(n):
    """Signed squarefree kernel of a nonzero integer: n = squarefree_part(n) * k**2."""
    if n == 0:
        raise ValueError("zero has no squarefree part")
    sign = -1 if n < 0 else 1
    out = 1
    fs = factorize(abs(n))
    for p in set(fs):
        if fs.count(p) % 2:
            out *= p
    return sign * out


def is_squarefree(n):
    fs = factorize(abs(n))
    return len(fs) == len(set(fs))


def valuation(n, p):
    if n == 0:
        raise ValueError("valuation of zero")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def multiplicative_order(a, n):
    if gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit mod {n}")
    k, x = 1, a % n
    while x != 1 % n:
        x = x * a % n
        k += 1
    return k


def smallest_primitive_root(p):
    """Smallest generator of (Z/p)^x for a prime p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return 1
    qs = set(factorize(p - 1))
    for g in range(2, p):
        if all(pow(g, (p - 1) // r, p) != 1 for r in qs):
            return g
    raise AssertionError("unreachable")


def discrete_log(x, g, p):
    """Exponent e in [0, p-1) with g**e == x mod p (brute force)."""
    x %= p
    y = 1
    for e in range(p - 1):
        if y == x:
            return e
        y = y * g % p
    raise ValueError(f"{x} is not a power of {g} mod {p}")


def geometric_sum(q, d, mod):
    """1 + q + ... + q**(d-1) reduced mod ``mod``, summed term by term."""
    total, term = 0, 1
    for _ in range(d):
        total = (total + term) % mod
        term = term * q % mod
    return total
