"""Formal symbol sums and their canonical form in H^k(K, mu_m).

For K = F_q((t1))...((tn)) with m | q - 1, H^k(K, mu_m) is free over Z/m on
the k-element subsets of the generator set {c, t1, ..., tn}; a subset is a
sorted tuple of generator indices (0 is c, i is t_i).  Normalization expands
symbols multilinearly, sorts slots with alternating signs, rewrites repeated
slots with (a, a) = (-1, a), and kills anything with two base slots
(H^2 of a finite field vanishes).
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from math import comb, gcd

from .errors import (
    DegreeMismatch,
    DegreeOverflowWarning,
    ModulusMismatch,
    NotDescendable,
    NotLiftable,
    PreconditionError,
    TowerMismatch,
)
from .tower import (
    GENERATOR_CONVENTION,
    RAMIFIED,
    RESIDUE,
    UNRAMIFIED,
    ElementClass,
    FieldTower,
    minus_one_exponent,
)


@lru_cache(maxsize=None)
def canonical_monomials(gens, e, modulus):
    """Canonical form of the generator symbol (g_1, ..., g_k).

    ``e`` is the exponent of -1 on c.  Returns a tuple of (sorted key, coeff)
    pairs with nonzero coefficients mod ``modulus``.
    """
    seen = {}
    for j, g in enumerate(gens):
        if g not in seen:
            seen[g] = j
            continue
        if g == 0:
            return ()
        i = seen[g]
        # bring slot j next to slot i, then (g, g) = (-1, g) = e (c, g)
        sign = -1 if (j - i - 1) % 2 else 1
        coef = sign * e % modulus
        if coef == 0:
            return ()
        rest = gens[:i] + (0, g) + gens[i + 1:j] + gens[j + 1:]
        out = []
        for key, v in canonical_monomials(rest, e, modulus):
            v = v * coef % modulus
            if v:
                out.append((key, v))
        return tuple(out)
    inversions = sum(1 for a, b in combinations(gens, 2) if a > b)
    return ((tuple(sorted(gens)), (-1) ** inversions % modulus),)


def _label(tower, key):
    return ",".join(tower.generators[g] for g in key)


@dataclass(frozen=True)
class CanonicalClass:
    """A class of H^degree(K, mu_modulus) in its canonical coefficient form."""

    tower: FieldTower = field(repr=False)
    degree: int
    coeffs: tuple = ()
    modulus: int = 0

    def __post_init__(self):
        modulus = self.modulus or self.tower.m
        if self.tower.m % modulus:
            raise ModulusMismatch(f"coefficient modulus {modulus} does not divide m = {self.tower.m}")
        items = self.coeffs.items() if isinstance(self.coeffs, dict) else self.coeffs
        acc = {}
        for key, v in items:
            key = tuple(key)
            if len(key) != self.degree or list(key) != sorted(set(key)):
                raise PreconditionError(f"bad monomial key {key} in degree {self.degree}")
            if key and not (0 <= key[0] and key[-1] <= self.tower.depth):
                raise PreconditionError(f"monomial key {key} outside {self.tower}")
            acc[key] = (acc.get(key, 0) + v) % modulus
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "coeffs", tuple(sorted((k, v) for k, v in acc.items() if v)))

    @classmethod
    def zero(cls, tower, degree, modulus=0):
        return cls(tower, degree, (), modulus)

    @classmethod
    def monomial(cls, tower, names, coeff=1, modulus=0):
        """The basis class for a set of generator names, e.g. ``("c", "t1")``."""
        gens = tuple(tower.generators.index(n) for n in names)
        modulus = modulus or tower.m
        e = minus_one_exponent(tower.q, modulus)
        return cls(tower, len(gens), canonical_monomials(gens, e, modulus), modulus) * coeff

    @classmethod
    def top(cls, tower, coeff=1, modulus=0):
        """coeff times the generator {c, t1, ..., tn} of top cohomology."""
        return cls(tower, tower.depth + 1, {tuple(range(tower.depth + 1)): coeff}, modulus)

    @staticmethod
    def basis(tower, degree):
        """Admissible monomial keys in degree k: C(n+1, k) of them."""
        return list(combinations(range(tower.depth + 1), degree))

    @property
    def coeff_map(self):
        return dict(self.coeffs)

    def coefficient(self, key):
        return self.coeff_map.get(tuple(key), 0)

    @property
    def symbol_length_bound(self):
        """Number of nonzero basis monomials: an upper bound on symbol length."""
        return len(self.coeffs)

    def _check(self, other):
        if not isinstance(other, CanonicalClass):
            raise TypeError(f"expected CanonicalClass, got {type(other).__name__}")
        if other.tower != self.tower:
            raise TowerMismatch(f"{self.tower} vs {other.tower}")
        if other.modulus != self.modulus:
            raise ModulusMismatch(f"mod {self.modulus} vs mod {other.modulus}")

    def __add__(self, other):
        self._check(other)
        if other.degree != self.degree:
            raise DegreeMismatch(f"degree {self.degree} + degree {other.degree}")
        return CanonicalClass(self.tower, self.degree, self.coeffs + other.coeffs, self.modulus)

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, r):
        if not isinstance(r, int):
            return NotImplemented
        return CanonicalClass(self.tower, self.degree,
                              tuple((k, v * r) for k, v in self.coeffs), self.modulus)

    __rmul__ = __mul__

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def period(self):
        g = 0
        for _, v in self.coeffs:
            g = gcd(g, v)
        return self.modulus // gcd(self.modulus, g)

    def uniformizer_free(self, index):
        """True iff no monomial involves t_index (1-based generator index)."""
        return all(index not in k for k, _ in self.coeffs)

    def to_json(self):
        return {
            "degree": self.degree,
            "modulus": self.modulus,
            "coeffs": {_label(self.tower, k): v for k, v in self.coeffs},
            "tower": self.tower.to_json(),
            "generator_convention": GENERATOR_CONVENTION,
        }

    def __str__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{v}*{{{_label(self.tower, k)}}}" for k, v in self.coeffs)


def scale(x, r):
    return x * r


def add(x, y):
    return x + y


def is_zero(x):
    return x.is_zero()


def equals(x, y):
    x._check(y)
    return x.degree == y.degree and x.coeffs == y.coeffs


def period(x):
    return x.period()


def cup(x, y):
    """Cup product of canonical classes (zero above the top degree)."""
    x._check(y)
    e = minus_one_exponent(x.tower.q, x.modulus)
    acc = []
    for kx, vx in x.coeffs:
        for ky, vy in y.coeffs:
            for key, v in canonical_monomials(kx + ky, e, x.modulus):
                acc.append((key, v * vx * vy))
    return CanonicalClass(x.tower, x.degree + y.degree, tuple(acc), x.modulus)


def scalar(tower, value=1, modulus=0):
    """The degree-0 class ``value`` in H^0 = Z/m."""
    return CanonicalClass(tower, 0, {(): value}, modulus)


def class_of(x, modulus=0):
    """The degree-1 class of an element under the Kummer isomorphism."""
    modulus = modulus or x.tower.m
    return CanonicalClass(x.tower, 1, {(g,): e for g, e in enumerate(x.exponents)}, modulus)


@dataclass(frozen=True)
class SymbolSum:
    """Formal sum of symbols sum_i n_i (a_i1, ..., a_ik); purely syntactic."""

    tower: FieldTower = field(repr=False)
    degree: int
    terms: tuple = ()

    def __post_init__(self):
        terms = []
        for coef, entries in self.terms:
            entries = tuple(entries)
            if len(entries) != self.degree:
                raise DegreeMismatch(f"symbol of length {len(entries)} in a degree-{self.degree} sum")
            for a in entries:
                if not isinstance(a, ElementClass) or a.tower != self.tower:
                    raise TowerMismatch(f"entry {a} is not a class over {self.tower}")
            terms.append((int(coef), entries))
        object.__setattr__(self, "terms", tuple(terms))

    @classmethod
    def symbol(cls, *entries, coef=1):
        if not entries:
            raise PreconditionError("a symbol needs at least one slot")
        return cls(entries[0].tower, len(entries), ((coef, entries),))

    def _check(self, other):
        if other.tower != self.tower:
            raise TowerMismatch(f"{self.tower} vs {other.tower}")
        if other.degree != self.degree:
            raise DegreeMismatch(f"degree {self.degree} vs {other.degree}")

    def __add__(self, other):
        self._check(other)
        return SymbolSum(self.tower, self.degree, self.terms + other.terms)

    def __mul__(self, r):
        if not isinstance(r, int):
            return NotImplemented
        return SymbolSum(self.tower, self.degree, tuple((c * r, e) for c, e in self.terms))

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for i, (coef, entries) in enumerate(self.terms):
            body = "(" + ", ".join(str(a) for a in entries) + ")"
            if i == 0:
                out.append(body if coef == 1 else f"{coef}*{body}")
            else:
                sign = "-" if coef < 0 else "+"
                mag = abs(coef)
                out.append(f" {sign} " + (body if mag == 1 else f"{mag}*{body}"))
        return "".join(out)


def normalize(s, modulus=0):
    """Canonical class of a symbol sum.

    Degrees above n + 1 give the zero class with a DegreeOverflowWarning.
    """
    tower = s.tower
    tower.require_full_calculus()
    modulus = modulus or tower.m
    if s.degree > tower.cd:
        warnings.warn(f"degree {s.degree} exceeds cd = {tower.cd}; class is zero",
                      DegreeOverflowWarning, stacklevel=2)
        return CanonicalClass.zero(tower, s.degree, modulus)
    e = minus_one_exponent(tower.q, modulus)
    acc = {}
    for coef, entries in s.terms:
        if coef % modulus == 0:
            continue
        slots = [[(g, x) for g, x in enumerate(a.exponents) if x % modulus] for a in entries]
        for choice in product(*slots):
            w = coef
            for _, x in choice:
                w *= x
            w %= modulus
            if not w:
                continue
            gens = tuple(g for g, _ in choice)
            for key, v in canonical_monomials(gens, e, modulus):
                acc[key] = (acc.get(key, 0) + w * v) % modulus
    return CanonicalClass(tower, s.degree, acc, modulus)


def to_symbols(x):
    """Re-serialize a canonical class as a symbol sum of generator symbols."""
    tower = x.tower
    if x.degree == 0:
        raise PreconditionError("degree-0 classes have no symbol form")
    terms = []
    for key, v in x.coeffs:
        entries = []
        for g in key:
            exps = [0] * (tower.depth + 1)
            exps[g] = 1
            entries.append(ElementClass(tower, exps[0], exps[1:]))
        terms.append((v, tuple(entries)))
    return SymbolSum(tower, x.degree, tuple(terms))


def coeff_reduce(x, s):
    """Image under mu_m -> mu_s (raising to the (m/s)-th power): coefficients mod s."""
    if s < 1 or x.modulus % s:
        raise ModulusMismatch(f"{s} does not divide {x.modulus}")
    if s == 1:
        return None
    return CanonicalClass(x.tower, x.degree, x.coeffs, s)


def coeff_lift(x, s):
    """Preimage in H(mu_l), l = modulus / s, of a class whose coefficients are all divisible by s."""
    if x.modulus % s:
        raise ModulusMismatch(f"{s} does not divide {x.modulus}")
    ell = x.modulus // s
    for key, v in x.coeffs:
        if v % s:
            raise NotLiftable(f"coefficient {v} on {_label(x.tower, key)} is not divisible by {s}")
    if ell == 1:
        return None
    return CanonicalClass(x.tower, x.degree, tuple((k, v // s) for k, v in x.coeffs), ell)


def coeff_include(x, modulus):
    """Image under the inclusion mu_l -> mu_modulus: coefficients times modulus / l."""
    if modulus % x.modulus:
        raise ModulusMismatch(f"{x.modulus} does not divide {modulus}")
    k = modulus // x.modulus
    return CanonicalClass(x.tower, x.degree, tuple((key, v * k) for key, v in x.coeffs), modulus)


def restrict(x, step):
    """Restriction of a canonical class along one extension step."""
    if x.tower != step.source:
        raise TowerMismatch(f"class over {x.tower}, step from {step.source}")
    step.target.require_full_calculus()
    if step.kind == RAMIFIED:
        g, factor = step.index + 1, step.degree
    else:
        g, factor = 0, step.norm_exponent
    coeffs = tuple((k, v * factor if g in k else v) for k, v in x.coeffs)
    return CanonicalClass(step.target, x.degree, coeffs, x.modulus)


def restrict_chain(x, steps):
    for step in steps:
        x = restrict(x, step)
    return x


def corestrict(x, step):
    """Corestriction down a residue enlargement of degree d.

    Projection formula: cor(c' u res(y)) = c u y and cor(res(y)) = d y.
    """
    if step.kind not in (RESIDUE, UNRAMIFIED):
        raise NotDescendable(f"cannot corestrict along a {step.kind} step")
    if x.tower != step.target:
        raise TowerMismatch(f"class over {x.tower}, step lands in {step.target}")
    coeffs = tuple((k, v if 0 in k else v * step.degree) for k, v in x.coeffs)
    return CanonicalClass(step.source, x.degree, coeffs, x.modulus)


def dimension(tower, degree):
    return comb(tower.depth + 1, degree)
