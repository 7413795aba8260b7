"""Iterated Laurent towers F_q((t1))...((tn)) and their classes K^x/(K^x)^m.

The unit group of the base field is modelled as an abstract cyclic group of
order q - 1 with a distinguished generator ``c``.  One-units are m-divisible in
a complete ring with m invertible, so every class is a monomial

    c^a * t1^e1 * ... * tn^en,     a mod gcd(m, q-1),  ei mod m.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from math import gcd

from .arith import prime_power
from .errors import (
    ArityMismatch,
    InvalidBase,
    NonCoprimeModulus,
    NotDescendable,
    NotFullCalculus,
    PreconditionError,
    TowerMismatch,
)

GENERATOR_CONVENTION = "smallest primitive root"
BASE_GENERATOR = "c"

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class FieldTower:
    q: int
    m: int
    uniformizer_names: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "uniformizer_names", tuple(self.uniformizer_names))
        pk = prime_power(self.q)
        if pk is None:
            raise InvalidBase(f"q = {self.q} is not a prime power")
        if self.m < 2:
            raise PreconditionError(f"modulus m = {self.m} must be at least 2")
        if self.m % pk[0] == 0:
            raise NonCoprimeModulus(f"characteristic {pk[0]} divides m = {self.m}")
        names = self.uniformizer_names
        if len(set(names)) != len(names):
            raise PreconditionError(f"uniformizer names are not distinct: {names}")
        for name in names:
            if not isinstance(name, str) or not _IDENT.match(name) or name == BASE_GENERATOR:
                raise PreconditionError(f"bad uniformizer name {name!r}")

    @property
    def p(self):
        return prime_power(self.q)[0]

    @property
    def depth(self):
        return len(self.uniformizer_names)

    @property
    def cd(self):
        return self.depth + 1

    @property
    def base_group_order(self):
        return self.q - 1

    @property
    def base_modulus(self):
        """Order of F_q^x / (F_q^x)^m."""
        return gcd(self.m, self.q - 1)

    @property
    def full_calculus(self):
        """True iff mu_m lies in the base field, i.e. m | q - 1."""
        return (self.q - 1) % self.m == 0

    @property
    def generators(self):
        return (BASE_GENERATOR,) + self.uniformizer_names

    def require_full_calculus(self):
        if not self.full_calculus:
            raise NotFullCalculus(
                f"m = {self.m} does not divide q - 1 = {self.q - 1}; "
                "this tower supports descent bookkeeping only")

    def residue_tower(self):
        """The tower with the outermost uniformizer removed."""
        if self.depth == 0:
            raise PreconditionError("a depth-0 tower has no residue field tower")
        return FieldTower(self.q, self.m, self.uniformizer_names[:-1])

    def with_modulus(self, m):
        return FieldTower(self.q, m, self.uniformizer_names)

    def index(self, name):
        try:
            return self.uniformizer_names.index(name)
        except ValueError:
            raise PreconditionError(f"{name!r} is not a uniformizer of {self}") from None

    # element constructors

    def element(self, base_exp=0, unif_exps=None):
        return element_class(self, base_exp, unif_exps)

    def one(self):
        return self.element(0, [0] * self.depth)

    def base_generator(self):
        return self.element(1, [0] * self.depth)

    def uniformizer(self, i):
        exps = [0] * self.depth
        exps[i] = 1
        return self.element(0, exps)

    def minus_one(self):
        return minus_one_class(self)

    def classes(self):
        """Every class of K^x/(K^x)^m, in lexicographic exponent order."""
        ranges = [range(self.base_modulus)] + [range(self.m)] * self.depth
        for exps in itertools.product(*ranges):
            yield ElementClass(self, exps[0], exps[1:])

    def to_json(self):
        return {"q": self.q, "m": self.m, "uniformizers": list(self.uniformizer_names)}

    @classmethod
    def from_json(cls, data):
        return cls(int(data["q"]), int(data["m"]), tuple(data.get("uniformizers", ())))

    def __str__(self):
        inner = "".join(f"(({t}))" for t in self.uniformizer_names)
        return f"F_{self.q}{inner} mod {self.m}"


def build_tower(q, m, names=()):
    """Validated constructor; the tower has full calculus iff m | q - 1."""
    return FieldTower(q, m, tuple(names))


@dataclass(frozen=True)
class ElementClass:
    tower: FieldTower = field(repr=False)
    base_exp: int
    unif_exps: tuple

    def __post_init__(self):
        exps = tuple(int(e) % self.tower.m for e in self.unif_exps)
        if len(exps) != self.tower.depth:
            raise ArityMismatch(
                f"expected {self.tower.depth} uniformizer exponents, got {len(exps)}")
        object.__setattr__(self, "unif_exps", exps)
        object.__setattr__(self, "base_exp", int(self.base_exp) % self.tower.base_modulus)

    def _check(self, other):
        if not isinstance(other, ElementClass):
            return NotImplemented
        if other.tower != self.tower:
            raise TowerMismatch(f"{self.tower} vs {other.tower}")
        return None

    def __mul__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return ElementClass(self.tower, self.base_exp + other.base_exp,
                            [a + b for a, b in zip(self.unif_exps, other.unif_exps)])

    def __pow__(self, k):
        return ElementClass(self.tower, self.base_exp * k, [e * k for e in self.unif_exps])

    def inverse(self):
        return self ** -1

    def __truediv__(self, other):
        return self * other.inverse()

    def is_one(self):
        return self.base_exp == 0 and not any(self.unif_exps)

    @property
    def exponents(self):
        """(base_exp, e1, ..., en)."""
        return (self.base_exp,) + self.unif_exps

    @property
    def pi_exp(self):
        """Exponent of the outermost uniformizer."""
        return self.unif_exps[-1]

    def unit_part(self):
        """The class with the outermost uniformizer stripped."""
        return ElementClass(self.tower, self.base_exp, self.unif_exps[:-1] + (0,))

    def __str__(self):
        parts = []
        for name, e in zip(self.tower.generators, self.exponents):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


def element_class(tower, base_exp=0, unif_exps=None):
    if unif_exps is None:
        unif_exps = [0] * tower.depth
    return ElementClass(tower, base_exp, tuple(unif_exps))


def minus_one_exponent(q, modulus):
    """Exponent of -1 on the generator of F_q^x, reduced mod ``modulus``.

    -1 generates the subgroup of order 2, so it is c^((q-1)/2) for any generator c.
    """
    if q % 2 == 0:
        return 0
    return ((q - 1) // 2) % modulus


def minus_one_class(tower):
    """The class of -1; trivial for odd m since -1 = (-1)^m."""
    tower.require_full_calculus()
    if tower.m % 2:
        return tower.one()
    return tower.element(minus_one_exponent(tower.q, tower.m))


# extensions

RAMIFIED = "ramified_kummer"
UNRAMIFIED = "unramified_kummer"
RESIDUE = "residue_enlarge"


@dataclass(frozen=True)
class ExtensionStep:
    kind: str
    degree: int
    source: FieldTower = field(repr=False)
    target: FieldTower = field(repr=False)
    index: int | None = None
    unit: ElementClass | None = field(default=None, repr=False)

    @property
    def norm_exponent(self):
        """(q^d - 1)/(q - 1): the power of the target generator equal to the source generator."""
        q, d = self.source.q, self.degree
        return (q ** d - 1) // (q - 1)

    def describe(self):
        if self.kind == RAMIFIED:
            name = self.source.uniformizer_names[self.index]
            return f"{name} -> {name}^(1/{self.degree}): exponent of {name} multiplied by {self.degree}"
        n = self.norm_exponent
        text = f"F_{self.source.q} -> F_{self.target.q}: base exponent multiplied by {n}"
        if self.kind == UNRAMIFIED:
            text = f"adjoin {self.degree}-th root of {self.unit}; " + text
        return text

    def to_json(self):
        out = {"kind": self.kind, "degree": self.degree,
               "source": self.source.to_json(), "target": self.target.to_json(),
               "map": self.describe()}
        if self.index is not None:
            out["uniformizer"] = self.source.uniformizer_names[self.index]
        if self.unit is not None:
            out["unit"] = str(self.unit)
        return out


def ramified_kummer(tower, i, d):
    """Adjoin a d-th root of the uniformizer t_i (0-based index)."""
    if not 0 <= i < tower.depth:
        raise PreconditionError(f"no uniformizer with index {i} in {tower}")
    if d < 2 or tower.m % d:
        raise PreconditionError(f"Kummer degree {d} must be > 1 and divide m = {tower.m}")
    return ExtensionStep(RAMIFIED, d, tower, tower, index=i)


def residue_enlarge(tower, d):
    """Replace the base F_q by F_{q^d} (unramified of degree d)."""
    if d < 2:
        raise PreconditionError(f"enlargement degree {d} must be at least 2")
    return ExtensionStep(RESIDUE, d, tower, FieldTower(tower.q ** d, tower.m, tower.uniformizer_names))


def unramified_kummer(tower, u, d):
    """Adjoin a d-th root of the unit class u, realised as a residue enlargement of degree d."""
    if u.tower != tower:
        raise TowerMismatch("unit does not belong to the tower")
    if any(u.unif_exps):
        raise PreconditionError(f"{u} is not a unit class")
    if d < 2 or tower.m % d:
        raise PreconditionError(f"Kummer degree {d} must be > 1 and divide m = {tower.m}")
    step = residue_enlarge(tower, d)
    step = ExtensionStep(UNRAMIFIED, d, tower, step.target, unit=u)
    # u = c^a becomes c'^(a N) with d | N, hence a d-th power upstairs
    if (u.base_exp * step.norm_exponent) % d:
        raise AssertionError(f"{u} did not become a {d}-th power")
    return step


def apply_extension(x, step):
    """Restriction of a class of K^x/(K^x)^m along one extension step."""
    if x.tower != step.source:
        raise TowerMismatch(f"class over {x.tower}, step from {step.source}")
    if step.kind == RAMIFIED:
        exps = list(x.unif_exps)
        exps[step.index] *= step.degree
        return ElementClass(step.target, x.base_exp, exps)
    return ElementClass(step.target, x.base_exp * step.norm_exponent, x.unif_exps)


def apply_chain(x, steps):
    for step in steps:
        x = apply_extension(x, step)
    return x


def chain_degree(steps):
    d = 1
    for step in steps:
        d *= step.degree
    return d


def corestrict_base(x, step):
    """Norm map back down a residue enlargement.

    The target generator c' has norm c (compatible generators), and a
    uniformizer defined over the source has norm t^d.
    """
    if step.kind not in (RESIDUE, UNRAMIFIED):
        raise NotDescendable(f"no residue enlargement recorded for a {step.kind} step")
    if x.tower != step.target:
        raise TowerMismatch(f"class over {x.tower}, step lands in {step.target}")
    return ElementClass(step.source, x.base_exp, [e * step.degree for e in x.unif_exps])

