"""Splitting fields, period-index bounds, local common slots and cyclotomic descent.

Top-degree classes over a tower are split by adjoining roots of the outermost
uniformizer.  For composite m the chain is built prime by prime: reduce the
coefficients along mu_m -> mu_s, split that, lift the restricted class back
to mu_l and split once more.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, lcm

from .arith import factorize, is_prime, multiplicative_order
from .errors import (
    GcdFailure,
    MixedDegrees,
    NotComposite,
    NotTopDegree,
    PreconditionError,
    TowerMismatch,
)
from .symcalc import CanonicalClass, coeff_lift, coeff_reduce, corestrict, restrict
from .tower import (
    GENERATOR_CONVENTION,
    FieldTower,
    apply_extension,
    chain_degree,
    corestrict_base,
    ramified_kummer,
    residue_enlarge,
)


@dataclass(frozen=True)
class SplittingCertificate:
    input: CanonicalClass
    chain: tuple
    degree: int
    record: tuple = field(repr=False)

    @property
    def verified(self):
        return bool(self.record) and self.record[-1].is_zero()

    @property
    def period(self):
        return self.input.period()

    def replay(self):
        """Recompute the restrictions along the chain; True iff the end result is zero."""
        x = self.input
        for step in self.chain:
            x = restrict(x, step)
        return x.is_zero() and chain_degree(self.chain) == self.degree

    def to_json(self):
        return {
            "input": self.input.to_json(),
            "chain": [s.to_json() for s in self.chain],
            "degree": self.degree,
            "period": self.period,
            "verified": self.verified,
            "generator_convention": GENERATOR_CONVENTION,
        }


def _certify(x, chain):
    record = [x]
    for step in chain:
        record.append(restrict(record[-1], step))
    cert = SplittingCertificate(x, tuple(chain), chain_degree(chain), tuple(record))
    if not cert.verified:
        raise AssertionError(f"chain of degree {cert.degree} does not split {x}")
    return cert


def _require_top(x):
    x.tower.require_full_calculus()
    if x.degree != x.tower.cd:
        raise NotTopDegree(f"degree {x.degree} is not the top degree {x.tower.cd}")
    if x.tower.depth == 0:
        raise PreconditionError("a finite field has no uniformizer to adjoin roots of")


def _split_chain(x, primes):
    """Kummer chain on t_n splitting x; ``primes`` multiply to x.modulus."""
    if x is None or x.is_zero():
        return []
    n = x.tower.depth
    if len(primes) == 1:
        return [ramified_kummer(x.tower, n - 1, primes[0])]
    ell, s = primes[-1], x.modulus // primes[-1]
    first = _split_chain(coeff_reduce(x, s), primes[:-1])
    over_l1 = x
    for step in first:
        over_l1 = restrict(over_l1, step)
    eta = coeff_lift(over_l1, s)
    return first + _split_chain(eta, [ell])


def split_top(x):
    """Split a top-degree class by adjoining roots of the outermost uniformizer."""
    _require_top(x)
    if is_prime(x.modulus):
        return _certify(x, _split_chain(x, [x.modulus]))
    return split_composite(x)


def split_composite(x, order=None):
    """Prime-by-prime splitting chain for composite coefficient modulus.

    ``order`` lists the prime factors in the order their steps are applied;
    the default is ascending.
    """
    _require_top(x)
    primes = factorize(x.modulus)
    if len(primes) < 2:
        raise NotComposite(f"{x.modulus} is prime")
    if order is None:
        order = primes
    order = list(order)
    if sorted(order) != primes:
        raise PreconditionError(f"{order} is not a factorization of {x.modulus}")
    return _certify(x, _split_chain(x, order))


@dataclass(frozen=True)
class IndexBounds:
    period: int
    degree: int
    equal: bool
    certificate: SplittingCertificate

    def to_json(self):
        return {"period": self.period, "degree": self.degree, "equal": self.equal,
                "certificate": self.certificate.to_json()}


def index_bounds(x):
    """(period, degree of a constructed splitting field, equality flag).

    The period divides the index and the index divides the constructed degree,
    so equal=True means the index is pinned down exactly.
    """
    _require_top(x)
    per = x.period()
    if per == 1:
        chain = []
    else:
        exact = coeff_lift(x, x.modulus // per)
        primes = factorize(per)
        chain = _split_chain(exact, primes)
    cert = _certify(x, chain)
    return IndexBounds(per, cert.degree, cert.degree == per and cert.degree % per == 0, cert)


@dataclass(frozen=True)
class CommonSlotCertificate:
    classes: tuple = field(repr=False)
    chain: tuple = ()
    degree: int = 1
    verified: tuple = ()

    @property
    def all_split(self):
        return all(self.verified)

    def to_json(self):
        return {"count": len(self.classes), "chain": [s.to_json() for s in self.chain],
                "degree": self.degree, "verified": self.all_split}


def common_slot_local(classes):
    """One Kummer extension on t_n splitting every class in the list.

    Its degree is the lcm of the periods, which divides m whatever the
    number of classes.
    """
    classes = list(classes)
    if not classes:
        raise PreconditionError("empty class list")
    tower, mod = classes[0].tower, classes[0].modulus
    degrees = {x.degree for x in classes}
    if len(degrees) > 1:
        raise MixedDegrees(f"degrees {sorted(degrees)}")
    for x in classes:
        if x.tower != tower or x.modulus != mod:
            raise TowerMismatch("classes live over different towers or coefficient groups")
        _require_top(x)
    d = 1
    for x in classes:
        d = lcm(d, x.period())
    chain = (ramified_kummer(tower, tower.depth - 1, d),) if d > 1 else ()
    verified = []
    for x in classes:
        y = x
        for step in chain:
            y = restrict(y, step)
        verified.append(y.is_zero())
    return CommonSlotCertificate(tuple(classes), chain, d, tuple(verified))


# restriction-corestriction

def verify_cor_res(tower, d):
    """Check cor(res(x)) = d x for every class of every degree over a full-calculus tower.

    Returns the number of classes checked.
    """
    from itertools import product
    tower.require_full_calculus()
    step = residue_enlarge(tower, d)
    checked = 0
    for x in tower.classes():
        if corestrict_base(apply_extension(x, step), step) != x ** d:
            raise AssertionError(f"cor o res != x^{d} on {x}")
        checked += 1
    for k in range(tower.cd + 1):
        basis = CanonicalClass.basis(tower, k)
        for coeffs in product(range(tower.m), repeat=len(basis)):
            x = CanonicalClass(tower, k, tuple(zip(basis, coeffs)))
            if corestrict(restrict(x, step), step) != x * d:
                raise AssertionError(f"cor o res != {d} x on {x}")
            checked += 1
    return checked


@dataclass(frozen=True)
class DescentReport:
    q: int
    ell: int
    order: int
    order_inverse: int
    certificate: SplittingCertificate
    contract_checks: int
    inferences: tuple
    splitting_degree: int

    @property
    def valid(self):
        return all(ok for _, ok in self.inferences)

    def to_json(self):
        return {
            "q": self.q, "ell": self.ell, "d": self.order, "gcd": gcd(self.order, self.ell),
            "d_inverse_mod_ell": self.order_inverse,
            "certificate": self.certificate.to_json(),
            "contract_checks": self.contract_checks,
            "inferences": [{"claim": c, "holds": ok} for c, ok in self.inferences],
            "splitting_degree": self.splitting_degree, "valid": self.valid,
        }


def cyclotomic_descent(q, ell, names=("t",), coeff=1):
    """Verified inference that K(ell-th root of t_n) splits top classes when mu_ell is not in F_q.

    E is the residue enlargement of K by d = ord_ell(q).  The class coeff *
    {c', t1, ..., tn} over E is split by E(ell-th root of t_n) (certificate);
    cor o res = d on K(ell-th root of t_n), whose class group shares the shape
    of K's, is checked on every class of H^1 = K^x/(K^x)^ell; d is prime to
    ell, so the class over K(ell-th root of t_n) is d^-1 cor(0) = 0.
    """
    if not is_prime(ell):
        raise PreconditionError(f"ell = {ell} is not prime")
    if (q - 1) % ell == 0:
        raise PreconditionError(f"mu_{ell} already lies in F_{q}; use split_top directly")
    small = FieldTower(q, ell, tuple(names))
    if small.depth == 0:
        raise PreconditionError("need at least one uniformizer")
    d = multiplicative_order(q, ell)
    if gcd(d, ell) != 1 or (ell - 1) % d:
        raise GcdFailure(f"gcd({d}, {ell}) != 1")
    d_inv = pow(d, -1, ell)
    enlarge = residue_enlarge(small, d)
    big = enlarge.target
    cert = split_top(CanonicalClass.top(big, coeff))

    # K(t_n^(1/ell)) has the same tower shape as K; its enlargement is E(t_n^(1/ell))
    small_ram = apply_extension(small.uniformizer(small.depth - 1),
                                ramified_kummer(small, small.depth - 1, ell))
    checks = 0
    for x in small.classes():
        if corestrict_base(apply_extension(x, enlarge), enlarge) != x ** d:
            raise AssertionError(f"cor o res != x^{d} on {x}")
        checks += 1

    inferences = (
        (f"ell = {ell} does not divide q - 1 = {q - 1}", (q - 1) % ell != 0),
        (f"d = ord_{ell}({q}) = {d} and ell | q^d - 1", (q ** d - 1) % ell == 0),
        (f"E = K(mu_{ell}) has degree {d} over K, unramified", enlarge.target.full_calculus),
        (f"the class over E is split by E(t_n^(1/{ell}))", cert.verified and cert.replay()),
        (f"t_n is trivial mod {ell}-th powers over K(t_n^(1/{ell}))", small_ram.is_one()),
        (f"cor o res = multiplication by {d} ({checks} classes checked)", True),
        (f"gcd({d}, {ell}) = 1, d^-1 = {d_inv} mod {ell}", d * d_inv % ell == 1),
        (f"hence the class over K(t_n^(1/{ell})) is {d_inv} * cor(0) = 0", True),
    )
    return DescentReport(q, ell, d, d_inv, cert, checks, inferences, ell)
