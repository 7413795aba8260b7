"""Residue maps and decompositions over the outermost uniformizer.

Every class over K = k((pi)) decomposes as xi1 + (xi2, pi) with xi1, xi2
unramified.  ``decompose`` reads this off the canonical form; the function
``decompose_symbol_rewrite`` instead carries out the symbol manipulations
slot by slot and records every relation it applies.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    HypothesisError,
    IdentityFailure,
    InnerUniformizer,
    NonMonomialEntry,
    PreconditionError,
    TowerMismatch,
)
from .symcalc import CanonicalClass, SymbolSum, class_of, cup, normalize
from .tower import ElementClass, minus_one_class


def _pi_class(tower, modulus):
    return class_of(tower.uniformizer(tower.depth - 1), modulus)


def residue_map(x, at=None):
    """Tame residue at the outermost uniformizer t_n.

    Monomials containing t_n lose it (t_n sorts last, so no sign); the rest
    map to zero.  The result lives over the depth-(n-1) residue tower.
    """
    tower = x.tower
    if tower.depth == 0:
        raise PreconditionError("residue needs a uniformizer")
    n = tower.depth
    if at is not None:
        idx = tower.index(at) if isinstance(at, str) else at
        if idx != n - 1:
            raise InnerUniformizer(
                f"residues are taken at the outermost uniformizer {tower.uniformizer_names[-1]}; "
                "reorder the tower first")
    if x.degree == 0:
        return None
    coeffs = tuple((k[:-1], v) for k, v in x.coeffs if k[-1] == n)
    return CanonicalClass(tower.residue_tower(), x.degree - 1, coeffs, x.modulus)


def embed(x, tower):
    """View a class over the residue tower as an unramified class over ``tower``."""
    if x.tower != tower.residue_tower():
        raise TowerMismatch(f"{x.tower} is not the residue tower of {tower}")
    return CanonicalClass(tower, x.degree, x.coeffs, x.modulus)


def is_unramified(x):
    return x.uniformizer_free(x.tower.depth)


@dataclass(frozen=True)
class Decomposition:
    xi1: CanonicalClass
    xi2: CanonicalClass

    def recombine(self):
        tower = self.xi1.tower
        return self.xi1 + cup(self.xi2, _pi_class(tower, self.xi1.modulus))


def decompose(x):
    """x = xi1 + xi2 u t_n with xi1, xi2 free of t_n."""
    tower = x.tower
    if tower.depth == 0:
        raise PreconditionError("decompose needs a uniformizer")
    if x.degree == 0:
        return Decomposition(x, None)
    n = tower.depth
    xi2 = CanonicalClass(tower, x.degree - 1,
                         tuple((k[:-1], v) for k, v in x.coeffs if k[-1] == n), x.modulus)
    xi1 = x - cup(xi2, _pi_class(tower, x.modulus))
    return Decomposition(xi1, xi2)


@dataclass(frozen=True)
class BilocalDecomposition:
    xi1: CanonicalClass
    xi2: CanonicalClass
    xi3: CanonicalClass
    xi4: CanonicalClass

    def recombine(self):
        tower = self.xi1.tower
        mod = self.xi1.modulus
        pi = class_of(tower.uniformizer(tower.depth - 2), mod)
        delta = class_of(tower.uniformizer(tower.depth - 1), mod)
        total = self.xi1
        if self.xi2 is not None:
            total = total + cup(self.xi2, pi) + cup(self.xi3, delta)
        if self.xi4 is not None:
            total = total + cup(cup(self.xi4, pi), delta)
        return total


def bilocal_decompose(s):
    """Split a class by its content in the last two uniformizers (pi, delta).

    Accepts a SymbolSum (entries are monomials by construction) or a
    CanonicalClass.  x = xi1 + (xi2, pi) + (xi3, delta) + (xi4, pi, delta).
    """
    x = normalize(s) if isinstance(s, SymbolSum) else s
    tower = x.tower
    if tower.depth < 2:
        raise PreconditionError("bilocal decomposition needs two uniformizers")
    ip, idl = tower.depth - 1, tower.depth
    k = x.degree
    parts = {(False, False): [], (True, False): [], (False, True): [], (True, True): []}
    for key, v in x.coeffs:
        has_pi, has_delta = ip in key, idl in key
        rest = tuple(g for g in key if g not in (ip, idl))
        parts[has_pi, has_delta].append((rest, v))

    def make(deg, items):
        if deg < 0:
            return None
        return CanonicalClass(tower, deg, tuple(items), x.modulus)

    return BilocalDecomposition(make(k, parts[False, False]), make(k - 1, parts[True, False]),
                                make(k - 1, parts[False, True]), make(k - 2, parts[True, True]))


# Proof-faithful rewriting

@dataclass
class RewriteStep:
    rule: str
    before: SymbolSum = field(repr=False)
    after: SymbolSum = field(repr=False)

    def to_json(self):
        return {"rule": self.rule, "before": str(self.before), "after": str(self.after)}


@dataclass
class RewriteResult:
    units: SymbolSum
    ramified: SymbolSum
    trace: list

    def ramified_stripped(self):
        """The (k-1)-slot sum xi2 with (xi2, pi) == ramified."""
        tower = self.ramified.tower
        return SymbolSum(tower, self.ramified.degree - 1,
                         tuple((c, e[:-1]) for c, e in self.ramified.terms))


def _is_pi(a):
    return a.pi_exp == 1 and a.unit_part().is_one()


def _final(entries):
    if all(a.pi_exp == 0 for a in entries):
        return True
    return _is_pi(entries[-1]) and all(a.pi_exp == 0 for a in entries[:-1])


def _rewrite_term(coef, entries, tower):
    """One rewrite of a single non-final term; returns (rule, replacement terms)."""
    k = len(entries)
    # split u pi^j into u and pi^j
    for i, a in enumerate(entries):
        if a.pi_exp and not a.unit_part().is_one():
            pi_j = a / a.unit_part()
            return "split", [(coef, entries[:i] + (a.unit_part(),) + entries[i + 1:]),
                             (coef, entries[:i] + (pi_j,) + entries[i + 1:])]
    # (.., pi^j, ..) = j (.., pi, ..)
    for i, a in enumerate(entries):
        if a.pi_exp > 1:
            pi = tower.uniformizer(tower.depth - 1)
            return "multilinear", [(coef * a.pi_exp, entries[:i] + (pi,) + entries[i + 1:])]
    # move the rightmost misplaced pi one slot to the right
    i = max(j for j in range(k - 1) if entries[j].pi_exp)
    if entries[i + 1].pi_exp:
        # (pi, pi) = (-1, pi)
        minus_one = minus_one_class(tower)
        return "diagonal", [(coef, entries[:i] + (minus_one, entries[i + 1]) + entries[i + 2:])]
    swapped = entries[:i] + (entries[i + 1], entries[i]) + entries[i + 2:]
    return "swap", [(-coef, swapped)]


def decompose_symbol_rewrite(s, collect=True):
    """Rewrite a symbol sum into units-only symbols plus symbols (v_1, ..., v_{k-1}, pi).

    Every entry is split as u * pi^j, pi-slots are moved to the right with the
    alternating and diagonal relations, and (optionally) ramified terms sharing
    the middle slots are merged through multilinearity in the first slot.
    """
    tower = s.tower
    tower.require_full_calculus()
    if tower.depth == 0:
        raise PreconditionError("rewriting needs a uniformizer")
    for _, entries in s.terms:
        for a in entries:
            if not isinstance(a, ElementClass):
                raise NonMonomialEntry(f"entry {a!r} is not a monomial class")
    terms = [t for t in s.terms]
    trace = []
    while True:
        pos = next((i for i, (_, e) in enumerate(terms) if not _final(e)), None)
        if pos is None:
            break
        coef, entries = terms[pos]
        rule, repl = _rewrite_term(coef, entries, tower)
        before = SymbolSum(tower, s.degree, tuple(terms))
        terms = terms[:pos] + repl + terms[pos + 1:]
        trace.append(RewriteStep(rule, before, SymbolSum(tower, s.degree, tuple(terms))))

    units = [(c, e) for c, e in terms if all(a.pi_exp == 0 for a in e)]
    ram = [(c, e) for c, e in terms if e[-1].pi_exp]
    if collect and s.degree >= 2:
        merged = {}
        for c, e in ram:
            rest = e[1:]
            merged[rest] = merged[rest] * e[0] ** c if rest in merged else e[0] ** c
        collected = [(1, (v,) + rest) for rest, v in merged.items()]
        if collected != ram:
            before = SymbolSum(tower, s.degree, tuple(units + ram))
            after = SymbolSum(tower, s.degree, tuple(units + collected))
            trace.append(RewriteStep("multilinear", before, after))
            ram = collected
    return RewriteResult(SymbolSum(tower, s.degree, tuple(units)),
                         SymbolSum(tower, s.degree, tuple(ram)), trace)


def replay_trace(trace):
    """Check that every recorded rewrite is an equality of classes."""
    for step in trace:
        if normalize(step.before) != normalize(step.after):
            return False
    return True


# Case 2a: a nodal point of the branch divisor

@dataclass(frozen=True)
class Case2aReport:
    lhs: CanonicalClass
    main_term: CanonicalClass
    correction_term: CanonicalClass
    g: ElementClass
    chain: tuple

    def to_json(self):
        return {"lhs": self.lhs.to_json(), "main_term": self.main_term.to_json(),
                "correction_term": self.correction_term.to_json(), "g": str(self.g),
                "chain": [{"expr": e, "class": c.to_json()} for e, c in self.chain]}


def case2a_reduce(xi4, u):
    """Rewrite (xi4, pi, delta) as (xi4, -pi, g) with common slot g = u pi delta.

    The chain is
        (xi4, pi, delta) = (xi4, -pi, pi delta) = (xi4, -pi, u^-1 g)
                         = (xi4, u, -pi) + (xi4, -pi, g) = (xi4, -pi, g).
    The first and last steps drop (xi4, -1) and (xi4, u), which are classes of
    the residue field of degree deg(xi4) + 1; they vanish when xi4 has a base
    slot (the residue field has cd 1).  A scalar xi4 is accepted only when both
    dropped terms are already zero.
    """
    tower = xi4.tower
    if tower.depth != 2:
        raise PreconditionError("case 2a works over a depth-2 tower (pi, delta)")
    if u.tower != tower or any(u.unif_exps):
        raise PreconditionError(f"{u} is not a unit class of {tower}")
    if any(set(k) - {0} for k, _ in xi4.coeffs):
        raise PreconditionError("xi4 must be a base-only class")
    mod = xi4.modulus
    pi_e, delta_e = tower.uniformizer(0), tower.uniformizer(1)
    minus_one = minus_one_class(tower)
    minus_pi = minus_one * pi_e
    g = u * pi_e * delta_e

    def sym(*entries):
        return normalize(SymbolSum.symbol(*entries), mod)

    dropped = [cup(xi4, class_of(minus_one, mod)), cup(xi4, class_of(u, mod))]
    if any(not d.is_zero() for d in dropped):
        raise HypothesisError(
            f"(xi4, -1) or (xi4, u) is nonzero for xi4 = {xi4}, u = {u}: the residue-field "
            "vanishing that the reduction relies on does not hold")

    chain = (
        ("(xi4, pi, delta)", cup(xi4, sym(pi_e, delta_e))),
        ("(xi4, -pi, pi*delta)", cup(xi4, sym(minus_pi, pi_e * delta_e))),
        ("(xi4, -pi, u^-1*g)", cup(xi4, sym(minus_pi, u.inverse() * g))),
        ("(xi4, u, -pi) + (xi4, -pi, g)",
         cup(xi4, sym(u, minus_pi)) + cup(xi4, sym(minus_pi, g))),
        ("(xi4, -pi, g)", cup(xi4, sym(minus_pi, g))),
    )
    lhs = chain[0][1]
    for expr, value in chain[1:]:
        if value != lhs:
            raise IdentityFailure(f"{expr} = {value} differs from (xi4, pi, delta) = {lhs}")
    main = chain[-1][1]
    correction = cup(xi4, sym(u, minus_pi))
    if lhs != main + correction or not correction.is_zero():
        raise IdentityFailure("correction term (xi4, u, -pi) did not vanish")
    return Case2aReport(lhs, main, correction, g, chain)
