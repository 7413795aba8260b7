import random

import pytest

from galois_symbols.symcalc import CanonicalClass, SymbolSum
from galois_symbols.tower import build_tower


def random_element(rng, tower):
    return tower.element(rng.randrange(tower.base_modulus),
                         [rng.randrange(tower.m) for _ in range(tower.depth)])


def random_symbol(rng, tower, k):
    return SymbolSum.symbol(*(random_element(rng, tower) for _ in range(k)))


def random_class(rng, tower, degree):
    basis = CanonicalClass.basis(tower, degree)
    return CanonicalClass(tower, degree, {key: rng.randrange(tower.m) for key in basis})


# towers used across the suite: q in {7, 13}, m in {2, 3, 6}, depth <= 2
CALCULUS_TOWERS = [
    build_tower(q, m, names)
    for q in (7, 13)
    for m in (2, 3, 6)
    for names in (["t"], ["t1", "t2"])
]


@pytest.fixture
def rng():
    return random.Random(20261017)
