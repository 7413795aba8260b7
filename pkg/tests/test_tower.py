
import pytest
from hypothesis import given, strategies as st

from galois_symbols.arith import discrete_log, geometric_sum, smallest_primitive_root
from galois_symbols.errors import (
    ArityMismatch,
    InvalidBase,
    NonCoprimeModulus,
    NotDescendable,
    TowerMismatch,
)
from galois_symbols.tower import (
    FieldTower,
    apply_extension,
    build_tower,
    corestrict_base,
    element_class,
    minus_one_class,
    ramified_kummer,
    residue_enlarge,
    unramified_kummer,
)


def test_build_tower_full_calculus():
    t = build_tower(7, 2, ["t"])
    assert (t.depth, t.full_calculus, t.cd) == (1, True, 2)
    t = build_tower(7, 6, ["t1", "t2"])
    assert (t.depth, t.full_calculus, t.cd) == (2, True, 3)
    assert t.base_group_order == 6


def test_build_tower_errors():
    with pytest.raises(NonCoprimeModulus):
        build_tower(7, 7, ["t"])
    with pytest.raises(InvalidBase):
        build_tower(12, 2, ["t"])
    with pytest.raises(ValueError):
        build_tower(7, 2, ["t", "t"])


def test_descent_only_tower():
    t = build_tower(5, 3, ["t"])
    assert not t.full_calculus
    assert t.base_modulus == 1


def test_tower_json_roundtrip():
    t = build_tower(9, 4, ["t1", "t2"])
    assert FieldTower.from_json(t.to_json()) == t
    assert t.to_json() == {"q": 9, "m": 4, "uniformizers": ["t1", "t2"]}


def test_element_reduction():
    t = build_tower(7, 2, ["t"])
    x = element_class(t, 3, [0])
    assert x.exponents == (1, 0)
    with pytest.raises(ArityMismatch):
        element_class(t, 1, [0, 0])


def test_inverse_is_identity(rng):
    t = build_tower(13, 6, ["t1", "t2"])
    for x in t.classes():
        assert (x * x.inverse()).is_one()


@pytest.mark.parametrize("q,m,expected", [(7, 2, 1), (7, 3, 0), (13, 4, 2), (13, 6, 0)])
def test_minus_one(q, m, expected):
    t = build_tower(q, m, ["t"])
    assert minus_one_class(t).exponents == (expected, 0)
    # -1 really is g^((q-1)/2) for the smallest primitive root g
    g = smallest_primitive_root(q)
    assert discrete_log(q - 1, g, q) % m == expected


def test_minus_one_q7_is_c_cubed():
    assert smallest_primitive_root(7) == 3 and pow(3, 3, 7) == 6


@given(st.sampled_from([(7, 2), (7, 3), (7, 6), (13, 4), (13, 6), (13, 12)]),
       st.lists(st.integers(-50, 50), min_size=9, max_size=9))
def test_group_axioms(qm, exps):
    t = build_tower(qm[0], qm[1], ["t1", "t2"])
    x, y, z = (t.element(exps[i], exps[i + 1:i + 3]) for i in (0, 3, 6))
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert (x ** t.m).is_one()
    assert (x * x.inverse()).is_one()


@given(st.lists(st.integers(0, 5), min_size=6, max_size=6),
       st.sampled_from(["ram0", "ram1", "res2", "res3", "unr"]))
def test_extension_is_homomorphism(exps, kind):
    t = build_tower(7, 6, ["t1", "t2"])
    x, y = t.element(exps[0], exps[1:3]), t.element(exps[3], exps[4:6])
    step = {
        "ram0": lambda: ramified_kummer(t, 0, 3),
        "ram1": lambda: ramified_kummer(t, 1, 6),
        "res2": lambda: residue_enlarge(t, 2),
        "res3": lambda: residue_enlarge(t, 3),
        "unr": lambda: unramified_kummer(t, t.element(2), 2),
    }[kind]()
    assert apply_extension(x * y, step) == apply_extension(x, step) * apply_extension(y, step)


def test_ramified_kummer_kills_uniformizer():
    t = build_tower(7, 6, ["t1", "t2"])
    step = ramified_kummer(t, 1, 6)
    assert apply_extension(t.uniformizer(1), step).is_one()


@pytest.mark.parametrize("i", [0, 1])
def test_ramified_kummer_kernel_is_exactly_one_factor(i):
    t = build_tower(7, 6, ["t1", "t2"])
    step = ramified_kummer(t, i, 6)
    kernel = [x for x in t.classes() if apply_extension(x, step).is_one()]
    assert kernel == [t.uniformizer(i) ** k for k in range(6)]


@pytest.mark.parametrize("q,m,d", [(7, 2, 2), (7, 3, 2), (7, 6, 3), (13, 4, 5), (13, 12, 2)])
def test_residue_enlarge_multiplies_base_by_d(q, m, d):
    t = build_tower(q, m, ["t"])
    step = residue_enlarge(t, d)
    # oracle: the norm exponent summed term by term
    assert geometric_sum(q, d, m) == d % m
    assert step.norm_exponent % m == geometric_sum(q, d, m)
    x = t.base_generator() ** 5
    assert apply_extension(x, step).base_exp == 5 * d % m


def test_unramified_kummer_makes_unit_a_power():
    t = build_tower(7, 6, ["t"])
    u = t.element(1)
    step = unramified_kummer(t, u, 3)
    image = apply_extension(u, step)
    assert image.base_exp == 3 and image.base_exp % 3 == 0


def test_extension_tower_mismatch():
    t = build_tower(7, 6, ["t"])
    other = build_tower(13, 6, ["t"])
    with pytest.raises(TowerMismatch):
        apply_extension(other.one(), residue_enlarge(t, 2))


def test_corestrict_examples():
    t = build_tower(7, 6, ["t"])
    step = residue_enlarge(t, 2)
    x = t.element(1, [0])
    assert corestrict_base(apply_extension(x, step), step) == t.element(2, [0])
    assert corestrict_base(step.target.one(), step).is_one()
    t3 = build_tower(7, 3, ["t"])
    step3 = residue_enlarge(t3, 2)
    for x in t3.classes():
        assert corestrict_base(apply_extension(x, step3), step3) == x.inverse()
    with pytest.raises(NotDescendable):
        corestrict_base(x, ramified_kummer(t3, 0, 3))


@pytest.mark.parametrize("q,m,names,d", [
    (q, m, names, d)
    for q in (7, 13) for m in (2, 3, 6) for names in (["t"], ["t1", "t2"]) for d in (2, 3, 5)
    if (q - 1) % m == 0
])
def test_cor_res_exhaustive(q, m, names, d):
    t = build_tower(q, m, names)
    step = residue_enlarge(t, d)
    for x in t.classes():
        assert corestrict_base(apply_extension(x, step), step) == x ** d
