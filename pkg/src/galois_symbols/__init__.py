"""Exact symbol calculus in H^k(K, mu_m) for K = F_q((t1))...((tn))."""
from .errors import SymbolError
from .numoracle import (
    QuaternionInput,
    hilbert_symbol,
    quaternion_ramification,
    tame_symbol_oracle,
    tate_common_slot,
)
from .parsing import parse_element, parse_symbol_expr
from .residue import (
    bilocal_decompose,
    case2a_reduce,
    decompose,
    decompose_symbol_rewrite,
    residue_map,
)
from .splitting import (
    common_slot_local,
    cyclotomic_descent,
    index_bounds,
    split_composite,
    split_top,
)
from .symcalc import (
    CanonicalClass,
    SymbolSum,
    coeff_lift,
    coeff_reduce,
    cup,
    normalize,
)
from .tower import (
    GENERATOR_CONVENTION,
    ElementClass,
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

__version__ = "0.1.0"
