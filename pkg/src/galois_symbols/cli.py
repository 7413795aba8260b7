"""Command-line front end.

    galsym tower new --q 7 --m 6 --uniformizers t1,t2
    galsym normalize "(t1, t1)"
    galsym period-index "(c, t1, t2)" --json
    galsym tate-slot "(-1,-1)" "(-1,-3)"

The current tower lives in a JSON session file (``--session``, default
``galsym_session.json``).  Every payload carries the tower and the generator
convention.  Errors exit with status 2 and a structured message.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
import warnings

from . import numoracle, residue, splitting, symcalc
from .errors import PreconditionError, SymbolError
from .parsing import parse_int_pair, parse_symbol_expr
from .tower import GENERATOR_CONVENTION, FieldTower, build_tower

DEFAULT_SESSION = "galsym_session.json"


def _session_path(args):
    return args.session or os.environ.get("GALSYM_SESSION") or DEFAULT_SESSION


def load_tower(args):
    if args.tower:
        return FieldTower.from_json(json.loads(args.tower))
    path = _session_path(args)
    if not os.path.exists(path):
        raise PreconditionError(f"no session file {path}; run 'tower new' first or pass --tower")
    with open(path) as fh:
        data = json.load(fh)
    return FieldTower.from_json(data["tower"])


def _payload(tower, **fields):
    out = {"generator_convention": GENERATOR_CONVENTION}
    if tower is not None:
        out["tower"] = tower.to_json()
    out.update(fields)
    return out


def _class_json(x):
    if x is None:
        return None
    data = x.to_json()
    return {key: data[key] for key in ("degree", "modulus", "coeffs")}


# commands

def cmd_tower_new(args):
    if args.from_json:
        tower = FieldTower.from_json(json.loads(args.from_json))
    else:
        names = [n for n in (args.uniformizers or "").split(",") if n]
        tower = build_tower(args.q, args.m, names)
    path = _session_path(args)
    with open(path, "w") as fh:
        json.dump({"tower": tower.to_json(), "generator_convention": GENERATOR_CONVENTION},
                  fh, indent=2, sort_keys=True)
    return _payload(tower, session=path, full_calculus=tower.full_calculus, cd=tower.cd)


def cmd_normalize(args):
    tower = load_tower(args)
    s = parse_symbol_expr(args.expr, tower)
    overflow = s.degree > tower.cd
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        x = symcalc.normalize(s)
    return _payload(tower, degree=x.degree, coeffs=_class_json(x)["coeffs"],
                    period=x.period(), symbol_length_bound=x.symbol_length_bound,
                    degree_overflow=overflow)


def cmd_residue(args):
    tower = load_tower(args)
    x = symcalc.normalize(parse_symbol_expr(args.expr, tower))
    r = residue.residue_map(x)
    return _payload(tower, residue_tower=tower.residue_tower().to_json(), residue=_class_json(r))


def cmd_decompose(args):
    tower = load_tower(args)
    s = parse_symbol_expr(args.expr, tower)
    x = symcalc.normalize(s)
    dec = residue.decompose(x)
    rw = residue.decompose_symbol_rewrite(s)
    agrees = (symcalc.normalize(rw.units) == dec.xi1
              and symcalc.normalize(rw.ramified) == x - dec.xi1)
    out = _payload(tower, xi1=_class_json(dec.xi1), xi2=_class_json(dec.xi2),
                   rewrite={"units": str(rw.units), "ramified": str(rw.ramified)},
                   rewrite_agrees=agrees)
    if args.trace:
        out["trace"] = [step.to_json() for step in rw.trace]
    return out


def cmd_bilocal(args):
    tower = load_tower(args)
    b = residue.bilocal_decompose(parse_symbol_expr(args.expr, tower))
    return _payload(tower, xi1=_class_json(b.xi1), xi2=_class_json(b.xi2),
                    xi3=_class_json(b.xi3), xi4=_class_json(b.xi4),
                    recombines=b.recombine() == symcalc.normalize(parse_symbol_expr(args.expr, tower)))


def cmd_split(args):
    tower = load_tower(args)
    x = symcalc.normalize(parse_symbol_expr(args.expr, tower))
    if args.order:
        cert = splitting.split_composite(x, [int(p) for p in args.order.split(",")])
    else:
        cert = splitting.split_top(x)
    return _payload(tower, **cert.to_json())


def cmd_period_index(args):
    tower = load_tower(args)
    x = symcalc.normalize(parse_symbol_expr(args.expr, tower))
    b = splitting.index_bounds(x)
    return _payload(tower, period=b.period, degree=b.degree, equal=b.equal,
                    chain=[s.to_json() for s in b.certificate.chain])


def cmd_common_slot(args):
    tower = load_tower(args)
    classes = [symcalc.normalize(parse_symbol_expr(e, tower)) for e in args.exprs]
    rng = random.Random(args.seed)
    for _ in range(args.random):
        classes.append(symcalc.CanonicalClass.top(tower, rng.randrange(tower.m)))
    if not classes:
        raise PreconditionError("give class expressions or --random N")
    cert = splitting.common_slot_local(classes)
    return _payload(tower, classes=[_class_json(x)["coeffs"] for x in classes], **cert.to_json())


def cmd_descend(args):
    tower = load_tower(args)
    ell = args.ell or tower.m
    report = splitting.cyclotomic_descent(tower.q, ell, tower.uniformizer_names, args.coeff)
    return _payload(tower, **report.to_json())


def cmd_tate_slot(args):
    pairs = [parse_int_pair(t) for t in args.algebras]
    return _payload(None, **numoracle.tate_common_slot(pairs).to_json())


def cmd_oracle_hilbert(args):
    place = args.place if args.place in ("inf", "real") else int(args.place)
    place = numoracle.REAL if place == "real" else place
    return _payload(None, a=args.a, b=args.b, place=str(place),
                    symbol=numoracle.hilbert_symbol(args.a, args.b, place))


# output

def _format_text(payload):
    lines = []
    for key, value in payload.items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True)
        lines.append(f"{key}: {value}")
    return "\n".join(lines)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--session", default=argparse.SUPPRESS)
    common.add_argument("--tower", default=argparse.SUPPRESS,
                        help='inline tower JSON, e.g. \'{"q": 7, "m": 6, "uniformizers": ["t1","t2"]}\'')
    common.add_argument("--trace", action="store_true", default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="galsym", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--session", default=None)
    parser.add_argument("--tower", default=None)
    parser.add_argument("--trace", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    tower = sub.add_parser("tower", parents=[common], help="tower session management")
    tsub = tower.add_subparsers(dest="tower_command", required=True)
    new = tsub.add_parser("new", parents=[common])
    new.add_argument("--q", type=int)
    new.add_argument("--m", type=int)
    new.add_argument("--uniformizers", default="")
    new.add_argument("--from-json", dest="from_json", default=None)
    new.set_defaults(func=cmd_tower_new)

    def expr_command(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.add_argument("expr")
        p.set_defaults(func=func)
        return p

    expr_command("normalize", cmd_normalize, "canonical form of a symbol sum")
    expr_command("residue", cmd_residue, "residue at the outermost uniformizer")
    expr_command("decompose", cmd_decompose, "xi1 + (xi2, pi) decomposition")
    expr_command("bilocal-decompose", cmd_bilocal, "decomposition along (pi, delta)")
    split = expr_command("split", cmd_split, "splitting certificate of a top class")
    split.add_argument("--order", default=None, help="prime factor order, e.g. 3,2")
    expr_command("period-index", cmd_period_index, "period and constructed index")

    cs = sub.add_parser("common-slot", parents=[common], help="one extension splitting many classes")
    cs.add_argument("exprs", nargs="*")
    cs.add_argument("--random", type=int, default=0, help="add N random top classes (uses --seed)")
    cs.set_defaults(func=cmd_common_slot)

    ds = sub.add_parser("descend", parents=[common], help="cyclotomic restriction-corestriction descent")
    ds.add_argument("--ell", type=int, default=None)
    ds.add_argument("--coeff", type=int, default=1)
    ds.set_defaults(func=cmd_descend)

    ts = sub.add_parser("tate-slot", parents=[common], help="common quadratic slot over Q")
    ts.add_argument("algebras", nargs="+")
    ts.set_defaults(func=cmd_tate_slot)

    oracle = sub.add_parser("oracle", parents=[common], help="brute-force oracles")
    osub = oracle.add_subparsers(dest="oracle_command", required=True)
    hil = osub.add_parser("hilbert", parents=[common])
    hil.add_argument("a", type=int)
    hil.add_argument("b", type=int)
    hil.add_argument("place")
    hil.set_defaults(func=cmd_oracle_hilbert)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    # let negative numbers such as "-1" through as positionals
    args = parser.parse_args(_protect_negatives(sys.argv[1:] if argv is None else list(argv)))
    try:
        payload = args.func(args)
        code = 0
    except (SymbolError, ValueError) as exc:
        payload = {"error": type(exc).__name__, "message": str(exc), "command": args.command}
        code = 2
    if args.json:
        text = json.dumps(payload, sort_keys=True, indent=2)
    else:
        text = _format_text(payload)
    stream = out if code == 0 or args.json else sys.stderr
    print(text, file=stream)
    return code


def _protect_negatives(argv):
    # argparse treats "-1" as an option once any option string looks numeric; it does not here,
    # but expressions such as "-2*(c,t1)" start with "-" and must be kept positional
    out = []
    for a in argv:
        if a.startswith("-") and not a.startswith("--") and len(a) > 1 and not a[1:2].isalpha():
            out.append(" " + a)
        else:
            out.append(a)
    return out


if __name__ == "__main__":
    sys.exit(main())
