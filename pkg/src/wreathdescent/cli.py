"""
Command-line front end.

Elements are read as JSON from files given on the command line, or from
standard input when no file (or ``-``) is given.  Colours come from
``--group`` (its characters, with their group law) or else from
``--colours k`` (the plain colours a, b, ...).  An element whose
``colour_set`` field is a full colour-set object uses that instead.

Exit status: 2 for unreadable input, 1 for a failed verification, 0
otherwise.
"""

import argparse
import json
import sys

from .coloured_core import BComposition, ColourSet, ColouredPermutation
from .fqsym_engine import AlgebraElement, NotInSubspace, coproduct, pairing
from .hyperoctahedral import CHARACTER_COLOURS, tilde_theta
from .qsym_words import abelianize, fundamental_F, phi
from .rso_tableaux import atkinson_neighbours, closure_classes, knuth_neighbours, rso
from .solomon_characters import parse_group, theta_G
from .verify import SuiteParameters, run_suite, suite_names


class InputError(Exception):
    pass


def _colour_set(args) -> ColourSet:
    if args.group:
        return parse_group(args.group).dual().colour_set()
    return ColourSet.plain("abcdefgh"[: args.colours])


def _read_json(source: str):
    try:
        if source == "-":
            return json.load(sys.stdin)
        with open(source) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {source}: {exc}") from exc


def _inputs(args, count: int) -> list:
    sources = args.inputs or ["-"]
    if len(sources) == 1 and count > 1:
        data = _read_json(sources[0])
        if not isinstance(data, list) or len(data) != count:
            raise InputError(f"expected a JSON list of {count} items")
        return data
    if len(sources) != count:
        raise InputError(f"expected {count} inputs, got {len(sources)}")
    return [_read_json(s) for s in sources]


def _element(data, args) -> AlgebraElement:
    try:
        if isinstance(data, dict) and "perm" in data:
            data = {"terms": [dict(data, coeff=1)]}
        cs = data.get("colour_set")
        cs = ColourSet.from_json(cs) if isinstance(cs, dict) else _colour_set(args)
        return AlgebraElement.from_json(data, cs)
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise InputError(f"not an element: {exc}") from exc


def _permutation(data, args) -> ColouredPermutation:
    x = _element(data, args)
    if len(x.terms) != 1:
        raise InputError("expected a single coloured permutation")
    return next(iter(x.terms))


def _bcomposition(data) -> BComposition:
    try:
        return BComposition(tuple((int(c), str(b)) for c, b in data))
    except (TypeError, ValueError) as exc:
        raise InputError(f"not a B-composition: {exc}") from exc


def _element_text(x: AlgebraElement) -> str:
    return "\n".join(f"{v:+d} {a}" for a, v in x.sorted_terms()) or "0"


def _schur_text(s) -> str:
    if not s:
        return "0"
    out = []
    for lam, v in s.sorted_items():
        factors = " ".join(f"s{list(p)}({b})" for b, p in lam.parts) or "1"
        out.append(f"{v:+d} {factors}")
    return "\n".join(out)


def _weight_text(wt) -> str:
    return " ".join(f"{a}{b}" + (f"^{k}" if k > 1 else "") for (a, b), k in wt)


def _tableau_text(T) -> str:
    lines = []
    for b, t in T.per_colour:
        lines.append(f"{b}:")
        lines.extend("  " + " ".join(map(str, row)) for row in t.rows)
    return "\n".join(lines)


def _emit(args, payload, text: str):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _cmd_product(args):
    x, y = (_element(d, args) for d in _inputs(args, 2))
    z = x * y
    _emit(args, z.to_json(), _element_text(z))


def _cmd_internal(args):
    x, y = (_element(d, args) for d in _inputs(args, 2))
    z = x @ y
    _emit(args, z.to_json(), _element_text(z))


def _cmd_coproduct(args):
    (data,) = _inputs(args, 1)
    t = coproduct(_element(data, args))
    items = sorted(t.terms.items(), key=lambda kv: (kv[0][0].n, str(kv[0][0]), str(kv[0][1])))
    payload = [{"left": a.to_json(), "right": b.to_json(), "coeff": v} for (a, b), v in items]
    _emit(args, payload, "\n".join(f"{v:+d} {a} (x) {b}" for (a, b), v in items))


def _cmd_pairing(args):
    x, y = (_element(d, args) for d in _inputs(args, 2))
    v = pairing(x, y)
    _emit(args, v, str(v))


def _cmd_rso(args):
    (data,) = _inputs(args, 1)
    P, Q = rso(_permutation(data, args))
    _emit(args, {"P": P.to_json(), "Q": Q.to_json()},
          "P\n" + _tableau_text(P) + "\nQ\n" + _tableau_text(Q))


def _closure(args, neighbours):
    (data,) = _inputs(args, 1)
    alpha = _permutation(data, args)
    seen, todo = {alpha}, [alpha]
    while todo:
        for b in neighbours(todo.pop()):
            if b not in seen:
                seen.add(b)
                todo.append(b)
    members = sorted(seen, key=lambda a: (a.perm, a.colours))
    _emit(args, [a.to_json() for a in members], "\n".join(map(str, members)))


def _cmd_theta(args):
    (data,) = _inputs(args, 1)
    s = theta_G(_element(data, args))
    _emit(args, s.to_json(), _schur_text(s))


def _cmd_tilde_theta(args):
    (data,) = _inputs(args, 1)
    args.group = "Z2"
    s = tilde_theta(_element(data, args))
    _emit(args, s.to_json(), _schur_text(s))


def _cmd_phi(args):
    (data,) = _inputs(args, 1)
    x = _element(data, args)
    m = args.alphabet or max(x.degrees() | {1})
    series = phi(x, m)
    items = sorted(series.coeffs.items(), key=lambda kv: kv[0].letters)
    if args.commutative:
        c = abelianize(series)
        _emit(args, c.to_json(), "\n".join(f"{v:+d} {_weight_text(wt)}" for wt, v in sorted(c.coeffs.items())))
        return
    _emit(args, [{"word": w.to_json(), "coeff": v} for w, v in items],
          "\n".join(f"{v:+d} {w}" for w, v in items))


def _cmd_fundamental(args):
    (data,) = _inputs(args, 1)
    c = _bcomposition(data)
    cs = _colour_set(args)
    if any(b not in cs for b in c.colours):
        raise InputError("B-composition uses unknown colours")
    F = fundamental_F(c, args.alphabet or c.size, cs)
    _emit(args, F.to_json(), "\n".join(f"{v:+d} {_weight_text(wt)}" for wt, v in sorted(F.coeffs.items())))


def _cmd_verify(args):
    params = SuiteParameters(
        degree=args.degree, colours=args.colours, alphabet=args.alphabet,
        group=args.group or "Z2", seed=args.seed, samples=args.samples,
    )
    report = run_suite(args.suite, params)
    _emit(args, report.to_json(), report.to_text())
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--degree", type=int, default=3)
    common.add_argument("--colours", type=int, default=2)
    common.add_argument("--alphabet", type=int, default=0)
    common.add_argument("--group", default=None, help="e.g. Z2, Z3, Z2xZ2")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--json", action="store_true")

    parser = argparse.ArgumentParser(prog="wreathdescent", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    commands = {
        "product": _cmd_product, "coproduct": _cmd_coproduct, "internal": _cmd_internal,
        "pairing": _cmd_pairing, "rso": _cmd_rso,
        "knuth-class": lambda a: _closure(a, knuth_neighbours),
        "atkinson-class": lambda a: _closure(a, atkinson_neighbours),
        "theta": _cmd_theta, "tilde-theta": _cmd_tilde_theta, "phi": _cmd_phi,
        "fundamental": _cmd_fundamental,
    }
    for name, fn in commands.items():
        p = sub.add_parser(name, parents=[common])
        p.add_argument("inputs", nargs="*", help="JSON files, '-' for standard input")
        if name == "phi":
            p.add_argument("--commutative", action="store_true", help="print the abelianized series")
        p.set_defaults(func=fn)
    v = sub.add_parser("verify", parents=[common])
    v.add_argument("suite", choices=suite_names())
    v.add_argument("--samples", type=int, default=200)
    v.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args) or 0
    except (InputError, NotInSubspace, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
