"""Command-line front end.

JSON on stdout by default, aligned text with --pretty.  Exit codes:
0 success, 2 invalid input (schema, word syntax, bad certificates),
3 a descriptor that is mathematically inconsistent, 64 usage errors.
Output is deterministic: ring terms are emitted in the canonical
(a-exponent, denominator-exponent, numerator) order and every integer
that can grow without bound is a decimal string.
"""

import argparse
import json
import sys

from . import bsgroup, foxchain, hermform, intlinalg, invariants
from .errors import (
    BsfourError,
    GroupMismatchError,
    InconsistentDescriptorError,
    SchemaError,
)
from .groupring import GroupRingElt
from .hermform import HermitianForm
from .invariants import W2Type

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_INCONSISTENT = 3
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems with exit code 64."""

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write("error: %s\n" % message)
        raise SystemExit(EXIT_USAGE)


def _load_json(path):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _cmd_group(args):
    k = args.k
    bsgroup.check_word(args.word)
    g = bsgroup.eval_word(args.word, k)
    if args.times is not None:
        bsgroup.check_word(args.times)
        g = bsgroup.multiply(g, bsgroup.eval_word(args.times, k), k)
    if args.invert:
        g = bsgroup.invert(g, k)
    return {"k": k, "element": g.to_json(),
            "display": str(GroupRingElt.monomial(k, g))}


def _cmd_ring(args):
    p = GroupRingElt.parse(args.k, args.expr)
    if args.involute:
        p = p.involute()
    return {"k": args.k, "element": p.to_json(), "display": str(p),
            "augmentation": str(p.augment()),
            "identity_coefficient": str(p.identity_coefficient())}


def _free_terms(p):
    return [{"coeff": str(c), "word": w} for w, c in p.sorted_terms()]


def _cmd_fox(args):
    k = args.k
    relator = foxchain.relator_word(k)
    da = foxchain.fox_derivative(relator, "a")
    db = foxchain.fox_derivative(relator, "b")
    return {"k": k, "relator": relator,
            "derivatives": {
                "a": {"display": str(da), "terms": _free_terms(da)},
                "b": {"display": str(db), "terms": _free_terms(db)}},
            "complex": foxchain.build_complex(k).to_json()}


def _homology_pair(k, modulus):
    closed = {"H%d" % d: invariants.homology_closed_form(
        k, d, modulus=modulus).to_json() for d in (0, 1, 2)}
    d2, d1 = foxchain.tensor_trivial(foxchain.build_complex(k), modulus)
    groups = intlinalg.homology_of_complex(d2, d1, modulus)
    chain = {"H%d" % d: groups[d].to_json() for d in (0, 1, 2)}
    return closed, chain


def _cmd_homology(args):
    modulus = args.mod or 0
    closed, chain = _homology_pair(args.k, modulus)
    return {"k": args.k,
            "coefficients": "Z" if modulus == 0 else "Z/2",
            "closed_form": closed, "chain_complex": chain,
            "agree": closed == chain}


def _cmd_lgroups(args):
    return {"k": args.k,
            "lgroups": invariants.lgroup_table(args.k).to_json(),
            "assembly": invariants.assembly_status(args.k).to_json()}


def _cmd_bordism(args):
    return invariants.stable_bordism_group(args.k, W2Type(args.w2)).to_json()


def _form_summary(f):
    return {"k": f.k, "rank": f.rank,
            "parity": hermform.parity(f).value,
            "signature": intlinalg.signature(hermform.augment_form(f)),
            "certificated": f.inverse is not None,
            "arf": f.arf.to_json() if f.arf is not None else None}


def _read_form(path, try_invert):
    f = HermitianForm.from_json(_load_json(path))
    if try_invert and f.inverse is None:
        inverse = hermform.try_invert(f)
        if inverse is not None:
            f = f.with_inverse(inverse)
    return f


def _cmd_form(args):
    f = _read_form(args.file, args.try_invert)
    return {"summary": _form_summary(f), "form": f.to_json()}


def _cmd_classify(args):
    d1 = invariants.ManifoldDescriptor.from_json(_load_json(args.first))
    d2 = invariants.ManifoldDescriptor.from_json(_load_json(args.second))
    U = None
    if args.isometry is not None:
        uk, U = hermform.matrix_from_json(_load_json(args.isometry))
        if uk != d1.k:
            raise GroupMismatchError(
                "isometry matrix is over k=%d, descriptors over k=%d"
                % (uk, d1.k))
    return invariants.classify(d1, d2, isometry=U).to_json()


def _cmd_realize(args):
    f = _read_form(args.file, args.try_invert)
    out = invariants.realize(f.k, f)
    return {"k": f.k, "count": len(out),
            "descriptors": [d.to_json() for d in out]}


def _parse_range(spec):
    lo, sep, hi = spec.partition("..")
    if not sep:
        raise SchemaError("k range must look like 'a..b'")
    try:
        return int(lo), int(hi)
    except ValueError:
        raise SchemaError("k range bounds must be integers") from None


def _report_row(k):
    ok = True
    for modulus in (0, 2):
        closed, chain = _homology_pair(k, modulus)
        if closed != chain:
            ok = False
    table = invariants.lgroup_table(k)
    return {"k": k,
            "H0": str(invariants.homology_closed_form(k, 0)),
            "H1": str(invariants.homology_closed_form(k, 1)),
            "H2": str(invariants.homology_closed_form(k, 2)),
            "H2_mod2": str(invariants.homology_closed_form(k, 2, modulus=2)),
            "whitehead": str(table.whitehead),
            "L4": str(table.l4),
            "L5": str(table.l5),
            "bordism": str(invariants.stable_bordism_group(k, W2Type.II)),
            "oracle_check": "ok" if ok else "mismatch"}


def _cmd_report(args):
    lo, hi = _parse_range(args.k_range)
    return {"k_range": args.k_range,
            "rows": [_report_row(k) for k in range(lo, hi + 1)]}


_REPORT_COLUMNS = ("k", "H0", "H1", "H2", "H2_mod2", "whitehead",
                   "L4", "L5", "bordism", "oracle_check")


def _report_table(doc):
    rows = [[str(row[c]) for c in _REPORT_COLUMNS] for row in doc["rows"]]
    widths = [max([len(c)] + [len(r[i]) for r in rows])
              for i, c in enumerate(_REPORT_COLUMNS)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(_REPORT_COLUMNS, widths))]
    lines.append("  ".join("-" * w for w in widths))
    for r in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)))
    return "\n".join(lines)


def _is_group_doc(value):
    return isinstance(value, dict) and set(value) == {"free_rank", "torsion"}


def _flatten(value, path, lines):
    if _is_group_doc(value):
        lines.append("%s: %s"
                     % (path, intlinalg.AbelianGroup.from_json(value)))
    elif isinstance(value, dict):
        for key, inner in value.items():
            _flatten(inner, "%s.%s" % (path, key) if path else key, lines)
    elif isinstance(value, list):
        if all(not isinstance(v, (dict, list)) for v in value):
            lines.append("%s: %s" % (path, ", ".join(str(v) for v in value)))
        else:
            for i, inner in enumerate(value):
                _flatten(inner, "%s[%d]" % (path, i), lines)
    else:
        lines.append("%s: %s" % (path, "-" if value is None else value))


def _render_pretty(command, doc):
    if command == "report":
        return _report_table(doc)
    lines = []
    _flatten(doc, "", lines)
    return "\n".join(lines)


def build_parser():
    parser = _Parser(
        prog="bsfour",
        description="Invariants of B(k) = <a, b | a b a^-1 = b^k> and of"
                    " the 4-manifolds carrying these fundamental groups.")
    sub = parser.add_subparsers(dest="command", metavar="subcommand")
    sub.required = True

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func, command=name)
        p.add_argument("--pretty", action="store_true",
                       help="aligned text instead of JSON")
        return p

    p = add("group", _cmd_group, "normal form of a word in B(k)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--word", required=True,
                   help="word over a, A, b, B (capitals are inverses)")
    p.add_argument("--times", help="optional second word to multiply by")
    p.add_argument("--invert", action="store_true")

    p = add("ring", _cmd_ring, "evaluate a group-ring expression")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--expr", required=True,
                   help="e.g. '1 + 2*ba - aB'")
    p.add_argument("--involute", action="store_true")

    p = add("fox", _cmd_fox, "relator derivatives and the chain complex")
    p.add_argument("--k", type=int, required=True)

    p = add("homology", _cmd_homology,
            "group homology, closed form against the chain complex")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mod", type=int, choices=[2],
                   help="coefficients Z/2 instead of Z")

    p = add("lgroups", _cmd_lgroups, "L-groups, Whitehead group, assembly")
    p.add_argument("--k", type=int, required=True)

    p = add("bordism", _cmd_bordism, "stable bordism group for a w2-type")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--w2", required=True, choices=["I", "II", "III"])

    p = add("form", _cmd_form, "validate and summarize a hermitian form")
    p.add_argument("file", help="form JSON file")
    p.add_argument("--try-invert", action="store_true",
                   help="attempt an inverse certificate if missing")

    p = add("classify", _cmd_classify,
            "compare two manifold descriptors")
    p.add_argument("first", help="descriptor JSON file")
    p.add_argument("second", help="descriptor JSON file")
    p.add_argument("--isometry", help="matrix JSON file ({'k', 'matrix'})")

    p = add("realize", _cmd_realize,
            "manifold descriptors carrying a certificated form")
    p.add_argument("file", help="form JSON file")
    p.add_argument("--try-invert", action="store_true",
                   help="attempt an inverse certificate if missing")

    p = add("report", _cmd_report, "per-k invariant table")
    p.add_argument("--k-range", required=True, metavar="A..B",
                   help="inclusive integer range, e.g. -12..12")

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else exc.code
    try:
        doc = args.func(args)
    except InconsistentDescriptorError as exc:
        print("inconsistent: %s" % exc, file=sys.stderr)
        return EXIT_INCONSISTENT
    except (BsfourError, ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INVALID
    if args.pretty:
        print(_render_pretty(args.command, doc))
    else:
        print(json.dumps(doc, indent=2))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
