"""Command-line interface.

Commands: validate, relation, ideals, mul, gamma, selftest. All results go
to stdout as JSON; diagnostics go to stderr. Exit codes: 0 success,
1 validation or precondition failure, 2 property failure, 3 I/O or parse
error.
"""

from __future__ import annotations

import argparse
import sys

from .actions import (build_relation, check_free, enumerate_invariant_subsets,
                      equivalence_classes)
from .documents import (dump_json, load_action, load_json, parse_rel, parse_skew,
                        rel_doc, skew_doc)
from .errors import (DocumentError, PreconditionError, StructureError,
                     ValidationFailure)
from .funalg import InducedAlgebraAction
from .relalg import gamma, gamma_inv, ideal_from_invariant
from .selftest import run_selftest

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PROPERTY = 2
EXIT_IO = 3


def _emit(doc) -> int:
    print(dump_json(doc))
    return EXIT_OK


def _free_relation(path):
    field, action = load_action(path)
    rep = check_free(action)
    if not rep.free:
        t, x = rep.counterexample
        raise PreconditionError("action is not free: h_%s fixes %s" % (t, x))
    return field, action, build_relation(action)


def cmd_validate(args) -> int:
    field, action = load_action(args.action)
    return _emit({
        "command": "validate",
        "ok": True,
        "points": len(action.carrier),
        "maps": len(action.listed()),
        "free": check_free(action).free,
    })


def cmd_relation(args) -> int:
    field, action, rel = _free_relation(args.action)
    classes = equivalence_classes(rel)
    return _emit({
        "command": "relation",
        "pairs": [{"x": x, "y": y, "witness": str(rel.witnesses(x, y)[0])}
                  for (x, y) in rel.sorted_pairs()],
        "classes": classes,
        "invariant_subset_count": 1 << len(classes),
    })


def cmd_ideals(args) -> int:
    field, action, rel = _free_relation(args.action)
    ideals = []
    for members in enumerate_invariant_subsets(rel):
        ideal = ideal_from_invariant(rel, members)
        classes = [block for block in equivalence_classes(rel) if block[0] in members]
        ideals.append({
            "invariant": ideal.invariant,
            "basis_size": ideal.dimension,
            "generators": [{"x": block[0], "y": block[0]} for block in classes],
        })
    return _emit({"command": "ideals", "ideals": ideals})


def cmd_mul(args) -> int:
    field, action = load_action(args.action)
    alpha = InducedAlgebraAction(field, action, validate=False)
    if args.algebra == "skew":
        lhs = parse_skew(alpha, load_json(args.lhs))
        rhs = parse_skew(alpha, load_json(args.rhs))
        return _emit({"command": "mul", "algebra": "skew",
                      "product": skew_doc(lhs * rhs)})
    rel = build_relation(action)
    lhs = parse_rel(field, rel, load_json(args.lhs))
    rhs = parse_rel(field, rel, load_json(args.rhs))
    return _emit({"command": "mul", "algebra": "rel", "product": rel_doc(lhs * rhs)})


def cmd_gamma(args) -> int:
    field, action, rel = _free_relation(args.action)
    alpha = InducedAlgebraAction(field, action, validate=False)
    if args.dir == "fwd":
        u = parse_skew(alpha, load_json(args.element))
        return _emit({"command": "gamma", "direction": "fwd",
                      "image": rel_doc(gamma(rel, u))})
    f = parse_rel(field, rel, load_json(args.element))
    return _emit({"command": "gamma", "direction": "inv",
                  "image": skew_doc(gamma_inv(alpha, f))})


def cmd_selftest(args) -> int:
    custom = None
    if args.action is not None:
        field, action = load_action(args.action)
        custom = (field, action)
    report = run_selftest(args.seed, args.trials, custom=custom,
                          corrupt_skew_mul=args.corrupt_skew_mul)
    print(dump_json(report))
    return EXIT_OK if report["ok"] else EXIT_PROPERTY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewrel",
        description="Partial skew group rings as equivalence-relation algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate a partial-action document")
    p.add_argument("action")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("relation", help="print R, its classes and the subset count")
    p.add_argument("action")
    p.set_defaults(func=cmd_relation)

    p = sub.add_parser("ideals", help="print the ideal lattice of F0(R)")
    p.add_argument("action")
    p.set_defaults(func=cmd_ideals)

    p = sub.add_parser("mul", help="multiply two elements")
    p.add_argument("--algebra", choices=["skew", "rel"], required=True)
    p.add_argument("action")
    p.add_argument("lhs")
    p.add_argument("rhs")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("gamma", help="apply the isomorphism or its inverse")
    p.add_argument("--dir", choices=["fwd", "inv"], required=True)
    p.add_argument("action")
    p.add_argument("element")
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("selftest", help="run the seeded property battery")
    p.add_argument("--action", default=None)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--corrupt-skew-mul", action="store_true",
                   help=argparse.SUPPRESS)  # fault-injection hook for testing
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValidationFailure as exc:
        report = getattr(exc, "report", None)
        lines = report.render() if report is not None else [str(exc)]
        print(dump_json({"ok": False, "violations": lines}))
        for line in lines:
            print(line, file=sys.stderr)
        return EXIT_INVALID
    except (PreconditionError, StructureError) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INVALID
    except DocumentError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
