"""Command line interface: JSON in, JSON out.

Exit codes: 0 success, 1 computation error or failed verification,
2 bad arguments, 10 ``certify`` produced a counterexample report.
"""

import argparse
import json
import sys

from . import __version__, symgroup
from .certify import Certificate, certify, load, verify
from .characters import chi, irrep_dimension
from .lr import lr_by_tableaux, lr_coefficient
from .partitions import is_contained, partition, partitions_of, remove_box, sort_partitions, f_set
from .polynomials import content_polynomial, p_bruteforce, p_charsum, p_closed, root_set
from .superspace import invariant_suite

EXIT_COUNTEREXAMPLE = 10


def partition_arg(text: str):
    """Accept ``[2,1]``, ``2,1`` or ``2 1``; ``[]`` is the empty partition."""
    text = text.strip()
    try:
        parts = json.loads(text) if text.startswith("[") else [int(x) for x in text.replace(",", " ").split()]
        return partition(parts)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"invalid partition {text!r}: {exc}")


def cmd_fset(args) -> tuple[dict, int]:
    forbidden = sorted(f_set(args.lam))
    doc = {"lambda": list(args.lam), "F": forbidden}
    if args.char:
        doc["char"] = args.char
        doc["F_residues"] = sorted({x % args.char for x in forbidden})
    return doc, 0


def cmd_poly(args) -> tuple[dict, int]:
    beta = args.beta
    closed = p_closed(beta)
    doc = {
        "beta": list(beta),
        "p": closed.to_json(),
        "content_polynomial": content_polynomial(beta).to_json(),
        "roots": sorted(root_set(beta)),
        "methods": ["closed"],
    }
    if args.method in ("charsum", "all"):
        if p_charsum(beta) != closed:
            raise ArithmeticError("character sum disagrees with the closed form")
        doc["methods"].append("charsum")
    if args.method in ("bruteforce", "all"):
        alpha = args.alpha if args.alpha is not None else sort_partitions(remove_box(beta))[0]
        if p_bruteforce(alpha, beta, max_degree=args.max_m) != closed:
            raise ArithmeticError("group algebra expansion disagrees with the closed form")
        doc["alpha"] = list(alpha)
        doc["methods"].append("bruteforce")
    return doc, 0


def cmd_char(args) -> tuple[dict, int]:
    if args.table is not None:
        classes = partitions_of(args.table)
        rows = [[list(beta), [[list(t), chi(beta, t)] for t in classes]] for beta in partitions_of(args.table)]
        return {"m": args.table, "table": rows}, 0
    if args.beta is None:
        raise argparse.ArgumentTypeError("give a partition or --table M")
    beta = args.beta
    if args.cycle_type is not None:
        return {"beta": list(beta), "cycle_type": list(args.cycle_type), "chi": chi(beta, args.cycle_type)}, 0
    values = [[list(t), chi(beta, t)] for t in partitions_of(sum(beta))]
    return {"beta": list(beta), "dimension": irrep_dimension(beta), "values": values}, 0


def cmd_lr(args) -> tuple[dict, int]:
    lam, mu, nu = args.lam, args.mu, args.nu
    methods = {"characters": lr_coefficient(lam, mu, nu)}
    if is_contained(mu, lam):
        methods["tableaux"] = lr_by_tableaux(lam, mu, nu)
    if len(set(methods.values())) != 1:
        raise ArithmeticError(f"LR methods disagree: {methods}")
    return {"lambda": list(lam), "mu": list(mu), "nu": list(nu), "N": methods["characters"],
            "methods": sorted(methods)}, 0


def cmd_certify(args) -> tuple[dict, int]:
    result = certify(args.lam, args.d, args.char, allow_fallback=not args.no_fallback)
    return result.to_json(), 0 if isinstance(result, Certificate) else EXIT_COUNTEREXAMPLE


def cmd_verify(args) -> tuple[dict, int]:
    text = sys.stdin.read() if args.file in (None, "-") else open(args.file).read()
    doc = json.loads(text)
    obj = load(doc)
    outcome = verify(obj)
    kind = "certificate" if isinstance(obj, Certificate) else "counterexample"
    return {"kind": kind, "valid": outcome.ok, "problems": outcome.problems}, 0 if outcome.ok else 1


def cmd_oracle_check(args) -> tuple[dict, int]:
    checks = invariant_suite(args.m, args.dim)
    ok = all(c["pass"] for c in checks)
    return {"bounds": {"m": args.m, "dim": args.dim}, "checks": checks, "pass": ok}, 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--char", type=int, default=0, help="field characteristic: 0 or a prime > n")
    common.add_argument("--max-m", type=int, default=None, help="raise the group algebra product cap")
    common.set_defaults(pretty=False)
    style = common.add_mutually_exclusive_group()
    style.add_argument("--json", dest="pretty", action="store_false", help="compact output (default)")
    style.add_argument("--pretty", dest="pretty", action="store_true", help="indented output")

    parser = argparse.ArgumentParser(prog="schurcert", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fset", parents=[common], help="forbidden dimensions F(lambda)")
    p.add_argument("lam", type=partition_arg)
    p.set_defaults(run=cmd_fset)

    p = sub.add_parser("poly", parents=[common], help="trace polynomial p_beta(d)")
    p.add_argument("beta", type=partition_arg)
    p.add_argument("--alpha", type=partition_arg, default=None)
    p.add_argument("--method", choices=["closed", "charsum", "bruteforce", "all"], default="charsum")
    p.set_defaults(run=cmd_poly)

    p = sub.add_parser("char", parents=[common], help="irreducible characters of S_m")
    p.add_argument("beta", type=partition_arg, nargs="?")
    p.add_argument("cycle_type", type=partition_arg, nargs="?")
    p.add_argument("--table", type=int, default=None, metavar="M", help="full character table of S_M")
    p.set_defaults(run=cmd_char)

    p = sub.add_parser("lr", parents=[common], help="Littlewood-Richardson coefficient")
    p.add_argument("lam", type=partition_arg)
    p.add_argument("mu", type=partition_arg)
    p.add_argument("nu", type=partition_arg)
    p.set_defaults(run=cmd_lr)

    p = sub.add_parser("certify", parents=[common], help="certificate or counterexample for (lambda, d)")
    p.add_argument("lam", type=partition_arg)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--no-fallback", action="store_true", help="use only the explicit recipes")
    p.set_defaults(run=cmd_certify)

    p = sub.add_parser("verify", parents=[common], help="check a certificate or counterexample document")
    p.add_argument("file", nargs="?", help="JSON document (default: stdin)")
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("oracle-check", parents=[common], help="run the super vector space invariant suite")
    p.add_argument("--m", type=int, default=4, help="largest tensor degree")
    p.add_argument("--dim", type=int, default=3, help="largest total dimension r+s")
    p.set_defaults(run=cmd_oracle_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.max_m is not None:
        symgroup.MAX_PRODUCT_DEGREE = args.max_m
    try:
        doc, code = args.run(args)
    except argparse.ArgumentTypeError as exc:
        parser.error(str(exc))
    except (ValueError, ArithmeticError, RuntimeError, OSError, KeyError) as exc:
        print(f"schurcert: error: {exc}", file=sys.stderr)
        return 1
    doc["version"] = __version__
    print(json.dumps(doc, sort_keys=True, indent=2 if args.pretty else None))
    return code


if __name__ == "__main__":
    sys.exit(main())
