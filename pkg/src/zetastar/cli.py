"""Command-line front end.

Subcommands
-----------
expand      print the zeta-star expansion of an index as a sum of zeta words
eval        numeric value of zeta (or zeta-star with --star) with error bound
coeff       exact closed-form value (thmA | thmB | thmC | thm1) as q * pi^w
verify      run an identity check suite (thm6 | thm7 | stuffle | genfunc |
            sconsist | zhom)
bernoulli   print a Bernoulli number
insertions  list the 2n+1 insertions of a 2 into the alternating (3,1) string

Every command accepts --format json|text (default text).  Results go to
stdout, diagnostics to stderr.  Exit codes: 0 success, 1 bad input or usage,
2 requested tolerance unreachable under the term cap, 3 internal invariant
failure (including a failed verification).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import closed_forms, verify
from .cyclotomic import NotRationalError
from .exact import PiMultiple, bernoulli, format_rational
from .numeric import (
    DEFAULT_MAX_TERMS,
    DEFAULT_TOL,
    NumericValue,
    ToleranceUnreachable,
    mzsv_numeric,
    mzv_numeric,
)
from .words import (
    ParseError,
    format_index,
    insertions,
    is_admissible,
    parse_index,
    s_map,
)

__all__ = ["main"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_TOLERANCE = 2
EXIT_INVARIANT = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # noqa: D102 - argparse hook
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="zetastar", description=__doc__.split("\n\n")[0])
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS so a value given before the subcommand is not overwritten by
    # the subparser's default; runners fall back to "text"
    common.add_argument(
        "--format",
        choices=("text", "json"),
        default=argparse.SUPPRESS,
        help="output format (default text)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common], help="zeta-star expansion")
    p.add_argument("--index", required=True, help='index, e.g. "3,1,3,1"')
    p.add_argument(
        "--star",
        action="store_true",
        help="read the index as a zeta-star value (the default and only "
        "interpretation; accepted for symmetry with eval)",
    )

    p = sub.add_parser("eval", parents=[common], help="numeric evaluation")
    p.add_argument("--index", required=True)
    p.add_argument("--star", action="store_true", help="evaluate the star sum")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--max-terms", type=int, default=DEFAULT_MAX_TERMS)

    p = sub.add_parser("coeff", parents=[common], help="exact closed forms")
    which = p.add_subparsers(dest="family", required=True)
    fam = which.add_parser("thmA", parents=[common])
    fam.add_argument("--m", type=int, required=True)
    fam.add_argument("--n", type=int, required=True)
    fam = which.add_parser("thmB", parents=[common])
    fam.add_argument("--n", type=int, required=True)
    fam = which.add_parser("thmC", parents=[common])
    fam.add_argument("--n", type=int, required=True)
    fam = which.add_parser("thm1", parents=[common])
    fam.add_argument("--m", type=int, required=True)
    fam.add_argument("--n", type=int, required=True)

    p = sub.add_parser("verify", parents=[common], help="identity suites")
    which = p.add_subparsers(dest="check", required=True)
    chk = which.add_parser("thm6", parents=[common])
    chk.add_argument("--a", type=int, required=True)
    chk.add_argument("--b", type=int, required=True)
    chk.add_argument("--n", type=int, required=True)
    chk = which.add_parser("thm7", parents=[common])
    chk.add_argument("--a", type=int, required=True)
    chk.add_argument("--b", type=int, required=True)
    chk.add_argument("--c", type=int, required=True)
    chk.add_argument("--n", type=int, required=True)
    chk = which.add_parser("stuffle", parents=[common])
    chk.add_argument("--seed", type=int, default=1)
    chk.add_argument("--trials", type=int, default=100)
    chk.add_argument("--max-weight", type=int, default=8)
    chk = which.add_parser("genfunc", parents=[common])
    chk.add_argument("--m", type=int, required=True)
    chk.add_argument("--max-n", type=int, required=True)
    chk = which.add_parser("sconsist", parents=[common])
    chk.add_argument("--max-depth", type=int, default=6)
    chk.add_argument("--max-part", type=int, default=3)
    chk = which.add_parser("zhom", parents=[common])
    chk.add_argument("--seed", type=int, default=1)
    chk.add_argument("--trials", type=int, default=50)
    chk.add_argument("--tol", type=float, default=0.25)
    chk.add_argument("--max-terms", type=int, default=DEFAULT_MAX_TERMS)

    p = sub.add_parser("bernoulli", parents=[common], help="Bernoulli number")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("insertions", parents=[common], help="2-insertion set")
    p.add_argument("--n", type=int, required=True)

    return parser


def _emit(text_form: str, json_obj, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(json_obj, sort_keys=True))
    else:
        print(text_form)


def _run_expand(args) -> int:
    index = parse_index(args.index)
    elem = s_map(index)
    _emit(str(elem), elem.to_json_obj(), args.format)
    return EXIT_OK


def _run_eval(args) -> int:
    index = parse_index(args.index)
    if not is_admissible(index):
        raise UsageError(
            f"index {format_index(index)} is not admissible "
            "(the leading part must be >= 2)"
        )
    if args.tol <= 0:
        raise UsageError("--tol must be positive")
    if args.max_terms < 1:
        raise UsageError("--max-terms must be positive")
    evaluate = mzsv_numeric if args.star else mzv_numeric
    nv: NumericValue = evaluate(index, args.tol, args.max_terms)
    _emit(
        f"{nv.value:.17g} (error <= {nv.error_bound:.3e})",
        nv.to_json_obj(),
        args.format,
    )
    return EXIT_OK


def _run_coeff(args) -> int:
    if args.family in ("thmA", "thm1") and args.m < 1:
        raise UsageError("--m must be positive")
    if args.n < 0 or (args.family == "thmC" and args.n < 1):
        raise UsageError("--n out of range")
    if args.family == "thmA":
        value = PiMultiple(
            closed_forms.thmA_coefficient(args.m, args.n), 2 * args.m * args.n
        )
    elif args.family == "thmB":
        value = PiMultiple(closed_forms.thmB_coefficient(args.n), 4 * args.n)
    elif args.family == "thmC":
        value = PiMultiple(closed_forms.thmC_coefficient(args.n), 4 * args.n + 2)
    else:
        value = closed_forms.mzv_repeated_2m(args.m, args.n)
    _emit(str(value), value.to_json_obj(), args.format)
    return EXIT_OK


def _run_verify(args) -> int:
    if args.check in ("thm6", "thm7"):
        letters = [args.a, args.b] + ([args.c] if args.check == "thm7" else [])
        if min(letters) < 1 or args.n < 0:
            raise UsageError("letters must be >= 1 and --n >= 0")
    if args.check in ("stuffle", "zhom") and args.trials < 0:
        raise UsageError("--trials must be nonnegative")
    if args.check == "thm6":
        report = verify.verify_thm6(args.a, args.b, args.n)
    elif args.check == "thm7":
        report = verify.verify_thm7(args.a, args.b, args.c, args.n)
    elif args.check == "stuffle":
        if args.max_weight < 1:
            raise UsageError("--max-weight must be at least 1")
        report = verify.verify_stuffle_laws(args.seed, args.trials, args.max_weight)
    elif args.check == "genfunc":
        if args.m < 1 or args.max_n < 1:
            raise UsageError("--m and --max-n must be positive")
        report = verify.verify_genfunc_thmA(args.m, args.max_n)
    elif args.check == "sconsist":
        if args.max_depth < 1 or args.max_part < 1:
            raise UsageError("--max-depth and --max-part must be positive")
        report = verify.verify_s_consistency(args.max_depth, args.max_part)
    else:
        if args.tol <= 0:
            raise UsageError("--tol must be positive")
        if args.max_terms < 1:
            raise UsageError("--max-terms must be positive")
        report = verify.verify_z_homomorphism(
            args.seed, args.trials, args.tol, args.max_terms
        )
    param_text = " ".join(f"{k}={v}" for k, v in report.params.items())
    status = "PASS" if report.ok else f"FAIL({len(report.failures)})"
    _emit(
        f"check={report.check} {param_text} cases={report.cases} {status}",
        report.to_json_obj(),
        args.format,
    )
    return EXIT_OK if report.ok else EXIT_INVARIANT


def _run_bernoulli(args) -> int:
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    value = bernoulli(args.n)
    _emit(format_rational(value), {"bernoulli": format_rational(value)}, args.format)
    return EXIT_OK


def _run_insertions(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be positive")
    words = insertions(args.n)
    _emit(
        "\n".join(format_index(w) for w in words),
        [list(w) for w in words],
        args.format,
    )
    return EXIT_OK


_RUNNERS = {
    "expand": _run_expand,
    "eval": _run_eval,
    "coeff": _run_coeff,
    "verify": _run_verify,
    "bernoulli": _run_bernoulli,
    "insertions": _run_insertions,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if not hasattr(args, "format"):
            args.format = "text"
        return _RUNNERS[args.command](args)
    except (UsageError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ToleranceUnreachable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOLERANCE
    except NotRationalError as exc:
        print(f"internal invariant failure: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
