"""Command line front end.

Exit codes: 0 success / lemma holds / certificate valid, 1 counterexample
found or certificate invalid, 2 usage error, 3 work budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import lemmas, lp
from .contribution import classify, linked_prime_of
from .errors import BudgetExceeded, InvalidInput
from .poly import proposition_report

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _emit(data) -> None:
    print(json.dumps(data, sort_keys=True, ensure_ascii=False))


def _cmd_lp(args) -> int:
    system = lp.build_system(args.variant)
    if args.lp_action == "solve":
        cert, result = lp.optimize(system)
        payload = {
            "certificate": cert.to_json(),
            "bound": result.to_json(),
            "rendered": result.render(),
        }
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                json.dump(cert.to_json(), fh, sort_keys=True, ensure_ascii=False)
                fh.write("\n")
        _emit(payload)
        return EXIT_OK
    with open(args.file, "r", encoding="utf-8") as fh:
        cert = lp.Certificate.from_json(json.load(fh))
    system = lp.build_system(cert.variant)
    try:
        result = lp.check_certificate(system, cert)
    except lp.InvalidCertificate as exc:
        _emit({"valid": False, "reason": str(exc)})
        return EXIT_FAIL
    _emit({"valid": True, "bound": result.to_json(), "rendered": result.render()})
    return EXIT_OK


def render_report(report: lemmas.SearchReport) -> str:
    status = "PASS" if report.passed else "FAIL"
    return (
        f"{status} {report.lemma_id} bound={report.bound} "
        f"examined={report.tuples_examined} "
        f"counterexamples={len(report.counterexamples)} "
        f"elapsed={report.elapsed:.2f}s"
    )


def _cmd_verify(args) -> int:
    if args.lemma == "census":
        fibers = lemmas.linking_census(args.bound, jobs=args.jobs)
        bad = [f for f in fibers if f.violations]
        _emit(
            {
                "lemma_id": "LinkingCensus",
                "bound": str(args.bound),
                "fibers": len(fibers),
                "violations": [f.to_json() for f in bad],
                "passed": not bad,
            }
        )
        return EXIT_OK if not bad else EXIT_FAIL
    report = lemmas.run_verifier(args.lemma, args.bound, jobs=args.jobs)
    print(render_report(report), file=sys.stderr)
    _emit(report.to_json())
    return EXIT_OK if report.passed else EXIT_FAIL


def _cmd_classify(args) -> int:
    _emit(classify(args.p).to_json())
    return EXIT_OK


def _cmd_link(args) -> int:
    prof = classify(args.p)
    ell, exceptional = linked_prime_of(prof)
    _emit(
        {
            "p": str(args.p),
            "class": prof.class_tag,
            "linked": str(ell),
            "smaller_rule": exceptional,
        }
    )
    return EXIT_OK


def _cmd_collide(args) -> int:
    fibers = lemmas.find_shared_largest(
        args.cls, args.min_share, args.bound, jobs=args.jobs
    )
    _emit(
        {
            "class": args.cls,
            "bound": str(args.bound),
            "min_share": args.min_share,
            "fibers": [f.to_json() for f in fibers],
        }
    )
    return EXIT_OK


def _cmd_cyclo(args) -> int:
    _emit(proposition_report(args.t, args.r))
    return EXIT_OK


def _cmd_reconstruct(args) -> int:
    triple = lemmas.reconstruct_from_d(args.d)
    if triple is None:
        _emit({"d": str(args.d), "found": False})
        return EXIT_OK
    a, b, c = triple
    _emit({"d": str(args.d), "found": True, "a": str(a), "b": str(b), "c": str(c)})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="opnbounds",
        description="Verification tools for odd-perfect-number counting bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_lp = sub.add_parser("lp", help="solve for or check a bound certificate")
    lp_sub = p_lp.add_subparsers(dest="lp_action", required=True)
    p_solve = lp_sub.add_parser("solve")
    p_solve.add_argument(
        "--variant", choices=lp.VARIANTS, default="standard"
    )
    p_solve.add_argument("--out", help="write the certificate JSON here")
    p_solve.set_defaults(func=_cmd_lp)
    p_check = lp_sub.add_parser("check")
    p_check.add_argument("file", help="certificate JSON file")
    p_check.set_defaults(func=_cmd_lp, variant="standard")

    p_verify = sub.add_parser("verify", help="run a brute-force lemma sweep")
    p_verify.add_argument(
        "--lemma", required=True, choices=lemmas.VERIFIER_IDS
    )
    p_verify.add_argument("--bound", type=int, default=10**4)
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.set_defaults(func=_cmd_verify)

    p_classify = sub.add_parser("classify", help="contribution profile of p**2")
    p_classify.add_argument("p", type=int)
    p_classify.set_defaults(func=_cmd_classify)

    p_link = sub.add_parser("link", help="linked prime of a classified prime")
    p_link.add_argument("p", type=int)
    p_link.set_defaults(func=_cmd_link)

    p_collide = sub.add_parser(
        "collide", help="same-class primes sharing their largest contributed prime"
    )
    p_collide.add_argument("--bound", type=int, default=10**4)
    p_collide.add_argument("--min-share", type=int, default=2)
    p_collide.add_argument("--class", dest="cls", default="S32")
    p_collide.add_argument("--jobs", type=int, default=1)
    p_collide.set_defaults(func=_cmd_collide)

    p_cyclo = sub.add_parser(
        "cyclo", help="cyclotomic divisibility check for composed all-ones"
    )
    p_cyclo.add_argument("--t", type=int, required=True)
    p_cyclo.add_argument("--r", type=int, required=True)
    p_cyclo.set_defaults(func=_cmd_cyclo)

    p_rec = sub.add_parser(
        "reconstruct", help="rebuild the exceptional linking triple from d"
    )
    p_rec.add_argument("--d", type=int, required=True)
    p_rec.set_defaults(func=_cmd_reconstruct)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InvalidInput as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"cannot read {exc.filename}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
