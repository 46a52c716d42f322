"""Command-line interface.

Exit codes: 0 ok, 1 claim failure, 2 semantic input error, 3 I/O or parse
error, 4 certify target outside the dominion, 5 saturation alarm, 6 cost guard.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Optional, Sequence

from .congruence import (
    eta_class_report,
    least_combinatorial_congruence,
    least_semilattice_congruence,
    rho_partition,
)
from .constructors import FIXTURES, fixture
from .core import Semigroup, SubsetHandle
from .dominion import TensorClosure, dominion_hc_check, validate_zigzag
from .enumeration import DEFAULT_BUDGET, ENUMERATION_BUDGET, FILTERS, EnumerationSpec, all_semigroups
from .errors import AssociativityViolation, CostGuard, SemigroupError
from .formats import ParseError, format_certificate, format_smg, parse_certificate, parse_smg
from .hcomm import clifford_profile, h_congruence_commutative_quotient, is_h_commutative, is_h_commutative_tully
from .relations import central_idempotents, green, green_coincide, left_equals_right_multiples, power_bound

EXIT_OK = 0
EXIT_CLAIM = 1
EXIT_SEMANTIC = 2
EXIT_IO = 3
EXIT_NOT_DOMINATED = 4
EXIT_SATURATION = 5
EXIT_COST = 6


class UsageError(SemigroupError):
    """Bad command-line values that are not parse errors."""


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def load_input(args: argparse.Namespace) -> Semigroup:
    if getattr(args, "fixture", None):
        return fixture(args.fixture)
    if not args.path:
        raise UsageError("give a file path or --fixture")
    return parse_smg(_read(args.path))


def _element(S: Semigroup, token: str) -> int:
    token = token.strip()
    if token.isdigit():
        i = int(token)
        S.check(i)
        return i
    try:
        return S.index(token)
    except (KeyError, ValueError):
        raise UsageError(f"unknown element {token!r}") from None


def _render_value(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "na"
    return str(v)


def emit(report: dict[str, Any], as_json: bool, out=None) -> None:
    out = out or sys.stdout
    if as_json:
        out.write(json.dumps(report, indent=2) + "\n")
    else:
        for k, v in report.items():
            out.write(f"{k}={_render_value(v)}\n")


def analyze_report(S: Semigroup) -> dict[str, Any]:
    """Structural summary with a frozen key order."""
    verdict = is_h_commutative(S)
    G = green(S)
    hq = h_congruence_commutative_quotient(S)
    eta = least_semilattice_congruence(S)
    report: dict[str, Any] = {
        "order": S.order,
        "is_hc": verdict.holds,
        "hc_counterexample": (
            None if verdict.holds else " ".join(S.label(i) for i in verdict.counterexample)
        ),
        "is_hc_tully": is_h_commutative_tully(S).holds,
        "green_coincide": green_coincide(S),
        "idempotents_central": central_idempotents(S),
        "aS_equals_Sa": left_equals_right_multiples(S),
        "h_is_congruence": hq.h_is_congruence,
        "h_quotient_commutative": hq.quotient_commutative,
        "eta_blocks": len(eta),
        "rho_equals_eta": rho_partition(S) == eta.partition,
        "least_combinatorial_equals_h": least_combinatorial_congruence(S).partition == G.H,
    }
    profile = clifford_profile(S)
    for name in (
        "regular_equations",
        "hc_and_regular",
        "hc_and_regular_h_quotient",
        "semilattice_of_groups",
        "h_equals_eta",
    ):
        report[f"clifford.{name}"] = getattr(profile, name)
    report["clifford.all_equal"] = profile.all_equal()
    report["power_bound"] = power_bound(S)
    for k, rec in enumerate(eta_class_report(S)):
        report[f"eta_class.{k}.members"] = " ".join(S.label(i) for i in rec.members)
        report[f"eta_class.{k}.archimedean"] = rec.is_archimedean
        report[f"eta_class.{k}.idempotents"] = rec.idempotent_count
        report[f"eta_class.{k}.group"] = rec.is_group
        report[f"eta_class.{k}.hc"] = rec.is_hc
    return report


def cmd_validate(args: argparse.Namespace) -> int:
    S = parse_smg(_read(args.path))
    print(f"valid order={S.order}")
    return EXIT_OK


def cmd_analyze(args: argparse.Namespace) -> int:
    emit(analyze_report(load_input(args)), args.json)
    return EXIT_OK


def cmd_dominion(args: argparse.Namespace) -> int:
    S = load_input(args)
    members = tuple(_element(S, tok) for tok in args.subset.split(",") if tok.strip())
    U = SubsetHandle(S, members)
    tc = TensorClosure(S, U)
    dom = tc.members()
    u_hc = bool(is_h_commutative(U.materialize()))
    report: dict[str, Any] = {
        "subset": ",".join(map(str, U.members)),
        "dominion": ",".join(map(str, dom)),
        "is_closed": dom == U.members,
        "is_dense": len(dom) == S.order,
        "subset_is_hc": u_hc,
        "dominion_is_hc": dominion_hc_check(S, U) if u_hc else None,
    }
    code = EXIT_OK
    cert_text = None
    if args.certify is not None:
        d = _element(S, args.certify)
        report["certify"] = d
        if d in U:
            report["certify_status"] = "in_subset"
        elif not tc.dominated(d):
            report["certify_status"] = "not_dominated"
            code = EXIT_NOT_DOMINATED
        else:
            w = tc.certify(d)
            if w is None or not validate_zigzag(S, U, w):
                raise SemigroupError(f"internal error: no valid certificate for {d}")
            report["certify_status"] = "certified"
            report["zigzag_length"] = w.length
            cert_text = format_certificate(w, U.members)
    emit(report, args.json)
    if cert_text is not None:
        if args.cert_out:
            with open(args.cert_out, "w", encoding="utf-8") as fh:
                fh.write(cert_text)
        elif not args.json:
            sys.stdout.write(cert_text)
    return code


def cmd_verify_cert(args: argparse.Namespace) -> int:
    S = load_input(args)
    w, subset = parse_certificate(_read(args.cert))
    check = validate_zigzag(S, subset, w)
    emit({"valid": check.ok, "reason": check.reason}, args.json)
    return EXIT_OK if check else EXIT_SEMANTIC


def cmd_enumerate(args: argparse.Namespace) -> int:
    spec = EnumerationSpec(args.order, args.filter, args.budget, args.allow_large)
    count = 0
    for S in all_semigroups(spec, workers=args.workers):
        count += 1
        if not args.count_only:
            print(";".join(" ".join(map(str, row)) for row in S.table))
    if args.count_only:
        print(count)
    else:
        print(f"count={count}")
    return EXIT_OK


def cmd_saturate(args: argparse.Namespace) -> int:
    from .dominion import scan_extensions

    S = load_input(args)
    summary = scan_extensions(S, args.extra, args.budget)
    report = {
        "order": S.order,
        "extra": args.extra,
        "is_hc": is_h_commutative(S).holds,
        "candidates": summary.candidates,
        "dense_extensions": len(summary.dense),
    }
    emit(report, args.json)
    return EXIT_SATURATION if summary.dense else EXIT_OK


def cmd_examples(args: argparse.Namespace) -> int:
    from .reproduction import run_claims

    results = run_claims(mutate=args.mutate)
    if args.json:
        payload = [{"claim": r.name, "passed": r.passed, "detail": r.detail} for r in results]
        print(json.dumps(payload, indent=2))
    else:
        for r in results:
            print(f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}")
    return EXIT_OK if all(r.passed for r in results) else EXIT_CLAIM


def cmd_export(args: argparse.Namespace) -> int:
    sys.stdout.write(format_smg(fixture(args.fixture)))
    return EXIT_OK


def _add_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("path", nargs="?", help="smg file")
    p.add_argument("--fixture", choices=FIXTURES, help="named fixture instead of a file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hcsemi", description="Finite semigroup analysis.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check an smg file")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("analyze", help="structural report")
    _add_source(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("dominion", help="dominion of a subsemigroup")
    _add_source(p)
    p.add_argument("--subset", required=True, help="comma-separated indices or labels")
    p.add_argument("--certify", help="element to certify")
    p.add_argument("--cert-out", help="write the certificate here")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_dominion)

    p = sub.add_parser("verify-cert", help="re-check a zigzag certificate")
    _add_source(p)
    p.add_argument("--cert", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_cert)

    p = sub.add_parser("enumerate", help="all semigroups of an order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--filter", choices=FILTERS, default="none")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget", type=int, default=ENUMERATION_BUDGET)
    p.add_argument("--allow-large", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("saturate", help="look for dense extensions")
    _add_source(p)
    p.add_argument("--extra", type=int, default=1)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_saturate)

    p = sub.add_parser("examples", help="reproduce the worked examples")
    p.add_argument("--json", action="store_true")
    p.add_argument("--mutate", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_examples)

    p = sub.add_parser("export", help="print a fixture as an smg file")
    p.add_argument("--fixture", choices=FIXTURES, required=True)
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except CostGuard as exc:
        print(f"cost guard: {exc}", file=sys.stderr)
        return EXIT_COST
    except AssociativityViolation as exc:
        print(f"not associative: triple {exc.triple}", file=sys.stderr)
        return EXIT_SEMANTIC
    except (SemigroupError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC


if __name__ == "__main__":
    sys.exit(main())
