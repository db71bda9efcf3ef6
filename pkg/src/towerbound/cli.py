"""Command-line interface.

Subcommands: reproduce, construct, verify-factorization, split, inert-primes,
certificate.  Text is the default; --json switches to a canonical JSON
document (schema 1) that is byte-identical across runs for the same inputs.
Exit codes: 0 success (possibly with catalogued warnings), 1 a check or
validation failed, 2 malformed input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import arith, catalog, cyclotomic
from .bounds import AbelianVarietyDesc, build_certificate
from .fixtures import build_plan, fixture_ids, get_fixture
from .report import stable_json, wrap_document
from .reproduce import run_reproduction
from .tower import (
    CyclotomicBase,
    FAMILY_ABELIAN,
    FAMILY_NILPOTENT,
    GroupSpec,
    ValidationFailed,
    build_tower_plan,
)

__all__ = ["main", "build_parser"]

_BUNDLED_AV = {
    "11a1": ("11a1", 1, True, (11,)),
    "19a1": ("19a1", 1, True, (19,)),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="towerbound",
        description=(
            "select split/inert primes over cyclotomic base fields, plan "
            "Kummer towers, and emit certified per-layer rank lower bounds"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", help="emit a canonical JSON document"
    )
    common.add_argument(
        "--out", type=Path, default=None, help="write the report to this path"
    )
    layered = argparse.ArgumentParser(add_help=False)
    layered.add_argument(
        "--n-max",
        type=int,
        default=4,
        help="deepest tower layer to tabulate (default 4)",
    )

    rep = sub.add_parser(
        "reproduce",
        parents=[common, layered],
        help="rebuild a bundled example and diff it against the pinned data",
    )
    rep.add_argument("example", choices=list(fixture_ids()) + ["all"])
    rep.set_defaults(func=cmd_reproduce)

    con = sub.add_parser(
        "construct",
        parents=[common, layered],
        help="build a plan and certificate from explicit parameters",
    )
    con.add_argument("--ell", type=int, required=True, help="odd Kummer prime")
    con.add_argument("--p", type=int, required=True, help="tower prime")
    con.add_argument(
        "--rank-target", type=int, required=True, help="rank to certify at layer 0"
    )
    con.add_argument(
        "--family",
        choices=[FAMILY_ABELIAN, FAMILY_NILPOTENT],
        default=FAMILY_ABELIAN,
    )
    con.add_argument("--dimension", type=int, default=1)
    con.add_argument(
        "--twist-exponent",
        type=int,
        default=None,
        help="exponent s in the nilpotent family's commutator relation",
    )
    con.add_argument(
        "--base",
        choices=["cyclotomic", "bundled-cubic"],
        default="cyclotomic",
        help=(
            "cyclotomic uses --conductor; bundled-cubic is the relative "
            "cubic base shipped with example3, checklist included"
        ),
    )
    con.add_argument("--conductor", type=int, default=None)
    con.add_argument(
        "--gap-rank",
        type=int,
        default=None,
        help="declare fine-Selmer intent with this comparison-gap rank",
    )
    con.add_argument(
        "--av",
        choices=sorted(_BUNDLED_AV),
        default=None,
        help="add fine-Selmer columns for this bundled abelian variety",
    )
    con.set_defaults(func=cmd_construct)

    ver = sub.add_parser(
        "verify-factorization",
        parents=[common],
        help="multiply cyclotomic-integer factors and compare with a target",
    )
    ver.add_argument("--conductor", type=int, required=True)
    ver.add_argument("--target", type=int, required=True)
    ver.add_argument(
        "--factor",
        action="append",
        required=True,
        metavar="ELEMENT",
        help="a factor in zeta notation; repeat per factor",
    )
    ver.set_defaults(func=cmd_verify_factorization)

    spl = sub.add_parser(
        "split",
        parents=[common],
        help="splitting data (e, f, g) of a rational prime in Q(zeta_m)",
    )
    spl.add_argument("prime", type=int)
    spl.add_argument("conductor", type=int)
    spl.set_defaults(func=cmd_split)

    ine = sub.add_parser(
        "inert-primes",
        parents=[common],
        help="first k rational primes inert in Q(zeta_m)",
    )
    ine.add_argument("conductor", type=int)
    ine.add_argument("--count", type=int, required=True)
    ine.add_argument(
        "--exclude",
        type=int,
        action="append",
        default=[],
        metavar="PRIME",
        help="skip this prime even if it qualifies; repeatable",
    )
    ine.add_argument(
        "--ceiling", type=int, default=arith.DEFAULT_SEARCH_CEILING
    )
    ine.set_defaults(func=cmd_inert_primes)

    cer = sub.add_parser(
        "certificate",
        parents=[common, layered],
        help="per-layer bound certificate for a bundled example",
    )
    cer.add_argument("example", choices=list(fixture_ids()))
    cer.set_defaults(func=cmd_certificate)

    return parser


def _deliver(args: argparse.Namespace, text: str) -> None:
    if args.out is not None:
        args.out.write_text(text, encoding="utf-8")
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_reproduce(args: argparse.Namespace) -> int:
    ids = list(fixture_ids()) if args.example == "all" else [args.example]
    results = [run_reproduction(fid, n_max=args.n_max) for fid in ids]
    if args.json:
        if len(results) == 1:
            doc = results[0].to_json_doc()
        else:
            doc = wrap_document(
                "reproduction-batch",
                {"runs": [r.to_json_doc() for r in results]},
            )
        _deliver(args, stable_json(doc))
    else:
        blocks = []
        for r in results:
            blocks.append("\n".join(r.to_text_lines()))
        _deliver(args, "\n\n".join(blocks) + "\n")
    return max(r.exit_code for r in results)


def cmd_construct(args: argparse.Namespace) -> int:
    group = GroupSpec(
        p=args.p,
        dimension=args.dimension,
        action_order=2 if args.base == "cyclotomic" else 3,
        family=args.family,
        twist_exponent=args.twist_exponent,
    )
    if args.base == "cyclotomic":
        if args.conductor is None:
            print("construct: --base cyclotomic requires --conductor", file=sys.stderr)
            return 2
        base = CyclotomicBase(conductor=args.conductor)
        checklist = None
    else:
        ex3 = get_fixture("example3")
        base = ex3.base
        from .fixtures import _example3_checklist  # bundled base, bundled facts

        if args.p != ex3.group.p:
            print(
                f"construct: the bundled cubic base assumes p = {ex3.group.p}",
                file=sys.stderr,
            )
            return 2
        checklist = _example3_checklist(base, args.p)

    av = None
    if args.av is not None:
        label, dim, tors, bad = _BUNDLED_AV[args.av]
        av = AbelianVarietyDesc(
            label=label,
            dimension=dim,
            torsion_at_kummer_prime=tors,
            bad_primes=bad,
        )
        if args.gap_rank is None:
            args.gap_rank = 0

    try:
        plan = build_tower_plan(
            args.ell,
            group,
            base,
            args.rank_target,
            checklist=checklist,
            gap_rank=args.gap_rank,
        )
    except (ValidationFailed, arith.SearchExhausted, ValueError) as err:
        print(f"construct: {err}", file=sys.stderr)
        if isinstance(err, ValidationFailed):
            for item in err.report.failures:
                print(f"  {item.render()}", file=sys.stderr)
        return 1

    cert = build_certificate(plan, av=av, n_max=args.n_max)
    if args.json:
        doc = wrap_document(
            "construction",
            {"plan": plan.to_json_doc(), "certificate": cert.to_json_doc()},
        )
        _deliver(args, stable_json(doc))
    else:
        lines = [
            "construction",
            f"  group: {plan.group.describe()}",
            f"  base: {plan.base.describe()}",
            f"  ramified-place target: {plan.ramified_target}"
            f" (formula value {plan.ramified_target_formula})",
            f"  selected primes ({len(plan.selected_primes)}): "
            + ", ".join(map(str, plan.selected_primes)),
            f"  alpha ({len(str(plan.alpha))} digits): {plan.alpha}",
            "",
        ]
        lines.extend(cert.to_text_lines())
        _deliver(args, "\n".join(lines) + "\n")
    return 0


def cmd_verify_factorization(args: argparse.Namespace) -> int:
    try:
        mod = cyclotomic.cyclotomic_polynomial(args.conductor)
        factors = [
            cyclotomic.parse_cyclo_element(s, args.conductor) for s in args.factor
        ]
    except (cyclotomic.ElementParseError, ValueError) as err:
        print(f"verify-factorization: {err}", file=sys.stderr)
        return 2
    product = cyclotomic.cyclo_mul(mod, factors)
    norms = [f.norm() for f in factors]
    match = cyclotomic.match_up_to_unit(product, args.target)
    diags = []
    if match is None:
        status = "mismatch"
        code = 1
    elif match == (1, 0):
        status = "exact"
        code = 0
    else:
        status = "unit"
        code = 0
        sign, k = match
        unit = ("-" if sign < 0 else "") + (
            f"zeta_{args.conductor}^{k}" if k else "1"
        )
        diags.append(
            catalog.make(
                "FACTOR-UNIT-DISCREPANCY",
                f"the factors multiply to {product.render(False)}, which is "
                f"{args.target} times the unit {unit} rather than "
                f"{args.target} itself",
            )
        )
    if args.json:
        doc = wrap_document(
            "factor-check",
            {
                "conductor": args.conductor,
                "target": args.target,
                "factors": [f.render(False) for f in factors],
                "factor_norms": [str(n) for n in norms],
                "product": product.render(False),
                "status": status,
                "diagnostics": [d.to_json() for d in diags],
            },
        )
        _deliver(args, stable_json(doc))
    else:
        lines = [
            f"conductor: {args.conductor}",
            f"target: {args.target}",
            f"factors: {len(factors)} (norms: {', '.join(map(str, norms))})",
            f"product: {product.render()}",
            f"status: {status}",
        ]
        lines.extend(d.render() for d in diags)
        _deliver(args, "\n".join(lines) + "\n")
    return code


def cmd_split(args: argparse.Namespace) -> int:
    try:
        sd = cyclotomic.splitting_data(args.prime, args.conductor)
    except cyclotomic.RamifiedPrime:
        if args.json:
            doc = wrap_document(
                "splitting",
                {
                    "conductor": args.conductor,
                    "prime": args.prime,
                    "classification": "ramified",
                    "e": None,
                    "f": None,
                    "g": None,
                },
            )
            _deliver(args, stable_json(doc))
        else:
            _deliver(
                args,
                f"{args.prime} in Q(zeta_{args.conductor}): ramified "
                f"(divides the conductor)\n",
            )
        return 1
    except ValueError as err:
        print(f"split: {err}", file=sys.stderr)
        return 2
    if args.json:
        doc = wrap_document(
            "splitting",
            {
                "conductor": sd.m,
                "prime": sd.q,
                "classification": sd.classification,
                "e": sd.e,
                "f": sd.f,
                "g": sd.g,
            },
        )
        _deliver(args, stable_json(doc))
    else:
        _deliver(
            args,
            f"{sd.q} in Q(zeta_{sd.m}): e={sd.e} f={sd.f} g={sd.g} "
            f"- {sd.classification}\n",
        )
    return 0


def cmd_inert_primes(args: argparse.Namespace) -> int:
    def inert_or_skip(q: int) -> bool:
        try:
            return cyclotomic.is_inert(q, args.conductor)
        except cyclotomic.RamifiedPrime:
            return False

    try:
        found = arith.primes_ascending(
            args.count,
            predicate=inert_or_skip,
            exclude=set(args.exclude),
            ceiling=args.ceiling,
        )
    except arith.SearchExhausted as err:
        print(f"inert-primes: {err}", file=sys.stderr)
        return 1
    except ValueError as err:
        print(f"inert-primes: {err}", file=sys.stderr)
        return 2
    if args.json:
        doc = wrap_document(
            "inert-primes",
            {
                "conductor": args.conductor,
                "count": args.count,
                "excluded": sorted(set(args.exclude)),
                "primes": found,
            },
        )
        _deliver(args, stable_json(doc))
    else:
        _deliver(
            args,
            f"first {args.count} primes inert in Q(zeta_{args.conductor}): "
            + ", ".join(map(str, found))
            + "\n",
        )
    return 0


def cmd_certificate(args: argparse.Namespace) -> int:
    fx = get_fixture(args.example)
    plan = build_plan(args.example)
    cert = build_certificate(plan, av=fx.av, n_max=args.n_max)
    if args.json:
        doc = wrap_document(
            "certificate",
            {"fixture": args.example, **cert.to_json_doc()},
        )
        _deliver(args, stable_json(doc))
    else:
        lines = [f"certificate: {args.example} - {fx.title}"]
        lines.extend(cert.to_text_lines())
        _deliver(args, "\n".join(lines) + "\n")
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
