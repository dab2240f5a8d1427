"""Command-line interface.

Exit codes: 0 when every check passes, 2 when an identity fails (the first
counterexample is printed as JSON), 1 on usage or precondition errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import verify as V
from .characters import character_by_label
from .engine import (
    character_identity_check,
    congruence_check,
    integrality_check,
    restriction_identity_check,
    theta,
)
from .errors import IdentityViolation, StickelbergerError
from .groupring import format_rational, make_field
from .invariants import k_of_v, w_invariant
from .oracles import (
    annihilation_divisibility_check,
    birch_tate_order,
    minus_class_number,
    stickelberger_index,
)
from .tower import TowerSpec, build_theta_tower


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _subgroup(text: str | None) -> list[int]:
    if not text:
        return [1]
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise UsageError(f"bad subgroup {text!r}; expected comma-separated integers")


def _field(args):
    return make_field(args.f, _subgroup(getattr(args, "subgroup", None)))


def _format_element(value) -> str:
    if not value.coeffs:
        return "0"
    return " + ".join(f"({format_rational(c)})*s{a}" for a, c in value.coeffs.items())


class Failure(Exception):
    """A mathematical check failed; carries the counterexample to print."""

    def __init__(self, payload: dict):
        super().__init__("identity failed")
        self.payload = payload


def cmd_theta(args, out):
    F = _field(args)
    th = theta(args.n, args.b, F)
    rep = integrality_check(th)
    if args.json:
        print(_dump(th.value.to_json()), file=out)
    else:
        print(f"Theta_{args.n}(b={args.b}, f={F.conductor}) over {F}", file=out)
        print(f"  = {_format_element(th.value)}", file=out)
        print(
            f"  integral: {rep.integral}"
            + (f" (denominators divisible by {rep.offending_primes})" if not rep.integral else ""),
            file=out,
        )


def cmd_verify(args, out):
    if args.what == "lemma21":
        if None in (args.n, args.b, args.f, args.fprime):
            raise UsageError("verify lemma21 needs --n --b --f --fprime")
        rep = restriction_identity_check(args.n, args.b, args.f, args.fprime)
        payload = {
            "check": "restriction",
            "n": args.n,
            "b": args.b,
            "f": args.f,
            "fprime": args.fprime,
            "euler_primes": rep.euler_primes,
            "ok": rep.ok,
            "lhs": rep.lhs.to_json(),
            "rhs": rep.rhs.to_json(),
        }
        results = [(rep.ok, payload)]
    elif args.what == "congruence":
        if args.range:
            max_f, max_n, max_b = args.range
        else:
            max_f, max_n, max_b = args.max_f or 30, args.max_n or 4, args.max_b or 20
        if args.f is not None and args.n is not None and args.b is not None and args.a is not None:
            rep = congruence_check(args.n, args.a, args.b, args.f, args.m)
            payload = {
                "check": "congruence",
                "n": args.n,
                "m": args.m,
                "a": args.a,
                "b": args.b,
                "f": args.f,
                "difference": format_rational(rep.difference),
                "modulus": rep.modulus,
                "odd": {str(l): list(v) for l, v in rep.odd.items()},
                "two_adic": list(rep.two_adic) if rep.two_adic else None,
                "ok": rep.ok,
            }
            results = [(rep.ok, payload)]
        else:
            res = V.check_congruence(max_f, max_n, max_b, args.m)
            results = [(res.ok, res.to_json())]
    elif args.what == "character":
        if None in (args.n, args.b, args.f):
            raise UsageError("verify character needs --f --n --b")
        F = make_field(args.f, _subgroup(args.subgroup))
        th = theta(args.n, args.b, F)
        from .characters import enumerate_characters
        from .engine import fourier_inversion

        chars = enumerate_characters(F)
        results = []
        for chi in chars:
            rep = character_identity_check(th, chi)
            results.append(
                (
                    rep.ok,
                    {
                        "check": "character",
                        "chi": chi.label,
                        "ok": rep.ok,
                        "direct": rep.direct.to_json(),
                        "oracle": rep.oracle.to_json(),
                    },
                )
            )
        inv = fourier_inversion(th, chars) == th.value
        results.append((inv, {"check": "fourier-inversion", "ok": inv}))
    elif args.what == "all":
        results = [(r.ok, r.to_json()) for r in V.run_all(args.max_f or 30)]
    else:
        raise UsageError(f"unknown verify target {args.what}")

    for ok, payload in results:
        if args.json:
            print(_dump(payload), file=out)
        else:
            name = payload.get("check", args.what)
            extra = f" ({payload['total']} cases, {payload['failed']} failed)" if "total" in payload else ""
            print(f"{name}: {'PASS' if ok else 'FAIL'}{extra}", file=out)
    bad = [p for ok, p in results if not ok]
    if bad:
        raise Failure(bad[0])


def cmd_tower(args, out):
    F = _field(args)
    fam = build_theta_tower(TowerSpec(F, args.l, args.depth), args.n, args.b)
    if args.json:
        print(_dump(fam.to_json()), file=out)
    else:
        print(f"tower over {F}, l = {args.l}, conductors {fam.tower.conductors}", file=out)
        print(f"  theta_f  = {_format_element(fam.theta_f.value)}", file=out)
        print(f"  theta_f0 = {_format_element(fam.elements[0].value)}", file=out)
        for k, e in enumerate(fam.elements[1:], start=1):
            print(f"  level {k}: {len(e.value.coeffs)} nonzero coefficients", file=out)
        for line in fam.transcript:
            print(f"  {line}", file=out)


def cmd_wn(args, out):
    F = _field(args)
    w = w_invariant(args.n, F)
    print(_dump({"n": args.n, "f": F.conductor, "H": sorted(F.subgroup), "w": w}) if args.json else w, file=out)


def cmd_kv(args, out):
    try:
        k = k_of_v(args.l, args.q, args.n)
    except ValueError as exc:
        raise UsageError(str(exc))
    print(_dump({"l": args.l, "q": args.q, "n": args.n, "k": k}) if args.json else k, file=out)


def cmd_hminus(args, out):
    F = _field(args)
    rep = minus_class_number(F)
    payload = {
        "f": F.conductor,
        "H": sorted(F.subgroup),
        "h_minus": rep.h_minus,
        "w": rep.w,
        "unit_index": rep.unit_index,
        "unit_index_branch": rep.unit_index_branch,
    }
    print(_dump(payload) if args.json else rep.h_minus, file=out)


def cmd_k2order(args, out):
    F = _field(args)
    rep = birch_tate_order(F)
    payload = {
        "f": F.conductor,
        "H": sorted(F.subgroup),
        "k2_order": rep.order,
        "w2": rep.w2,
        "zeta_minus_one": format_rational(rep.zeta_minus_one),
    }
    print(_dump(payload) if args.json else rep.order, file=out)


def cmd_index(args, out):
    try:
        idx = stickelberger_index(args.p)
    except ValueError as exc:
        raise UsageError(str(exc))
    print(_dump({"p": args.p, "index": idx}) if args.json else idx, file=out)


def cmd_divcheck(args, out):
    F = _field(args)
    th = theta(args.n, args.b, F)
    try:
        chi = character_by_label(F, args.chi)
    except KeyError as exc:
        raise UsageError(str(exc))
    try:
        rep = annihilation_divisibility_check(th, chi, args.l)
    except ValueError as exc:
        if isinstance(exc, StickelbergerError):
            raise
        raise UsageError(str(exc))
    payload = rep.to_json()
    print(_dump(payload) if args.json else payload["valuation"], file=out)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="stickelberger", description="Higher Stickelberger elements over Q, exactly.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def common(sp, subgroup=True):
        sp.add_argument("--json", action="store_true", help="line-delimited JSON output")
        if subgroup:
            sp.add_argument("--subgroup", help="comma-separated units fixing the field (default: 1)")

    sp = sub.add_parser("theta", help="compute Theta_n(b, f)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--b", type=int, required=True)
    sp.add_argument("--f", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_theta)

    sp = sub.add_parser("verify", help="run identity checks")
    sp.add_argument("what", choices=["lemma21", "congruence", "character", "all"])
    for name in ("n", "b", "f", "fprime", "a", "max-f", "max-n", "max-b"):
        sp.add_argument(f"--{name}", type=int)
    sp.add_argument("--m", type=int, default=0, help="compare Delta_{n+1} with Delta_{m+1}")
    sp.add_argument("--range", type=int, nargs=3, metavar=("MAX_F", "MAX_N", "MAX_B"))
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("tower", help="compatible Stickelberger elements up an l-tower")
    for name in ("f", "l", "n", "b", "depth"):
        sp.add_argument(f"--{name}", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_tower)

    sp = sub.add_parser("wn", help="w_n(F)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--f", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_wn)

    sp = sub.add_parser("kv", help="k with l^k || q^n - 1")
    for name in ("l", "q", "n"):
        sp.add_argument(f"--{name}", type=int, required=True)
    common(sp, subgroup=False)
    sp.set_defaults(func=cmd_kv)

    sp = sub.add_parser("hminus", help="minus class number of a CM field")
    sp.add_argument("--f", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_hminus)

    sp = sub.add_parser("k2order", help="Birch-Tate prediction of |K_2(O_F)|")
    sp.add_argument("--f", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_k2order)

    sp = sub.add_parser("index", help="index of the Stickelberger ideal in Z[G]^- for Q(mu_p)")
    sp.add_argument("--p", type=int, required=True)
    common(sp, subgroup=False)
    sp.set_defaults(func=cmd_index)

    sp = sub.add_parser("divcheck", help="l-adic valuation of the norm of chi(Theta)")
    for name in ("f", "n", "b", "l"):
        sp.add_argument(f"--{name}", type=int, required=True)
    sp.add_argument("--chi", required=True, help="character label, as printed by enumerate_characters")
    common(sp)
    sp.set_defaults(func=cmd_divcheck)
    return p


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "func", None):
            raise UsageError("missing subcommand")
        args.func(args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return 1
    except StickelbergerError as exc:
        print(f"error: {exc}", file=err)
        return 1
    except Failure as exc:
        print(_dump(exc.payload), file=out)
        return 2
    except IdentityViolation as exc:
        print(_dump({"error": str(exc), "detail": V._jsonable(exc.detail)}), file=out)
        return 2
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
