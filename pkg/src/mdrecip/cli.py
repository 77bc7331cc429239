"""Command-line front end. One JSON document per invocation on stdout.

Exit codes: 0 success / all verdicts pass, 1 some verdict failed, 2 usage or
guard error.

    mdrecip count --base path:2 --n -6
    mdrecip census --base path:2 --n -7
    mdrecip poly --m 1 --n -3
    mdrecip genfunc --base path:1
    mdrecip recurrence --base path:2
    mdrecip extend --seq seq.json --lo -1 --hi 4
    mdrecip verify reciprocity1 --base path:2 --n 0..4
    mdrecip graph --base path:2 --n -3 --dot
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import reciprocity as rc
from .enumeration import WEIGHTED_MAX_EDGES, matching_poly_formal, matching_poly_scalar, signed_census, signed_count
from .errors import MdrecipError, SizeGuardError
from .exactmath import MultiPoly, t_coeffs
from .recurrence import SeqWindow, extend_backward, extend_forward, is_integral, minimal_recurrence
from .signed_graph import build_rectangle, parse_base_spec, path
from .transfer import (
    bi_infinite_counts,
    build_transfer,
    count_fast,
    default_term_count,
    genfunc,
    recurrence_from_charpoly,
)


def parse_range(text: str) -> list[int]:
    """``a..b`` (inclusive), ``a,b,c`` or a single integer."""
    if ".." in text:
        a, b = text.split("..", 1)
        return list(range(int(a), int(b) + 1))
    return [int(p) for p in text.split(",") if p.strip()]


def poly_json(p: MultiPoly) -> dict:
    terms = []
    for mono, c in sorted(p.terms.items(), key=lambda kv: str(MultiPoly({kv[0]: 1}))):
        terms.append({"monomial": {str(k): e for k, e in mono}, "coeff": str(c)})
    return {"text": str(p), "terms": terms}


def _emit(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")


def cmd_count(args) -> int:
    G = parse_base_spec(args.base)
    n = args.n
    method = args.method
    if method == "auto":
        if n >= 0:
            method = "transfer"
        elif len(build_rectangle(G, n).edges) <= WEIGHTED_MAX_EDGES:
            method = "oracle"
        else:
            method = "recurrence"
    if method == "transfer":
        value = count_fast(G, n)
    elif method == "oracle":
        value = signed_count(build_rectangle(G, n))
    else:
        _, w = bi_infinite_counts(G, n, n)
        value = w[n]
    _emit({"base": str(G), "n": n, "method": method, "value": str(value)})
    return 0


def cmd_census(args) -> int:
    G = parse_base_spec(args.base)
    c = signed_census(build_rectangle(G, args.n))
    _emit({"base": str(G), "n": args.n, "positive": str(c.positive), "negative": str(c.negative),
           "signed": str(c.signed)})
    return 0


def cmd_poly(args) -> int:
    if args.formal:
        p = matching_poly_formal(args.m, args.n)
    else:
        p = matching_poly_scalar(path(args.m), args.n)
    _emit({"m": args.m, "n": args.n, "formal": args.formal, "poly": poly_json(p)})
    return 0


def cmd_genfunc(args) -> int:
    G = parse_base_spec(args.base)
    F = genfunc(G)
    _emit({
        "base": str(G),
        "numerator": [poly_json(c) for c in t_coeffs(F.numer)],
        "denominator": [poly_json(c) for c in t_coeffs(F.denom)],
        "text": str(F),
    })
    return 0


def cmd_recurrence(args) -> int:
    G = parse_base_spec(args.base)
    terms = args.terms or default_term_count(G)
    rec, w = bi_infinite_counts(G, 1, terms, terms)
    cp = recurrence_from_charpoly(build_transfer(G), (1, 1, 1))
    _emit({
        "base": str(G),
        "terms": [str(v) for v in w.values],
        "coefficients": rec.as_strings(),
        "order": rec.order,
        "charpoly_coefficients": cp.as_strings(),
    })
    return 0


def cmd_extend(args) -> int:
    raw = json.loads(Path(args.seq).read_text())
    values = [Fraction(str(v)) for v in raw]
    rec = minimal_recurrence(values)
    w = SeqWindow(args.start, tuple(values))
    lo, hi = min(args.lo, w.lo), max(args.hi, w.hi)
    if lo < w.lo:
        w = extend_backward(rec, w, lo)
    if hi > w.hi:
        w = extend_forward(rec, w, hi)
    w = w.slice(args.lo, args.hi)
    ok, bad = is_integral(w)
    _emit({
        "coefficients": rec.as_strings(),
        "lo": w.lo,
        "hi": w.hi,
        "values": [str(v) for v in w.values],
        "integral": ok,
        "first_non_integral": None if ok else {"index": bad, "value": str(w[bad])},
    })
    return 0


def _verdicts(args) -> list[rc.Verdict]:
    claim = args.claim
    if claim == "reciprocity1":
        G = parse_base_spec(args.base)
        return [rc.check_reciprocity_I(G, n) for n in parse_range(args.n)]
    if claim == "adjunction":
        G = parse_base_spec(args.base)
        return [rc.check_adjunction(G, parse_range(args.ns))]
    if claim == "eq1":
        return [rc.check_eq1(m, n) for m in parse_range(args.m) for n in parse_range(args.n)]
    if claim == "reciprocity2":
        return [rc.check_reciprocity_II(parse_base_spec(args.base))]
    if claim == "stanley":
        return [rc.check_stanley_sign(m, n) for m in parse_range(args.m) for n in parse_range(args.n)]
    if claim == "mod2":
        return [rc.check_mod2(m, args.nmax) for m in parse_range(args.m)]
    if claim == "census":
        G = parse_base_spec(args.base)
        return [rc.check_census_pairing(G, n) for n in parse_range(args.n)]
    raise MdrecipError(f"unknown claim {claim!r}")


def cmd_verify(args) -> int:
    verdicts = _verdicts(args)
    ok = all(v.passed for v in verdicts)
    _emit({"claim": args.claim, "pass": ok, "verdicts": [v.to_json_dict() for v in verdicts]})
    return 0 if ok else 1


def cmd_graph(args) -> int:
    H = build_rectangle(parse_base_spec(args.base), args.n)
    if args.dot:
        sys.stdout.write(H.to_dot())
    else:
        _emit(H.to_json_dict())
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mdrecip", description="Signed monomer-dimer matchings of G x P_n for all integers n.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("count", help="signed matching count M(G x P_n)")
    s.add_argument("--base", required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--method", choices=["auto", "oracle", "transfer", "recurrence"], default="auto")
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("census", help="positive/negative matching counts")
    s.add_argument("--base", required=True)
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("poly", help="matching polynomial of the grid G(m, n)")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--formal", action="store_true", help="keep indexed variables")
    s.set_defaults(func=cmd_poly)

    s = sub.add_parser("genfunc", help="rational generating function F(t, x, y, z)")
    s.add_argument("--base", required=True)
    s.set_defaults(func=cmd_genfunc)

    s = sub.add_parser("recurrence", help="minimal recurrence of M(G x P_n)")
    s.add_argument("--base", required=True)
    s.add_argument("--terms", type=int, default=None)
    s.set_defaults(func=cmd_recurrence)

    s = sub.add_parser("extend", help="extend a JSON sequence with its minimal recurrence")
    s.add_argument("--seq", required=True, help="JSON array of decimal strings or p/q")
    s.add_argument("--start", type=int, default=1, help="index of the first term")
    s.add_argument("--lo", type=int, required=True)
    s.add_argument("--hi", type=int, required=True)
    s.set_defaults(func=cmd_extend)

    s = sub.add_parser("verify", help="check an identity and print verdicts")
    s.add_argument("claim", choices=["reciprocity1", "adjunction", "eq1", "reciprocity2", "stanley", "mod2", "census"])
    s.add_argument("--base", default="path:2")
    s.add_argument("--n", default="0..4")
    s.add_argument("--m", default="2")
    s.add_argument("--ns", default="1,2")
    s.add_argument("--nmax", type=int, default=5)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("graph", help="dump G x P_n as JSON or DOT")
    s.add_argument("--base", required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--dot", action="store_true")
    s.set_defaults(func=cmd_graph)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MdrecipError as exc:
        err = {"code": exc.code, "message": str(exc)}
        if isinstance(exc, SizeGuardError):
            err["guard"] = exc.guard
        _emit({"error": err})
        return 2
    except (OSError, ValueError) as exc:
        _emit({"error": {"code": "usage", "message": str(exc)}})
        return 2


if __name__ == "__main__":
    sys.exit(main())
