"""Command-line front end.

Subcommands: coeff, table, verify, solve, subdigons, raney, powers.
Exit codes: 0 success/verified, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import catpow, raney, series, subdigon
from .core import (
    Composition,
    TypeVector,
    central_count,
    hyper_catalan,
    power_coeff,
    raney_count,
    vef,
)
from .series import LayerSpec, Measure


def _parse_type(text: str) -> TypeVector:
    text = text.strip()
    if not text:
        return TypeVector()
    try:
        counts = [int(p) for p in text.split(",")]
        if any(c < 0 for c in counts):
            raise ValueError
    except ValueError:
        raise SystemExit(f"error: bad type vector {text!r}") from None
    return TypeVector.from_counts(counts)


def _measure(name: str) -> Measure:
    return Measure(name)


def _spec(args) -> LayerSpec:
    try:
        return LayerSpec(_measure(args.measure), args.d, args.q)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(2) from None


def cmd_coeff(args) -> int:
    m = _parse_type(args.type)
    s = vef(m)
    print(f"type {m}")
    print(f"C = {hyper_catalan(m)}")
    print(f"V = {s.V}, E = {s.E}, F = {s.F}")
    if args.central:
        for r, _ in m.items():
            print(f"central {r + 1}-gon: {central_count(m, r)}")
    if args.power is not None:
        print(f"C^({args.power}) = {power_coeff(m, args.power)}")
    return 0


def cmd_table(args) -> int:
    spec = _spec(args)
    if args.format == "csv":
        sys.stdout.write(series.table_csv(spec))
    elif args.format == "json":
        rows = [
            {"row": label, "terms": json.loads(poly.to_json())}
            for label, poly in series.table_rows(spec)
        ]
        print(json.dumps(rows))
    else:
        for label, poly in series.table_rows(spec):
            print(f"{label:>16}  {poly}")
    return 0


def cmd_verify(args) -> int:
    spec = _spec(args)
    beta = series.build_beta(spec)
    residual = series.evaluate_geometric(beta, spec)
    if not residual:
        print("ZERO")
        return 0
    for lvl in range(spec.d + 1):
        part = series.layer_slice(residual, spec.measure, lvl)
        if part:
            print(f"NONZERO at level {lvl}: {part}")
    return 1


def _parse_coeff(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise SystemExit(f"error: bad coefficient {text!r}") from None


def cmd_solve(args) -> int:
    coeffs = [_parse_coeff(p) for p in args.coeffs.split(",")] if args.coeffs else []
    q = len(coeffs) + 1
    measure = _measure(args.measure)
    if q < 2:
        # no t_k at all: alpha = 1 solves 1 - alpha = 0
        print("alpha = 1")
        print("residual = 0")
        return 0
    try:
        spec = LayerSpec(measure, args.d, q)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    values = {k: coeffs[k - 2] for k in range(2, q + 1)}
    if args.float:
        values = {k: float(v) for k, v in values.items()}

    by_level: dict[int, object] = {}
    for m in series.enumerate_types(spec):
        term = hyper_catalan(m)
        if args.float:
            term = float(term)
        for k, mk in m.items():
            term = term * values[k] ** mk
        lvl = series.level(m, spec.measure)
        by_level[lvl] = by_level.get(lvl, 0) + term

    alpha = 0
    for lvl in sorted(by_level):
        alpha = alpha + by_level[lvl]
        print(f"level {lvl:>3}: partial sum = {_show(alpha)}")
    residual = 1 - alpha + sum(values[k] * alpha**k for k in values)
    print(f"alpha = {_show(alpha)}")
    print(f"residual = {_show(residual)}")
    return 0


def _show(x) -> str:
    if isinstance(x, Fraction):
        return f"{x} ~ {float(x):.12g}"
    return f"{x:.12g}" if isinstance(x, float) else str(x)


def cmd_subdigons(args) -> int:
    m = _parse_type(args.type)
    if args.format == "count":
        total = subdigon.count_subdigons(m)
        split = " ".join(
            f"central-{r + 1}:{central_count(m, r)}" for r, _ in m.items()
        )
        print(f"{total}" + (f" split {split}" if split else ""))
        return 0
    subs = subdigon.enumerate_subdigons(m, face_cap=args.max_faces)
    if args.format == "json":
        print(subdigon.to_json(subs))
    else:
        for s in subs:
            print(subdigon.serialize(s))
    return 0


def cmd_raney(args) -> int:
    if args.raney_cmd == "rank":
        print(raney.rank(raney.parse_string(args.string)))
        return 0
    if args.raney_cmd == "check":
        sigma = raney.parse_string(args.string)
        if args.n == 1:
            ok = raney.is_word(sigma)
        else:
            ok = raney.is_word_list(sigma, args.n)
        print("yes" if ok else "no")
        return 0 if ok else 1
    if args.raney_cmd == "rotations":
        sigma = raney.parse_string(args.string)
        for off in sorted(raney.list_rotations(sigma)):
            print(f"{off}: {raney.format_string(raney.rotate(sigma, off))}")
        return 0
    if args.raney_cmd == "identify":
        sigma = raney.parse_string(args.string)
        bracketing = raney.identify_words(sigma, cyclic=args.cyclic)
        if not bracketing.complete:
            print("INCOMPLETE: unidentified symbols remain")
            return 1
        for word in bracketing.render_words():
            print(word)
        return 0
    if args.raney_cmd == "enumerate":
        counts = {k: getattr(args, f"m{k}") for k in range(2, 10)}
        tail = TypeVector.of({k: v for k, v in counts.items() if v})
        c = Composition(args.m1, tail)
        lists = raney.enumerate_lists(args.n, c)
        for sigma in lists:
            print(raney.format_string(sigma))
        print(f"total {len(lists)} (closed form {raney_count(args.n, c)})")
        return 0
    raise SystemExit(2)


def cmd_powers(args) -> int:
    if args.identity is not None:
        residual = catpow.verify_power_identity(args.identity, args.order)
        if residual:
            print(f"NONZERO residual: {residual}")
            return 1
        print("ZERO")
        return 0
    print(catpow.catalan_power(args.r, args.m))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypercatalan",
        description="Hyper-Catalan numbers, layered series zeros and Raney words",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeff", help="closed-form counts for a type vector")
    p.add_argument("--type", required=True, help="comma list m2,m3,...")
    p.add_argument("--central", action="store_true", help="central-polygon split")
    p.add_argument("--power", type=int, help="series power r for C^(r)")
    p.set_defaults(func=cmd_coeff)

    for name, func in (("table", cmd_table), ("verify", cmd_verify)):
        p = sub.add_parser(name)
        p.add_argument("--measure", choices=["vertex", "edge", "face"], required=True)
        p.add_argument("--d", type=int, required=True, help="max level")
        p.add_argument("--q", type=int, help="gon bound (required for face)")
        if name == "table":
            p.add_argument("--format", choices=["text", "csv", "json"], default="text")
        p.set_defaults(func=func)

    p = sub.add_parser("solve", help="numeric root from the layered series")
    p.add_argument("--coeffs", default="", help="comma list of t2,t3,... values")
    p.add_argument("--measure", choices=["vertex", "edge", "face"], default="vertex")
    p.add_argument("--d", type=int, required=True, help="max level")
    p.add_argument("--float", action="store_true", help="float instead of exact rationals")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("subdigons", help="enumerate or count subdigons of a type")
    p.add_argument("--type", required=True)
    p.add_argument("--format", choices=["count", "list", "json"], default="count")
    p.add_argument("--max-faces", type=int, default=subdigon.DEFAULT_FACE_CAP)
    p.set_defaults(func=cmd_subdigons)

    p = sub.add_parser("raney", help="Raney string tools")
    rsub = p.add_subparsers(dest="raney_cmd", required=True)
    for name in ("rank", "rotations"):
        rp = rsub.add_parser(name)
        rp.add_argument("string")
    rp = rsub.add_parser("check")
    rp.add_argument("string")
    rp.add_argument("--n", type=int, default=1)
    rp = rsub.add_parser("identify")
    rp.add_argument("string")
    rp.add_argument("--cyclic", action="store_true")
    rp = rsub.add_parser("enumerate")
    rp.add_argument("--n", type=int, required=True)
    for k in range(1, 10):
        rp.add_argument(f"--m{k}", type=int, default=0, help=f"count of symbol {k}")
    p.set_defaults(func=cmd_raney)

    p = sub.add_parser("powers", help="Catalan power queries")
    p.add_argument("--r", type=int, help="power")
    p.add_argument("--m", type=int, help="coefficient index")
    p.add_argument("--identity", type=int, help="verify the reduction identity for r")
    p.add_argument("--order", type=int, default=20, help="truncation order")
    p.set_defaults(func=cmd_powers)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
