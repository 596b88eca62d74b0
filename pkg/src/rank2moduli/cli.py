"""Command-line front end.

Exit codes: 0 success, 1 negative decision, 2 usage error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Any, TextIO

from .isomorphism import (FiberTag, IsoVerdict, aut_fiber_type, aut_group, iso_quadint,
                          iso_solutions, zsqrt5_counterexample)
from .orbits import (ALL_INSTANCES, Property, moduli_table, orbits)
from .quadratic import AlgebraPoint, all_points, discriminant
from .rings import (DEFAULT_BATTERY, GRAMMAR, QuadraticIntegerRing, Ring, RingSpecError,
                    ring, split_ring_list)
from .verify import SUITES, run_suites

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2, 3
DEFAULT_MAX_ORDER = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _common(p: argparse.ArgumentParser, ring_required: bool = True) -> None:
    p.add_argument("--ring", "-r", action="append", default=[],
                   help="ring spec, e.g. 'zmod(4)' (repeatable, comma lists allowed)")
    p.add_argument("--format", "-f", choices=("table", "json", "csv"), default="table")
    p.add_argument("--max-ring-order", type=int, default=None,
                   help=f"cap on |R| for exhaustive commands (default {DEFAULT_MAX_ORDER})")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(ring_required=ring_required)


def _elements(p: argparse.ArgumentParser, names: str) -> None:
    for n in names:
        p.add_argument(f"--{n}", default=None,
                       help="element literal: an integer or nested integer array")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rank2", allow_abbrev=False,
                     description="Moduli of free rank-2 algebras over small rings.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", allow_abbrev=False, help="moduli table for one property")
    _common(p)
    p.add_argument("--property", "-p", required=True, choices=[x.value for x in Property])

    p = sub.add_parser("iso", allow_abbrev=False, help="decide (a,b) ~ (c,d)")
    _common(p)
    _elements(p, "abcd")

    p = sub.add_parser("aut", allow_abbrev=False, help="automorphism group of (a,b)")
    _common(p)
    _elements(p, "ab")

    p = sub.add_parser("orbit", allow_abbrev=False, help="orbits of one action")
    _common(p)
    p.add_argument("--action", default="star on A2",
                   choices=[str(i) for i in ALL_INSTANCES] + [str(i).replace(" on ", ":")
                                                              for i in ALL_INSTANCES],
                   help="action instance, e.g. 'star on S' or 'ast:L'")
    _elements(p, "ab")

    p = sub.add_parser("fibers", allow_abbrev=False, help="Aut fiber types over a finite field")
    _common(p)

    p = sub.add_parser("verify", allow_abbrev=False, help="run property suites")
    _common(p, ring_required=False)
    p.add_argument("--rings", action="append", default=[],
                   help="comma-separated ring specs (same as --ring)")
    p.add_argument("--suite", default="all", choices=SUITES + ("all",))

    p = sub.add_parser("counterexample", allow_abbrev=False,
                       help="equal discriminants without isomorphism")
    p.add_argument("name", choices=("zsqrt5",))
    p.add_argument("--format", "-f", choices=("table", "json", "csv"), default="table")
    return parser


# ---------------------------------------------------------------------------
# helpers


def _max_order(args) -> int:
    if args.max_ring_order is not None:
        return args.max_ring_order
    env = os.environ.get("RANK2_MAX_ORDER")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"RANK2_MAX_ORDER must be an integer, got {env!r}") from None
    return DEFAULT_MAX_ORDER


def _rings(args) -> list[Ring]:
    texts = []
    for item in list(args.ring) + list(getattr(args, "rings", [])):
        texts += split_ring_list(item)
    if not texts:
        if args.ring_required:
            raise UsageError("--ring is required")
        texts = list(DEFAULT_BATTERY)
    out = []
    for t in texts:
        try:
            out.append(ring(t))
        except RingSpecError as exc:
            raise UsageError(f"bad ring spec {t!r}: {exc}") from None
    return out


def _one_ring(args, exhaustive: bool = True) -> Ring:
    rings = _rings(args)
    if len(rings) != 1:
        raise UsageError("this command takes exactly one ring")
    R = rings[0]
    if exhaustive:
        _check_cap(R, args)
    return R


def _check_cap(R: Ring, args) -> None:
    cap = _max_order(args)
    if not R.is_finite:
        raise UsageError(f"{R} is infinite; this command needs a finite ring")
    if R.cardinality > cap:
        raise UsageError(f"|{R}| = {R.cardinality} exceeds the cap {cap} "
                         f"(raise with --max-ring-order or RANK2_MAX_ORDER)")


def _element(R: Ring, text: str | None, name: str):
    if text is None:
        raise UsageError(f"--{name} is required")
    try:
        obj = json.loads(text)
    except json.JSONDecodeError:
        raise UsageError(f"--{name}: {text!r} is not an integer or nested integer array") from None
    try:
        x = R.from_json(obj)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"--{name}: {exc}") from None
    if not R.contains(x):
        raise UsageError(f"--{name}: {text} is not an element of {R}")
    return x


def _table(rows: list[list], header: list[str]) -> str:
    cells = [header] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _csv(rows: list[list], header: list[str]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _emit(out: TextIO, fmt: str, payload: Any, rows: list[list], header: list[str],
          preamble: str = "") -> None:
    if fmt == "json":
        out.write(json.dumps(payload, ensure_ascii=False, indent=2) + "\n")
    elif fmt == "csv":
        out.write(_csv(rows, header))
    else:
        out.write(preamble + _table(rows, header))


# ---------------------------------------------------------------------------
# commands


def cmd_classify(args, out: TextIO) -> int:
    R = _one_ring(args)
    table = moduli_table(R, args.property)
    if args.format == "csv":
        out.write(table.to_csv())
        return EXIT_OK
    rows = [[f"({R.format(c.rep[0])},{R.format(c.rep[1])})", c.orbit_size, c.aut_order,
             R.format(c.disc), "" if c.normal_param is None else R.format(c.normal_param)]
            for c in table.classes]
    _emit(out, args.format, table.to_json(), rows,
          ["rep", "orbit_size", "aut_order", "disc", "normal_param"],
          f"{R}, property {table.prop.value}: {len(table)} classes\n")
    return EXIT_OK


def cmd_iso(args, out: TextIO) -> int:
    R = _one_ring(args, exhaustive=False)
    a, b, c, d = (_element(R, getattr(args, n), n) for n in "abcd")
    src, dst = AlgebraPoint(R, a, b), AlgebraPoint(R, c, d)
    if isinstance(R, QuadraticIntegerRing):
        dec = iso_quadint(src, dst)
        payload = dec.to_json(R)
        verdict, sols = dec.verdict, dec.solutions
    else:
        _check_cap(R, args)
        sols = iso_solutions(src, dst)
        verdict = IsoVerdict.ISOMORPHIC if sols else IsoVerdict.NOT_ISOMORPHIC
        if sols:
            s = sols[0]
            cert = f"x -> {R.format(s.w)}*y + {R.format(s.v)}"
        else:
            cert = (f"no (v,w) in R x R^x with 2v = cw - a and -dw^2 + v^2 + av + b = 0 "
                    f"({R.cardinality * len(R.units())} pairs scanned)")
        payload = {"isomorphic": bool(sols), "solutions": [s.to_json(R) for s in sols],
                   "certificate": cert}
    rows = [[R.format(s.v), R.format(s.w)] for s in sols]
    _emit(out, args.format, payload, rows, ["v", "w"],
          f"isomorphic: {payload['isomorphic']}\ncertificate: {payload['certificate']}\n")
    return EXIT_OK if verdict is IsoVerdict.ISOMORPHIC else EXIT_NEGATIVE


def cmd_aut(args, out: TextIO) -> int:
    R = _one_ring(args)
    pt = AlgebraPoint(R, _element(R, args.a, "a"), _element(R, args.b, "b"))
    G = aut_group(pt)
    payload: dict[str, Any] = {"point": pt.to_json(), "order": G.order,
                               "elements": [g.to_json(R) for g in G.elements],
                               "table": G.table}
    if R.is_field:
        ft = aut_fiber_type(pt)
        payload["fiber"] = {"tag": ft.tag.value, "observed_order": ft.observed_order,
                            "expected_order": ft.expected_order}
    rows = [[R.format(g.v), R.format(g.w)] for g in G.elements]
    pre = f"Aut({R.format(pt.a)},{R.format(pt.b)}) over {R}: order {G.order}"
    if "fiber" in payload:
        pre += f", fiber {payload['fiber']['tag']}"
    _emit(out, args.format, payload, rows, ["v", "w"], pre + "\n")
    return EXIT_OK


def _instance(name: str):
    name = name.replace(":", " on ")
    for inst in ALL_INSTANCES:
        if str(inst) == name:
            return inst
    raise UsageError(f"unknown action {name!r}")


def cmd_orbit(args, out: TextIO) -> int:
    R = _one_ring(args)
    inst = _instance(args.action)
    orb = orbits(inst, R)
    two_param = inst.domain.value in ("A2", "S", "Rset", "ASset", "SRset")
    fmt = (lambda p: f"({R.format(p[0])},{R.format(p[1])})") if two_param else R.format
    enc = (lambda p: [R.to_json(p[0]), R.to_json(p[1])]) if two_param else R.to_json
    chosen = orb.orbits
    if args.a is not None:
        x = _element(R, args.a, "a")
        if two_param:
            x = (x, _element(R, args.b, "b"))
        if x not in orb.orbit_of:
            raise UsageError(f"{fmt(x)} is not in the domain of {inst}")
        chosen = [orb.orbits[orb.orbit_of[x]]]
    payload = {"ring": str(R), "action": str(inst), "n_orbits": len(orb),
               "orbits": [[enc(p) for p in o] for o in chosen]}
    rows = [[fmt(o[0]), len(o), " ".join(fmt(p) for p in o)] for o in chosen]
    _emit(out, args.format, payload, rows, ["rep", "size", "members"],
          f"{inst} over {R}: {len(orb)} orbits\n")
    return EXIT_OK


def cmd_fibers(args, out: TextIO) -> int:
    R = _one_ring(args)
    if not R.is_field:
        raise UsageError(f"fibers needs a finite field; {R} is not one")
    entries = []
    ok = True
    for pt in all_points(R):
        ft = aut_fiber_type(pt)
        ok &= ft.consistent
        entries.append((pt, ft))
    payload = {"ring": str(R), "points": [
        {"a": R.to_json(pt.a), "b": R.to_json(pt.b), "tag": ft.tag.value,
         "observed_order": ft.observed_order, "expected_order": ft.expected_order,
         "disc": R.to_json(discriminant(pt))} for pt, ft in entries]}
    rows = [[f"({R.format(pt.a)},{R.format(pt.b)})", ft.tag.value, ft.observed_order,
             ft.expected_order] for pt, ft in entries]
    tags = sorted({ft.tag for _, ft in entries}, key=lambda t: list(FiberTag).index(t))
    _emit(out, args.format, payload, rows, ["point", "tag", "aut_order", "expected"],
          f"{R}: tags {', '.join(t.value for t in tags)}\n")
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_verify(args, out: TextIO) -> int:
    rings = _rings(args)
    for R in rings:
        _check_cap(R, args)
    outcomes = run_suites(args.suite, rings, seed=args.seed)
    failed = [o for o in outcomes if not o.passed]
    payload = {"suite": args.suite, "seed": args.seed, "rings": [str(R) for R in rings],
               "pass": not failed, "n_checks": len(outcomes), "n_failed": len(failed),
               "checks": [o.to_json() for o in outcomes]}
    rows = [[o.suite, o.ring, o.check, "pass" if o.passed else "FAIL", o.detail]
            for o in outcomes]
    if args.format == "table":
        rows = [r for r in rows if r[3] == "FAIL"] or rows
    _emit(out, args.format, payload, rows, ["suite", "ring", "check", "result", "detail"],
          f"{len(outcomes)} checks, {len(failed)} failed\n")
    return EXIT_VERIFY if failed else EXIT_OK


def cmd_counterexample(args, out: TextIO) -> int:
    src, dst, dec = zsqrt5_counterexample()
    R = src.ring
    d1, d2 = discriminant(src), discriminant(dst)
    payload = {"ring": str(R), "src": src.to_json(), "dst": dst.to_json(),
               "disc_src": R.to_json(d1), "disc_dst": R.to_json(d2),
               **dec.to_json(R)}
    rows = [[f"({R.format(p.a)},{R.format(p.b)})", R.format(discriminant(p))]
            for p in (src, dst)]
    _emit(out, args.format, payload, rows, ["point", "disc"],
          f"isomorphic: {payload['isomorphic']}\ncertificate: {dec.certificate}\n")
    if dec.verdict is IsoVerdict.ISOMORPHIC:
        return EXIT_VERIFY
    return EXIT_NEGATIVE


COMMANDS = {"classify": cmd_classify, "iso": cmd_iso, "aut": cmd_aut, "orbit": cmd_orbit,
            "fibers": cmd_fibers, "verify": cmd_verify, "counterexample": cmd_counterexample}


def run(argv: list[str] | None = None, out: TextIO | None = None,
        err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"rank2: error: {exc}\n")
        err.write("ring spec grammar:\n" + GRAMMAR + "\n")
        return EXIT_USAGE
    except AssertionError as exc:
        err.write(f"rank2: internal verification failed: {exc}\n")
        return EXIT_VERIFY


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
