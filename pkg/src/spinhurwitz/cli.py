"""``shw``: command-line calculator for classical and spin Hurwitz numbers.

Parity convention: ``--parity even`` is the "+" spin structure (sign +1),
``--parity odd`` is "-" (sign -1). Values print as ``p/q`` in lowest terms.

Exit status: 0 ok, 1 verification failure, 2 usage error,
3 base case unavailable or oracle budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
import time
from fractions import Fraction
from typing import Sequence

from .errors import HurwitzError
from .hurwitz import ClassicalQuery, brute_force_hurwitz, classical_hurwitz
from .partitions import euler_characteristic, format_profiles, parse_profiles
from .spin import Parity, SpinEngine, SpinQuery, normalize
from .symgroup import CACHE_ENV, character_table
from .trflow import BLOCK_TAGS, trflow_report
from .verify import SUITES, profile_multisets, run_suite, spin_labels

log = logging.getLogger("shw")

PARITY_HELP = "even = '+' (sign +1) or odd = '-' (sign -1)"


def fmt(x: Fraction, pretty: bool = False) -> str:
    if pretty and x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def emit(obj, stream=None) -> None:
    stream = stream or sys.stdout
    stream.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")


def _envelope(query: dict, value: Fraction, chi: int, args, derivation=None) -> dict:
    env = {"query": query, "value": fmt(value, args.pretty), "chi": chi}
    if derivation is not None:
        env["derivation"] = derivation
    return env


def _finish(env: dict, args, started: float) -> int:
    elapsed = (time.perf_counter() - started) * 1000
    if args.timing:
        env["timing_ms"] = round(elapsed, 3)
    emit(env)
    log.info("done in %.1f ms", elapsed)
    return 0


def cmd_spin(args) -> int:
    started = time.perf_counter()
    q = SpinQuery(args.genus, Parity.parse(args.parity), args.degree, parse_profiles(args.profiles))
    nq = normalize(q)
    engine = SpinEngine()
    value = engine.value(nq)
    derivation = engine.explain(nq) if args.explain else None
    chi = euler_characteristic(nq.d, nq.h, nq.profiles)
    return _finish(_envelope(nq.to_json(), value, chi, args, derivation), args, started)


def cmd_classical(args) -> int:
    started = time.perf_counter()
    q = ClassicalQuery(args.genus, args.degree, parse_profiles(args.profiles))
    value = brute_force_hurwitz(q) if args.brute_force else classical_hurwitz(q)
    query = {"genus": q.h, "degree": q.d, "profiles": [str(m) for m in q.profiles],
             "method": "brute-force" if args.brute_force else "frobenius"}
    chi = euler_characteristic(q.d, q.h, q.profiles)
    return _finish(_envelope(query, value, chi, args), args, started)


def cmd_gt(args) -> int:
    started = time.perf_counter()
    parity = Parity.parse(args.parity)
    value = SpinEngine().gt_local(args.genus, parity, args.degree)
    query = {"genus": args.genus, "parity": str(parity), "degree": args.degree}
    chi = euler_characteristic(args.degree, args.genus, [])
    return _finish(_envelope(query, value, chi, args), args, started)


def table_rows(degree: int, max_genus: int, max_insertions: int) -> list[dict]:
    engine = SpinEngine()
    rows = []
    for h in range(max_genus + 1):
        for p in spin_labels(h):
            for profs in profile_multisets(degree, max_insertions):
                v = engine.value(SpinQuery(h, p, degree, profs))
                rows.append({"h": h, "parity": str(p), "d": degree, "profiles": format_profiles(profs),
                             "k": len(profs), "value_num": v.numerator, "value_den": v.denominator})
    return rows


def cmd_table(args) -> int:
    rows = table_rows(args.degree, args.max_genus, args.max_insertions)
    cols = ["h", "parity", "d", "profiles", "k", "value_num", "value_den"]
    if args.format == "json":
        emit(rows)
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        sys.stdout.write(buf.getvalue())
    else:
        for r in rows:
            v = fmt(Fraction(r["value_num"], r["value_den"]), args.pretty)
            sys.stdout.write(f"H^({r['h']},{r['parity']:>4}) d={r['d']} [{r['profiles'] or '-'}] = {v}\n")
    return 0


def cmd_verify(args) -> int:
    checks = run_suite(args.suite, args.degree_max, args.genus_max)
    failed = [c for c in checks if not c.passed]
    summary: dict[str, dict[str, int]] = {}
    for c in checks:
        s = summary.setdefault(c.suite, {"passed": 0, "failed": 0})
        s["passed" if c.passed else "failed"] += 1
    emit({"suite": args.suite, "degree_max": args.degree_max, "genus_max": args.genus_max,
          "summary": summary, "failures": [c.to_json() for c in failed[:50]],
          "ok": not failed})
    return 1 if failed else 0


def cmd_trflow(args) -> int:
    blocks = [b.strip() for b in args.blocks.split(",") if b.strip()]
    for b in blocks:
        if b not in BLOCK_TAGS:
            raise ValueError(f"unknown block {b!r}; choose from {', '.join(BLOCK_TAGS)}")
    emit(trflow_report(blocks, args.seed, args.t_max, args.scale))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cache-dir", default=os.environ.get(CACHE_ENV),
                        help=f"character-table cache directory (env {CACHE_ENV})")
    common.add_argument("--pretty", action="store_true", help="print integers without '/1'")
    common.add_argument("--timing", action="store_true", help="include timing_ms in the output")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="shw", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("spin", parents=[common], help="spin Hurwitz number H^{h,p}_{m^1..m^k}")
    s.add_argument("--genus", type=int, required=True)
    s.add_argument("--parity", required=True, help=PARITY_HELP)
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--profiles", default="", help='odd profiles, e.g. "3,1;3,1" or "1^4"')
    s.add_argument("--explain", action="store_true", help="attach the derivation tree")
    s.set_defaults(func=cmd_spin)

    c = sub.add_parser("classical", parents=[common], help="classical Hurwitz number")
    c.add_argument("--genus", type=int, required=True)
    c.add_argument("--degree", type=int, required=True)
    c.add_argument("--profiles", default="")
    c.add_argument("--brute-force", action="store_true", help="count permutation tuples instead")
    c.set_defaults(func=cmd_classical)

    g = sub.add_parser("gt", parents=[common], help="local GT invariant (etale spin Hurwitz number)")
    g.add_argument("--genus", type=int, required=True)
    g.add_argument("--parity", required=True, help=PARITY_HELP)
    g.add_argument("--degree", type=int, required=True)
    g.set_defaults(func=cmd_gt)

    t = sub.add_parser("table", parents=[common], help="tabulate spin Hurwitz numbers")
    t.add_argument("--degree", type=int, required=True)
    t.add_argument("--max-genus", type=int, default=3)
    t.add_argument("--max-insertions", type=int, default=3)
    t.add_argument("--format", choices=("json", "csv", "text"), default="json")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", parents=[common], help="run property suites")
    v.add_argument("--suite", choices=("all",) + SUITES, default="all")
    v.add_argument("--degree-max", type=int, default=4)
    v.add_argument("--genus-max", type=int, default=5)
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("trflow", parents=[common], help="TR spectral flow of a block family")
    r.add_argument("--blocks", required=True, help='comma-separated "kernel"/"invertible" blocks')
    r.add_argument("--seed", type=int, default=None, help="random orthogonal conjugation seed")
    r.add_argument("--t-max", type=float, default=10.0)
    r.add_argument("--scale", type=float, default=1.0)
    r.set_defaults(func=cmd_trflow)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    if args.cache_dir:
        os.environ[CACHE_ENV] = args.cache_dir
    try:
        return args.func(args)
    except HurwitzError as e:
        print(f"shw: {e.code}: {e}", file=sys.stderr)
        return e.exit_status
    except ValueError as e:
        print(f"shw: usage: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
