"""Command-line surface: info, seed, mutate, verify.

Exit codes: 0 success, 2 invalid input, 3 construction failure,
4 verification failure (including a failed or timed-out verify sweep).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import weyl
from .errors import ConstructionError, InputError, VerificationError
from .positions import fix_word
from .rootdata import build_root_datum
from .seeds import build_seed, check_compatible
from .serialize import dumps, seed_document, table_header
from .mutation import find_sites, schubert_mutate
from .verify import ACCEPTANCE_TYPES, run_all


def _parse_levi(raw: str):
    if not raw:
        return frozenset()
    try:
        return frozenset(int(x) for x in raw.split(","))
    except ValueError:
        raise InputError(f"levi must be comma-separated integers, got {raw!r}")


def _parse_word(raw: str | None):
    if raw is None:
        return None
    try:
        return tuple(int(x) for x in raw.split(","))
    except ValueError:
        raise InputError(f"word must be comma-separated letters, got {raw!r}")


def _table_from_args(args):
    return fix_word(args.type, args.rank, _parse_levi(args.levi),
                    _parse_word(getattr(args, "word", None)))


def cmd_info(args) -> int:
    datum = build_root_datum(args.type, args.rank)
    levi = _parse_levi(args.levi)
    table = fix_word(args.type, args.rank, levi)
    wp_all, w_levi = weyl.enumerate_Wp(datum, levi)
    full = weyl.enumerate_weyl(datum)
    doc = table_header(table)
    doc.update({
        "cartan": [list(row) for row in datum.cartan],
        "symmetrizers": list(datum.d),
        "positive_roots": len(datum.positive_roots),
        "weyl_order": len(full),
        "levi_order": len(w_levi),
        "coset_count": len(wp_all),
        "top_length": table.M,
    })
    if args.format == "json":
        sys.stdout.write(dumps(doc))
    else:
        print(f"type {args.type}{args.rank}, levi {sorted(levi)}")
        print(f"cartan: {doc['cartan']}")
        print(f"symmetrizers d: {doc['symmetrizers']}")
        print(f"|W| = {doc['weyl_order']}, |W_levi| = {doc['levi_order']}, "
              f"|W^p| = {doc['coset_count']}")
        print(f"top representative length = {doc['top_length']}, "
              f"default word = {list(table.word)}")
    return 0


def cmd_seed(args) -> int:
    table = _table_from_args(args)
    strings = (args.a, args.b, args.c) if args.b is not None else (args.a, args.c)
    seed = build_seed(table, strings, args.variant)
    doc = seed_document(seed)
    sys.stdout.write(dumps(doc))
    return 0 if check_compatible(seed).ok else 4


def cmd_mutate(args) -> int:
    table = _table_from_args(args)
    path = schubert_mutate(table, args.a, args.b, args.c, args.to)
    steps = []
    for rec in path.records:
        entry = {
            "step": rec.index,
            "kind": rec.kind,
            "checks": list(rec.checks),
        }
        if rec.kind == "exchange":
            entry.update({
                "slot": rec.slot,
                "eps": rec.eps,
                "replaced": repr(rec.replaced),
                "installed": repr(rec.installed),
            })
        steps.append(entry)
    doc = table_header(table)
    doc.update({
        "strings": [args.a, args.b, args.c],
        "target": args.to,
        "letter": path.letter,
        "exchange_steps": path.t0,
        "steps": steps,
        "verdict": "pass",
    })
    if args.reverse:
        back = schubert_mutate(table, args.a, args.to, args.c, args.b)
        doc["reverse_steps"] = len([r for r in back.records
                                    if r.kind == "exchange"])
        doc["reverse_verdict"] = "pass"
    if args.trace:
        doc["final"] = seed_document(path.final)
    sys.stdout.write(dumps(doc))
    return 0


def cmd_verify(args) -> int:
    types = tuple(args.types.split(",")) if args.types else ACCEPTANCE_TYPES
    if args.max_rank is not None:
        types = tuple(t for t in types if int(t[1:]) <= args.max_rank)
    results = run_all(types, timeout=args.timeout, inject_fault=args.inject_fault)
    summary = {
        "types": list(types),
        "checks": [
            {
                "name": r.name,
                "passed": r.passed,
                "count": r.count,
                "status": r.status,
                "detail": r.detail,
            }
            for r in results
        ],
    }
    ok = all(r.passed for r in results)
    timed_out = any(r.status == "timeout" for r in results)
    summary["status"] = "timeout" if timed_out else ("pass" if ok else "fail")
    for r in results:
        mark = "PASS" if r.passed else ("TIMEOUT" if r.status == "timeout" else "FAIL")
        print(f"[{mark}] {r.name}: {r.count} checked {r.detail}".rstrip(),
              file=sys.stderr)
    sys.stdout.write(dumps(summary))
    return 0 if ok and not timed_out else 4


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qschub",
        description="exact seeds and verified mutations for quantized "
                    "Schubert cell clusters",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_word=True):
        p.add_argument("--type", required=True, choices=list("ABCDEFG"))
        p.add_argument("--rank", required=True, type=int)
        p.add_argument("--levi", default="",
                       help="comma-separated 1-based letters; empty for the Borel")
        if with_word:
            p.add_argument("--word", default=None,
                           help="explicit reduced word, comma-separated letters")

    p_info = sub.add_parser("info", help="Cartan data and coset counts")
    common(p_info, with_word=False)
    p_info.add_argument("--format", choices=("text", "json"), default="text")
    p_info.set_defaults(func=cmd_info)

    p_seed = sub.add_parser("seed", help="build and print one seed")
    common(p_seed)
    p_seed.add_argument("--a", required=True, type=int)
    p_seed.add_argument("--b", type=int, default=None)
    p_seed.add_argument("--c", required=True, type=int)
    p_seed.add_argument("--variant", choices=("standard", "opposite"),
                        default="standard")
    p_seed.add_argument("--format", choices=("json",), default="json")
    p_seed.set_defaults(func=cmd_seed)

    p_mut = sub.add_parser("mutate", help="verified single-letter seed walk")
    common(p_mut)
    p_mut.add_argument("--a", required=True, type=int)
    p_mut.add_argument("--b", required=True, type=int)
    p_mut.add_argument("--c", required=True, type=int)
    p_mut.add_argument("--to", required=True, type=int)
    p_mut.add_argument("--trace", action="store_true",
                       help="include the final seed document")
    p_mut.add_argument("--reverse", action="store_true",
                       help="also replay the reverse walk")
    p_mut.set_defaults(func=cmd_mutate)

    p_ver = sub.add_parser("verify", help="run the full property sweep")
    p_ver.add_argument("--types", default=None,
                       help="comma-separated, e.g. A1,A2,B2")
    p_ver.add_argument("--max-rank", type=int, default=None)
    p_ver.add_argument("--timeout", type=float, default=None,
                       help="soft deadline in seconds")
    p_ver.add_argument("--inject-fault", choices=("sign-flip",), default=None,
                       help="test harness: flip one exponent and require the "
                            "oracle tripwire to fire")
    p_ver.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except ConstructionError as exc:
        print(f"construction error: {exc}", file=sys.stderr)
        return 3
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
