"""Command-line surface.

Commands: classes, burnside, corpus, abelian, extension, torus, congruence.
Each reads one JSON payload (inline argument, --input FILE, or stdin) and
prints either a human table (default) or JSON (--format json).  Output is
deterministic: identical input bytes produce identical output bytes.

Exit codes: 0 success, 1 invalid input, 2 verified-property violation
(unequal Burnside pair, corpus failures, failed congruences).
"""

from __future__ import annotations

import argparse
import json
import sys

from .abelian import (
    reidemeister_abelian,
    reidemeister_abelian_sequence,
    twisted_class_reps_abelian,
)
from .chartable import burnside_check
from .corpus import run_corpus
from .descriptors import (
    parse_abelian,
    parse_extension,
    parse_group,
    parse_map,
    parse_matrix,
    parse_sequence,
    render_value,
)
from .errors import InfiniteClasses, InvalidDescriptor, TwistedBurnsideError
from .extension import fiber_class_reps, reidemeister_extension
from .groups import twisted_classes
from .infinite import is_infinite
from .mobius import congruence_check, torus_map_reidemeister

EXIT_OK, EXIT_INVALID, EXIT_VIOLATION = 0, 1, 2


def _load_payload(args):
    if getattr(args, "inline", None):
        text = args.inline
    elif getattr(args, "input", None):
        with open(args.input, "r", encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidDescriptor(f"payload is not valid JSON: {exc}") from None


def _print_doc(doc: dict, fmt: str, table_lines) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        for line in table_lines(doc):
            sys.stdout.write(line + "\n")


def _aligned(rows: list[tuple], headers: tuple) -> list[str]:
    cells = [tuple(str(c) for c in row) for row in rows]
    widths = [max(len(h), *(len(r[i]) for r in cells)) if cells else len(h)
              for i, h in enumerate(headers)]
    out = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    for row in cells:
        out.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return out


# ---------------------------------------------------------------------------
# Commands

def _cmd_classes(args) -> int:
    payload = _load_payload(args)
    G = parse_group(payload.get("group"))
    phi = parse_map(G, payload.get("map"))
    part = twisted_classes(G, phi)
    doc = {
        "group_order": G.order,
        "reidemeister": part.count,
        "classes": [
            {"rep": rep, "label": G.label(rep), "size": size}
            for rep, size in zip(part.class_reps, part.class_sizes)
        ],
    }

    def table(d):
        lines = [f"order {d['group_order']}, R(phi) = {d['reidemeister']}"]
        lines += _aligned([(c["rep"], c["label"], c["size"])
                           for c in d["classes"]],
                          ("rep", "label", "size"))
        return lines

    _print_doc(doc, args.format, table)
    return EXIT_OK


def _cmd_burnside(args) -> int:
    payload = _load_payload(args)
    G = parse_group(payload.get("group"))
    phi = parse_map(G, payload.get("map"))
    report = burnside_check(G, phi)
    doc = {"R": report.r, "S": report.s, "equal": report.equal}

    def table(d):
        return [f"R(phi) = {d['R']}", f"S(phi) = {d['S']}",
                f"equal: {str(d['equal']).lower()}"]

    _print_doc(doc, args.format, table)
    return EXIT_OK if report.equal else EXIT_VIOLATION


def _cmd_corpus(args) -> int:
    _, summary = run_corpus(max_order=args.max_order,
                            automorphisms_only=args.automorphisms_only,
                            n_max=args.n_max, jobs=args.jobs,
                            inject_failure=args.inject_failure)
    doc = {
        "groups": summary.groups,
        "pairs": summary.pairs,
        "burnside_failures": [
            {"group": row.group, "endo_index": row.endo_index,
             "image": list(row.image), "R": row.r, "S": row.s}
            for row in summary.burnside_failures
        ],
        "congruence_failures": [
            {"group": row.group, "endo_index": row.endo_index,
             "image": list(row.image)}
            for row in summary.congruence_failures
        ],
        "ok": summary.ok,
    }

    def table(d):
        lines = [f"groups checked: {d['groups']}",
                 f"(group, endomorphism) pairs checked: {d['pairs']}",
                 f"burnside failures: {len(d['burnside_failures'])}",
                 f"congruence failures: {len(d['congruence_failures'])}"]
        for f in d["burnside_failures"]:
            lines.append(f"  FAIL {f['group']} endo#{f['endo_index']} "
                         f"R={f['R']} S={f['S']}")
        for f in d["congruence_failures"]:
            lines.append(f"  FAIL {f['group']} endo#{f['endo_index']} "
                         f"congruence")
        lines.append("ok" if d["ok"] else "FAILURES FOUND")
        return lines

    _print_doc(doc, args.format, table)
    return EXIT_OK if summary.ok else EXIT_VIOLATION


def _cmd_abelian(args) -> int:
    payload = _load_payload(args)
    group, endo = parse_abelian(payload)
    value = reidemeister_abelian(group, endo)
    doc = {"R": render_value(value), "finite": not is_infinite(value)}
    if args.reps:
        if is_infinite(value):
            raise InfiniteClasses()
        doc["class_reps"] = [[str(c) for c in rep]
                             for rep in twisted_class_reps_abelian(group, endo)]
    if args.n_max >= 1:
        seq = reidemeister_abelian_sequence(group, endo, args.n_max)
        doc["sequence"] = [render_value(v) for v in seq]

    def table(d):
        lines = [f"R(phi) = {d['R']}"]
        if "class_reps" in d:
            lines.append("class representatives: " +
                         ", ".join("(" + ",".join(r) + ")"
                                   for r in d["class_reps"]))
        if "sequence" in d:
            lines.append("R(phi^n), n=1..: " + ", ".join(d["sequence"]))
        return lines

    _print_doc(doc, args.format, table)
    return EXIT_OK


def _cmd_extension(args) -> int:
    payload = _load_payload(args)
    group, endo = parse_extension(payload)
    value = reidemeister_extension(group, endo)
    doc = {"R": render_value(value), "finite": not is_infinite(value)}
    if args.reps:
        reps = fiber_class_reps(group, endo)       # raises InfiniteClasses
        doc["fiber_reps"] = [{"v": [str(c) for c in vec], "n0": n0}
                             for vec, n0 in reps]

    def table(d):
        lines = [f"R(phi) = {d['R']}"]
        if "fiber_reps" in d:
            lines += _aligned([("(" + ",".join(r["v"]) + ")", r["n0"])
                               for r in d["fiber_reps"]], ("v", "fiber"))
        return lines

    _print_doc(doc, args.format, table)
    return EXIT_OK


def _cmd_torus(args) -> int:
    payload = _load_payload(args)
    matrix = parse_matrix(payload.get("matrix"), "matrix")
    seq = torus_map_reidemeister(matrix, args.n_max)
    doc = {"values": [render_value(v) for v in seq.values]}

    def table(d):
        return _aligned([(n + 1, v) for n, v in enumerate(d["values"])],
                        ("n", "R(f^n)"))

    _print_doc(doc, args.format, table)
    return EXIT_OK


def _cmd_congruence(args) -> int:
    payload = _load_payload(args)
    seq = parse_sequence(payload)
    report = congruence_check(seq)
    doc = {
        "lines": [
            {"n": line.n,
             "P_n": None if line.skipped else str(line.p_n),
             "passes": line.passes}
            for line in report.lines
        ],
        "all_pass": report.all_pass,
    }

    def table(d):
        rows = []
        for line in d["lines"]:
            if line["P_n"] is None:
                rows.append((line["n"], "-", "skipped (infinite entry)"))
            else:
                rows.append((line["n"], line["P_n"],
                             "pass" if line["passes"] else "FAIL"))
        out = _aligned(rows, ("n", "P_n", "verdict"))
        out.append("all pass" if d["all_pass"] else "FAILURES FOUND")
        return out

    _print_doc(doc, args.format, table)
    return EXIT_OK if report.all_pass else EXIT_VIOLATION


# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twb",
        description="Twisted conjugacy classes, Reidemeister numbers, and "
                    "the twisted Burnside identity R(phi) = S(phi).")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, payload=True):
        if payload:
            sp.add_argument("inline", nargs="?", default=None,
                            help="inline JSON payload")
            sp.add_argument("--input", metavar="FILE",
                            help="read the JSON payload from FILE")
        sp.add_argument("--format", choices=("table", "json"),
                        default="table")

    sp = sub.add_parser("classes",
                        help="twisted conjugacy classes and R(phi)")
    common(sp)
    sp.set_defaults(handler=_cmd_classes)

    sp = sub.add_parser("burnside", help="check R(phi) = S(phi) on one pair")
    common(sp)
    sp.set_defaults(handler=_cmd_burnside)

    sp = sub.add_parser("corpus",
                        help="sweep every corpus group and endomorphism")
    common(sp, payload=False)
    sp.add_argument("--max-order", type=int, default=24, metavar="K")
    sp.add_argument("--automorphisms-only", action="store_true")
    sp.add_argument("--n-max", type=int, default=0, metavar="K",
                    help="also check congruences up to n = K (0 = skip)")
    sp.add_argument("--jobs", type=int, default=1, metavar="N")
    sp.add_argument("--inject-failure", action="store_true",
                    help="negative control: corrupt one pair on purpose")
    sp.set_defaults(handler=_cmd_corpus)

    sp = sub.add_parser("abelian",
                        help="R(phi) on a finitely generated abelian group")
    common(sp)
    sp.add_argument("--reps", action="store_true",
                    help="include twisted class representatives")
    sp.add_argument("--n-max", type=int, default=0, metavar="K",
                    help="also report R(phi^n) for n = 1..K")
    sp.set_defaults(handler=_cmd_abelian)

    sp = sub.add_parser("extension",
                        help="R(phi) on a lattice extension Z^k x| Z")
    common(sp)
    sp.add_argument("--reps", action="store_true",
                    help="include per-fiber class representatives")
    sp.set_defaults(handler=_cmd_extension)

    sp = sub.add_parser("torus", help="R(f^n) sequence for a torus map")
    common(sp)
    sp.add_argument("--n-max", type=int, default=10, metavar="K")
    sp.set_defaults(handler=_cmd_torus)

    sp = sub.add_parser("congruence",
                        help="Mobius congruence report for a sequence")
    common(sp)
    sp.set_defaults(handler=_cmd_congruence)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (InvalidDescriptor, TwistedBurnsideError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INVALID
    except (KeyError, TypeError, ValueError) as exc:
        sys.stderr.write(f"error: malformed input: {exc}\n")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
