"""Command line interface: ``cdlab analyze|verify|lattice|catalog``.

Exit codes: 0 when every verdict passes, 1 when any fails, 2 on usage or
parse errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from cdlab.catalog import default_catalog, load_catalog
from cdlab.errors import CdlabError, OrderLimitExceeded
from cdlab.families import named
from cdlab.group import DEFAULT_MAX_ORDER, Group
from cdlab.harness import emit_lattice_dot, emit_report, run_harness
from cdlab.io import load_group
from cdlab.lattice import cd_lattice
from cdlab.report import THEOREM_IDS
from cdlab.subgroups import all_subgroups, center

VERIFY_DEFAULT_MAX_ORDER = 128
HARD_MAX_ORDER = DEFAULT_MAX_ORDER


class UsageError(Exception):
    pass


def default_max_order() -> int:
    raw = os.environ.get("CDLAB_MAX_ORDER")
    if raw is None:
        return VERIFY_DEFAULT_MAX_ORDER
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"CDLAB_MAX_ORDER must be an integer, got {raw!r}") from None


def resolve_group(target: str, max_order: int = HARD_MAX_ORDER) -> Group:
    if Path(target).is_file():
        return load_group(target, max_order=max_order)
    return named(target, max_order=max_order)


def parse_theorems(text: str) -> tuple[str, ...]:
    ids = tuple(t.strip().upper() for t in text.split(",") if t.strip())
    unknown = [t for t in ids if t not in THEOREM_IDS]
    if unknown:
        raise UsageError(f"unknown theorem id(s) {', '.join(unknown)}; choose from {','.join(THEOREM_IDS).lower()}")
    return ids


def cmd_analyze(args) -> int:
    G = resolve_group(args.target, args.max_order)
    subs = all_subgroups(G)
    lat = cd_lattice(G)
    out = [
        f"group: {G.label}",
        f"order: {G.order}",
        f"subgroups: {len(subs)}",
        f"center order: {center(G).order}",
        f"mu: {lat.mu}",
        f"CD-subgroups: {len(lat.members)}",
    ]
    for H in lat.members:
        tags = [t for t, K in (("top", lat.top), ("bottom", lat.bottom)) if H == K]
        tag = f" [{'/'.join(tags)}]" if tags else ""
        out.append(f"  order={H.order} index={H.index} centralizer_order={lat.dual(H).order}{tag}: {H.element_list()}")
    print("\n".join(out))
    return 0


def cmd_verify(args) -> int:
    max_order = args.max_order if args.max_order is not None else default_max_order()
    if not 1 <= max_order <= HARD_MAX_ORDER:
        raise UsageError(f"--max-order must be between 1 and {HARD_MAX_ORDER}, got {max_order}")
    catalog = load_catalog(args.catalog) if args.catalog else default_catalog(max_order)
    theorems = parse_theorems(args.theorems) if args.theorems else THEOREM_IDS
    run = run_harness(catalog, theorems, jobs=args.jobs, max_order=max_order)
    data = emit_report(run, args.format)
    if args.output:
        Path(args.output).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    return 1 if run.failed else 0


def cmd_lattice(args) -> int:
    G = resolve_group(args.target, args.max_order)
    data = emit_lattice_dot(G)
    if args.dot == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        Path(args.dot).write_bytes(data)
    return 0


def cmd_catalog(args) -> int:
    max_order = args.max_order if args.max_order is not None else default_max_order()
    catalog = load_catalog(args.catalog) if args.catalog else default_catalog(max_order)
    for entry in catalog:
        print(entry if entry.max_order is None else f"{entry} {entry.max_order}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cdlab", description="Chermak-Delgado measure and lattice tools.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="print mu, the CD-subgroups and the lattice of one group")
    p.add_argument("target", help="group file path or descriptor such as dihedral:4")
    p.add_argument("--max-order", type=int, default=HARD_MAX_ORDER)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="check every theorem over a catalog of groups")
    p.add_argument("--theorems", help="comma-separated ids: " + ",".join(t.lower() for t in THEOREM_IDS))
    p.add_argument("--max-order", type=int, default=None, help="order cap (default 128, or CDLAB_MAX_ORDER)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "records"), default="text")
    p.add_argument("--catalog", help="catalog file instead of the built-in catalog")
    p.add_argument("--output", "-o", help="write the report here instead of stdout")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lattice", help="write the CD lattice of one group as DOT")
    p.add_argument("target")
    p.add_argument("--dot", required=True, help="output path, or - for stdout")
    p.add_argument("--max-order", type=int, default=HARD_MAX_ORDER)
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("catalog", help="catalog tools")
    csub = p.add_subparsers(dest="catalog_command", required=True)
    q = csub.add_parser("list", help="list catalog entries")
    q.add_argument("--max-order", type=int, default=None)
    q.add_argument("--catalog")
    q.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, OrderLimitExceeded, CdlabError, OSError) as exc:
        print(f"cdlab: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
