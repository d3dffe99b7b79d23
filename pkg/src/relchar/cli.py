"""Command-line interface.

Exit codes: 0 success, 1 some theorem check failed, 2 bad input,
3 a size guard stopped the computation.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path

from . import config
from .characters.dixon import character_table
from .corpus import CorpusEntry, builtin_corpus, resolve_builtin, tagged_normals
from .errors import GroupFormatError, GuardExceeded, NotNormalError, RelcharError, UnknownGroupError
from .group_core.io import load_group
from .group_core.permgroup import PermGroup
from .reldeg import relative_degrees
from .report import dumps_structured, render_hunt, render_report
from .verify.checks import THEOREM_IDS
from .verify.suite import hunt, hunt_violations, normal_pairs, run_suite

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_GUARD = 3


def _guard_parent() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("guards")
    g.add_argument("--enumeration-guard", type=int, metavar="N", help="max elements to enumerate")
    g.add_argument("--table-guard", type=int, metavar="N", help="max group order for character tables")
    g.add_argument("--subgroup-guard", type=int, metavar="N", help="max group order for subgroup enumeration")
    return p


def _source_parent() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("file", nargs="?", help="group file (JSON)")
    p.add_argument("--builtin", metavar="NAME", help="corpus key, 'all', or a constructor such as dihedral:8")
    p.add_argument("--structured", action="store_true", help="emit JSON instead of text")
    return p


def build_parser() -> argparse.ArgumentParser:
    guards = _guard_parent()
    source = _source_parent()
    parser = argparse.ArgumentParser(prog="relchar", description="Relative character degrees of finite permutation groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("table", parents=[source, guards], help="print the character table")
    sub.add_parser("normals", parents=[source, guards], help="list the normal subgroups")
    p = sub.add_parser("reldeg", parents=[source, guards], help="print cd(G|N)")
    p.add_argument("--normal", metavar="NAME", help="a tagged name or n<i>; default is every normal subgroup")

    p = sub.add_parser("verify", parents=[source, guards], help="run the theorem checks")
    p.add_argument("--theorems", default="all", help="comma separated ids or 'all'")
    p.add_argument("--max-order", type=int, metavar="N", help="ignore groups larger than N")
    p.add_argument("--tagged-only", action="store_true", help="only check tagged normal subgroups")
    p.add_argument("--workers", type=int, default=1, help="groups checked concurrently")
    p.add_argument("--timing", action="store_true", help="include per-check milliseconds")

    sub.add_parser("corpus", help="list the built-in groups")

    p = sub.add_parser("hunt", parents=[guards], help="(n, dl N, h N) over the corpus")
    p.add_argument("--structured", action="store_true")
    p.add_argument("--builtin", default="all", metavar="NAME")
    p.add_argument("--max-order", type=int, metavar="N")
    return parser


def _apply_guards(args: argparse.Namespace) -> None:
    changes = {
        k: v
        for k, v in (
            ("enumeration", getattr(args, "enumeration_guard", None)),
            ("character_table", getattr(args, "table_guard", None)),
            ("subgroup_enumeration", getattr(args, "subgroup_guard", None)),
        )
        if v is not None
    }
    if changes:
        config.set_guards(**changes)


def _sources(args: argparse.Namespace, default_all: bool = False) -> list[CorpusEntry | PermGroup]:
    if args.file and args.builtin:
        raise GroupFormatError("give either a file or --builtin, not both")
    if args.file:
        try:
            G = load_group(args.file)
        except OSError as exc:
            raise GroupFormatError(f"cannot read {args.file}: {exc.strerror}") from None
        if G.name is None:
            G.name = Path(args.file).stem
        for tag, N in tagged_normals(G).items():
            if not N.is_normal():
                raise NotNormalError(f"tagged subgroup {tag!r} is not normal in {G.name}")
        return [G]
    if args.builtin:
        return resolve_builtin(args.builtin)
    if default_all:
        return builtin_corpus()
    raise GroupFormatError("no group given: pass a file or --builtin NAME")


def _group(item: CorpusEntry | PermGroup) -> PermGroup:
    return item.build() if isinstance(item, CorpusEntry) else item


def _cmd_table(args, out) -> int:
    docs = []
    for item in _sources(args):
        G = _group(item)
        T = character_table(G)
        if args.structured:
            docs.append(T.to_json())
            continue
        cd = T.class_data
        header = ["", *(G.word(r) for r in cd.representatives)]
        lines = [
            ["size", *map(str, cd.sizes)],
            ["order", *map(str, cd.element_orders)],
            *([f"X.{i + 1}", *map(str, row.values)] for i, row in enumerate(T.rows)),
        ]
        widths = [max(len(r[c]) for r in [header, *lines]) for c in range(len(header))]
        out.write(f"{G.name}  order {G.order}  classes {len(cd)}\n")
        for r in [header, *lines]:
            out.write("  ".join(s.rjust(w) for s, w in zip(r, widths)).rstrip() + "\n")
        out.write("\n")
    if args.structured:
        out.write(dumps_structured(docs if len(docs) != 1 else docs[0]))
    return EXIT_OK


def _cmd_normals(args, out) -> int:
    docs = []
    for item in _sources(args):
        G = _group(item)
        pairs = normal_pairs(G)
        docs.append({"group": G.name, "order": G.order, "normals": [d for _, d in pairs]})
    if args.structured:
        out.write(dumps_structured(docs if len(docs) != 1 else docs[0]))
        return EXIT_OK
    for doc in docs:
        out.write(f"{doc['group']}  order {doc['order']}\n")
        for d in doc["normals"]:
            out.write(f"  {d['name']:8} order {d['order']:<6} <{', '.join(d['generators'])}>\n")
    return EXIT_OK


def _cmd_reldeg(args, out) -> int:
    docs = []
    for item in _sources(args):
        G = _group(item)
        pairs = normal_pairs(G)
        if args.normal:
            pairs = [(N, d) for N, d in pairs if d["name"] == args.normal]
            if not pairs:
                raise UnknownGroupError(f"{G.name} has no normal subgroup named {args.normal!r}")
        rows = []
        for N, d in pairs:
            rel = relative_degrees(G, N)
            rows.append({**d, "cd": list(rel.degrees), "irr_count": len(rel.members)})
        docs.append({"group": G.name, "order": G.order, "normals": rows})
    if args.structured:
        out.write(dumps_structured(docs if len(docs) != 1 else docs[0]))
        return EXIT_OK
    for doc in docs:
        for r in doc["normals"]:
            cd = ", ".join(map(str, r["cd"]))
            out.write(f"{doc['group']} / {r['name']} (order {r['order']}): cd = {{{cd}}}\n")
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    if args.theorems == "all":
        ids = list(THEOREM_IDS)
    else:
        ids = [t.strip() for t in args.theorems.split(",") if t.strip()]
        unknown = [t for t in ids if t not in THEOREM_IDS]
        if unknown:
            raise UnknownGroupError(f"unknown theorem id(s): {', '.join(unknown)}")
    report = run_suite(
        _sources(args, default_all=True),
        ids,
        tagged_only=args.tagged_only,
        max_order=args.max_order,
        workers=max(1, args.workers),
    )
    out.write(render_report(report, "structured" if args.structured else "human", timing=args.timing))
    return EXIT_FAIL if report.failed else EXIT_OK


def _cmd_corpus(args, out) -> int:
    entries = builtin_corpus()
    width = max(len(e.key) for e in entries)
    for e in entries:
        tags = f"  tags: {', '.join(e.tags)}" if e.tags else ""
        out.write(f"{e.key:{width}}  order {e.order:<5} {e.constructor}{tags}\n")
    return EXIT_OK


def _cmd_hunt(args, out) -> int:
    records = hunt(resolve_builtin(args.builtin), max_order=args.max_order)
    out.write(render_hunt(records, "structured" if args.structured else "human"))
    return EXIT_FAIL if hunt_violations(records) else EXIT_OK


COMMANDS = {
    "table": _cmd_table,
    "normals": _cmd_normals,
    "reldeg": _cmd_reldeg,
    "verify": _cmd_verify,
    "corpus": _cmd_corpus,
    "hunt": _cmd_hunt,
}


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    previous = config.current()
    try:
        _apply_guards(args)
        return COMMANDS[args.command](args, out)
    except GuardExceeded as exc:
        print(f"relchar: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (GroupFormatError, UnknownGroupError, RelcharError, ValueError) as exc:
        print(f"relchar: {exc}", file=sys.stderr)
        return EXIT_INPUT
    finally:
        config.set_guards(previous)


if __name__ == "__main__":
    sys.exit(main())
