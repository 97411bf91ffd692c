"""Command-line frontend for single statements and batch files.

A batch file holds one statement per block, blocks separated by blank
lines.  A block may start with a ``#id:`` line naming the statement;
otherwise a lone entry uses --id and multiple entries are numbered
1..n.  Lines within a block are joined with single spaces.

Data goes to the output stream, diagnostics to the error stream.
Exit codes: 0 success, 1 at least one entry failed validation,
2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .model import Level
from .parser import parse_with_report
from .tabular import (
    HEADERS,
    TabularOptions,
    header_line,
    sheets_line,
    to_csv,
    to_sheets,
)
from .transform import expand, filter_level
from .visual import to_tree


@dataclass(frozen=True)
class BatchEntry:
    id: str | None
    statement: str
    line: int  # 1-based line of the block's first statement line


def read_batch(text: str) -> list[BatchEntry]:
    """Split a batch document into entries."""
    entries: list[BatchEntry] = []
    block: list[str] = []
    block_id: str | None = None
    block_line = 0

    def close() -> None:
        nonlocal block, block_id, block_line
        statement = " ".join(block).strip()
        if statement:
            entries.append(BatchEntry(block_id, statement, block_line))
        block = []
        block_id = None
        block_line = 0

    for n, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            close()
            continue
        if not block and line.strip().startswith("#id:"):
            block_id = line.strip()[4:].strip()
            continue
        if not block:
            block_line = n
        block.append(line)
    close()
    return entries


def build_arg_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="igscript",
        description="Parse IG Script statements into tabular or tree output.")
    ap.add_argument("--input", required=True, metavar="PATH",
                    help="batch file, or - for stdin")
    ap.add_argument("--format", choices=("csv", "sheets", "tree"),
                    default="csv")
    ap.add_argument("--id", default="1", dest="stmt_id", metavar="BASE",
                    help="statement id base for a single entry")
    ap.add_argument("--level", choices=("core", "extended", "logico"),
                    default="logico")
    ap.add_argument("--no-headers", action="store_true")
    ap.add_argument("--annotations", action="store_true",
                    help="include semantic annotations in cell values")
    ap.add_argument("--no-properties", action="store_true",
                    help="fold property components into their carriers "
                         "(tree output)")
    ap.add_argument("--conditions-first", action="store_true",
                    help="show activation conditions first (tree output)")
    ap.add_argument("--out", default="-", metavar="PATH",
                    help="output file, or - for stdout")
    return ap


def _entry_id(entry: BatchEntry, index: int, total: int,
              default_id: str) -> str:
    if entry.id:
        return entry.id
    if total == 1:
        return default_id
    return str(index)


def main(argv: list[str] | None = None) -> int:
    ap = build_arg_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    if not args.stmt_id or "{" in args.stmt_id or "}" in args.stmt_id:
        print("igscript: --id must be non-empty and brace-free",
              file=sys.stderr)
        return 2

    try:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input, "r", encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        print(f"igscript: cannot read {args.input}: {exc}", file=sys.stderr)
        return 2

    entries = read_batch(text)
    if not entries:
        ap.print_usage(sys.stderr)
        print("igscript: input holds no statements", file=sys.stderr)
        return 2

    level = Level.from_name(args.level)
    opts = TabularOptions(include_headers=False,
                          include_annotations=args.annotations,
                          format=args.format if args.format != "tree"
                          else "csv")

    out = sys.stdout if args.out == "-" else None
    try:
        if out is None:
            out = open(args.out, "w", encoding="utf-8")
    except OSError as exc:
        print(f"igscript: cannot write {args.out}: {exc}", file=sys.stderr)
        return 2

    failed = False
    try:
        if args.format == "csv" and not args.no_headers:
            out.write(header_line(opts) + "\n")
        elif args.format == "sheets" and not args.no_headers:
            out.write(sheets_line(list(HEADERS), opts) + "\n")
        src = args.input if args.input != "-" else "<stdin>"
        for k, entry in enumerate(entries, 1):
            tree, report = parse_with_report(entry.statement)
            if not report.ok:
                failed = True
                for issue in report.errors:
                    print(f"{src}:{entry.line}: {issue}", file=sys.stderr)
                continue
            base = _entry_id(entry, k, len(entries), args.stmt_id)
            if "{" in base or "}" in base or not base:
                failed = True
                print(f"{src}:{entry.line}: bad entry id {base!r}",
                      file=sys.stderr)
                continue
            if args.format == "tree":
                doc = to_tree(filter_level(tree, level),
                              include_annotations=args.annotations,
                              include_properties=not args.no_properties,
                              conditions_first=args.conditions_first)
                out.write(doc.to_json() + "\n")
            else:
                result = expand(tree, base, level)
                render = to_csv if args.format == "csv" else to_sheets
                out.write(render(result, opts))
    finally:
        if out is not sys.stdout:
            out.close()
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
