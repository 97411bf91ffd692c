"""Tabular export of expansion results.

Every row has 19 fields: the statement id, one column per component
symbol, and the logical linkage column.  The default delimiter is the
pipe character because commas are common inside component content.
Multiple values in one cell are joined by ``; ``; a cell containing
the delimiter (or a newline) is wrapped in double quotes with embedded
quotes doubled.

The sheets format wraps each row in a SPLIT formula over the
delimiter-joined cells.  Spreadsheet SPLIT has no quoting mechanism,
so delimiter characters occurring inside cell values are substituted
with ``/`` to keep the field count stable, and double quotes are
escaped by doubling them inside the formula string (no CHAR()
concatenation is used).
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import AtomicStatement
from .transform import ExpansionResult

# column order is the frozen format contract
COLUMN_SYMBOLS: tuple[str, ...] = (
    "A", "A,p", "D", "I", "Bdir", "Bdir,p", "Bind", "Bind,p",
    "Cac", "Cex", "E", "E,p", "M", "F", "P", "P,p", "O",
)

HEADERS: tuple[str, ...] = (
    "Statement ID",
    "Attributes",
    "Attributes Property",
    "Deontic",
    "Aim",
    "Direct Object",
    "Direct Object Property",
    "Indirect Object",
    "Indirect Object Property",
    "Activation Condition",
    "Execution Constraint",
    "Constituted Entity",
    "Constituted Entity Property",
    "Modal",
    "Constitutive Function",
    "Constituting Properties",
    "Constituting Properties Property",
    "Or Else",
    "Logical Linkage",
)

VALUE_JOIN = "; "


@dataclass(frozen=True)
class TabularOptions:
    include_headers: bool = True
    include_annotations: bool = False
    delimiter: str = "|"
    format: str = "csv"

    def __post_init__(self) -> None:
        if len(self.delimiter) != 1:
            raise ValueError("delimiter must be a single character")
        if self.format not in ("csv", "sheets"):
            raise ValueError(f"unknown format {self.format!r}")


def atom_cells(atom: AtomicStatement,
               opts: TabularOptions) -> list[str]:
    """Raw (unquoted) cell values of one row."""
    cells = [atom.id.render()]
    for code in COLUMN_SYMBOLS:
        values = atom.cells.get(code, ())
        cells.append(VALUE_JOIN.join(
            v.rendered(opts.include_annotations) for v in values))
    cells.append(VALUE_JOIN.join(
        f"{op.value}:{sid.render()}" for op, sid in atom.linkage))
    return cells


def rows(result: ExpansionResult, opts: TabularOptions) -> list[list[str]]:
    """All logical rows, header first when enabled."""
    out: list[list[str]] = []
    if opts.include_headers:
        out.append(list(HEADERS))
    for atom in result.atoms:
        out.append(atom_cells(atom, opts))
    return out


def _quote(cell: str, delimiter: str) -> str:
    if delimiter in cell or "\n" in cell or "\r" in cell:
        return '"' + cell.replace('"', '""') + '"'
    return cell


def csv_line(cells: list[str], opts: TabularOptions) -> str:
    return opts.delimiter.join(_quote(c, opts.delimiter) for c in cells)


def header_line(opts: TabularOptions) -> str:
    return csv_line(list(HEADERS), opts)


def to_csv(result: ExpansionResult, opts: TabularOptions | None = None) -> str:
    """Render the expansion as delimited rows, one atom per row."""
    opts = opts or TabularOptions()
    if not result.atoms:
        return ""
    return "".join(csv_line(r, opts) + "\n" for r in rows(result, opts))


def sheets_line(cells: list[str], opts: TabularOptions) -> str:
    safe = [c.replace(opts.delimiter, "/") for c in cells]
    row = opts.delimiter.join(safe)
    return '=SPLIT("' + row.replace('"', '""') + '", "' + opts.delimiter + '")'


def to_sheets(result: ExpansionResult,
              opts: TabularOptions | None = None) -> str:
    """Render the expansion as one SPLIT formula per row."""
    opts = opts or TabularOptions()
    if not result.atoms:
        return ""
    return "".join(sheets_line(r, opts) + "\n" for r in rows(result, opts))
