"""The ``.brace`` text format.

::

    # optional comments
    order 3
    add
    0 1 2
    1 2 0
    2 0 1
    mul
    0 1 2
    1 2 0
    2 0 1

Entry ``j`` of row ``i`` is ``i * j``.  Blank lines and ``#`` lines are
ignored.  Element 0 is the shared identity.
"""
from pathlib import Path

from . import errors
from .brace import SkewBrace, validate_brace


class ParseError(errors.ValidationError):
    kind = "ParseError"


def parse_tables(text: str):
    """Parse to ``(add_rows, mul_rows)`` without any algebraic validation."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        s = raw.strip()
        if s and not s.startswith("#"):
            lines.append((lineno, s))
    if not lines:
        raise ParseError("empty brace file")
    lineno, first = lines[0]
    parts = first.split()
    if len(parts) != 2 or parts[0] != "order" or not parts[1].isdigit() or int(parts[1]) < 1:
        raise ParseError(f"line {lineno}: expected 'order <n>', got {first!r}", (lineno,))
    n = int(parts[1])
    pos = 1
    tables = []
    for label in ("add", "mul"):
        if pos >= len(lines) or lines[pos][1] != label:
            got = lines[pos][1] if pos < len(lines) else "end of file"
            where = lines[pos][0] if pos < len(lines) else len(text.splitlines())
            raise ParseError(f"line {where}: expected {label!r}, got {got!r}", (where,))
        pos += 1
        rows = []
        for _ in range(n):
            if pos >= len(lines):
                raise ParseError(f"{label} table has fewer than {n} rows")
            lineno, s = lines[pos]
            try:
                row = [int(v) for v in s.split()]
            except ValueError:
                raise ParseError(f"line {lineno}: non-integer entry in {s!r}", (lineno,)) from None
            if len(row) != n:
                raise ParseError(f"line {lineno}: expected {n} entries, got {len(row)}", (lineno,))
            rows.append(row)
            pos += 1
        tables.append(rows)
    if pos != len(lines):
        lineno, s = lines[pos]
        raise ParseError(f"line {lineno}: unexpected trailing content {s!r}", (lineno,))
    return tables[0], tables[1]


def parse_brace(text: str, name: str = None) -> SkewBrace:
    add, mul = parse_tables(text)
    return validate_brace(add, mul, name)


def load_brace(path) -> SkewBrace:
    path = Path(path)
    return parse_brace(path.read_text(), path.stem)


def format_brace(B: SkewBrace, comment: str = None) -> str:
    """Canonical text: single spaces, one row per line, trailing newline."""
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(f"order {B.order}")
    for label, G in (("add", B.add), ("mul", B.mul)):
        out.append(label)
        out.extend(" ".join(str(v) for v in row) for row in G.rows)
    return "\n".join(out) + "\n"


def save_brace(B: SkewBrace, path, comment: str = None) -> None:
    Path(path).write_text(format_brace(B, comment))
