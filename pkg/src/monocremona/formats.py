"""Matrix input and output formats for the command line.

Two input formats, auto-detected by the first non-space byte:
  * JSON: {"n": 3, "d": 2, "rows": [[...], ...]} with "n" and "d" optional;
  * text: an optional header line "n d" followed by the n+1 rows of n+1
    whitespace-separated integers.
Declared values must be consistent with the rows.
"""

from __future__ import annotations

import json
import sys

from .errors import ParseError
from .maps import ExponentMatrix

Rows = list[list[int]]


def _check_declared(rows: Rows, n, d) -> None:
    if n is not None and n != len(rows) - 1:
        raise ParseError(f"declared n = {n} but found {len(rows)} rows")
    if d is not None and rows and d != sum(rows[0]):
        raise ParseError(f"declared d = {d} does not match the first row sum")


def _int_grid(token_rows) -> Rows:
    try:
        return [[int(tok) for tok in row] for row in token_rows]
    except ValueError as exc:
        raise ParseError(f"non-integer matrix entry: {exc}") from exc


def parse_matrix(text: str) -> tuple[Rows, int | None, int | None]:
    """Parse either format; returns (rows, declared_n, declared_d)."""
    stripped = text.lstrip()
    if not stripped:
        raise ParseError("empty input")
    if stripped[0] == "{":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
        if not isinstance(doc, dict) or "rows" not in doc:
            raise ParseError('JSON input must be an object with a "rows" field')
        rows = doc["rows"]
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise ParseError('"rows" must be a list of lists')
        rows = _int_grid(rows)
        n, d = doc.get("n"), doc.get("d")
        if len({len(r) for r in rows}) > 1 or len(rows) != len(rows[0]):
            raise ParseError("rows must form a square matrix")
        _check_declared(rows, n, d)
        return rows, n, d
    token_rows = [line.split() for line in text.splitlines() if line.strip()]
    n = d = None
    if len(token_rows[0]) == 2 and len(token_rows) > 1:
        header = _int_grid([token_rows[0]])[0]
        n, d = header
        token_rows = token_rows[1:]
    rows = _int_grid(token_rows)
    if not rows or len({len(r) for r in rows}) > 1 or len(rows) != len(rows[0]):
        raise ParseError("rows must form a square matrix")
    _check_declared(rows, n, d)
    return rows, n, d


def load_matrix(path: str) -> tuple[Rows, int | None, int | None]:
    if path == "-":
        return parse_matrix(sys.stdin.read())
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_matrix(fh.read())
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def render_matrix_text(E: ExponentMatrix) -> str:
    lines = [f"{E.n} {E.d}"]
    lines += [" ".join(str(x) for x in row) for row in E.rows]
    return "\n".join(lines) + "\n"


def matrix_document(E: ExponentMatrix) -> dict:
    return {"n": E.n, "d": E.d, "rows": [list(r) for r in E.rows]}
