"""Textual interchange formats.

A matrix file is a JSON document::

    {"field": "rat" | "gf:<p>" | "quad:<a>", "rows": [["1/2", "-3"], ...]}

Entries are always strings in the scalar grammar of the field: rationals
like "-3/4", prime-field residues like "2", quadratic elements like
"1/2+3*s". Parsing is strict; malformed JSON reports line and column,
bad entries report their row and column.

A census file wraps the same dialect with summary fields; the schema is
documented in the README and round-trips through :func:`census_from_json`.
"""

from __future__ import annotations

import json

from .errors import ParseError
from .fields import Field
from .matrices import JordanSpec, Matrix
from .oracle import CensusReport

_MATRIX_KEYS = {"field", "rows"}


def matrix_to_json(m: Matrix) -> dict:
    return {
        "field": m.field.spec(),
        "rows": [[str(m[i, j]) for j in range(m.ncols)] for i in range(m.nrows)],
    }


def matrix_from_json(obj) -> Matrix:
    if not isinstance(obj, dict):
        raise ParseError("matrix document must be a JSON object")
    extra = set(obj) - _MATRIX_KEYS
    if extra:
        raise ParseError(f"unknown matrix keys {sorted(extra)}")
    if "field" not in obj or "rows" not in obj:
        raise ParseError("matrix document needs 'field' and 'rows'")
    field = Field.from_spec(obj["field"])
    rows = obj["rows"]
    if (not isinstance(rows, list) or not rows
            or any(not isinstance(r, list) or not r for r in rows)):
        raise ParseError("'rows' must be a non-empty list of non-empty lists")
    width = len(rows[0])
    parsed = []
    for i, row in enumerate(rows):
        if len(row) != width:
            raise ParseError("ragged rows", row=i, col=len(row))
        out = []
        for j, cell in enumerate(row):
            if not isinstance(cell, str):
                raise ParseError(f"entry must be a string, got {cell!r}", row=i, col=j)
            try:
                out.append(field.parse(cell))
            except ParseError as exc:
                raise ParseError(str(exc), row=i, col=j) from exc
        parsed.append(out)
    return Matrix.from_rows(field, parsed)


def loads_matrix(text: str) -> Matrix:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}",
                         line=exc.lineno, column=exc.colno) from exc
    return matrix_from_json(obj)


def dumps_matrix(m: Matrix) -> str:
    return json.dumps(matrix_to_json(m), indent=2) + "\n"


def load_matrix(path: str) -> Matrix:
    with open(path, "r", encoding="utf-8") as fh:
        return loads_matrix(fh.read())


def save_matrix(path: str, m: Matrix) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_matrix(m))


# -- Jordan shorthand ----------------------------------------------------------


def parse_jordan(field: Field, text: str) -> JordanSpec:
    """Shorthand "lam^k,lam^k,..." for a block list, e.g. "0^3" or "1^2,1^2"."""
    blocks = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            raise ParseError(f"empty block in Jordan shorthand {text!r}")
        if "^" in part:
            lam_text, _, size_text = part.partition("^")
            if not size_text.isdigit() or int(size_text) < 1:
                raise ParseError(f"bad block size in {part!r}")
            size = int(size_text)
        else:
            lam_text, size = part, 1
        blocks.append((field.parse(lam_text), size))
    return JordanSpec(tuple(blocks))


def format_jordan(spec: JordanSpec) -> str:
    return ",".join(f"{lam}^{size}" for lam, size in spec.blocks)


# -- census serialization --------------------------------------------------------


def census_to_json(report: CensusReport) -> dict:
    doc = {
        "schema": "census/1",
        "field": report.field.spec(),
        "coefficient": matrix_to_json(report.coefficient),
        "commuting_only": report.commuting_only,
        "jordan": format_jordan(report.jordan) if report.jordan else None,
        "total": report.total,
        "by_rank": {str(k): v for k, v in sorted(report.by_rank.items())},
        "by_kernel": dict(sorted(report.by_kernel.items())),
        "solutions": [matrix_to_json(x) for x in report.solutions],
    }
    if report.family_tallies is not None:
        doc["family_tallies"] = dict(sorted(report.family_tallies.items()))
        doc["family_tags"] = list(report.family_tags)
    return doc


def census_from_json(obj) -> CensusReport:
    if not isinstance(obj, dict) or obj.get("schema") != "census/1":
        raise ParseError("not a census/1 document")
    field = Field.from_spec(obj["field"])
    coefficient = matrix_from_json(obj["coefficient"])
    jordan = parse_jordan(field, obj["jordan"]) if obj.get("jordan") else None
    solutions = tuple(matrix_from_json(s) for s in obj["solutions"])
    report = CensusReport(
        field=field,
        coefficient=coefficient,
        commuting_only=bool(obj["commuting_only"]),
        solutions=solutions,
        by_rank={int(k): v for k, v in obj["by_rank"].items()},
        by_kernel=dict(obj["by_kernel"]),
        jordan=jordan,
        family_tags=tuple(obj["family_tags"]) if "family_tags" in obj else None,
        family_tallies=dict(obj["family_tallies"]) if "family_tallies" in obj else None,
    )
    if report.total != obj["total"]:
        raise ParseError("census total does not match its solution list")
    return report
