"""
Output formats for command results.

A result is a list of flat records sharing one column set. tsv and json are
byte-deterministic; pretty is meant for terminals only.
"""

import json
from collections.abc import Mapping, Sequence

from .models import OutputFormat

Record = Mapping[str, object]


def _cell(value: object) -> str:
    match value:
        case None:
            return "-"
        case bool():
            return "true" if value else "false"
        case tuple() | list():
            return ",".join(str(v) for v in value)
        case _:
            return str(value)


def _json_value(value: object) -> object:
    if isinstance(value, tuple | list):
        return ",".join(str(v) for v in value)
    return value


def render_tsv(records: Sequence[Record], columns: Sequence[str]) -> str:
    lines = ["\t".join(columns)]
    lines.extend("\t".join(_cell(record[c]) for c in columns) for record in records)
    return "\n".join(lines) + "\n"


def render_json(records: Sequence[Record], columns: Sequence[str]) -> str:
    payload = [{c: _json_value(record[c]) for c in columns} for record in records]
    return json.dumps(payload, indent=2) + "\n"


def render_pretty(records: Sequence[Record], columns: Sequence[str]) -> str:
    rows = [list(columns)] + [[_cell(record[c]) for c in columns] for record in records]
    widths = [max(len(row[k]) for row in rows) for k in range(len(columns))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def render(records: Sequence[Record], columns: Sequence[str], fmt: OutputFormat) -> str:
    match fmt:
        case OutputFormat.TSV:
            return render_tsv(records, columns)
        case OutputFormat.JSON:
            return render_json(records, columns)
        case OutputFormat.PRETTY:
            return render_pretty(records, columns)
