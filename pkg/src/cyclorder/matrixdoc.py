"""JSON matrix documents.

A document looks like::

    {"p": 5, "d": 2, "entries": [[["1","0","0","0"], ...], ...]}

Each entry is the list of p-1 power-basis coefficients as decimal strings.
"""

from __future__ import annotations

import json
from typing import Any

from .cycmatrix import CycMatrix
from .cycring import CycInt
from .numtheory import isprime


class DocumentError(ValueError):
    """A matrix document that does not parse or validate."""


def matrix_to_document(A: CycMatrix) -> dict[str, Any]:
    return {
        "p": A.p,
        "d": A.d,
        "entries": [[[str(c) for c in x.coeffs] for x in row] for row in A.rows],
    }


def dumps_matrix(A: CycMatrix) -> str:
    doc = matrix_to_document(A)
    rows = ",\n    ".join(json.dumps(r, separators=(", ", ": ")) for r in doc["entries"])
    return f'{{\n  "p": {doc["p"]},\n  "d": {doc["d"]},\n  "entries": [\n    {rows}\n  ]\n}}\n'


def _int_field(doc: dict, name: str) -> int:
    if name not in doc:
        raise DocumentError(f"missing field {name!r}")
    v = doc[name]
    if isinstance(v, str):
        try:
            v = int(v)
        except ValueError:
            raise DocumentError(f"field {name!r}: {doc[name]!r} is not an integer") from None
    if isinstance(v, bool) or not isinstance(v, int):
        raise DocumentError(f"field {name!r}: expected an integer, got {type(v).__name__}")
    return v


def _coefficient(v: Any, where: str) -> int:
    if isinstance(v, bool):
        raise DocumentError(f"{where}: expected a decimal integer string, got {v!r}")
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        try:
            return int(v.strip(), 10)
        except ValueError:
            pass
    raise DocumentError(f"{where}: expected a decimal integer string, got {v!r}")


def document_to_matrix(doc: Any) -> CycMatrix:
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object with fields p, d, entries")
    p = _int_field(doc, "p")
    if p < 3 or not isprime(p):
        raise DocumentError(f"field 'p': {p} is not an odd prime")
    d = _int_field(doc, "d")
    if d < 1:
        raise DocumentError(f"field 'd': dimension must be at least 1, got {d}")
    entries = doc.get("entries")
    if not isinstance(entries, list) or len(entries) != d:
        raise DocumentError(f"field 'entries': expected a list of {d} rows")
    rows = []
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != d:
            raise DocumentError(f"entries[{i}]: expected a list of {d} entries")
        out = []
        for j, vec in enumerate(row):
            if not isinstance(vec, list) or len(vec) != p - 1:
                raise DocumentError(f"entries[{i}][{j}]: expected a list of {p - 1} coefficients")
            out.append(CycInt(p, [_coefficient(c, f"entries[{i}][{j}][{k}]") for k, c in enumerate(vec)]))
        rows.append(out)
    return CycMatrix(p, rows)


def loads_matrix(text: str) -> CycMatrix:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return document_to_matrix(doc)
