"""Reading and writing representation files and link corpora (UTF-8 JSON).

Representation file::

    {"n": 1, "field": {"sqrt": 5},
     "pairs": [{"a": [["2", "1"], ["1", "1"]], "b": [["1", "1/2+1/2*sqrt(5)"], ...]}]}

Every malformed token is reported as :class:`ParseError` with the line and
column where it appears in the raw text.
"""

from __future__ import annotations

import json
from pathlib import Path

from .coverhomology.records import LinkRecord, record_from_json
from .errors import HakenlabError, MissingData, NotAKnot, ParseError
from .exactfield import Mat2, parse_scalar

__all__ = [
    "load_json",
    "parse_representation",
    "load_representation",
    "dump_representation",
    "load_corpus",
    "dumps_stable",
]


def _position(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    return line, offset - (text.rfind("\n", 0, offset) + 1) + 1


def _locate(text: str, token: str) -> tuple[int | None, int | None]:
    idx = text.find(json.dumps(token))
    if idx < 0:
        idx = text.find(token)
    if idx < 0:
        return None, None
    return _position(text, idx)


def load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None


def _scalar(value, sqrt: int | None, text: str):
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        line, col = _locate(text, json.dumps(value))
        raise ParseError(f"scalar must be a string or integer, got {value!r}", line, col)
    token = str(value)
    try:
        return parse_scalar(token, sqrt=sqrt)
    except ParseError as exc:
        line, col = _locate(text, token)
        raise ParseError(str(exc), line, col) from None


def _matrix(value, sqrt: int | None, text: str, where: str) -> Mat2:
    if not (
        isinstance(value, list)
        and len(value) == 2
        and all(isinstance(r, list) and len(r) == 2 for r in value)
    ):
        raise ParseError(f"{where} must be a 2x2 array")
    (a, b), (c, d) = ((_scalar(x, sqrt, text) for x in row) for row in value)
    m = Mat2(a, b, c, d)
    if not m.is_sl:
        raise ParseError(f"{where} has determinant {m.det}, expected 1")
    return m


def parse_representation(text: str) -> tuple[tuple[Mat2, Mat2], ...]:
    """Pairs ``(a_i, b_i)`` from representation-file text."""
    obj = load_json(text)
    if not isinstance(obj, dict):
        raise ParseError("representation file must hold a JSON object", 1, 1)
    for key in ("n", "pairs"):
        if key not in obj:
            raise ParseError(f"missing key {key!r}")
    field = obj.get("field") or {}
    if not isinstance(field, dict):
        raise ParseError("'field' must be an object")
    sqrt = field.get("sqrt")
    if sqrt is not None and (isinstance(sqrt, bool) or not isinstance(sqrt, int) or sqrt < 2):
        raise ParseError(f"field sqrt must be an integer >= 2, got {sqrt!r}")
    pairs = obj["pairs"]
    if not isinstance(pairs, list) or not all(isinstance(p, dict) for p in pairs):
        raise ParseError("'pairs' must be an array of objects")
    if obj["n"] != len(pairs):
        raise ParseError(f"n = {obj['n']} but {len(pairs)} pairs given")
    out = []
    for i, p in enumerate(pairs, 1):
        if "a" not in p or "b" not in p:
            raise ParseError(f"pair {i} needs 'a' and 'b'")
        out.append(
            (_matrix(p["a"], sqrt, text, f"pair {i} a"), _matrix(p["b"], sqrt, text, f"pair {i} b"))
        )
    if not out:
        raise ParseError("at least one pair is required")
    return tuple(out)


def load_representation(path: str | Path) -> tuple[tuple[Mat2, Mat2], ...]:
    return parse_representation(Path(path).read_text(encoding="utf-8"))


def _field_of(pairs) -> int | None:
    ds = {m.field() for pair in pairs for m in pair} - {0}
    if len(ds) > 1:
        raise HakenlabError(f"matrices live in different fields {sorted(ds)}")
    return ds.pop() if ds else None


def dump_representation(pairs) -> str:
    def mat(m: Mat2):
        return [[str(x) for x in row] for row in m.rows()]

    # one pair per line keeps fixture diffs readable
    lines = [json.dumps({"a": mat(a), "b": mat(b)}) for a, b in pairs]
    return (
        "{\n"
        f'  "n": {len(pairs)},\n'
        f'  "field": {json.dumps({"sqrt": _field_of(pairs)})},\n'
        '  "pairs": [\n    ' + ",\n    ".join(lines) + "\n  ]\n}\n"
    )


def load_corpus(path: str | Path) -> list[LinkRecord]:
    """Link records from one JSON array; a directory loads every ``*.json`` in it."""
    path = Path(path)
    files = sorted(path.glob("*.json")) if path.is_dir() else [path]
    records = []
    for f in files:
        text = f.read_text(encoding="utf-8")
        data = load_json(text)
        if not isinstance(data, list):
            raise ParseError(f"{f.name}: corpus must be a JSON array", 1, 1)
        for obj in data:
            try:
                records.append(record_from_json(obj))
            except (ParseError, MissingData, NotAKnot) as exc:
                name = obj.get("name") if isinstance(obj, dict) else None
                line, col = _locate(text, name) if name else (None, None)
                raise ParseError(f"{f.name}: {exc}", line, col) from None
    return sorted(records, key=lambda r: r.name)


def dumps_stable(obj) -> str:
    """Canonical JSON: sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
