"""Arrangement files: a small JSON document with exact integer content.

The format, integers throughout:

    {
      "field": {"m": 3},
      "tau": {"a": -1, "b": 2, "c": 1},
      "matrix": {
        "rows": 2,
        "cols": 1,
        "entries": [[[2, 0]], [[1, 1]]]
      }
    }

An entry [x, y] means x + y*N*tau, coordinates over the basis {1, N*tau}
of the endomorphism ring.  Serialization is canonical (fixed key order,
two-space indent, trailing newline), so generated files round-trip
byte-for-byte through parse and serialize.
"""

from __future__ import annotations

import json
import random
from typing import Any

from .arrangement import EllipticArrangement
from .linalg import RingMatrix
from .quadratic_order import CurveParams, ParameterError, make_curve, make_field


class ArrangementFormatError(ValueError):
    """Malformed or invalid arrangement document."""


def _as_int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ArrangementFormatError(f"{where}: expected an integer, got {value!r}")
    return value


def _as_object(value: Any, where: str, keys: tuple[str, ...]) -> dict:
    if not isinstance(value, dict):
        raise ArrangementFormatError(f"{where}: expected an object")
    unknown = set(value) - set(keys)
    if unknown:
        raise ArrangementFormatError(f"{where}: unknown keys {sorted(unknown)}")
    missing = [k for k in keys if k not in value]
    if missing:
        raise ArrangementFormatError(f"{where}: missing keys {missing}")
    return value


def parse_document(doc: Any) -> EllipticArrangement:
    """Validate a decoded document and build the arrangement it describes."""
    top = _as_object(doc, "document", ("field", "tau", "matrix"))
    field_obj = _as_object(top["field"], "field", ("m",))
    tau_obj = _as_object(top["tau"], "tau", ("a", "b", "c"))
    matrix_obj = _as_object(top["matrix"], "matrix", ("rows", "cols", "entries"))

    try:
        field = make_field(_as_int(field_obj["m"], "field.m"))
        curve = make_curve(
            field,
            _as_int(tau_obj["a"], "tau.a"),
            _as_int(tau_obj["b"], "tau.b"),
            _as_int(tau_obj["c"], "tau.c"),
        )
    except ParameterError as exc:
        raise ArrangementFormatError(str(exc)) from exc

    rows = _as_int(matrix_obj["rows"], "matrix.rows")
    cols = _as_int(matrix_obj["cols"], "matrix.cols")
    if rows < 0 or cols < 0:
        raise ArrangementFormatError("matrix.rows and matrix.cols must be non-negative")
    entries = matrix_obj["entries"]
    if not isinstance(entries, list) or len(entries) != rows:
        raise ArrangementFormatError(
            f"matrix.entries: expected {rows} rows, got "
            f"{len(entries) if isinstance(entries, list) else type(entries).__name__}"
        )
    pairs: list[list[tuple[int, int]]] = []
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != cols:
            raise ArrangementFormatError(
                f"matrix.entries[{i}]: expected {cols} entries"
            )
        out_row: list[tuple[int, int]] = []
        for j, pair in enumerate(row):
            where = f"matrix.entries[{i}][{j}]"
            if not isinstance(pair, list) or len(pair) != 2:
                raise ArrangementFormatError(f"{where}: expected an [x, y] pair")
            out_row.append((_as_int(pair[0], where), _as_int(pair[1], where)))
        pairs.append(out_row)
    return EllipticArrangement(RingMatrix.from_pairs(curve, pairs, cols=cols))


def parse_text(text: str) -> EllipticArrangement:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ArrangementFormatError(f"invalid JSON: {exc}") from exc
    return parse_document(doc)


def load_arrangement(path: str) -> EllipticArrangement:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_text(handle.read())


def _document_of(curve: CurveParams, matrix: RingMatrix) -> dict:
    return {
        "field": {"m": curve.field.m},
        "tau": {"a": curve.a, "b": curve.b, "c": curve.c},
        "matrix": {
            "rows": matrix.k,
            "cols": matrix.n,
            "entries": [[[e.x, e.y] for e in row] for row in matrix.entries],
        },
    }


def serialize_arrangement(arr: EllipticArrangement) -> str:
    """Canonical text form; stable byte-for-byte across runs."""
    return json.dumps(_document_of(arr.curve, arr.matrix), indent=2) + "\n"


def save_arrangement(arr: EllipticArrangement, path: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(serialize_arrangement(arr))


def random_arrangement(
    k: int, n: int, m: int, a: int, b: int, c: int, bound: int, seed: int
) -> EllipticArrangement:
    """Seeded arrangement with uniform entry coordinates in [-bound, bound].

    The same seed always produces the same arrangement, hence the same
    serialized bytes.
    """
    if k < 0 or n < 0:
        raise ParameterError("k and n must be non-negative")
    if bound < 0:
        raise ParameterError("bound must be non-negative")
    curve = make_curve(make_field(m), a, b, c)
    rng = random.Random(seed)
    pairs = [
        [(rng.randint(-bound, bound), rng.randint(-bound, bound)) for _ in range(n)]
        for _ in range(k)
    ]
    return EllipticArrangement(RingMatrix.from_pairs(curve, pairs, cols=n))
