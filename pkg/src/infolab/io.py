"""Reading and writing joint distributions as CSV or JSON.

CSV: one line per row of the grid, cells written as ``0.2`` or ``1/5``.
JSON: ``{"rows": m, "cols": n, "cells": [[...], ...]}`` where each cell is
a string (``"1/5"``) or a JSON number taken as its exact decimal value.
Both writers emit exact fractions, so output re-reads to an equal value.
"""

from __future__ import annotations

import csv
import io
import json
from decimal import Decimal
from fractions import Fraction
from pathlib import Path

from .dist import Dist, JointDist, as_prob, validate_dist, validate_joint
from .errors import ParseError, ValidationError

__all__ = [
    "format_fraction",
    "joint_from_csv",
    "joint_from_json",
    "joint_to_csv",
    "joint_to_json",
    "load_json",
    "read_joint",
]


def format_fraction(p: Fraction) -> str:
    return str(p)


def load_json(text: str):
    """Parse JSON keeping non-integer numbers as exact Decimals."""
    try:
        return json.loads(text, parse_float=Decimal)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg} at line {exc.lineno}") from exc


def joint_from_csv(text: str) -> JointDist:
    rows = [
        [cell for cell in row]
        for row in csv.reader(io.StringIO(text))
        if row and any(cell.strip() for cell in row)
    ]
    return validate_joint(rows)


def joint_from_json(text: str) -> JointDist:
    doc = load_json(text)
    if not isinstance(doc, dict) or "cells" not in doc:
        raise ParseError('JSON joint needs a "cells" field')
    cells = doc["cells"]
    if not isinstance(cells, list) or not all(isinstance(r, list) for r in cells):
        raise ParseError('"cells" must be a list of lists')
    joint = validate_joint(cells)
    m, n = joint.shape
    if doc.get("rows", m) != m or doc.get("cols", n) != n:
        raise ValidationError(
            f"declared shape {doc.get('rows')}x{doc.get('cols')} "
            f"does not match cells {m}x{n}"
        )
    return joint


def joint_to_csv(joint: JointDist) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in joint.cells:
        writer.writerow([format_fraction(c) for c in row])
    return buf.getvalue()


def joint_to_json(joint: JointDist) -> str:
    m, n = joint.shape
    doc = {
        "rows": m,
        "cols": n,
        "cells": [[format_fraction(c) for c in row] for row in joint.cells],
    }
    return json.dumps(doc)


def dist_from_json_value(value, what: str = "distribution") -> Dist:
    if not isinstance(value, list):
        raise ParseError(f"{what} must be a JSON list")
    return validate_dist(value)


def _read_text(path: str | Path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc


def read_joint(path: str | Path) -> JointDist:
    """Load a joint from ``path``; ``.json`` files are JSON, others CSV.

    A JSON document of the form ``{"weights": [...]}`` is read as a
    single-row joint.
    """
    text = _read_text(path)
    if str(path).endswith(".json"):
        doc = load_json(text)
        if isinstance(doc, dict) and "weights" in doc and "cells" not in doc:
            d = dist_from_json_value(doc["weights"], "weights")
            return JointDist((d.weights,))
        return joint_from_json(text)
    return joint_from_csv(text)


def read_model_doc(path: str | Path) -> tuple[Dist, Dist]:
    """Load ``{"prior": [...], "key": [...]}`` as two exact distributions."""
    doc = load_json(_read_text(path))
    if not isinstance(doc, dict) or "prior" not in doc or "key" not in doc:
        raise ParseError('model JSON needs "prior" and "key" fields')
    return (
        dist_from_json_value(doc["prior"], "prior"),
        dist_from_json_value(doc["key"], "key"),
    )


def parse_rational_arg(text: str) -> Fraction:
    """Command-line helper: ``"1/10"`` or ``"0.1"`` to a Fraction."""
    return as_prob(text)
