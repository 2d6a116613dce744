"""Reading and writing sample/reference Z-number documents.

JSON layout::

    {"attribute_names": [...],            # optional
     "samples":    [{"label": ..., "attributes": [{"a": .., "b": ..}, ...]}, ...],
     "references": [ same shape ]}

CSV layout: two blocks, each opened by the header ``label,a1,b1,...,aK,bK``.
The first block holds the samples, the second the references.
"""
from __future__ import annotations

import csv
import io
import json
from importlib import resources
from pathlib import Path

from .errors import ArityError, IngestionError, MembershipError
from .madm import ZMatrix, build_zmatrix


def _rows_from_entities(entities, role: str):
    if not isinstance(entities, list) or not entities:
        raise IngestionError(f"'{role}' must be a nonempty list")
    labels, rows = [], []
    for i, ent in enumerate(entities):
        where = f"{role}[{i}]"
        if not isinstance(ent, dict) or "attributes" not in ent:
            raise IngestionError(f"{where}: expected an object with 'attributes'")
        label = str(ent.get("label", f"{role}{i + 1}"))
        if label in labels:
            raise IngestionError(f"{where}: duplicate label {label!r}")
        labels.append(label)
        row = []
        for j, att in enumerate(ent["attributes"]):
            if not isinstance(att, dict) or "a" not in att or "b" not in att:
                raise IngestionError(f"{where}.attributes[{j}]: expected {{'a': .., 'b': ..}}")
            row.append((att["a"], att["b"]))
        rows.append(row)
    return labels, rows


def _to_matrix(rows, labels, names, role: str) -> ZMatrix:
    try:
        return build_zmatrix(rows, labels, names)
    except (MembershipError, ArityError) as exc:
        raise IngestionError(f"{role}: {exc}") from None


def load_document(doc: dict) -> tuple[ZMatrix, ZMatrix]:
    if not isinstance(doc, dict):
        raise IngestionError("document must be a JSON object")
    for key in ("samples", "references"):
        if key not in doc:
            raise IngestionError(f"missing '{key}'")
    s_labels, s_rows = _rows_from_entities(doc["samples"], "samples")
    r_labels, r_rows = _rows_from_entities(doc["references"], "references")
    k = len(s_rows[0])
    for role, rows in (("samples", s_rows), ("references", r_rows)):
        for i, row in enumerate(rows):
            if len(row) != k:
                raise IngestionError(f"{role}[{i}]: {len(row)} attributes, expected {k}")
    names = doc.get("attribute_names")
    if names is not None and len(names) != k:
        raise IngestionError(f"attribute_names has {len(names)} entries, expected {k}")
    return (
        _to_matrix(s_rows, s_labels, names, "samples"),
        _to_matrix(r_rows, r_labels, names, "references"),
    )


def emit_document(samples: ZMatrix, references: ZMatrix) -> dict:
    def entities(m: ZMatrix):
        return [
            {"label": label, "attributes": [{"a": a, "b": b} for a, b in row]}
            for label, row in zip(m.row_labels, m.pairs())
        ]

    return {
        "attribute_names": list(samples.column_labels),
        "samples": entities(samples),
        "references": entities(references),
    }


def _parse_csv(text: str) -> tuple[ZMatrix, ZMatrix]:
    blocks: list[list[tuple[int, list[str]]]] = []
    header = None
    for lineno, rec in enumerate(csv.reader(io.StringIO(text)), start=1):
        if not rec or all(not c.strip() for c in rec):
            continue
        rec = [c.strip() for c in rec]
        if rec[0].lower() == "label":
            if header is not None and rec != header:
                raise IngestionError(f"line {lineno}: header differs from the first block")
            header = rec
            blocks.append([])
            continue
        if not blocks:
            raise IngestionError(f"line {lineno}: data before the header row")
        blocks[-1].append((lineno, rec))
    if len(blocks) != 2:
        raise IngestionError(f"expected 2 header-led blocks (samples, references), found {len(blocks)}")
    ncols = len(header)
    if ncols < 3 or (ncols - 1) % 2:
        raise IngestionError("header must read label,a1,b1,...,aK,bK")
    k = (ncols - 1) // 2
    mats = []
    for role, block in zip(("samples", "references"), blocks):
        if not block:
            raise IngestionError(f"{role} block is empty")
        labels, rows = [], []
        for lineno, rec in block:
            if len(rec) != ncols:
                raise IngestionError(f"line {lineno}: {len(rec)} fields, expected {ncols}")
            if rec[0] in labels:
                raise IngestionError(f"line {lineno}: duplicate label {rec[0]!r}")
            labels.append(rec[0])
            row = []
            for j in range(k):
                pair = []
                for field_name, raw in ((header[1 + 2 * j], rec[1 + 2 * j]), (header[2 + 2 * j], rec[2 + 2 * j])):
                    try:
                        pair.append(float(raw))
                    except ValueError:
                        raise IngestionError(f"line {lineno}, field {field_name}: {raw!r} is not a number") from None
                row.append(tuple(pair))
            rows.append(row)
        try:
            mats.append(build_zmatrix(rows, labels))
        except (MembershipError, ArityError) as exc:
            raise IngestionError(f"{role}: {exc}") from None
    return mats[0], mats[1]


def ingest(path, fmt: str | None = None) -> tuple[ZMatrix, ZMatrix]:
    """Load ``(samples, references)`` from a JSON or CSV file."""
    path = Path(path)
    fmt = (fmt or path.suffix.lstrip(".")).lower()
    try:
        text = path.read_text()
    except OSError as exc:
        raise IngestionError(f"cannot read {path}: {exc}") from None
    if fmt == "json":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise IngestionError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
        return load_document(doc)
    if fmt == "csv":
        return _parse_csv(text)
    raise IngestionError(f"unknown input format {fmt!r}")


def write_json(samples: ZMatrix, references: ZMatrix, path) -> Path:
    path = Path(path)
    path.write_text(json.dumps(emit_document(samples, references), indent=2) + "\n")
    return path


def bundled_path(name: str = "medical.json") -> Path:
    return Path(str(resources.files("quantum_znumbers") / "data" / name))


def medical_case() -> tuple[ZMatrix, ZMatrix]:
    """Three patients against four diagnoses over four symptoms."""
    return ingest(bundled_path("medical.json"))
