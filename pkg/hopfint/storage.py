"""Hopf algebra and comodule files: canonical JSON documents on disk.

Scalars are written as strings in lowest terms ("-1/2", or residues "0".."p-1").
Keys always appear in the same order, so identical algebras produce
byte-identical files.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import numpy as np

from hopfint.comodules import Comodule
from hopfint.errors import InvalidInput
from hopfint.exactla import Field, Matrix
from hopfint.hopf_core import HopfAlgebraData


# ── Fields ────────────────────────────────────────────────────────────────────

def field_to_document(field: Field) -> dict:
    if field.is_rational:
        return {"type": "Q"}
    return {"type": "Fp", "p": field.p}


def field_from_document(doc: Any) -> Field:
    if not isinstance(doc, dict) or doc.get("type") not in ("Q", "Fp"):
        raise InvalidInput('field must be {"type": "Q"} or {"type": "Fp", "p": P}')
    if doc["type"] == "Q":
        return Field.rationals()
    return Field.prime(doc.get("p"))


# ── Hopf algebras ─────────────────────────────────────────────────────────────

def hopf_to_document(h: HopfAlgebraData) -> dict:
    f = h.field
    n = h.dim
    return {
        "kind": "hopf_algebra",
        "field": field_to_document(f),
        "dim": n,
        "basis": list(h.basis),
        "unit": f.format_array(h.unit),
        "mult": f.format_array(h.mult),
        "counit": f.format_array(h.counit),
        "comult": f.format_array(h.comult.reshape(n, n * n)),
        "antipode": h.antipode.to_strings(),
    }


def _array(field: Field, doc: dict, key: str, shape: tuple[int, ...]) -> np.ndarray:
    if key not in doc:
        raise InvalidInput(f"document is missing {key!r}")
    arr = field.asarray(doc[key])
    if arr.shape != shape:
        raise InvalidInput(f"{key} has shape {arr.shape}, expected {shape}")
    return arr


def hopf_from_document(doc: Any, *, verify: bool = True) -> HopfAlgebraData:
    """Parse a document; with verify=True failing axioms raise HopfVerificationError."""
    if not isinstance(doc, dict) or doc.get("kind") != "hopf_algebra":
        raise InvalidInput('not a Hopf algebra document (kind must be "hopf_algebra")')
    field = field_from_document(doc.get("field"))
    n = doc.get("dim")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidInput("dim must be a positive integer")
    basis = doc.get("basis", [f"e{i}" for i in range(n)])
    if not isinstance(basis, list) or len(basis) != n:
        raise InvalidInput(f"basis must list {n} labels")
    h = HopfAlgebraData(
        field=field,
        basis=tuple(str(b) for b in basis),
        mult=_array(field, doc, "mult", (n, n, n)),
        unit=_array(field, doc, "unit", (n,)),
        comult=_array(field, doc, "comult", (n, n * n)).reshape(n, n, n),
        counit=_array(field, doc, "counit", (n,)),
        antipode=Matrix(field, _array(field, doc, "antipode", (n, n))),
        name=str(doc.get("name", "")),
    )
    return h.require_verified() if verify else h


# ── Comodules ─────────────────────────────────────────────────────────────────

def comodule_to_document(m: Comodule) -> dict:
    f = m.field
    d, n = m.dim, m.parent.dim
    return {
        "kind": "comodule",
        "field": field_to_document(f),
        "parent_dim": n,
        "dim": d,
        "name": m.label,
        "coaction": f.format_array(m.coaction.reshape(d, d * n)),
    }


def comodule_from_document(doc: Any, parent: HopfAlgebraData) -> Comodule:
    if not isinstance(doc, dict) or doc.get("kind") != "comodule":
        raise InvalidInput('not a comodule document (kind must be "comodule")')
    field = field_from_document(doc.get("field"))
    if field != parent.field:
        raise InvalidInput(f"comodule is over {field}, Hopf algebra over {parent.field}")
    if doc.get("parent_dim") != parent.dim:
        raise InvalidInput(f"comodule expects a dimension {doc.get('parent_dim')} Hopf algebra")
    d = doc.get("dim")
    if isinstance(d, bool) or not isinstance(d, int) or d < 1:
        raise InvalidInput("dim must be a positive integer")
    n = parent.dim
    coaction = _array(field, doc, "coaction", (d, d * n)).reshape(d, d, n)
    return Comodule(parent, coaction, str(doc.get("name", "")))


# ── Files ─────────────────────────────────────────────────────────────────────

def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def read_document(path: Path) -> Any:
    path = Path(path)
    if not path.exists():
        raise InvalidInput(f"{path} does not exist")
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{path} is not valid JSON: {exc}") from exc


def write_document(path: Path, doc: dict) -> None:
    Path(path).write_text(dumps(doc), encoding="utf-8")


def read_hopf(path: Path, *, verify: bool = True) -> HopfAlgebraData:
    return hopf_from_document(read_document(path), verify=verify)


def save_hopf(path: Path, h: HopfAlgebraData) -> None:
    write_document(path, hopf_to_document(h))
