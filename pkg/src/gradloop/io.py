"""JSON documents: loading, kind detection, and canonical serialization.

Documents are UTF-8 JSON with the field order fixed by the producers, so
equal inputs give byte-identical output and stable sha256 digests.
"""
from __future__ import annotations

import hashlib
import json

from .abgroup import FiniteAbelianGroup, MAX_ORDER, load_subgroup
from .cohom import validate_cocycle
from .errors import DocumentError
from .exactnum.values import ValueGroup
from .galg.algebra import MAX_DIM, validate_algebra


def dumps(doc):
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def digest(data):
    if isinstance(data, str):
        data = data.encode("utf-8")
    return hashlib.sha256(data).hexdigest()


def read_document(path):
    """``(doc, sha256 of the raw bytes)``; OSError propagates (an I/O failure)."""
    with open(path, "rb") as fh:
        raw = fh.read()
    try:
        doc = json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise DocumentError(f"{path}: not a JSON document ({exc})", path) from None
    return doc, digest(raw)


def document_kind(doc):
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    if "command" in doc and "verdict" in doc:
        return "report"
    if {"H", "A", "tau"} <= doc.keys():
        return "triple"
    if "products" in doc or "degrees" in doc:
        return "algebra"
    if "table" in doc:
        return "cocycle"
    if "images" in doc:
        return "character"
    if "invariant_factors" in doc:
        return "group"
    raise DocumentError("unrecognized document kind")


def load_group(doc, max_order=MAX_ORDER):
    try:
        return FiniteAbelianGroup(tuple(int(n) for n in doc["invariant_factors"]), max_order=max_order)
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError(f"malformed group document: {exc}") from None


def load_coeffs(doc, max_order=MAX_ORDER):
    if doc is None:
        return None
    if "group" in doc:
        return load_group(doc["group"], max_order)
    return ValueGroup.from_doc(doc)


def load_cocycle(doc, max_order=MAX_ORDER, symmetric=True):
    """A validated, normalized cocycle from ``{"group", "coeffs"?, "table"}``."""
    try:
        G = load_group(doc["group"], max_order)
        C = load_coeffs(doc.get("coeffs"), max_order)
        table = doc["table"]
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"malformed cocycle document: {exc}") from None
    if isinstance(C, FiniteAbelianGroup):
        table = [[tuple(int(x) for x in e) for e in row] for row in table]
    return validate_cocycle(G, C, table, symmetric=symmetric)


def load_algebra(doc, max_dim=MAX_DIM, max_order=MAX_ORDER):
    return validate_algebra(doc, max_dim=max_dim, max_order=max_order)


def load_triple(doc, max_dim=MAX_DIM, max_order=MAX_ORDER):
    from .loop import make_triple
    tau = load_cocycle(doc["tau"], max_order)
    try:
        H = load_subgroup(tau.group, doc["H"])
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"malformed subgroup: {exc}") from None
    A = load_algebra(doc["A"], max_dim, max_order)
    return make_triple(H, tau, A)


def load_character(doc, H):
    """Character of ``H.abstract`` from ``{"torsion": T, "images": [k_i]}``.

    ``k_i`` is the exponent of ``zeta_T`` assigned to the i-th canonical
    generator.
    """
    from .abgroup import GroupHom
    A = H.abstract
    try:
        T = int(doc["torsion"])
        images = [int(k) for k in doc["images"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError(f"malformed character document: {exc}") from None
    if len(images) != A.rank:
        raise DocumentError(f"character needs {A.rank} generator images, got {len(images)}")
    return GroupHom(A, ValueGroup(T, ()), (tuple(images),))


def unwrap(doc):
    """The payload of a single-result report, else the document itself."""
    if isinstance(doc, dict) and document_kind(doc) == "report":
        results = doc.get("results", [])
        if len(results) == 1 and isinstance(results[0].get("result"), dict):
            return results[0]["result"]
    return doc


def validate_report(doc, max_dim=MAX_DIM, max_order=MAX_ORDER):
    """Check report structure and re-validate any embedded document."""
    try:
        for entry in doc["inputs"]:
            if not isinstance(entry["path"], str) or len(entry["sha256"]) != 64:
                raise DocumentError("bad input entry in report")
        results = doc["results"]
        for entry in results:
            payload = entry["result"]
            entry["verdict"]
            for value in (payload, *(payload.values() if isinstance(payload, dict) else ())):
                if isinstance(value, dict):
                    try:
                        kind = document_kind(value)
                    except DocumentError:
                        continue
                    if kind in ("algebra", "cocycle", "triple"):
                        load_any(value, max_dim, max_order)
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"malformed report: {exc}") from None
    return doc


def load_any(doc, max_dim=MAX_DIM, max_order=MAX_ORDER):
    kind = document_kind(doc)
    if kind == "algebra":
        return kind, load_algebra(doc, max_dim, max_order)
    if kind == "cocycle":
        return kind, load_cocycle(doc, max_order)
    if kind == "triple":
        return kind, load_triple(doc, max_dim, max_order)
    if kind == "group":
        return kind, load_group(doc, max_order)
    if kind == "report":
        return kind, validate_report(doc, max_dim, max_order)
    return kind, doc


def parse_group_flag(text, max_order=MAX_ORDER):
    """``"2,4"`` -> C2 x C4."""
    try:
        factors = tuple(int(x) for x in text.split(",") if x.strip())
        return FiniteAbelianGroup(factors, max_order=max_order)
    except ValueError as exc:
        raise DocumentError(f"bad --group value {text!r}: {exc}") from None


def parse_subgroup_flag(G, text):
    """``"0,2;1,0"`` -> subgroup generated by (0,2) and (1,0); ``""`` is trivial."""
    gens = []
    for part in text.split(";"):
        if part.strip():
            try:
                g = tuple(int(x) for x in part.split(","))
            except ValueError:
                raise DocumentError(f"bad --subgroup value {text!r}") from None
            if len(g) != G.rank:
                raise DocumentError(f"subgroup generator {part!r} has the wrong length")
            gens.append(g)
    return G.subgroup(gens)
