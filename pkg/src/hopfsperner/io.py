"""Triangulation JSON and canonical report serialization.

Format::

    {"name": str, "dimension": int, "vertex_count": int,
     "simplices": [[int, ...], ...],
     "labels": {"<vertex>": "<label>"},      # optional
     "alphabet": ["A", "B", ...],            # optional, declared order
     "orientation": "from_order"}            # optional

With ``"orientation": "from_order"`` the tuple order of every simplex is its
orientation and must be coherent.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Any

from .complex import Complex, build_complex, orient
from .errors import HopfSpernerError, UnknownLabel
from .labeling import LabeledTriangulation, make_labeled, sort_labels


class BadFormat(HopfSpernerError):
    pass


def complex_from_dict(data: dict) -> Complex:
    if not isinstance(data, dict):
        raise BadFormat("triangulation must be a JSON object")
    try:
        simplices = [[int(v) for v in s] for s in data["simplices"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise BadFormat(f"bad or missing 'simplices': {exc}") from None
    if not simplices:
        raise BadFormat("no simplices")
    vc = data.get("vertex_count")
    oriented = data.get("orientation") == "from_order"
    c = build_complex(simplices, None if vc is None else int(vc), oriented=oriented, name=str(data.get("name", "")))
    dim = data.get("dimension")
    if dim is not None and int(dim) != c.dimension:
        raise BadFormat(f"declared dimension {dim} but simplices have dimension {c.dimension}")
    return c


def triangulation_from_dict(data: dict, alphabet=None) -> LabeledTriangulation:
    c = complex_from_dict(data)
    if "labels" not in data:
        raise UnknownLabel("triangulation has no labels")
    raw = data["labels"]
    if isinstance(raw, dict):
        labels = {int(k): str(v) for k, v in raw.items()}
    else:
        labels = {i: str(v) for i, v in enumerate(raw)}
    if alphabet is None:
        alphabet = data.get("alphabet")
    if alphabet is None:
        alphabet = sort_labels(labels.values())
    return make_labeled(c, labels, alphabet, c.name)


def read_json(path: str | Path) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise BadFormat(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise BadFormat(f"{path} is not valid JSON: {exc}") from None


def load_triangulation(path: str | Path, alphabet=None, *, orient_if_needed: bool = True) -> LabeledTriangulation:
    lt = triangulation_from_dict(read_json(path), alphabet)
    if orient_if_needed and not lt.complex.oriented and lt.complex.is_pseudomanifold:
        lt = lt.with_complex(orient(lt.complex))
    return lt


def complex_to_dict(c: Complex) -> dict:
    out = {
        "name": c.name,
        "dimension": c.dimension,
        "vertex_count": c.vertex_count,
        "simplices": [list(s) for s in c.simplices],
    }
    if c.oriented:
        out["orientation"] = "from_order"
    return out


def triangulation_to_dict(lt: LabeledTriangulation) -> dict:
    out = complex_to_dict(lt.complex)
    out["name"] = lt.name or lt.complex.name
    used = set(lt.complex.vertices)
    out["labels"] = {str(v): lt.labels[v] for v in range(lt.complex.vertex_count) if v in used}
    out["alphabet"] = list(lt.alphabet)
    return out


def dumps(obj: Any) -> str:
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def digest(path: str | Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()
