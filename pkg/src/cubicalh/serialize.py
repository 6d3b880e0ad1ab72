"""JSON file formats for complexes, posets, subdivisions and formal subdivisions."""
from __future__ import annotations

import hashlib
import json
from pathlib import Path

from .complexes import CubicalComplex, FaceComplex, SimplicialComplex
from .errors import CubicalHError, ParseError
from .formal import FormalSubdivision
from .poset import Poset
from .subdivision import SubdivisionMap


def dumps(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def complex_to_json(K: FaceComplex) -> dict:
    return K.to_json()


def complex_from_json(data: dict) -> FaceComplex:
    kind = data.get("kind")
    cls = {"cubical": CubicalComplex, "simplicial": SimplicialComplex}.get(kind)
    if cls is None:
        raise ParseError(f"unknown complex kind {kind!r}")
    faces, codes = [], {}
    for entry in data.get("faces", []):
        try:
            fid, dim, covers = str(entry["id"]), int(entry["dim"]), [str(c) for c in entry.get("covers", [])]
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed face entry {entry!r}") from exc
        faces.append((fid, dim, covers))
        if "code" in entry:
            codes[fid] = str(entry["code"])
    return cls.from_face_covers(faces, codes=codes or None)


def poset_to_json(P: Poset) -> dict:
    return P.to_json()


def poset_from_json(data: dict) -> Poset:
    try:
        return Poset([str(e) for e in data["elements"]],
                     [(str(a), str(b)) for a, b in data["covers"]])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError("poset needs 'elements' and 'covers' pairs") from exc


def subdivision_to_json(s: SubdivisionMap) -> dict:
    return {"source": s.source.to_json(), "target": s.target.to_json(),
            "carrier": {str(k): str(v) for k, v in s.carrier.items()}}


def subdivision_from_json(data: dict) -> SubdivisionMap:
    return SubdivisionMap(complex_from_json(data["source"]), complex_from_json(data["target"]),
                          {str(k): str(v) for k, v in data["carrier"].items()})


def formal_to_json(F: FormalSubdivision) -> dict:
    out = {"source": F.source.to_json(), "target": F.target.to_json(),
           "sigma": {str(k): str(v) for k, v in F.sigma.items()}}
    if F.ranks:
        out["ranks"] = dict(F.ranks)
    return out


def formal_from_json(data: dict) -> FormalSubdivision:
    ranks = data.get("ranks")
    return FormalSubdivision(poset_from_json(data["source"]), poset_from_json(data["target"]),
                             {str(k): str(v) for k, v in data["sigma"].items()},
                             {str(k): int(v) for k, v in ranks.items()} if ranks else None)


def detect_kind(data) -> str:
    if not isinstance(data, dict):
        raise ParseError("top-level JSON value must be an object")
    if "carrier" in data:
        return "subdivision"
    if "sigma" in data:
        return "formal"
    if "faces" in data:
        return "complex"
    if "elements" in data:
        return "poset"
    raise ParseError("unrecognized file: expected a complex, poset, subdivision or formal subdivision")


def to_json(kind: str, obj) -> dict:
    return {"complex": complex_to_json, "poset": poset_to_json, "subdivision": subdivision_to_json,
            "formal": formal_to_json}[kind](obj)


def from_json(data):
    kind = detect_kind(data)
    loader = {"complex": complex_from_json, "poset": poset_from_json,
              "subdivision": subdivision_from_json, "formal": formal_from_json}[kind]
    try:
        return kind, loader(data)
    except ParseError:
        raise
    except (CubicalHError, KeyError, TypeError, ValueError, AttributeError) as exc:
        raise ParseError(f"invalid {kind}: {exc}") from exc


def load(path) -> tuple[str, object, str]:
    """Read a file; returns ``(kind, object, sha256 hex digest)``."""
    try:
        raw = Path(path).read_bytes()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc
    kind, obj = from_json(data)
    return kind, obj, hashlib.sha256(raw).hexdigest()


def save(path, kind: str, obj):
    Path(path).write_text(dumps(to_json(kind, obj)), encoding="utf-8")
