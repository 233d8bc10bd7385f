"""JSON forms of point sets and families.

Point sets: {"n": int, "points": [{"id", "x", "y", "color"?}]}
Families:   {"kind", "pattern", "t", "claimed_bound",
             "members": [{"vertices": [...], "edges": [[a, b], ...]}],
             "meta"?: {...}}

Emission is canonical (sorted member edges, color omitted when absent,
meta omitted when empty) so parse(emit(x)) == x and emit(parse(d)) is
stable for diffing.
"""

from __future__ import annotations

import json
from typing import Any, Dict, IO, Union

from .construct import Family
from .geom import GeomError, Point, PointSet, Subgraph, is_general_position


class FormatError(ValueError):
    """Input JSON does not match the documented shapes."""


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise FormatError(msg)


def pointset_to_dict(ps: PointSet) -> Dict[str, Any]:
    pts = []
    for p in ps:
        rec: Dict[str, Any] = {"id": p.id, "x": p.x, "y": p.y}
        if p.color is not None:
            rec["color"] = p.color
        pts.append(rec)
    return {"n": len(ps), "points": pts}


def pointset_from_dict(d: Any, require_general_position: bool = True
                       ) -> PointSet:
    _require(isinstance(d, dict), "point set must be a JSON object")
    _require("points" in d, 'point set needs a "points" array')
    raw = d["points"]
    _require(isinstance(raw, list), '"points" must be an array')
    pts = []
    for i, rec in enumerate(raw):
        _require(isinstance(rec, dict), f"points[{i}] must be an object")
        for key in ("id", "x", "y"):
            _require(key in rec, f'points[{i}] lacks "{key}"')
            _require(isinstance(rec[key], int) and not isinstance(rec[key], bool),
                     f'points[{i}].{key} must be an integer')
        color = rec.get("color")
        if color is not None:
            _require(color in ("r", "b"),
                     f'points[{i}].color must be "r" or "b"')
        pts.append(Point(rec["id"], rec["x"], rec["y"], color))
    if "n" in d:
        _require(d["n"] == len(pts),
                 f'"n" says {d["n"]} but {len(pts)} points given')
    try:
        ps = PointSet(pts)
    except GeomError as e:
        raise FormatError(str(e)) from e
    if require_general_position and not is_general_position(ps):
        raise FormatError("points are not in general position "
                          "(three collinear)")
    return ps


def family_to_dict(fam: Family) -> Dict[str, Any]:
    members = []
    for g in fam.members:
        members.append({
            "vertices": list(g.vertices),
            "edges": [[e.a, e.b] for e in g.edges],
        })
    out: Dict[str, Any] = {
        "kind": fam.kind,
        "pattern": fam.pattern,
        "t": fam.t,
        "claimed_bound": fam.claimed_bound,
        "members": members,
    }
    if fam.meta:
        out["meta"] = fam.meta
    return out


def family_from_dict(d: Any) -> Family:
    _require(isinstance(d, dict), "family must be a JSON object")
    for key in ("kind", "pattern", "claimed_bound", "members"):
        _require(key in d, f'family lacks "{key}"')
    kind, pattern = d["kind"], d["pattern"]
    _require(kind in ("crossing", "intersecting"),
             f'family kind must be "crossing" or "intersecting", '
             f'got {kind!r}')
    _require(isinstance(pattern, str), "family pattern must be a string")
    t = d.get("t")
    _require(t is None or (isinstance(t, int) and not isinstance(t, bool)),
             '"t" must be an integer or null')
    claimed = d["claimed_bound"]
    _require(isinstance(claimed, int) and not isinstance(claimed, bool)
             and claimed >= 0, '"claimed_bound" must be a non-negative '
             'integer')
    _require(isinstance(d["members"], list), '"members" must be an array')
    members = []
    for i, rec in enumerate(d["members"]):
        _require(isinstance(rec, dict) and "vertices" in rec
                 and "edges" in rec,
                 f'members[{i}] needs "vertices" and "edges"')
        verts = rec["vertices"]
        edges = rec["edges"]
        _require(isinstance(verts, list)
                 and all(isinstance(v, int) and not isinstance(v, bool)
                         for v in verts),
                 f"members[{i}].vertices must be integers")
        _require(isinstance(edges, list)
                 and all(isinstance(e, list) and len(e) == 2 for e in edges),
                 f"members[{i}].edges must be [a, b] pairs")
        try:
            members.append(Subgraph.of(pattern, verts,
                                       [(e[0], e[1]) for e in edges], t=t))
        except GeomError as e:
            raise FormatError(f"members[{i}]: {e}") from e
    meta = d.get("meta", {})
    _require(isinstance(meta, dict), '"meta" must be an object')
    return Family(kind, pattern, members, claimed, t=t, meta=meta)


def dump_json(obj: Dict[str, Any], fp: IO[str]) -> None:
    json.dump(obj, fp, indent=2, sort_keys=False)
    fp.write("\n")


def load_json(fp: Union[IO[str], str]) -> Any:
    text = fp if isinstance(fp, str) else fp.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"invalid JSON: {e}") from e
