"""JSON forms of polytopes and unions.  Rationals are always strings."""

from __future__ import annotations

import json
from fractions import Fraction

from .game import Chain, format_coalition, format_rational, parse_rational
from .geometry import HPolytope, PolyUnion, VPolytope


def rationals(xs) -> list[str]:
    return [format_rational(x) for x in xs]


def _rows(items) -> list[list[str]]:
    return [rationals(list(row) + [rhs]) for row, rhs in items]


def polytope_to_json(P, *, emit_h: bool = False) -> dict:
    """H-polytopes always carry their rows; V-polytopes only with ``emit_h``."""
    if isinstance(P, VPolytope):
        out = {}
        if emit_h:
            H = P.to_h()
            out["equalities"] = _rows(H.equalities)
            out["inequalities"] = _rows(H.inequalities)
        out["vertices"] = [rationals(p) for p in P.points]
        return out
    return {
        "equalities": _rows(P.equalities),
        "inequalities": _rows(P.inequalities),
        "vertices": [rationals(p) for p in P.vertex_list()],
    }


def label_to_json(label):
    if isinstance(label, Chain):
        return {"chain": label.label()}
    if isinstance(label, int):
        return {"coalition": format_coalition(label)}
    if label is None:
        return {}
    return {"label": _plain(label)}


def _plain(x):
    if isinstance(x, (tuple, list)):
        return [_plain(c) for c in x]
    if isinstance(x, Fraction):
        return format_rational(x)
    return x


def union_to_json(U: PolyUnion, *, emit_h: bool = True) -> dict:
    comps = []
    for c in U.components:
        item = label_to_json(c.label)
        item["empty"] = c.empty
        body = polytope_to_json(c.polytope)
        if not emit_h:
            body = {"vertices": body["vertices"]}
        item.update(body)
        comps.append(item)
    return {"n": U.n, "components": comps}


def _parse_rows(rows, n):
    out = []
    for r in rows:
        vals = [parse_rational(c) for c in r]
        if len(vals) != n + 1:
            raise ValueError(f"constraint row has {len(vals) - 1} coefficients, expected {n}")
        out.append((tuple(vals[:-1]), vals[-1]))
    return out


def polytope_from_json(data: dict, n: int | None = None):
    """An H-polytope when rows are present, otherwise a V-polytope."""
    verts = [tuple(parse_rational(c) for c in p) for p in data.get("vertices", [])]
    if n is None:
        if "n" in data:
            n = int(data["n"])
        elif verts:
            n = len(verts[0])
        else:
            rows = data.get("equalities") or data.get("inequalities") or []
            if not rows:
                raise ValueError("cannot infer the dimension of an empty description")
            n = len(rows[0]) - 1
    if "equalities" in data or "inequalities" in data:
        return HPolytope(n, _parse_rows(data.get("equalities", []), n), _parse_rows(data.get("inequalities", []), n))
    return VPolytope(n, verts)


def load_set(data: dict):
    """Parse a polytope or a union (``{"components": [...]}``) document."""
    if "components" in data:
        n = data.get("n")
        comps = []
        for k, c in enumerate(data["components"]):
            if c.get("empty"):
                continue
            comps.append((k, polytope_from_json(c, n)))
        if n is None:
            if not comps:
                raise ValueError("union without nonempty components needs an explicit n")
            n = comps[0][1].n
        return PolyUnion(n, comps)
    return polytope_from_json(data)


def emitted_vertices(data: dict) -> list[tuple[Fraction, ...]]:
    if "components" in data:
        pts = []
        for c in data["components"]:
            pts.extend(tuple(parse_rational(x) for x in p) for p in c.get("vertices", []))
        return pts
    return [tuple(parse_rational(x) for x in p) for p in data.get("vertices", [])]


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


__all__ = [
    "dumps",
    "emitted_vertices",
    "label_to_json",
    "load_set",
    "polytope_from_json",
    "polytope_to_json",
    "rationals",
    "union_to_json",
]
