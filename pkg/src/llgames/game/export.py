"""JSON and DOT output for positions."""

from __future__ import annotations

import json

from ..formula import parse, show
from .position import Position, normalize

__all__ = ["position_to_json", "position_from_json", "load_position", "dump_position", "to_dot"]

_SHAPES = {"P": "circle", "O": "box", "P'": "diamond"}


def position_to_json(p: Position) -> dict:
    return {
        "vertices": [{"id": v, "team": t} for v, t in p.teams.items()],
        "edges": [{"src": e.src, "dst": e.dst, "label": show(e.label)} for e in p.edges],
        "token": p.token,
    }


def position_from_json(d: dict) -> Position:
    """Load a position; labels are parsed without atoms and normalized."""
    teams = {str(v["id"]): v["team"] for v in d["vertices"]}
    edges = [(str(e["src"]), str(e["dst"]), parse(e["label"], atoms=False)) for e in d.get("edges", [])]
    tok = d.get("token")
    return normalize(teams, edges, None if tok is None else str(tok))


def load_position(path) -> Position:
    with open(path) as fh:
        return position_from_json(json.load(fh))


def dump_position(p: Position, path) -> None:
    with open(path, "w") as fh:
        json.dump(position_to_json(p), fh, indent=1)
        fh.write("\n")


def to_dot(p: Position, name: str = "position") -> str:
    """Graphviz source: teams as shapes, the token as a double border."""
    lines = [f"digraph {json.dumps(name)} {{"]
    for v, t in p.teams.items():
        extra = ", peripheries=2" if v == p.token else ""
        lines.append(f"  {json.dumps(v)} [shape={_SHAPES[t]}, label={json.dumps(v + ':' + t)}{extra}];")
    for e in p.edges:
        lines.append(f"  {json.dumps(e.src)} -> {json.dumps(e.dst)} [label={json.dumps(show(e.label))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
