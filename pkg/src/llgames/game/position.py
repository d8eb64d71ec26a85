"""Positions: punctured, directed, signed, normally labelled trees.

Vertex ids are strings.  Teams are ``"P"`` (proponent), ``"O"``
(opponent) and, for three-team positions, ``"P'"``.  Every stored edge
label is positive; :func:`normalize` reverses and dualises the others.
"""

from __future__ import annotations

from typing import Iterable, Mapping, NamedTuple, Optional

from ..formula import Formula, dual, is_positive, show, PATOM, NATOM
from .canon import tree_code

__all__ = ["Edge", "Position", "PositionError", "TEAMS", "normalize", "sequent_of",
           "canonical_form", "iso", "single_vertex"]

TEAMS = ("P", "O", "P'")


class PositionError(ValueError):
    pass


class Edge(NamedTuple):
    src: str
    dst: str
    label: Formula

    def __repr__(self):
        return f"Edge({self.src!r}->{self.dst!r}: {show(self.label)})"


def _atom_free(f: Formula) -> bool:
    if f.op in (PATOM, NATOM):
        return False
    return all(_atom_free(a) for a in f.args)


class Position:
    """An immutable position.  Build with :meth:`create` or :func:`normalize`."""

    __slots__ = ("teams", "edges", "token", "_adj", "_code")

    def __init__(self, teams: Mapping[str, str], edges: tuple, token: Optional[str]):
        self.teams = dict(teams)
        self.edges = tuple(edges)
        self.token = token
        self._adj = None
        self._code = None

    @classmethod
    def create(cls, teams: Mapping[str, str], edges: Iterable, token: Optional[str]) -> "Position":
        p = cls(teams, tuple(Edge(*e) for e in edges), token)
        p.validate()
        return p

    def validate(self) -> None:
        vs = self.teams
        if not vs:
            raise PositionError("a position needs at least one vertex")
        for v, t in vs.items():
            if t not in TEAMS:
                raise PositionError(f"vertex {v!r} has unknown team {t!r}")
        if self.token is not None and self.token not in vs:
            raise PositionError(f"token on unknown vertex {self.token!r}")
        if len(self.edges) != len(vs) - 1:
            raise PositionError("not a tree: wrong number of edges")
        pairs = set()
        for e in self.edges:
            if e.src not in vs or e.dst not in vs:
                raise PositionError(f"edge {e} touches an unknown vertex")
            if e.src == e.dst:
                raise PositionError(f"self loop at {e.src!r}")
            if not is_positive(e.label):
                raise PositionError(f"edge {e} has a negative label")
            if not _atom_free(e.label):
                raise PositionError(f"edge {e} carries an atom")
            key = frozenset((e.src, e.dst))
            if key in pairs:
                raise PositionError("parallel edges")
            pairs.add(key)
        start = next(iter(vs))
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for _, y, _ in self.adj(x):
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != len(vs):
            raise PositionError("not a tree: disconnected")

    def adj(self, v: str) -> list:
        """``(edge, other_end, outgoing)`` for every edge at ``v``."""
        if self._adj is None:
            a = {x: [] for x in self.teams}
            for e in self.edges:
                a[e.src].append((e, e.dst, True))
                a[e.dst].append((e, e.src, False))
            self._adj = a
        return self._adj[v]

    @property
    def vertices(self) -> list:
        return list(self.teams)

    def with_token(self, token: Optional[str]) -> "Position":
        if token is not None and token not in self.teams:
            raise PositionError(f"token on unknown vertex {token!r}")
        return Position(self.teams, self.edges, token)

    def edge_between(self, a: str, b: str) -> Optional[Edge]:
        for e, y, _ in self.adj(a):
            if y == b:
                return e
        return None

    def side(self, v: str, away_from: str) -> set:
        """Vertices reachable from ``v`` without crossing the edge to ``away_from``."""
        seen = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for _, y, _ in self.adj(x):
                if y not in seen and not (x == v and y == away_from):
                    seen.add(y)
                    stack.append(y)
        return seen

    def __eq__(self, other):
        return (isinstance(other, Position) and self.token == other.token
                and self.teams == other.teams and set(self.edges) == set(other.edges))

    def __hash__(self):
        return hash((self.token, frozenset(self.teams.items()), frozenset(self.edges)))

    def __repr__(self):
        es = ", ".join(f"{e.src}->{e.dst}:{show(e.label)}" for e in self.edges)
        vs = ", ".join(f"{v}:{t}" for v, t in self.teams.items())
        return f"Position([{vs}], [{es}], token={self.token!r})"


def orient(src: str, dst: str, label: Formula) -> Edge:
    """The normal form of an edge: reversed and dualised if the label is negative."""
    if is_positive(label):
        return Edge(src, dst, label)
    return Edge(dst, src, dual(label))


def normalize(teams: Mapping[str, str], edges: Iterable, token: Optional[str]) -> Position:
    """Build a position from edges with arbitrary labels."""
    return Position.create(teams, [orient(*e) for e in edges], token)


def single_vertex(team: str = "P", vid: str = "u") -> Position:
    return Position.create({vid: team}, (), vid)


def sequent_of(p: Position, v: str) -> list:
    """Formulas seen by ``v``: output labels and duals of input labels, sorted."""
    out = [e.label if outgoing else dual(e.label) for e, _, outgoing in p.adj(v)]
    out.sort(key=lambda f: f.uid)
    return out


def canonical_form(p: Position, labels: Optional[Mapping[str, object]] = None) -> int:
    """Isomorphism-invariant code of ``p``, rooted at the token.

    ``labels`` overrides the vertex labels (teams by default), e.g. to fold
    strategy decorations into the code.
    """
    if labels is None:
        if p._code is None:
            if p.token is None:
                p._code = ("untokened", _unrooted(p))
            else:
                p._code = tree_code(list(p.teams), p.teams, p.edges, p.token)
        return p._code
    return tree_code(list(p.teams), labels, p.edges, p.token)


def _unrooted(p: Position) -> tuple:
    return tuple(sorted(tree_code(list(p.teams), p.teams, p.edges, v) for v in p.teams))


def iso(p: Position, q: Position) -> bool:
    return canonical_form(p) == canonical_form(q)
