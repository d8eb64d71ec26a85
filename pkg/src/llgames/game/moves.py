"""The move relation.

The token-holding vertex ``v`` acts on one of its edges:

* NegativePass: along any input edge; the token moves, nothing else does.
* OneDelete: an output 1-edge that is ``v``'s only edge; ``v`` disappears.
* TensorSplit: an output A*B-edge; ``v`` splits into ``v`` (keeping the
  A side and the subtrees sent left) and a fresh ``v2`` (B side and the
  subtrees sent right).  Subtrees hanging off output ?-edges may also be
  shared, in which case ``v2`` gets a fresh copy.
* PlusLeft / PlusRight: an output A+B-edge is relabelled A or B.
* Naive game: NaiveDereliction (?A becomes A) and NaiveWeakening (the edge
  and the whole far subtree are erased, the token stays).
* LLTN game: ExpoChoice(n) turns the output ?A-edge into the reversed edge
  labelled with n copies of dual(A) tensored together.
* Exotic (optional): an output 1-edge becomes a reversed 0-edge.

Except for NaiveWeakening the token passes to the far end of the edge.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Optional

from ..formula import ZERO, dual, power, O1, TENS, PLUS, WN
from .position import Edge, Position, PositionError, orient

__all__ = ["Move", "Variant", "Caps", "IllegalMove", "enumerate_moves", "legal_moves", "apply_move",
           "successor", "MOVE_KINDS"]

MOVE_KINDS = ("NegativePass", "OneDelete", "TensorSplit", "PlusLeft", "PlusRight",
              "NaiveDereliction", "NaiveWeakening", "ExpoChoice", "Exotic")


class Variant(str, enum.Enum):
    NAIVE = "naive"
    LLTN = "lltn"


@dataclass(frozen=True)
class Caps:
    expo_cap: int = 2
    budget: int = 10**7

    def __post_init__(self):
        if self.expo_cap < 0 or self.budget < 0:
            raise ValueError("caps must be >= 0")


class IllegalMove(ValueError):
    pass


@dataclass(frozen=True)
class Move:
    """A move of the token holder on the edge to ``target``.

    ``parts`` (TensorSplit only) maps each other neighbour of the active
    vertex to ``"L"``, ``"R"`` or ``"S"`` (shared ?-subtree).
    """

    kind: str
    active: str
    target: str
    n: Optional[int] = None
    parts: tuple = ()

    def __str__(self):
        s = f"{self.kind}({self.active}->{self.target}"
        if self.n is not None:
            s += f", n={self.n}"
        if self.parts:
            s += ", " + " ".join(f"{w}:{k}" for w, k in self.parts)
        return s + ")"


@dataclass
class _Info:
    """Bookkeeping of a transition, for strategies that follow vertices."""

    v2: Optional[str] = None
    copies: dict = field(default_factory=dict)     # new id -> original id
    removed: tuple = ()


def enumerate_moves(p: Position, variant=Variant.LLTN, caps: Caps = Caps(), exotic: bool = False) -> list:
    """All legal ``(Move, successor)`` pairs for the token holder."""
    return [(m, successor(p, m)[0]) for m in legal_moves(p, variant, caps, exotic)]


def legal_moves(p: Position, variant=Variant.LLTN, caps: Caps = Caps(), exotic: bool = False) -> list:
    variant = Variant(variant)
    v = p.token
    if v is None:
        return []
    out = []
    nbrs = p.adj(v)
    for e, u, outgoing in nbrs:
        if not outgoing:
            out.append(Move("NegativePass", v, u))
            continue
        op = e.label.op
        if op == O1:
            if len(nbrs) == 1:
                out.append(Move("OneDelete", v, u))
            if exotic:
                out.append(Move("Exotic", v, u))
        elif op == TENS:
            others = [(w, oe) for oe, w, _ in nbrs if w != u]
            opts = []
            for w, oe in others:
                shareable = oe.src == v and oe.label.op == WN
                opts.append(("L", "R", "S") if shareable else ("L", "R"))
            for choice in itertools.product(*opts):
                parts = tuple(sorted(zip((w for w, _ in others), choice)))
                out.append(Move("TensorSplit", v, u, parts=parts))
        elif op == PLUS:
            out.append(Move("PlusLeft", v, u))
            out.append(Move("PlusRight", v, u))
        elif op == WN:
            if variant is Variant.NAIVE:
                out.append(Move("NaiveDereliction", v, u))
                out.append(Move("NaiveWeakening", v, u))
            else:
                for n in range(caps.expo_cap + 1):
                    out.append(Move("ExpoChoice", v, u, n=n))
    return out


def _fresh(base: str, used: set) -> str:
    k = 1
    while f"{base}.{k}" in used:
        k += 1
    name = f"{base}.{k}"
    used.add(name)
    return name


def _check(p: Position, m: Move) -> Edge:
    if m.kind not in MOVE_KINDS:
        raise IllegalMove(f"unknown move kind {m.kind}")
    if p.token != m.active:
        raise IllegalMove(f"{m.active!r} does not hold the token")
    e = p.edge_between(m.active, m.target)
    if e is None:
        raise IllegalMove(f"no edge between {m.active!r} and {m.target!r}")
    outgoing = e.src == m.active
    if m.kind == "NegativePass":
        if outgoing:
            raise IllegalMove("NegativePass needs an input edge")
        return e
    if not outgoing:
        raise IllegalMove(f"{m.kind} needs an output edge")
    op = e.label.op
    need = {"OneDelete": O1, "Exotic": O1, "TensorSplit": TENS, "PlusLeft": PLUS, "PlusRight": PLUS,
            "NaiveDereliction": WN, "NaiveWeakening": WN, "ExpoChoice": WN}[m.kind]
    if op != need:
        raise IllegalMove(f"{m.kind} does not apply to label {e.label}")
    if m.kind == "OneDelete" and len(p.adj(m.active)) != 1:
        raise IllegalMove("OneDelete needs the 1-edge to be the only edge")
    if m.kind == "ExpoChoice" and (m.n is None or m.n < 0):
        raise IllegalMove("ExpoChoice needs n >= 0")
    if m.kind == "TensorSplit":
        others = {w: oe for oe, w, _ in p.adj(m.active) if w != m.target}
        got = dict(m.parts)
        if set(got) != set(others) or len(got) != len(m.parts):
            raise IllegalMove("TensorSplit partition must cover every other neighbour once")
        for w, k in got.items():
            if k not in ("L", "R", "S"):
                raise IllegalMove(f"bad part {k!r}")
            oe = others[w]
            if k == "S" and not (oe.src == m.active and oe.label.op == WN):
                raise IllegalMove("only output ?-subtrees can be shared")
    return e


def successor(p: Position, m: Move) -> tuple:
    """``(position, info)`` after ``m``; raises :class:`IllegalMove`."""
    e = _check(p, m)
    v, u = m.active, m.target
    teams = dict(p.teams)
    edges = [x for x in p.edges if x is not e]
    info = _Info()
    token = u
    kind = m.kind
    if kind == "NegativePass":
        return Position(p.teams, p.edges, u), info
    if kind == "OneDelete":
        del teams[v]
        info.removed = (v,)
    elif kind == "Exotic":
        edges.append(Edge(u, v, ZERO))
    elif kind in ("PlusLeft", "PlusRight"):
        a = e.label.left if kind == "PlusLeft" else e.label.right
        edges.append(orient(v, u, a))
    elif kind == "NaiveDereliction":
        edges.append(orient(v, u, e.label.body))
    elif kind == "NaiveWeakening":
        gone = p.side(u, v)
        for x in gone:
            del teams[x]
        edges = [x for x in edges if x.src not in gone and x.dst not in gone]
        info.removed = tuple(sorted(gone))
        token = v
    elif kind == "ExpoChoice":
        edges.append(orient(u, v, power(dual(e.label.body), m.n)))
    elif kind == "TensorSplit":
        used = set(teams)
        v2 = _fresh(v, used)
        teams[v2] = teams[v]
        info.v2 = v2
        parts = dict(m.parts)
        new_edges = []
        for x in edges:
            if v in (x.src, x.dst):
                w = x.dst if x.src == v else x.src
                k = parts[w]
                if k == "R":
                    x = Edge(v2 if x.src == v else x.src, v2 if x.dst == v else x.dst, x.label)
            new_edges.append(x)
        edges = new_edges
        for w, k in m.parts:
            if k != "S":
                continue
            sub = p.side(w, v)
            ren = {}
            for x in sorted(sub):
                ren[x] = _fresh(x, used)
                teams[ren[x]] = p.teams[x]
                info.copies[ren[x]] = x
            for x in p.edges:
                if x.src in sub and x.dst in sub:
                    edges.append(Edge(ren[x.src], ren[x.dst], x.label))
            oe = p.edge_between(v, w)
            edges.append(Edge(v2, ren[w], oe.label))
        edges.append(orient(v, u, e.label.left))
        edges.append(orient(v2, u, e.label.right))
    q = Position(teams, tuple(edges), token)
    return q, info


def apply_move(p: Position, m: Move, check: bool = True) -> Position:
    q, _ = successor(p, m)
    if check:
        try:
            q.validate()
        except PositionError as err:
            raise AssertionError(f"move {m} broke the position invariants: {err}") from None
    return q
