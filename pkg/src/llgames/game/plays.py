"""Exhaustive play enumeration."""

from __future__ import annotations

import sys
from dataclasses import dataclass

from ..formula import Z
from .moves import Caps, Variant, legal_moves, successor
from .position import Position, canonical_form

__all__ = ["PlayStats", "BudgetExhausted", "InfinitePlay", "all_plays", "live_part"]


class BudgetExhausted(RuntimeError):
    """The node budget ran out; on a correct implementation this would refute finiteness."""


class InfinitePlay(RuntimeError):
    """A position repeated along a play."""


@dataclass(frozen=True)
class PlayStats:
    positions: int      # distinct positions up to isomorphism
    play_nodes: int     # nodes of the (unshared) play tree
    max_length: int     # longest play, in moves


def live_part(q: Position, keep_teams: bool = False) -> Position:
    """Prune regions the token can never reach again, and forget teams.

    Moves do not depend on teams, and the token never crosses an output
    0-edge (nothing acts on 0, and the far side never holds the token
    again).  Whatever lies behind such an edge is replaced by a single leaf,
    which keeps the play tree unchanged up to isomorphism.  With
    ``keep_teams`` the live vertices keep their teams (for winner
    computations); the leaves become opponents.
    """
    if q.token is None:
        return q
    live = {q.token}
    stack = [q.token]
    dead_roots = set()
    while stack:
        x = stack.pop()
        for e, y, outgoing in q.adj(x):
            if y in live or y in dead_roots:
                continue
            if outgoing and e.label.op == Z:
                dead_roots.add(y)
            else:
                live.add(y)
                stack.append(y)
    def team(v):
        if not keep_teams:
            return "P"
        return q.teams[v] if v in live else "O"

    if len(live) + len(dead_roots) == len(q.teams):
        teams = {v: team(v) for v in q.teams}
        return q if teams == q.teams else Position(teams, q.edges, q.token)
    keep = live | dead_roots
    teams = {v: team(v) for v in q.teams if v in keep}
    edges = tuple(e for e in q.edges if e.src in live and e.dst in keep)
    return Position(teams, edges, q.token)


def all_plays(p: Position, variant=Variant.LLTN, caps: Caps = Caps(), exotic: bool = False) -> PlayStats:
    """Enumerate every play from ``p`` depth first.

    Positions are shared up to isomorphism, so ``play_nodes`` is computed
    by dynamic programming without walking the tree node by node.  A
    repeated position on the current path raises :class:`InfinitePlay`;
    more than ``caps.budget`` distinct positions raises
    :class:`BudgetExhausted`.
    """
    variant = Variant(variant)
    memo: dict = {}
    on_path: set = set()
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 20000))

    def go(q: Position):
        q = live_part(q)
        key = canonical_form(q)
        got = memo.get(key)
        if got is not None:
            return got
        if key in on_path:
            raise InfinitePlay(f"position repeats along a play: {q}")
        if len(memo) >= caps.budget:
            raise BudgetExhausted(f"more than {caps.budget} positions")
        on_path.add(key)
        nodes, longest = 1, 0
        for m in legal_moves(q, variant, caps, exotic):
            r, _ = successor(q, m)
            n2, l2 = go(r)
            nodes += n2
            longest = max(longest, l2 + 1)
        on_path.discard(key)
        memo[key] = (nodes, longest)
        return nodes, longest

    try:
        nodes, longest = go(p)
    finally:
        sys.setrecursionlimit(limit)
    return PlayStats(len(memo), nodes, longest)
