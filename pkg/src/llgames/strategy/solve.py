"""Winners of positions by backward induction over the finite play tree."""

from __future__ import annotations

import enum
import sys
from dataclasses import dataclass
from typing import Iterable, Optional

from ..game.moves import Caps, Variant, legal_moves, successor
from ..game.plays import BudgetExhausted, live_part
from ..game.position import Position, canonical_form

__all__ = ["Winner", "Verdict", "solve", "DEFAULT_PROPONENTS"]

DEFAULT_PROPONENTS = frozenset({"P"})


class Winner(str, enum.Enum):
    PROPONENT = "ProponentWins"
    OPPONENT = "OpponentWins"
    UNKNOWN = "Unknown"

    def __str__(self):
        return self.value


# ordered so that min/max implement the AND/OR evaluation
_LOSE, _UNKNOWN, _WIN = 0, 1, 2
_WINNER = {_LOSE: Winner.OPPONENT, _UNKNOWN: Winner.UNKNOWN, _WIN: Winner.PROPONENT}


@dataclass(frozen=True)
class Verdict:
    """A winner plus how it was obtained.

    ``capped`` is set when the answer rests on exponential branches beyond
    ``expo_cap`` being left unexplored.
    """

    winner: Winner
    positions: int = 0
    capped: bool = False

    @property
    def proponent_wins(self) -> bool:
        return self.winner is Winner.PROPONENT

    def __str__(self):
        return str(self.winner) + (" (bound-limited)" if self.capped else "")


def _truncated(moves) -> bool:
    return any(m.kind == "ExpoChoice" for m in moves)


def solve(p: Position, variant=Variant.LLTN, caps: Caps = Caps(),
          proponents: Iterable[str] = DEFAULT_PROPONENTS, memo: Optional[dict] = None) -> Verdict:
    """Three-valued winner of ``p`` for the ``proponents`` teams.

    A proponent holding the token wins if some move wins; an opponent
    holding it loses if every move wins (so a stuck opponent loses).  Any
    exponential choice is explored for n <= expo_cap only: an unexplored
    branch turns what would be a definite answer into Unknown on the side
    where a larger n could change it.  ``memo`` may be shared between calls
    with the same variant, caps and proponents.
    """
    if p.token is None:
        raise ValueError("solve needs a position with a token")
    variant = Variant(variant)
    props = frozenset(proponents)
    if memo is None:
        memo = {}
    seen = [0]
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 20000))

    def go(q: Position) -> int:
        q = live_part(q, keep_teams=True)
        key = canonical_form(q)
        got = memo.get(key)
        if got is not None:
            return got
        seen[0] += 1
        if seen[0] > caps.budget:
            raise BudgetExhausted(f"more than {caps.budget} positions")
        moves = legal_moves(q, variant, caps)
        if q.teams[q.token] in props:
            val = _LOSE
            for m in moves:
                val = max(val, go(successor(q, m)[0]))
                if val == _WIN:
                    break
            if val == _LOSE and _truncated(moves):
                val = _UNKNOWN
        else:
            val = _WIN
            for m in moves:
                val = min(val, go(successor(q, m)[0]))
                if val == _LOSE:
                    break
            if val == _WIN and _truncated(moves):
                val = _UNKNOWN
        memo[key] = val
        return val

    try:
        val = go(p)
    finally:
        sys.setrecursionlimit(limit)
    return Verdict(_WINNER[val], seen[0], val == _UNKNOWN)
