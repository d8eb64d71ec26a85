"""Strategies as move selectors, the proof-driven strategy and the winning check.

A strategy is represented intensionally: an object that, given a state
whose token is held by one of its teams, picks one move, and that follows
every other move without objection.  The play set it generates is the
strategy in the usual sense.  States carry the current position plus
whatever bookkeeping the strategy needs; :meth:`StrategyOracle.key` folds
that bookkeeping into a canonical form so that choices are iso-stable and
memo tables are sound.
"""

from __future__ import annotations

import sys
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Mapping, Optional

from ..calculus.anodyne import anodyne
from ..calculus.proof import Proof, ProofError, is_cut_free
from ..formula import dual
from ..game.canon import tree_code
from ..game.moves import Caps, Move, Variant, legal_moves, successor
from ..game.position import Position, canonical_form, sequent_of
from .solve import DEFAULT_PROPONENTS, Verdict, Winner, solve

__all__ = [
    "DecorationError", "DecoratedPosition", "StrategyOracle", "ProofStrategy",
    "SelectorStrategy", "SolverStrategy", "Intersection", "strategy_from_proofs",
    "intersect", "check_winning", "strategy_plays", "free_plays",
]


class DecorationError(RuntimeError):
    """A decoration no longer matches its vertex (a broken invariant)."""


# --------------------------------------------------------------------------
# decorated positions

@dataclass(frozen=True)
class DecoratedPosition:
    """A position whose ``team`` vertices each carry a cut-free LLTN proof."""

    position: Position
    decorations: Mapping[str, Proof]
    team: str = "P"

    def validate(self) -> None:
        p = self.position
        for v, t in p.teams.items():
            if t == self.team and v not in self.decorations:
                raise DecorationError(f"vertex {v!r} of team {t} is not decorated")
        for v, proof in self.decorations.items():
            if p.teams.get(v) != self.team:
                raise DecorationError(f"decorated vertex {v!r} is not in team {self.team}")
            if not is_cut_free(proof):
                raise DecorationError(f"decoration of {v!r} is not cut-free")
            if Counter(proof.conclusion) != Counter(sequent_of(p, v)):
                raise DecorationError(f"decoration of {v!r} does not prove its sequent")

    @cached_property
    def labels(self) -> dict:
        d = self.decorations
        return {v: (t, d[v].uid if v in d else None) for v, t in self.position.teams.items()}

    @cached_property
    def key(self):
        return canonical_form(self.position, self.labels)


# --------------------------------------------------------------------------
# the selector interface

class StrategyOracle:
    """Base class.  ``teams`` are the teams whose moves the oracle picks."""

    teams: frozenset = frozenset()
    initial = None

    def position(self, state) -> Position:
        return state

    def choose(self, state) -> Optional[Move]:
        raise NotImplementedError

    def advance(self, state, move: Move):
        return successor(self.position(state), move)[0]

    def key(self, state):
        return canonical_form(self.position(state))

    def owns(self, state) -> bool:
        p = self.position(state)
        return p.token is not None and p.teams[p.token] in self.teams


class SelectorStrategy(StrategyOracle):
    """Plays ``select(position)`` for ``teams``; states are plain positions."""

    def __init__(self, teams: Iterable[str], select: Callable[[Position], Optional[Move]],
                 start: Optional[Position] = None):
        self.teams = frozenset(teams)
        self.select = select
        self.initial = start

    def choose(self, state):
        return self.select(state)

    def key(self, state):
        # ``select`` need not be iso-stable, so memoise on the exact position
        return state


class SolverStrategy(StrategyOracle):
    """Plays the first move that :func:`solve` certifies as winning for ``teams``."""

    def __init__(self, teams: Iterable[str] = DEFAULT_PROPONENTS, variant=Variant.LLTN,
                 caps: Caps = Caps(), start: Optional[Position] = None):
        self.teams = frozenset(teams)
        self.variant = Variant(variant)
        self.caps = caps
        self.initial = start

    def choose(self, state):
        for m in legal_moves(state, self.variant, self.caps):
            if solve(successor(state, m)[0], self.variant, self.caps, self.teams).proponent_wins:
                return m
        return None


# --------------------------------------------------------------------------
# the proof-driven strategy

# how a passive vertex's proof follows a move on one of its edges
_PASSIVE = {"OneDelete": "bot", "TensorSplit": "par", "PlusLeft": "with_left",
            "PlusRight": "with_right", "ExpoChoice": "bang"}
_NEGATIVE = frozenset({"Bot", "Par", "With", "Promotion", "Top"})


def _first_rule(proof: Proof) -> Proof:
    while proof.rule.tag == "Exchange":
        proof = proof.premises[0]
    return proof


class ProofStrategy(StrategyOracle):
    """The strategy read off cut-free LLTN proofs decorating one team.

    The token holder plays the move matching the first non-Exchange rule
    of its proof and keeps the premise; passive decorated vertices follow
    the other moves by anodyne modifications.
    """

    def __init__(self, start: DecoratedPosition, check: bool = True):
        start.validate()
        self.teams = frozenset({start.team})
        self.initial = start
        self.check = check
        self._last = None

    def position(self, state: DecoratedPosition) -> Position:
        return state.position

    def key(self, state: DecoratedPosition):
        return state.key

    def _assign(self, state: DecoratedPosition, v: str, node: Proof) -> list:
        """The neighbour carrying each conclusion formula of ``node``.

        Edges with the same formula are taken in the canonical order of the
        branches behind them, so the choice is iso-stable.
        """
        p = state.position
        pool: dict = {}
        for e, w, out in p.adj(v):
            pool.setdefault(e.label if out else dual(e.label), []).append(w)
        for f, ws in pool.items():
            if len(ws) > 1:
                verts = list(p.teams)
                ws.sort(key=lambda w: tree_code(verts, state.labels, p.edges, w, skip=v))
        nbr = []
        for f in node.conclusion:
            got = pool.get(f)
            if not got:
                raise DecorationError(f"vertex {v!r} has no free edge for a conclusion formula")
            nbr.append(got.pop(0))
        if any(pool.values()):
            raise DecorationError(f"vertex {v!r} has edges its proof does not mention")
        return nbr

    def choose(self, state: DecoratedPosition) -> Optional[Move]:
        last = self._last
        if last is not None and last[0] is state:
            return last[1]
        m = self._choose(state)
        self._last = (state, m)
        return m

    def _choose(self, state: DecoratedPosition) -> Optional[Move]:
        p = state.position
        v = p.token
        node = _first_rule(state.decorations[v])
        r = node.rule
        if r.tag in ("Cut", "Identity"):
            raise DecorationError(f"rule {r.tag} cannot drive a move")
        nbr = self._assign(state, v, node)
        u = nbr[0 if r.principal is None else r.principal]
        if r.tag == "One":
            return Move("OneDelete", v, u)
        if r.tag in _NEGATIVE:
            return Move("NegativePass", v, u)
        if r.tag == "NewTens":
            parts = tuple(sorted((nbr[j], s) for j, s in enumerate(r.split) if j != r.principal))
            return Move("TensorSplit", v, u, parts=parts)
        if r.tag == "PlusL":
            return Move("PlusLeft", v, u)
        if r.tag == "PlusR":
            return Move("PlusRight", v, u)
        if r.tag == "Dereliction":
            return Move("ExpoChoice", v, u, n=r.n)
        raise DecorationError(f"rule {r.tag} is not an LLTN rule")

    def advance(self, state: DecoratedPosition, move: Move) -> DecoratedPosition:
        p = state.position
        dec = dict(state.decorations)
        v, u = move.active, move.target
        e = p.edge_between(v, u)
        if move.kind in ("NaiveDereliction", "NaiveWeakening", "Exotic") and (v in dec or u in dec):
            raise DecorationError(f"{move.kind} is outside the proof-driven game")
        q, info = successor(p, move)
        if v in dec and move.kind != "NegativePass":
            mine = self.choose(state)
            if mine != move:
                raise DecorationError(f"{move} is not the move the proof of {v!r} plays")
            node = _first_rule(dec[v])
            if move.kind == "OneDelete":
                del dec[v]
            else:
                dec[v] = node.premises[0]
                if move.kind == "TensorSplit":
                    dec[info.v2] = node.premises[1]
        if u in dec and move.kind in _PASSIVE:
            seen = dual(e.label)
            proof = dec[u]
            try:
                dec[u] = anodyne(_PASSIVE[move.kind], proof, proof.conclusion.index(seen), n=move.n)
            except (ProofError, ValueError) as err:
                raise DecorationError(f"cannot follow {move} at {u!r}: {err}") from None
        for new, old in info.copies.items():
            if old in dec:
                dec[new] = dec[old]
        out = DecoratedPosition(q, dec, state.team)
        if self.check:
            # only these vertices saw their edges change
            for w in {v, u, info.v2, *info.copies}:
                if w in dec and Counter(dec[w].conclusion) != Counter(sequent_of(q, w)):
                    raise DecorationError(f"after {move}, decoration of {w!r} no longer matches")
        return out


def strategy_from_proofs(d: DecoratedPosition, check: bool = True) -> ProofStrategy:
    return ProofStrategy(d, check)


# --------------------------------------------------------------------------
# intersection

class Intersection(StrategyOracle):
    """Two strategies for disjoint teams, each deferring to the other."""

    def __init__(self, s1: StrategyOracle, s2: StrategyOracle):
        if s1.teams & s2.teams:
            raise ValueError("intersected strategies must play for disjoint teams")
        self.s1, self.s2 = s1, s2
        self.teams = s1.teams | s2.teams
        self.initial = None
        if s1.initial is not None and s2.initial is not None:
            self.initial = (s1.initial, s2.initial)

    def position(self, state):
        return self.s1.position(state[0])

    def choose(self, state):
        if self.s1.owns(state[0]):
            return self.s1.choose(state[0])
        return self.s2.choose(state[1])

    def advance(self, state, move):
        return (self.s1.advance(state[0], move), self.s2.advance(state[1], move))

    def key(self, state):
        return (self.s1.key(state[0]), self.s2.key(state[1]))


def intersect(s1: StrategyOracle, s2: Optional[StrategyOracle] = None) -> StrategyOracle:
    """The strategy for the union of the teams; with no partner, ``s1`` itself."""
    if s2 is None or not s2.teams:
        return s1
    return Intersection(s1, s2)


# --------------------------------------------------------------------------
# winning

def check_winning(s: StrategyOracle, state=None, caps: Caps = Caps(), variant=Variant.LLTN,
                  memo: Optional[dict] = None) -> Verdict:
    """Play ``s`` against every behaviour of the other teams.

    ProponentWins iff every maximal play ends with the token at a vertex
    outside ``s.teams``.  Opponent exponential choices are explored for
    n <= expo_cap, which is flagged as ``capped``; running out of the node
    budget yields Unknown.  ``memo`` may be shared between calls on the
    same kind of strategy.
    """
    if state is None:
        state = s.initial
    if state is None:
        raise ValueError("no start state")
    variant = Variant(variant)
    if memo is None:
        memo = {}
    nodes = [0]
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 20000))

    def go(st) -> tuple:
        # (True / False / None for out of budget, capped)
        key = s.key(st)
        got = memo.get(key)
        if got is not None:
            return got
        nodes[0] += 1
        if nodes[0] > caps.budget:
            return None, False
        if s.owns(st):
            m = s.choose(st)
            got = (False, False) if m is None else go(s.advance(st, m))
        else:
            moves = legal_moves(s.position(st), variant, caps)
            res, capped = True, any(m.kind == "ExpoChoice" for m in moves)
            for m in moves:
                r, c = go(s.advance(st, m))
                capped = capped or c
                if r is False:
                    res, capped = False, c
                    break
                if r is None:
                    res = None
            got = (res, capped)
        if got[0] is not None:
            memo[key] = got
        return got

    try:
        res, capped = go(state)
    finally:
        sys.setrecursionlimit(limit)
    winner = {True: Winner.PROPONENT, False: Winner.OPPONENT, None: Winner.UNKNOWN}[res]
    return Verdict(winner, nodes[0], capped)


# --------------------------------------------------------------------------
# play sets

def strategy_plays(s: StrategyOracle, state=None, caps: Caps = Caps(), variant=Variant.LLTN,
                   limit: int = 10**6) -> set:
    """Every play (as a tuple of moves) of the play set generated by ``s``."""
    if state is None:
        state = s.initial
    variant = Variant(variant)
    plays: set = set()

    def go(st, prefix):
        plays.add(prefix)
        if len(plays) > limit:
            raise RuntimeError("play set larger than the limit")
        if s.owns(st):
            m = s.choose(st)
            moves = [] if m is None else [m]
        else:
            moves = legal_moves(s.position(st), variant, caps)
        for m in moves:
            go(s.advance(st, m), prefix + (m,))

    go(state, ())
    return plays


def free_plays(p: Position, caps: Caps = Caps(), variant=Variant.LLTN, limit: int = 10**6) -> set:
    """All plays from ``p`` with every team unconstrained."""
    return strategy_plays(SelectorStrategy((), lambda q: None), p, caps, variant, limit)
