"""Validity harnesses: bases with dangling edges, opponent corpora, witnesses and cut."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Mapping, Optional, Sequence

from ..calculus.proof import Proof, is_cut_free, shapes
from ..formula import ONE, ZERO, Formula, dual, plus, show, tensor
from ..game.generate import gen_positions, opponent_trees
from ..game.moves import Caps, Variant
from ..game.position import Edge, Position, orient
from .oracle import DecoratedPosition, StrategyOracle, check_winning, intersect, strategy_from_proofs
from .solve import Winner, solve

__all__ = [
    "Base", "attach", "V_POOL", "v_corpus", "base_corpus", "ValidityReport", "validity_check",
    "soundness_pipeline", "Witness", "witness_from_proof", "cut_compose_witness",
]

# edge labels of the opponent trees; both directions are generated, so the
# duals appear as well
V_POOL = (ONE, tensor(ONE, ONE), plus(ONE, ZERO))


@dataclass(frozen=True)
class Base:
    """A position ``U`` (token ignored) with dangling edges.

    ``dangling[k] = (vertex, formula)``: the edge leaves ``vertex`` and
    ``vertex`` sees ``formula`` on it.
    """

    position: Position
    dangling: tuple

    @classmethod
    def single(cls, gamma: Sequence[Formula], team: str = "P", vid: str = "u") -> "Base":
        return cls(Position({vid: team}, (), None), tuple((vid, f) for f in gamma))

    def sequent(self) -> tuple:
        return tuple(f for _, f in self.dangling)

    def proponents(self) -> frozenset:
        return frozenset(t for t in self.position.teams.values() if t != "O")

    def __str__(self):
        vs = ", ".join(f"{v}:{t}" for v, t in self.position.teams.items())
        es = ", ".join(f"{e.src}->{e.dst}:{show(e.label)}" for e in self.position.edges)
        ds = ", ".join(f"{v}~{show(f)}" for v, f in self.dangling)
        return f"Base([{vs}], [{es}], dangling [{ds}])"


def attach(base: Base, trees: Sequence[Position], token: Optional[str] = None) -> Position:
    """Hang opponent tree ``trees[k]`` (by its token vertex) on dangling edge ``k``."""
    if len(trees) != len(base.dangling):
        raise ValueError(f"{len(base.dangling)} dangling edges but {len(trees)} trees")
    teams = dict(base.position.teams)
    edges = list(base.position.edges)
    for k, ((v, f), t) in enumerate(zip(base.dangling, trees)):
        ren = {x: f"v{k}.{x}" for x in t.teams}
        for x, tm in t.teams.items():
            teams[ren[x]] = tm
        edges += [Edge(ren[e.src], ren[e.dst], e.label) for e in t.edges]
        edges.append(orient(v, ren[t.token], f))
    return Position.create(teams, edges, token)


@lru_cache(maxsize=None)
def v_corpus(bound: int = 3, pool: tuple = V_POOL) -> tuple:
    """Opponent trees with at most ``bound`` vertices, rooted at their token."""
    return tuple(opponent_trees(bound, pool))


def base_corpus(formula: Formula, bound: int = 2, pool: tuple = V_POOL, team: str = "P") -> list:
    """Proponent trees with at most ``bound`` vertices, one dangling ``formula`` edge.

    The dangling vertex ranges over every vertex, up to isomorphism.
    """
    out = []
    for p in gen_positions(bound, pool, teams=(team,)):
        out.append(Base(p.with_token(None), ((p.token, formula),)))
    return out


@dataclass
class ValidityReport:
    gamma: tuple
    base: Base
    rows: list = field(default_factory=list)     # (tree indices, token, Verdict)
    complete: bool = True                       # False when stopped at a failure

    def counts(self) -> Counter:
        return Counter(v.winner for _, _, v in self.rows)

    @property
    def passed(self) -> bool:
        return self.complete and all(v.proponent_wins for _, _, v in self.rows)

    @property
    def uncapped(self) -> bool:
        return not any(v.capped for _, _, v in self.rows)

    def failures(self) -> list:
        return [r for r in self.rows if not r[2].proponent_wins]

    def summary(self) -> dict:
        c = self.counts()
        return {
            "sequent": [show(f) for f in self.gamma],
            "checks": len(self.rows),
            "ProponentWins": c[Winner.PROPONENT],
            "OpponentWins": c[Winner.OPPONENT],
            "Unknown": c[Winner.UNKNOWN],
            "bound_limited": sum(v.capped for _, _, v in self.rows),
            "passed": self.passed,
        }

    def render(self, verbose: bool = False) -> str:
        lines = [f"sequent: |- {', '.join(show(f) for f in self.gamma)}", f"base: {self.base}"]
        rows = self.rows if verbose else self.failures()
        for idx, tok, v in rows:
            lines.append(f"  V={list(idx)} token={tok}: {v}")
        s = self.summary()
        lines.append(f"checks: {s['checks']}  ProponentWins: {s['ProponentWins']}  "
                     f"OpponentWins: {s['OpponentWins']}  Unknown: {s['Unknown']}  "
                     f"bound-limited: {s['bound_limited']}")
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines)


def validity_check(gamma: Sequence[Formula], base: Optional[Base] = None, corpus: Optional[Sequence] = None,
                   caps: Caps = Caps(), variant=Variant.LLTN,
                   strategy: Optional[Callable[[Position], StrategyOracle]] = None,
                   stop_on_failure: bool = False) -> ValidityReport:
    """Try the base against every tuple of corpus trees and every token placement.

    Without ``strategy`` each composite is solved outright; with it, the
    strategy built for the composite is checked against all opponent
    behaviours.  A pass is evidence at the corpus scale only.
    """
    gamma = tuple(gamma)
    if base is None:
        base = Base.single(gamma)
    if Counter(base.sequent()) != Counter(gamma):
        raise ValueError("the dangling edges do not carry the sequent")
    if corpus is None:
        corpus = v_corpus()
    report = ValidityReport(gamma, base)
    props = base.proponents()
    memo: dict = {}
    for idx in itertools.product(range(len(corpus)), repeat=len(base.dangling)):
        pos = attach(base, [corpus[i] for i in idx])
        for tok in pos.teams:
            p = pos.with_token(tok)
            if strategy is None:
                v = solve(p, variant, caps, props, memo)
            else:
                v = check_winning(strategy(p), None, caps, variant, memo)
            report.rows.append((idx, tok, v))
            if stop_on_failure and not v.proponent_wins:
                report.complete = False
                return report
    return report


# --------------------------------------------------------------------------
# soundness: proofs to bases and decorations

def soundness_pipeline(proof: Proof) -> tuple:
    """``(base, decorate)`` for a bounded LLTN proof.

    A cut-free proof gives one proponent vertex; a proof whose root is the
    only cut gives two proponent vertices joined by the cut formula.
    ``decorate(position, rename=None, team="P")`` returns the decorated
    position for any composite built on the base.
    """
    if is_cut_free(proof):
        base = Base.single(proof.conclusion)
        decs = {"u": proof}
    elif proof.rule.tag == "Cut" and all(is_cut_free(q) for q in proof.premises):
        a = proof.rule.cut
        left, right = shapes(proof.rule, proof.conclusion)
        p1, p2 = proof.premises
        pos = Position.create({"u1": "P", "u2": "P"}, [orient("u1", "u2", a)], None)
        dangling = tuple(("u1", f) for f, o in left if o >= 0) + tuple(("u2", f) for f, o in right if o >= 0)
        base = Base(pos, dangling)
        decs = {"u1": p1, "u2": p2}
    else:
        raise ValueError("soundness_pipeline needs a bounded proof")

    def decorate(position: Position, rename: Optional[Mapping[str, str]] = None,
                 team: str = "P") -> DecoratedPosition:
        ren = rename or {}
        d = {ren.get(v, v): q for v, q in decs.items()}
        return DecoratedPosition(position, d, team)

    return base, decorate


@dataclass(frozen=True)
class Witness:
    """Evidence of validity: a base and a way to build the strategy on any composite.

    ``make(position, rename, team)`` returns a strategy for ``team`` where
    ``rename`` maps base vertex ids to ids in ``position``.
    """

    gamma: tuple
    base: Base
    make: Callable
    teams: frozenset = frozenset({"P"})

    def strategy(self, position: Position, rename: Optional[Mapping[str, str]] = None,
                 team: str = "P") -> StrategyOracle:
        return self.make(position, rename, team)

    def check(self, corpus=None, caps: Caps = Caps(), stop_on_failure: bool = False) -> ValidityReport:
        return validity_check(self.gamma, self.base, corpus, caps, Variant.LLTN,
                              strategy=self.strategy, stop_on_failure=stop_on_failure)


def witness_from_proof(proof: Proof) -> Witness:
    base, decorate = soundness_pipeline(proof)

    def make(position, rename=None, team="P"):
        return strategy_from_proofs(decorate(position, rename, team))

    return Witness(tuple(proof.conclusion), base, make)


def _renamed(base: Base, prefix: str, team: str) -> tuple:
    ren = {v: prefix + v for v in base.position.teams}
    teams = {ren[v]: team for v in base.position.teams}
    edges = [Edge(ren[e.src], ren[e.dst], e.label) for e in base.position.edges]
    return ren, teams, edges


def cut_compose_witness(w1: Witness, w2: Witness, cut: Optional[Formula] = None) -> Witness:
    """Witness for ``G, D`` from witnesses for ``G, A`` and ``dual(A), D``.

    The two bases are joined by an ``A``-edge between their dangling
    vertices; the first base plays as team P, the second as P', and the
    strategy is the intersection of the two.
    """
    if w1.teams != {"P"} or w2.teams != {"P"}:
        raise ValueError("only single-team witnesses can be composed")
    d1, d2 = w1.base.dangling, w2.base.dangling
    pairs = [(i, j) for i, (_, f) in enumerate(d1) for j, (_, g) in enumerate(d2)
             if g is dual(f) and (cut is None or f is cut)]
    if not pairs:
        raise ValueError("no dangling edges carrying a cut formula and its dual")
    i, j = pairs[0]
    ren1, t1, e1 = _renamed(w1.base, "a.", "P")
    ren2, t2, e2 = _renamed(w2.base, "b.", "P'")
    (v1, a), (v2, _) = d1[i], d2[j]
    pos = Position.create({**t1, **t2}, e1 + e2 + [orient(ren1[v1], ren2[v2], a)], None)
    dangling = tuple((ren1[v], f) for k, (v, f) in enumerate(d1) if k != i)
    dangling += tuple((ren2[v], f) for k, (v, f) in enumerate(d2) if k != j)
    base = Base(pos, dangling)

    def make(position, rename=None, team=None):
        ren = rename or {}
        s1 = w1.strategy(position, {v: ren.get(ren1[v], ren1[v]) for v in ren1}, "P")
        s2 = w2.strategy(position, {v: ren.get(ren2[v], ren2[v]) for v in ren2}, "P'")
        return intersect(s1, s2)

    return Witness(base.sequent(), base, make, frozenset({"P", "P'"}))
