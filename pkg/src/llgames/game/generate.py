"""Position corpora: exhaustive small trees and seeded random samples."""

from __future__ import annotations

import itertools
import random
from typing import Iterator, Optional, Sequence

from ..formula import Formula, dual, is_positive, random_formula
from .position import Edge, Position, canonical_form, orient

__all__ = ["gen_positions", "random_positions", "opponent_trees", "recursive_trees"]


def recursive_trees(n: int) -> Iterator[tuple]:
    """Parent arrays ``par[i] < i`` for i = 1..n-1; covers every tree shape."""
    if n <= 1:
        yield ()
        return
    yield from itertools.product(*[range(i) for i in range(1, n)])


def _labelled(n: int, pool: Sequence[Formula], teams: Sequence[str]) -> Iterator[tuple]:
    for parents in recursive_trees(n):
        for labels in itertools.product(pool, repeat=n - 1):
            for dirs in itertools.product((True, False), repeat=n - 1):
                for ts in itertools.product(teams, repeat=n):
                    yield parents, labels, dirs, ts


def gen_positions(bound: int, pool: Optional[Sequence[Formula]] = None, seed: Optional[int] = None,
                  count: Optional[int] = None, depth: int = 3, teams=("P", "O"),
                  dedupe: bool = True) -> Iterator[Position]:
    """Positions with at most ``bound`` vertices.

    With ``count`` unset, enumerate every labelled tree over ``pool`` (both
    edge directions, every team assignment and token placement), up to
    isomorphism when ``dedupe`` is set.  With ``count`` set, draw that many
    random positions from ``seed``; labels come from ``pool`` or are random
    formulas of the given ``depth``.
    """
    if count is not None:
        yield from random_positions(random.Random(seed), count, bound, depth, pool, teams)
        return
    if pool is None:
        raise ValueError("exhaustive generation needs a label pool")
    pool = [f if is_positive(f) else dual(f) for f in pool]
    seen = set()
    for n in range(1, bound + 1):
        for parents, labels, dirs, ts in _labelled(n, pool, teams):
            vids = [f"x{i}" for i in range(n)]
            tm = dict(zip(vids, ts))
            edges = []
            for i in range(1, n):
                a, b = vids[parents[i - 1]], vids[i]
                if not dirs[i - 1]:
                    a, b = b, a
                edges.append(Edge(a, b, labels[i - 1]))
            for tok in vids:
                p = Position(tm, tuple(edges), tok)
                if dedupe:
                    key = canonical_form(p)
                    if key in seen:
                        continue
                    seen.add(key)
                yield p


def random_positions(rng: random.Random, count: int, bound: int, depth: int = 3,
                     pool: Optional[Sequence[Formula]] = None, teams=("P", "O")) -> Iterator[Position]:
    for _ in range(count):
        n = rng.randint(1, bound)
        vids = [f"x{i}" for i in range(n)]
        tm = {v: rng.choice(teams) for v in vids}
        edges = []
        for i in range(1, n):
            a, b = vids[rng.randrange(i)], vids[i]
            f = rng.choice(pool) if pool else random_formula(rng, depth)
            if rng.random() < 0.5:
                a, b = b, a
            edges.append(orient(a, b, f))
        p = Position(tm, tuple(edges), rng.choice(vids))
        p.validate()
        yield p


def opponent_trees(bound: int, pool: Sequence[Formula]) -> list:
    """All-opponent trees with at most ``bound`` vertices, rooted at ``"x0"``.

    These are the counter-trees attached at dangling edges.  Trees are
    deduplicated up to isomorphism fixing the root; the token is parked on
    the root and is meaningless.
    """
    out = []
    for p in gen_positions(bound, pool, teams=("O",), dedupe=False):
        if p.token == "x0":
            out.append(p)
    seen = set()
    uniq = []
    for p in out:
        key = canonical_form(p)
        if key not in seen:
            seen.add(key)
            uniq.append(p)
    return uniq
