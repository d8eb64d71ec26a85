"""Seeded random cut-free LL proofs, for property tests and benchmarks.

Proofs are grown forward from axioms by legal rule applications.  The
generator leans towards contractions, since they are what the LL to LLTN
pipeline has to remove.
"""

from __future__ import annotations

import random

from ..formula import BOT, ONE, TOP, ZERO, par, plus, tensor, with_, whynot, ofcourse, random_formula
from .build import axiom_proof
from .proof import Proof, System, make, size

__all__ = ["random_ll_proof", "random_ll_corpus"]

_SMALL = (ONE, BOT, ZERO, TOP)
_MAX_WIDTH = 6


def _small(rng):
    return random_formula(rng, 2, exponentials=rng.random() < 0.3)


def _insert(C, f, rng):
    k = rng.randint(0, len(C))
    return C[:k] + (f,) + C[k:], k


def _leaf(rng) -> Proof:
    r = rng.random()
    if r < 0.55:
        return make("One", (ONE,))
    if r < 0.8:
        ctx = tuple(_small(rng) for _ in range(rng.randint(0, 2)))
        C, k = _insert(ctx, TOP, rng)
        return make("Top", C, principal=k)
    return axiom_proof(_small(rng), System.LL)


def _gen(rng, b: int) -> Proof:
    if b <= 1:
        return make("One", (ONE,)) if rng.random() < 0.6 else _leaf(rng)
    p = None
    for _ in range(8):
        op = rng.choices(
            ["bot", "par", "plus", "with", "tensor", "weaken", "derelict", "contract", "promote"],
            weights=[1, 2, 2, 1.5, 3, 1, 2, 4, 1.5])[0]
        p = _step(rng, op, b)
        if p is not None:
            return p
    return _leaf(rng)


def _step(rng, op, b):
    if op == "bot":
        q = _gen(rng, b - 1)
        C, k = _insert(q.conclusion, BOT, rng)
        return make("Bot", C, [q], principal=k)
    if op == "weaken":
        q = _gen(rng, b - 1)
        C, k = _insert(q.conclusion, whynot(_small(rng)), rng)
        return make("Weakening", C, [q], principal=k)
    if op == "par":
        q = _gen(rng, b - 1)
        C = q.conclusion
        if len(C) < 2:
            return None
        i, j = rng.sample(range(len(C)), 2)
        rest = tuple(f for k, f in enumerate(C) if k not in (i, j))
        C2, k = _insert(rest, par(C[i], C[j]), rng)
        return make("Par", C2, [q], principal=k)
    if op == "plus":
        q = _gen(rng, b - 1)
        C = q.conclusion
        i = rng.randrange(len(C))
        other = _small(rng)
        if rng.random() < 0.5:
            return make("PlusL", C[:i] + (plus(C[i], other),) + C[i + 1:], [q], principal=i)
        return make("PlusR", C[:i] + (plus(other, C[i]),) + C[i + 1:], [q], principal=i)
    if op == "derelict":
        q = _gen(rng, b - 1)
        C = q.conclusion
        i = rng.randrange(len(C))
        return make("ClassicDereliction", C[:i] + (whynot(C[i]),) + C[i + 1:], [q], principal=i)
    if op == "with":
        if b < 3:
            return None
        if rng.random() < 0.5:
            q1 = _gen(rng, b - 2)
            C = q1.conclusion
            i = rng.randrange(len(C))
            ctx = C[:i] + C[i + 1:]
            q2 = make("Top", ctx + (TOP,), principal=len(ctx))
            f = with_(C[i], TOP) if rng.random() < 0.5 else with_(TOP, C[i])
            prem = [q1, q2] if f.left is C[i] else [q2, q1]
        else:
            q1 = _gen(rng, (b - 1) // 2)
            C = q1.conclusion
            i = rng.randrange(len(C))
            f = with_(C[i], C[i])
            prem = [q1, q1]
        return make("With", C[:i] + (f,) + C[i + 1:], prem, principal=i)
    if op == "tensor":
        if b < 3:
            return None
        b1 = rng.randint(1, b - 2)
        q1, q2 = _gen(rng, b1), _gen(rng, b - 1 - b1)
        return _tensor(rng, q1, q2)
    if op == "contract":
        return _contract(rng, b)
    if op == "promote":
        q = _gen(rng, b - 1)
        C = q.conclusion
        bad = [k for k, f in enumerate(C) if f.op != "?"]
        if len(bad) > 1 + max(0, b - 1 - size(q)):
            return None
        i = bad[0] if bad else rng.randrange(len(C))
        for k in bad[1:]:
            C = q.conclusion
            q = make("ClassicDereliction", C[:k] + (whynot(C[k]),) + C[k + 1:], [q], principal=k)
        C = q.conclusion
        return make("ClassicPromotion", C[:i] + (ofcourse(C[i]),) + C[i + 1:], [q], principal=i)
    raise ValueError(op)


def _tensor(rng, q1, q2, i=None, j=None):
    C1, C2 = q1.conclusion, q2.conclusion
    if len(C1) + len(C2) - 1 > _MAX_WIDTH:
        return None
    i = rng.randrange(len(C1)) if i is None else i
    j = rng.randrange(len(C2)) if j is None else j
    r1 = C1[:i] + C1[i + 1:]
    r2 = C2[:j] + C2[j + 1:]
    tagged = [(f, "L") for f in r1] + [(f, "R") for f in r2]
    rng.shuffle(tagged)
    k = rng.randint(0, len(tagged))
    C = tuple(f for f, _ in tagged[:k]) + (tensor(C1[i], C2[j]),) + tuple(f for f, _ in tagged[k:])
    split = tuple(s for _, s in tagged[:k]) + (None,) + tuple(s for _, s in tagged[k:])
    return make("PlainTensor", C, [q1, q2], principal=k, split=split)


def _dup_pair(C):
    seen = {}
    for k, f in enumerate(C):
        if f.op == "?" and f in seen:
            return seen[f], k
        seen.setdefault(f, k)
    return None


def _contract(rng, b):
    mode = rng.random()
    if mode < 0.45 and b >= 4:
        # two derelicted copies of the same proof, tensored together
        q = _gen(rng, (b - 2) // 2 - 1 if b >= 6 else 1)
        C = q.conclusion
        if len(C) < 2:
            q = make("Bot", C + (BOT,), [q], principal=len(C))
            C = q.conclusion
        i = rng.randrange(len(C))
        if C[i].op != "?":
            q = make("ClassicDereliction", C[:i] + (whynot(C[i]),) + C[i + 1:], [q], principal=i)
        j = rng.choice([k for k in range(len(C)) if k != i])
        t = _tensor(rng, q, q, j, j)
        if t is None:
            return None
        pair = _dup_pair(t.conclusion)
    else:
        q = _gen(rng, b - 2)
        pair = _dup_pair(q.conclusion)
        if pair is None:
            C = q.conclusion
            cands = [k for k, f in enumerate(C) if f.op == "?"]
            if cands:
                f = C[rng.choice(cands)]
            else:
                f = whynot(_small(rng))
            t = make("Weakening", C + (f,), [q], principal=len(C))
            if not cands:
                C = t.conclusion
                t = make("Weakening", C + (f,), [t], principal=len(C))
            pair = _dup_pair(t.conclusion)
        else:
            t = q
    C = t.conclusion
    i, j = pair
    out = C[:j] + C[j + 1:]
    # the contraction shape duplicates the principal in place; perms absorb the rest
    return make("Contraction", out, [t], principal=i if i < j else i - 1)


def random_ll_proof(rng: random.Random, max_rules: int = 15) -> Proof:
    """A random cut-free LL proof with at most ``max_rules`` rule nodes."""
    for _ in range(50):
        p = _gen(rng, rng.randint(3, max_rules))
        if size(p) <= max_rules:
            return p
    return make("One", (ONE,))


def random_ll_corpus(seed: int, count: int, max_rules: int = 15) -> list:
    rng = random.Random(seed)
    return [random_ll_proof(rng, max_rules) for _ in range(count)]
