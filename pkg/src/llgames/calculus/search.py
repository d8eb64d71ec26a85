"""Bounded backward search for cut-free proofs.

Invertible rules are applied eagerly and do not consume depth: Bot, Par,
With and Top in every system, plus promotion in LLTN (which is invertible
there, see :mod:`anodyne`).  ``depth_limit`` bounds the number of
non-invertible steps along a branch.  Dereliction arities and promotion
premises are capped at ``arity_cap``.

A failed search is :class:`Exhausted`; ``complete`` is true when no cap was
ever hit, in which case the failure is a genuine refutation.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from ..formula import ONE, Formula, dual, power, B, T, TENS, PAR, PLUS, WITH, OC, WN, PATOM, NATOM
from .proof import Explicit, System, make, reorder

__all__ = ["Exhausted", "ResourceLimit", "search_cutfree"]


@dataclass(frozen=True)
class Exhausted:
    complete: bool
    nodes: int
    hit_depth: bool = False
    hit_arity: bool = False

    def __str__(self):
        kind = "complete refutation" if self.complete else "bounded refutation"
        return f"Exhausted ({kind}, {self.nodes} sequents expanded)"


@dataclass(frozen=True)
class ResourceLimit:
    nodes: int

    def __str__(self):
        return f"ResourceLimit (node budget {self.nodes} exhausted)"


class _Budget(Exception):
    pass


def _key(seq):
    return tuple(sorted(seq, key=lambda f: f.uid))


class _Searcher:
    def __init__(self, system, arity_cap, atoms, budget):
        self.system = system
        self.cap = arity_cap
        self.atoms = atoms
        self.budget = budget
        self.nodes = 0
        self.proved: dict = {}
        self.failed: dict = {}
        self.hit_depth = False
        self.hit_arity = False
        self.share = system is not System.LL
        self.ttag = "PlainTensor" if system is System.LL else "NewTens"

    def prove(self, seq: tuple, d: int):
        seq = _key(seq)
        got = self.proved.get(seq)
        if got is not None:
            return got
        if self.failed.get(seq, -1) >= d:
            return None
        self.nodes += 1
        if self.nodes > self.budget:
            raise _Budget
        p = self._expand(seq, d)
        if p is None:
            self.failed[seq] = max(d, self.failed.get(seq, -1))
        else:
            self.proved[seq] = p
        return p

    def _expand(self, seq, d):
        for i, f in enumerate(seq):
            if f.op == T:
                return make("Top", seq, principal=i)
        if seq == (ONE,):
            return make("One", seq)
        if len(seq) == 2 and seq[0].op in (PATOM, NATOM) and self.atoms and seq[1] is dual(seq[0]):
            return make("Identity", seq)
        inv = self._invertible(seq, d)
        if inv is not False:
            return inv
        if d <= 0:
            if any(f.op in (TENS, PLUS, WN, OC) for f in seq):
                self.hit_depth = True
            return None
        return self._positive(seq, d)

    def _invertible(self, seq, d):
        """Apply the first invertible rule; False if none applies."""
        for i, f in enumerate(seq):
            rest = seq[:i] + seq[i + 1:]
            if f.op == B:
                q = self.prove(rest, d)
                return None if q is None else make("Bot", seq, [q], principal=i)
            if f.op == PAR:
                q = self.prove(rest + f.args, d)
                return None if q is None else make("Par", seq, [q], principal=i)
            if f.op == WITH:
                q1 = self.prove(rest + (f.left,), d)
                if q1 is None:
                    return None
                q2 = self.prove(rest + (f.right,), d)
                return None if q2 is None else make("With", seq, [q1, q2], principal=i)
            if f.op == OC and self.system is System.LLTN:
                prem = []
                for n in range(self.cap + 1):
                    q = self.prove(rest + (power(f.body, n),), d)
                    if q is None:
                        return None
                    prem.append(q)
                return make("Promotion", seq, Explicit.of(prem), principal=i)
        return False

    def _positive(self, seq, d):
        seen = set()
        for i, f in enumerate(seq):
            if f in seen:
                continue
            seen.add(f)
            rest = seq[:i] + seq[i + 1:]
            p = None
            if f.op == TENS:
                p = self._tensor(seq, i, rest, d)
            elif f.op == PLUS:
                q = self.prove(rest + (f.left,), d - 1)
                if q is not None:
                    p = make("PlusL", seq, [q], principal=i)
                else:
                    q = self.prove(rest + (f.right,), d - 1)
                    if q is not None:
                        p = make("PlusR", seq, [q], principal=i)
            elif f.op == WN:
                p = self._whynot(seq, i, rest, d)
            elif f.op == OC and all(g.op == WN for g in rest):
                q = self.prove(rest + (f.body,), d - 1)
                if q is not None:
                    p = make("ClassicPromotion", seq, [q], principal=i)
            if p is not None:
                return p
        return None

    def _whynot(self, seq, i, rest, d):
        f = seq[i]
        if self.system is System.LLTN:
            self.hit_arity = True
            for n in range(self.cap + 1):
                q = self.prove(rest + (power(f.body, n, "par"),), d - 1)
                if q is not None:
                    return make("Dereliction", seq, [q], principal=i, n=n)
            return None
        q = self.prove(rest, d - 1)
        if q is not None:
            return make("Weakening", seq, [q], principal=i)
        q = self.prove(rest + (f.body,), d - 1)
        if q is not None:
            return make("ClassicDereliction", seq, [q], principal=i)
        q = self.prove(seq + (f,), d - 1)
        if q is not None:
            return make("Contraction", seq, [q], principal=i)
        return None

    def _tensor(self, seq, i, rest, d):
        f = seq[i]
        groups = sorted(Counter(rest).items(), key=lambda kv: kv[0].uid)
        options = []
        for g, c in groups:
            opts = []
            sh = self.share and g.op == WN
            for s in range(c + 1 if sh else 1):
                for l in range(c - s + 1):
                    opts.append((l, c - s - l, s))
            options.append(opts)
        for choice in itertools.product(*options):
            left, right, shared = [], [], []
            for (g, _), (l, r, s) in zip(groups, choice):
                left += [g] * l
                right += [g] * r
                shared += [g] * s
            q1 = self.prove(tuple(left + shared) + (f.left,), d - 1)
            if q1 is None:
                continue
            q2 = self.prove(tuple(right + shared) + (f.right,), d - 1)
            if q2 is None:
                continue
            # label the conclusion positions
            want = {"L": Counter(left), "R": Counter(right), "S": Counter(shared)}
            split = []
            for j, g in enumerate(seq):
                if j == i:
                    split.append(None)
                    continue
                for lab in ("L", "R", "S"):
                    if want[lab][g] > 0:
                        want[lab][g] -= 1
                        split.append(lab)
                        break
            return make(self.ttag, seq, [q1, q2], principal=i, split=split)
        return None


def search_cutfree(system, sequent: Sequence[Formula], depth_limit: int = 12, arity_cap: int = 2,
                   atoms: bool = False, node_budget: int = 2_000_000):
    """Search for a cut-free proof of ``sequent``.

    Returns a :class:`Proof` (with the conclusion in the given order),
    :class:`Exhausted`, or :class:`ResourceLimit` when ``node_budget``
    sequents have been expanded.
    """
    system = System(system)
    seq = tuple(sequent)
    if not atoms and any(_has_atom(f) for f in seq):
        raise ValueError("atoms in the sequent while atoms are disabled")
    s = _Searcher(system, arity_cap, atoms, node_budget)
    try:
        p = s.prove(seq, depth_limit)
    except _Budget:
        return ResourceLimit(s.nodes)
    if p is not None:
        return reorder(p, seq)
    return Exhausted(not (s.hit_depth or s.hit_arity), s.nodes, s.hit_depth, s.hit_arity)


def _has_atom(f):
    return f.op in (PATOM, NATOM) or any(_has_atom(a) for a in f.args)
