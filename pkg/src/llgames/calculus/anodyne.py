"""Anodyne modifications: inversions that keep a proof cut-free.

    G, B          ->  G
    G, A @ B      ->  G, A, B
    G, A & B      ->  G, A        (with_left)
    G, A & B      ->  G, B        (with_right)
    G, !A         ->  G, A*...*A  (bang n, LLTN)

The target formula is pushed up through the proof until the rule that
introduces it, which is then dropped.
"""

from __future__ import annotations

from typing import Optional

from ..formula import Formula, power, OC, PAR, WITH
from .proof import (
    Explicit, PremiseFamily, Proof, ProofError, is_cut_free, rebuild, reorder, shapes,
)

__all__ = ["anodyne", "anodyne_target", "KINDS"]

KINDS = ("bot", "par", "with_left", "with_right", "bang")
_HEAD = {"bot": "B", "par": PAR, "with_left": WITH, "with_right": WITH, "bang": OC}
_INTRO = {"bot": "Bot", "par": "Par", "with_left": "With", "with_right": "With", "bang": "Promotion"}


def anodyne_target(kind: str, f: Formula, n: Optional[int] = None) -> tuple:
    """Formulas replacing ``f`` under the modification."""
    if kind == "bot":
        return ()
    if kind == "par":
        return f.args
    if kind == "with_left":
        return (f.left,)
    if kind == "with_right":
        return (f.right,)
    if kind == "bang":
        return (power(f.body, n),)
    raise ValueError(f"unknown anodyne kind {kind!r}")


def anodyne(kind: str, proof: Proof, index: Optional[int] = None, n: Optional[int] = None) -> Proof:
    """Apply an anodyne modification at conclusion position ``index``.

    ``index`` defaults to the first formula with the right head.  The
    result concludes the input's conclusion with position ``index``
    replaced in place.
    """
    if kind.startswith("bang(") and kind.endswith(")"):
        kind, n = "bang", int(kind[5:-1])
    if kind not in KINDS:
        raise ValueError(f"unknown anodyne kind {kind!r}")
    if kind == "bang" and (n is None or n < 0):
        raise ValueError("bang needs n >= 0")
    C = proof.conclusion
    head = _HEAD[kind]
    if index is None:
        index = next((j for j, f in enumerate(C) if f.op == head), None)
        if index is None:
            raise ProofError(f"no formula with head {head} in the conclusion")
    if not 0 <= index < len(C) or C[index].op != head:
        raise ProofError(f"position {index} does not hold a formula with head {head}")
    if not is_cut_free(proof):
        raise ProofError("anodyne modifications need a cut-free proof")
    memo: dict = {}
    return _push(proof, index, kind, n, memo)


def _push(p: Proof, t: int, kind: str, n, memo) -> Proof:
    key = (p.uid, t)
    got = memo.get(key)
    if got is not None:
        return got
    C = p.conclusion
    r = p.rule
    repl = anodyne_target(kind, C[t], n)
    newC = C[:t] + repl + C[t + 1:]
    origin = list(range(t)) + [t] * len(repl) + list(range(t + 1, len(C)))
    if r.principal == t and r.tag == _INTRO[kind]:
        got = reorder(_introducing_premise(p, kind, n), newC)
    elif r.tag == "Exchange":
        q = p.premises[0]
        got = reorder(_push(q, r.perms[0][_shape_pos(p, 0, t)], kind, n, memo), newC)
    elif r.tag == "Promotion":
        fam = p.premises
        if not isinstance(fam, Explicit):
            raise ProofError("target inside a promotion schema context")
        new = []
        for q in fam.proofs:
            new.append(_push(q, q.conclusion.index(C[t]), kind, n, memo))
        got = rebuild(p, newC, origin, Explicit.of(new))
    else:
        prem = []
        for k, q in enumerate(p.premises):
            m = _shape_pos(p, k, t)
            prem.append(q if m is None else _push(q, r.perms[k][m], kind, n, memo))
        got = rebuild(p, newC, origin, prem)
    memo[key] = got
    return got


def _shape_pos(p: Proof, k: int, t: int):
    for m, (_, o) in enumerate(shapes(p.rule, p.conclusion)[k]):
        if o == t:
            return m
    return None


def _introducing_premise(p: Proof, kind: str, n) -> Proof:
    if kind == "with_right":
        return p.premises[1]
    if kind == "bang":
        fam: PremiseFamily = p.premises
        if fam.bound is not None and n > fam.bound:
            raise ProofError(f"bang({n}) beyond the explicit family bound {fam.bound}")
        return fam.premise(n)
    return p.premises[0]
