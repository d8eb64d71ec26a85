"""Standard derivations: axiom expansion, duplicators, weakening helpers."""

from __future__ import annotations

from functools import lru_cache

from ..formula import (
    BOT, ONE, Formula, dual, duplicator, ofcourse, par, tensor,
    Z, O1, T, B, TENS, PAR, PLUS, WITH, OC, WN, PATOM, NATOM,
)
from .proof import Proof, ProofError, System, TensorSplitSchema, make, reorder

__all__ = ["axiom_proof", "dup_proof", "apply_dup", "duplicator_base",
           "weaken", "lltn_base1"]


def _tensor_tag(system: System) -> str:
    return "PlainTensor" if System(system) is System.LL else "NewTens"


@lru_cache(maxsize=None)
def axiom_proof(a: Formula, system: System = System.LLTN) -> Proof:
    """Cut-free proof of ``|- dual(a), a`` by expansion on the structure of ``a``."""
    system = System(system)
    op = a.op
    if op in (PATOM, NATOM):
        return make("Identity", (dual(a), a))
    if op in (O1, B):
        one, bot = (a, dual(a)) if op == O1 else (dual(a), a)
        p = make("Bot", (bot, one), [make("One", (ONE,))], principal=0)
        return reorder(p, (dual(a), a))
    if op in (Z, T):
        top = 0 if a.op == Z else 1
        return make("Top", (dual(a), a), principal=top)
    if op in (TENS, PAR):
        # the negative side is decomposed first
        neg, pos = (dual(a), a) if op == TENS else (a, dual(a))
        l, r = pos.left, pos.right
        pl, pr = axiom_proof(l, system), axiom_proof(r, system)
        t = make(_tensor_tag(system), (dual(l), dual(r), pos), [pl, pr],
                 principal=2, split=("L", "R", None))
        p = make("Par", (neg, pos), [t], principal=0)
        return reorder(p, (dual(a), a))
    if op in (PLUS, WITH):
        neg, pos = (a, dual(a)) if op == WITH else (dual(a), a)
        l, r = pos.left, pos.right
        pl = make("PlusL", (dual(l), pos), [axiom_proof(l, system)], principal=1)
        pr = make("PlusR", (dual(r), pos), [axiom_proof(r, system)], principal=1)
        p = make("With", (neg, pos), [pl, pr], principal=0)
        return reorder(p, (dual(a), a))
    if op in (OC, WN):
        bang, wn = (a, dual(a)) if op == OC else (dual(a), a)
        body = bang.body
        inner = axiom_proof(body, system)   # |- dual(body), body
        if system is System.LLTN:
            der1 = make("Dereliction", (wn, body), [inner], principal=0, n=1)
            schema = TensorSplitSchema.of(lltn_base1((wn,)), der1, (wn,), body)
            p = make("Promotion", (wn, bang), schema, principal=1)
        else:
            der = make("ClassicDereliction", (wn, body), [inner], principal=0)
            p = make("ClassicPromotion", (wn, bang), [der], principal=1)
        return reorder(p, (dual(a), a))
    raise ProofError(f"unknown connective {op}")


def lltn_base1(context) -> Proof:
    """LLTN proof of ``|- ?G, 1`` for a context of ?-formulas: weaken ``|- 1``."""
    p = weaken(make("One", (ONE,)), context, System.LLTN)
    return reorder(p, tuple(context) + (ONE,))


def weaken(proof: Proof, formulas, system: System = System.LL) -> Proof:
    """Append the ?-formulas ``formulas`` to the conclusion.

    LL and LLT use Weakening; LLTN uses Bot followed by a nullary dereliction.
    """
    system = System(system)
    for f in formulas:
        if f.op != WN:
            raise ProofError(f"cannot weaken on {f}")
        C = proof.conclusion
        k = len(C)
        if system is System.LLTN:
            b = make("Bot", C + (BOT,), [proof], principal=k)
            proof = make("Dereliction", C + (f,), [b], principal=k, n=0)
        else:
            proof = make("Weakening", C + (f,), [proof], principal=k)
    return proof


@lru_cache(maxsize=None)
def dup_proof(a: Formula) -> Proof:
    """LLT proof of ``|- duplicator(a)``; it uses a NewTens sharing ``?dual(a)``."""
    bang = ofcourse(a)
    ax = axiom_proof(bang, System.LLT)            # |- ?dual(a), !a
    wn = ax.conclusion[0]
    t = make("NewTens", (wn, tensor(bang, bang)), [ax, ax], principal=1, split=("S", None))
    p = make("Par", (par(wn, tensor(bang, bang)),), [t], principal=0)
    return make("ClassicPromotion", (duplicator(a),), [p], principal=0)


def duplicator_base(d: Formula) -> Formula:
    """Recover ``a`` from ``duplicator(a)``."""
    try:
        a = d.body.right.left.body
    except (IndexError, AttributeError):
        raise ProofError(f"{d} is not a duplicator") from None
    if duplicator(a) is not d:
        raise ProofError(f"{d} is not a duplicator")
    return a


def apply_dup(proof: Proof, i: int | None = None, j: int | None = None) -> Proof:
    """Merge two equal ``?A`` conclusions without contraction (LLT).

    From ``|- G, ?A, ?A`` build ``|- G, ?A, ?(!dual(A) * (?A @ ?A))``; the
    new last formula is ``dual(duplicator(dual(A)))``.
    """
    C = proof.conclusion
    if i is None or j is None:
        i, j = _last_pair(C)
    if i == j or C[i] is not C[j] or C[i].op != WN:
        raise ProofError("apply_dup needs two equal ?-formulas")
    wn = C[i]
    gamma = tuple(f for k, f in enumerate(C) if k not in (i, j))
    g = len(gamma)
    pp = par(wn, wn)
    p1 = make("Par", gamma + (pp,), [proof], principal=g)
    ax = axiom_proof(ofcourse(dual(wn.body)), System.LLT)     # |- ?A, !dual(A)
    bang = ax.conclusion[1]
    t = make("NewTens", gamma + (wn, tensor(bang, pp)), [ax, p1],
             principal=g + 1, split=("R",) * g + ("L", None))
    return make("ClassicDereliction", gamma + (wn, dual(duplicator(bang.body))), [t], principal=g + 1)


def _last_pair(C):
    seen = {}
    best = None
    for k, f in enumerate(C):
        if f.op == WN and f in seen:
            best = (seen[f], k)
        seen.setdefault(f, k)
    if best is None:
        raise ProofError("no repeated ?-formula in the conclusion")
    return best
