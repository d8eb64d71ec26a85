"""Proof transformations between the three systems.

* :func:`eliminate_contractions` turns an LL cut-free proof into an LLT proof
  with no cuts and no contractions, at the price of extra duplicator
  hypotheses.
* :func:`bound_proof` discharges those hypotheses with one cut at the root.
* :func:`llt_to_lltn` moves a contraction-free LLT proof into LLTN.
* :func:`compose_cuts` cuts two bounded LLTN proofs and stays bounded.
"""

from __future__ import annotations

from ..formula import BOT, Formula, dual, par, tensor
from .build import apply_dup, axiom_proof, dup_proof, duplicator_base, lltn_base1, weaken
from .proof import (
    PremiseFamily, Proof, ProofError, System, TensorSplitSchema,
    is_cut_free, make, reorder,
)

__all__ = ["ll_to_llt", "llt_to_ll", "translate_ll_to_llt", "translate_llt_to_ll",
           "eliminate_contractions", "bound_proof",
           "llt_to_lltn", "ll_to_lltn", "compose_cuts", "tensor_all", "par_all"]


def _same_node(p: Proof, premises, tag=None) -> Proof:
    r = p.rule
    return make(tag or r.tag, p.conclusion, premises, principal=r.principal,
                split=r.split, n=r.n, cut=r.cut)


def ll_to_llt(proof: Proof) -> Proof:
    """Inclusion of LL into LLT: every PlainTensor becomes a non-sharing NewTens."""
    memo = {}

    def go(p):
        got = memo.get(p.uid)
        if got is None:
            prem = [go(q) for q in p.premise_list()]
            tag = "NewTens" if p.rule.tag == "PlainTensor" else None
            got = memo[p.uid] = _same_node(p, prem, tag)
        return got

    return go(proof)


def llt_to_ll(proof: Proof) -> Proof:
    """Simulate a sharing NewTens in LL by a PlainTensor followed by contractions."""
    memo = {}

    def go(p):
        got = memo.get(p.uid)
        if got is not None:
            return got
        prem = [go(q) for q in p.premise_list()]
        r = p.rule
        if r.tag != "NewTens":
            got = _same_node(p, prem)
        else:
            C = p.conclusion
            shared = [j for j, s in enumerate(r.split) if s == "S"]
            split = tuple("L" if s == "S" else s for s in r.split) + ("R",) * len(shared)
            C2 = C + tuple(C[j] for j in shared)
            got = make("PlainTensor", C2, prem, principal=r.principal, split=split)
            for j in reversed(shared):
                C2 = C2[:-1]
                got = make("Contraction", C2, [got], principal=j)
        memo[p.uid] = got
        return got

    return go(proof)


def eliminate_contractions(proof: Proof) -> tuple:
    """Remove all contractions from a cut-free LL or LLT proof.

    Returns ``(proof', Ds)``: ``proof'`` is a cut-free, contraction-free LLT
    proof of ``conclusion + [dual(D) for D in Ds]``, in that order, where
    each ``D`` is a duplicator.  One duplicator is introduced per
    contraction node met along each branch.
    """
    memo = {}

    def go(p):
        got = memo.get(p.uid)
        if got is not None:
            return got
        r = p.rule
        C = p.conclusion
        tag = r.tag
        if tag == "Cut":
            raise ProofError("eliminate_contractions needs a cut-free proof")
        if isinstance(p.premises, PremiseFamily):
            raise ProofError("eliminate_contractions works on LL or LLT proofs")
        if tag in ("One", "Top", "Identity"):
            got = (p, ())
        elif tag == "Contraction":
            q, ds = go(p.premises[0])
            extra = tuple(dual(d) for d in ds)
            i = r.principal
            merged = apply_dup(q, r.perms[0][i], r.perms[0][i + 1])
            new_d = dual(merged.conclusion[-1])
            got = (reorder(merged, C + extra + (merged.conclusion[-1],)), ds + (new_d,))
        elif tag == "With":
            (q1, d1), (q2, d2) = go(p.premises[0]), go(p.premises[1])
            e1 = tuple(dual(d) for d in d1)
            e2 = tuple(dual(d) for d in d2)
            w1 = weaken(q1, e2, System.LLT)
            w2 = weaken(q2, e1, System.LLT)
            got = (make("With", C + e1 + e2, [w1, w2], principal=r.principal), d1 + d2)
        elif tag in ("NewTens", "PlainTensor"):
            (q1, d1), (q2, d2) = go(p.premises[0]), go(p.premises[1])
            e1 = tuple(dual(d) for d in d1)
            e2 = tuple(dual(d) for d in d2)
            split = r.split + ("L",) * len(e1) + ("R",) * len(e2)
            got = (make("NewTens", C + e1 + e2, [q1, q2], principal=r.principal, split=split),
                   d1 + d2)
        else:
            q, ds = go(p.premises[0])
            extra = tuple(dual(d) for d in ds)
            node = make(tag, C + extra, [q], principal=r.principal, split=r.split, n=r.n)
            got = (node, ds)
        memo[p.uid] = got
        return got

    return go(proof)


def tensor_all(fs) -> Formula:
    fs = list(fs)
    acc = fs[0]
    for f in fs[1:]:
        acc = tensor(acc, f)
    return acc


def par_all(fs) -> Formula:
    fs = list(fs)
    acc = fs[0]
    for f in fs[1:]:
        acc = par(acc, f)
    return acc


def bound_proof(proof: Proof) -> Proof:
    """Bounded LLT proof: contraction-free proof cut against the duplicators.

    The result is either cut-free (no contractions to remove) or a single
    root Cut over two cut-free, contraction-free premises.
    """
    pi, ds = eliminate_contractions(proof)
    if not ds:
        return pi
    left = dup_proof(duplicator_base(ds[0]))
    for d in ds[1:]:
        f = tensor(left.conclusion[0], d)
        left = make("NewTens", (f,), [left, dup_proof(duplicator_base(d))],
                    principal=0, split=(None,))
    gamma = proof.conclusion
    g = len(gamma)
    right = pi
    k = len(ds)
    for _ in range(k - 1):
        C = right.conclusion
        right = make("Par", C[:g] + (par(C[g], C[g + 1]),) + C[g + 2:], [right], principal=g)
    return make("Cut", gamma, [left, right], cut=left.conclusion[0], split=("R",) * g)


def llt_to_lltn(proof: Proof) -> Proof:
    """Translate a contraction-free LLT proof into LLTN.

    Dereliction becomes arity-1 dereliction, weakening becomes Bot plus
    arity-0 dereliction, and promotion becomes the infinitary rule whose
    premises are generated by a :class:`TensorSplitSchema`.
    """
    memo = {}

    def go(p):
        got = memo.get(p.uid)
        if got is not None:
            return got
        r = p.rule
        C = p.conclusion
        if r.tag == "Contraction":
            raise ProofError("llt_to_lltn needs a contraction-free proof")
        if isinstance(p.premises, PremiseFamily):
            raise ProofError("proof is already in LLTN")
        prem = [go(q) for q in p.premises]
        i = r.principal
        if r.tag == "ClassicDereliction":
            got = make("Dereliction", C, prem, principal=i, n=1)
        elif r.tag == "Weakening":
            b = make("Bot", C[:i] + (BOT,) + C[i + 1:], prem, principal=i)
            got = make("Dereliction", C, [b], principal=i, n=0)
        elif r.tag == "ClassicPromotion":
            ctx = C[:i] + C[i + 1:]
            base_a = reorder(prem[0], ctx + (C[i].body,))
            schema = TensorSplitSchema.of(lltn_base1(ctx), base_a, ctx, C[i].body)
            got = make("Promotion", C, schema, principal=i)
        elif r.tag == "PlainTensor":
            got = _same_node(p, prem, "NewTens")
        else:
            got = _same_node(p, prem)
        memo[p.uid] = got
        return got

    return go(proof)


def ll_to_lltn(proof: Proof) -> Proof:
    """Bounded LLTN proof of the conclusion of a cut-free LL proof."""
    b = bound_proof(proof)
    if b.rule.tag == "Cut":
        l, r = (llt_to_lltn(q) for q in b.premises)
        return make("Cut", b.conclusion, [l, r], cut=b.rule.cut, split=b.rule.split)
    return llt_to_lltn(b)


# --------------------------------------------------------------------------
# cut composition

def _decompose(p: Proof, i: int):
    """Split a bounded proof around conclusion index ``i``.

    Returns ``(main, main_index, ctx_main, side, aux)``: ``main`` is the
    cut-free proof holding the target, ``ctx_main`` are the conclusion
    positions of ``p`` that live in ``main``, ``side`` is the other cut
    premise (or None) and ``aux`` the cut formula as seen by ``main``.
    """
    C = p.conclusion
    if p.rule.tag != "Cut":
        if not is_cut_free(p):
            raise ProofError("compose_cuts needs bounded proofs")
        return p, i, [j for j in range(len(C)) if j != i], None, None
    r = p.rule
    if not all(is_cut_free(q) for q in p.premises):
        raise ProofError("compose_cuts needs bounded proofs")
    side_of = r.split[i]
    k = 0 if side_of == "L" else 1
    main, side = p.premises[k], p.premises[1 - k]
    aux = r.cut if k == 0 else dual(r.cut)
    ctx_main = [j for j in range(len(C)) if j != i and r.split[j] == side_of]
    # the target's position inside main, following the rule's witness
    pos = [j for j in range(len(C)) if r.split[j] == side_of]
    main_index = r.perms[k][pos.index(i)]
    return main, main_index, ctx_main, side, aux


def compose_cuts(p1: Proof, i1: int, p2: Proof, i2: int) -> Proof:
    """Cut two bounded LLTN proofs on ``p1.conclusion[i1]`` and its dual in ``p2``.

    The output proves ``G, D`` (the remaining formulas of ``p1`` then
    ``p2``) and is again bounded: the two root cuts and the new cut are
    packed into a single cut at the root.
    """
    a = p1.conclusion[i1]
    if p2.conclusion[i2] is not dual(a):
        raise ProofError("the two cut formulas are not dual")
    gamma = tuple(f for j, f in enumerate(p1.conclusion) if j != i1)
    delta = tuple(f for j, f in enumerate(p2.conclusion) if j != i2)
    out = gamma + delta
    if p1.rule.tag != "Cut" and p2.rule.tag != "Cut":
        if not (is_cut_free(p1) and is_cut_free(p2)):
            raise ProofError("compose_cuts needs bounded proofs")
        l = reorder(p1, gamma + (a,))
        r = reorder(p2, delta + (dual(a),))
        return make("Cut", out, [l, r], cut=a, split=("L",) * len(gamma) + ("R",) * len(delta))
    m1, k1, ctx1, s1, aux1 = _decompose(p1, i1)
    m2, k2, ctx2, s2, aux2 = _decompose(p2, i2)
    auxes = [x for x in (aux1, aux2) if x is not None]
    sides = [s for s in (s1, s2) if s is not None]

    # left: A * dual(A), then par in the auxiliary cut formulas
    t = tensor(a, dual(a))
    m1_ctx = tuple(f for j, f in enumerate(m1.conclusion) if j != k1)
    m2_ctx = tuple(f for j, f in enumerate(m2.conclusion) if j != k2)
    left = make("NewTens", m1_ctx + m2_ctx + (t,), [m1, m2],
                principal=len(m1_ctx) + len(m2_ctx),
                split=("L",) * len(m1_ctx) + ("R",) * len(m2_ctx) + (None,))
    # move aux formulas to the end, then par them on
    rest = [f for f in m1_ctx + m2_ctx]
    for x in auxes:
        rest.remove(x)
    left = reorder(left, tuple(rest) + (t,) + tuple(auxes))
    x = t
    for aux in auxes:
        C = left.conclusion
        x = par(x, aux)
        left = make("Par", C[:len(rest)] + (x,) + C[len(rest) + 2:], [left], principal=len(rest))

    # right: ((dual(A) @ A) * dual(aux1)) * dual(aux2) from the side premises
    ax = axiom_proof(a, System.LLTN)
    right = make("Par", (dual(t),), [ax], principal=0)
    for s, aux in zip(sides, auxes):
        f = right.conclusion[0]
        sctx = list(s.conclusion)
        sctx.remove(dual(aux))
        rctx = right.conclusion[1:]
        right = make("NewTens", (tensor(f, dual(aux)),) + rctx + tuple(sctx), [right, s],
                     principal=0, split=(None,) + ("L",) * len(rctx) + ("R",) * len(sctx))

    # ctx indices are positions in p1/p2; rebase them onto out
    in_main = set()
    for j in ctx1:
        in_main.add(j if j < i1 else j - 1)
    for j in ctx2:
        in_main.add(len(gamma) + (j if j < i2 else j - 1))
    split = tuple("L" if j in in_main else "R" for j in range(len(out)))
    return make("Cut", out, [left, right], cut=x, split=split)


translate_ll_to_llt = ll_to_llt
translate_llt_to_ll = llt_to_ll
