"""Acceptance suite: one test per criterion, each reporting a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v``; the lines are echoed in the
"acceptance" section of the terminal summary.  Two criteria are recorded as
strict expected failures, see the ``reason`` strings.
"""

import os
import random
import time
from collections import Counter

import pytest

from llgames.calculus import (
    KINDS, Exhausted, Proof, System, anodyne, anodyne_target, apply_dup, axiom_proof,
    bound_proof, check_proof, compose_cuts, dup_proof, eliminate_contractions, is_bounded,
    is_cut_free, llt_to_lltn, make, random_ll_corpus, search_cutfree, weaken,
)
from llgames.calculus.fixtures import infinitary_proof, infinitary_sequent, cut_elim_proof, cut_elim_sequent
from llgames.formula import (
    BOT, ONE, ZERO, dual, duplicator, ofcourse, par, parse, plus, show, tensor, whynot,
)
from llgames.game import BudgetExhausted, Caps, Variant, all_plays, gen_positions, legal_moves, random_positions
from llgames.strategy import (
    SelectorStrategy, base_corpus, cut_compose_witness, intersect, strategy_plays,
    v_corpus, validity_check, witness_from_proof,
)

pytestmark = pytest.mark.acceptance

HEADS = {"bot": BOT.op, "par": par(ONE, ONE).op, "with_left": parse("1 & 1").op,
         "with_right": parse("1 & 1").op, "bang": ofcourse(ONE).op}


@pytest.fixture(scope="module")
def corpus():
    """200 seeded cut-free LL proofs of at most 15 rules, with their images."""
    proofs = random_ll_corpus(0, 200, 15)
    bounded = [bound_proof(p) for p in proofs]
    lltn = []
    for b in bounded:
        if b.rule.tag == "Cut":
            l, r = (llt_to_lltn(x) for x in b.premises)
            lltn.append(make("Cut", b.conclusion, [l, r], cut=b.rule.cut, split=b.rule.split))
        else:
            lltn.append(llt_to_lltn(b))
    return proofs, bounded, lltn


# ------------------------------------------------------------------ 1

def test_c01_duplicators(criterion):
    t = time.time()
    bad = []
    for a in [ONE, BOT, plus(ONE, BOT), ofcourse(ONE)]:
        r = check_proof(System.LLT, dup_proof(a))
        if not (r.valid and r.cut_count == 0 and r.contraction_count == 0):
            bad.append(("dup", show(a)))
        # |- ?dual(a), a, ?dual(a) : dereliction of the axiom, then a weakening
        wn = whynot(dual(a))
        d = make("ClassicDereliction", (wn, a), [axiom_proof(a, System.LLT)], principal=0)
        q = apply_dup(weaken(d, [wn], System.LLT))
        r = check_proof(System.LLT, q)
        if not (r.valid and r.cut_count == 0 and r.contraction_count == 0
                and Counter(q.conclusion) == Counter([wn, a, dual(duplicator(a))])):
            bad.append(("apply_dup", show(a)))
    dt = time.time() - t
    ok = not bad and dt < 1
    criterion(1, ok, f"4 duplicators and 4 apply_dup checks, failures {bad}, {dt:.2f} s")
    assert ok


# ------------------------------------------------------------------ 2, 3, 4

def test_c02_contraction_elimination(criterion, corpus):
    proofs, _, _ = corpus
    t = time.time()
    fails = total = 0
    for p in proofs:
        k = check_proof(System.LL, p).contraction_count
        total += k
        q, ds = eliminate_contractions(p)
        r = check_proof(System.LLT, q)
        ok = (r.valid and r.cut_count == 0 and r.contraction_count == 0
              and q.conclusion == p.conclusion + tuple(dual(d) for d in ds) and len(ds) == k)
        fails += not ok
    dt = time.time() - t
    ok = fails == 0 and len(proofs) >= 200 and total > 0 and dt < 30
    criterion(2, ok, f"{len(proofs)} proofs, {total} contractions, {fails} failures, {dt:.1f} s")
    assert ok


def test_c03_bounding(criterion, corpus):
    proofs, bounded, _ = corpus
    fails = 0
    for p, b in zip(proofs, bounded):
        r = check_proof(System.LLT, b)
        fails += not (r.valid and is_bounded(b) and r.cut_count <= 1 and b.conclusion == p.conclusion)
    cuts = sum(b.rule.tag == "Cut" for b in bounded)
    ok = fails == 0
    criterion(3, ok, f"{len(bounded)} proofs, {cuts} with a root cut, {fails} failures")
    assert ok


def test_c04_llt_to_lltn(criterion, corpus):
    _, bounded, lltn = corpus
    fails = 0
    for b, n in zip(bounded, lltn):
        r = check_proof(System.LLTN, n, n_check=5)
        fails += not (r.valid and is_bounded(n) and n.conclusion == b.conclusion)
    ok = fails == 0
    criterion(4, ok, f"{len(lltn)} images checked at n_check 5, {fails} failures")
    assert ok


# ------------------------------------------------------------------ 5, 6

def test_c05_infinitary_sequent(criterion):
    t = time.time()
    p = infinitary_proof()
    r = check_proof(System.LLTN, p, n_check=5)
    res = search_cutfree(System.LL, infinitary_sequent(), depth_limit=12, arity_cap=3)
    dt = time.time() - t
    ok = (r.valid and is_bounded(p) and p.conclusion == infinitary_sequent()
          and isinstance(res, Exhausted) and dt < 120)
    criterion(5, ok, f"LLTN proof valid={r.valid}; LL search: {res}; {dt:.1f} s")
    assert ok


@pytest.mark.xfail(strict=True, reason=(
    "with X = B * T and Y = 1 @ 0 we have Y = dual(X), and the sequent has a cut-free "
    "LLTN proof (T absorbs the context); the search finds and the checker accepts it"))
def test_c06_cut_elimination_failure(criterion):
    t = time.time()
    p = cut_elim_proof()
    r = check_proof(System.LLT, p)
    res = search_cutfree(System.LLTN, cut_elim_sequent(), depth_limit=14, arity_cap=3)
    dt = time.time() - t
    found = isinstance(res, Proof) and check_proof(System.LLTN, res, n_check=5).valid
    ok = r.valid and isinstance(res, Exhausted) and dt < 300
    criterion(6, ok, f"LLT proof valid={r.valid}; LLTN search returned "
                     f"{'a checked cut-free proof' if found else res}; {dt:.1f} s")
    assert ok


# ------------------------------------------------------------------ 7

def test_c07_cut_admissibility(criterion, corpus):
    _, _, lltn = corpus
    rng = random.Random(7)
    natural = [(a, i, b, j) for a in lltn for i, f in enumerate(a.conclusion)
               for b in lltn for j, g in enumerate(b.conclusion) if g is dual(f)]
    pairs = rng.sample(natural, min(150, len(natural)))
    # partners built around an axiom, so every cut formula of the corpus occurs
    cutfree = [x for x in lltn if x.rule.tag != "Cut"]
    for a in rng.sample(lltn, 60):
        i = rng.randrange(len(a.conclusion))
        f = a.conclusion[i]
        q = rng.choice(cutfree)
        k = len(q.conclusion)
        b = make("NewTens", (dual(f), tensor(f, q.conclusion[0])) + q.conclusion[1:],
                 [axiom_proof(f), q], principal=1, split=("L", None) + ("R",) * (k - 1))
        pairs.append((a, i, b, 0))
    fails = 0
    kinds = Counter()
    for a, i, b, j in pairs:
        c = compose_cuts(a, i, b, j)
        r = check_proof(System.LLTN, c, n_check=4)
        want = a.conclusion[:i] + a.conclusion[i + 1:] + b.conclusion[:j] + b.conclusion[j + 1:]
        fails += not (r.valid and is_bounded(c) and r.cut_count <= 1 and c.conclusion == want)
        kinds[(a.rule.tag == "Cut") + (b.rule.tag == "Cut")] += 1
    ok = fails == 0 and len(pairs) >= 100
    criterion(7, ok, f"{len(pairs)} pairs (by number of cut inputs {dict(sorted(kinds.items()))}), "
                     f"{fails} failures")
    assert ok


# ------------------------------------------------------------------ 8

SN_BUDGET = int(os.environ.get("LLGAMES_SN_BUDGET", 20000))


@pytest.mark.slow
@pytest.mark.xfail(strict=True, reason=(
    "a budget of 10^7 positions per instance does not fit in memory here; at the "
    "LLGAMES_SN_BUDGET default some of the 500 instances exhaust their budget"))
def test_c08_finiteness(criterion):
    t = time.time()
    ps = list(gen_positions(6, seed=1, count=500, depth=3))
    lines = []
    over_all = 0
    for variant, exotic in [(Variant.LLTN, True), (Variant.NAIVE, False)]:
        done = over = longest = 0
        for p in ps:
            try:
                s = all_plays(p, variant, Caps(expo_cap=2, budget=SN_BUDGET), exotic)
            except BudgetExhausted:
                over += 1
                continue
            done += 1
            longest = max(longest, s.max_length)
        over_all += over
        lines.append(f"{variant.value}: {done} terminated, {over} over budget, longest play {longest}")
    ok = over_all == 0
    criterion(8, ok, f"{len(ps)} positions, budget {SN_BUDGET}; " + "; ".join(lines)
                     + f"; {time.time() - t:.0f} s")
    assert ok


# ------------------------------------------------------------------ 9

def soundness_fixtures():
    out = [axiom_proof(parse(s)) for s in ["1", "1 * 1", "1 + B", "!1", "T"]]
    ax = axiom_proof(tensor(ONE, ONE))
    # two dangling edges, one cut at the root
    out.append(compose_cuts(ax, ax.conclusion.index(tensor(ONE, ONE)),
                            ax, ax.conclusion.index(dual(tensor(ONE, ONE)))))
    return out


@pytest.mark.slow
def test_c09_soundness(criterion):
    t = time.time()
    vs = v_corpus(3)
    parts = []
    ok = True
    for p in soundness_fixtures():
        assert check_proof(System.LLTN, p, n_check=3).valid and is_bounded(p)
        rep = witness_from_proof(p).check(vs, Caps(expo_cap=2))
        s = rep.summary()
        ok &= rep.passed and s["Unknown"] == 0
        parts.append(f"|- {', '.join(s['sequent'])}: {s['ProponentWins']}/{s['checks']}"
                     f" ({s['bound_limited']} bound-limited)")
    ok &= any(p.rule.tag == "Cut" for p in soundness_fixtures())
    criterion(9, ok, "; ".join(parts) + f"; {time.time() - t:.0f} s")
    assert ok


# ------------------------------------------------------------------ 10

def test_c10_consistency(criterion):
    fs = [parse(s) for s in ["1", "B", "1 * 1", "B @ B", "1 + B", "B & 1", "B * B", "1 @ 1", "!1", "?B"]]
    vs = v_corpus(3)
    certified = {}
    for a in fs:
        certified[a] = False
        for b in base_corpus(a, 2):
            r = validity_check([a], b, vs, stop_on_failure=True)
            if r.passed and r.uncapped:
                certified[a] = True
                break
    both = [show(a) for a in fs if certified[a] and certified.get(dual(a))]
    ok = not both and all(dual(a) in certified for a in fs)
    criterion(10, ok, f"certified: {[show(a) for a in fs if certified[a]]}; with dual: {both}")
    assert ok


# ------------------------------------------------------------------ 11

def test_c11_incompleteness_witness(criterion):
    a = tensor(BOT, BOT)
    r = validity_check([a], corpus=v_corpus(3))
    s = r.summary()
    res = search_cutfree(System.LLTN, [a])
    ok = r.passed and r.uncapped and isinstance(res, Exhausted) and res.complete
    criterion(11, ok, f"solve: {s['ProponentWins']}/{s['checks']} ProponentWins; search: {res}")
    assert ok


# ------------------------------------------------------------------ 12

def test_c12_naive_defect(criterion):
    vs = v_corpus(3)
    parts = []
    ok = True
    for a in [ONE, plus(BOT, BOT)]:
        r = validity_check([par(dual(a), ofcourse(a))], corpus=vs, variant=Variant.NAIVE)
        ok &= r.passed
        parts.append(f"naive {show(a)}: {r.summary()['ProponentWins']}/{len(r.rows)}")
    r = validity_check([par(dual(plus(BOT, BOT)), ofcourse(plus(BOT, BOT)))], corpus=vs,
                       stop_on_failure=True)
    bad = r.failures()
    ok &= bool(bad)
    parts.append(f"lltn {show(plus(BOT, BOT))}: "
                 + (f"fails at V={list(bad[0][0])} token={bad[0][1]}" if bad else "no failure"))
    criterion(12, ok, "; ".join(parts))
    assert ok


# ------------------------------------------------------------------ 13

def _first(caps):
    def pick(p):
        ms = legal_moves(p, Variant.LLTN, caps)
        return ms[0] if ms else None
    return pick


def _last(caps):
    def pick(p):
        ms = legal_moves(p, Variant.LLTN, caps)
        return ms[-1] if ms else None
    return pick


def test_c13_model_cut(criterion):
    vs = v_corpus(3)
    one = make("One", (ONE,))
    t11 = make("NewTens", (tensor(ONE, ONE),), [one, one], principal=0, split=(None,))
    parts = []
    ok = True
    for p1, p2 in [(one, axiom_proof(ONE)), (t11, axiom_proof(tensor(ONE, ONE)))]:
        w = cut_compose_witness(witness_from_proof(p1), witness_from_proof(p2))
        r = w.check(vs)
        ok &= r.passed
        parts.append(f"|- {', '.join(map(show, w.gamma))}: {r.summary()['ProponentWins']}/{len(r.rows)}")

    caps = Caps(expo_cap=1)
    pool = [ONE, tensor(ONE, ONE), plus(ONE, ZERO), ofcourse(ONE), par(ONE, ONE)]
    n = mismatches = 0
    for p in random_positions(random.Random(0), 300, 5, pool=pool, teams=("P", "P'", "O")):
        s1 = SelectorStrategy({"P"}, _first(caps), p)
        s2 = SelectorStrategy({"P'"}, _last(caps), p)
        a = strategy_plays(s1, caps=caps)
        b = strategy_plays(s2, caps=caps)
        mismatches += strategy_plays(intersect(s1, s2), caps=caps) != a & b
        n += 1
    ok &= mismatches == 0
    parts.append(f"intersection play sets on {n} positions, {mismatches} mismatches")
    criterion(13, ok, "; ".join(parts))
    assert ok


# ------------------------------------------------------------------ 14

def test_c14_anodyne(criterion, corpus):
    _, _, lltn = corpus
    rng = random.Random(1)
    cutfree = []
    for n in lltn:
        cutfree += list(n.premises) if n.rule.tag == "Cut" else [n]
    apps = fails = 0
    kinds = Counter()
    for p in cutfree:
        for i, f in enumerate(p.conclusion):
            for kind in KINDS:
                if f.op != HEADS[kind]:
                    continue
                k = rng.randint(0, 3) if kind == "bang" else None
                q = anodyne(kind, p, i, n=k)
                want = p.conclusion[:i] + anodyne_target(kind, f, k) + p.conclusion[i + 1:]
                r = check_proof(System.LLTN, q, n_check=4)
                fails += not (r.valid and is_cut_free(q) and Counter(q.conclusion) == Counter(want))
                apps += 1
                kinds[kind] += 1
    ok = fails == 0 and apps >= 200 and len(kinds) == 5
    criterion(14, ok, f"{apps} applications {dict(kinds)}, {fails} failures")
    assert ok
