"""Validity harness, soundness pipeline, witnesses and model-level cut."""

import pytest

from llgames.calculus import axiom_proof, compose_cuts, make
from llgames.formula import BOT, ONE, ZERO, parse, tensor
from llgames.game import Caps, Variant
from llgames.strategy import (
    Base, V_POOL, Winner, attach, base_corpus, cut_compose_witness, soundness_pipeline,
    v_corpus, validity_check, witness_from_proof,
)

ONE_PROOF = make("One", (ONE,))


def test_corpus_sizes():
    assert len(v_corpus(1)) == 1
    assert len(v_corpus(2)) == 1 + 2 * len(V_POOL)
    assert len(v_corpus(3)) == 64
    for t in v_corpus(3):
        assert set(t.teams.values()) == {"O"} and t.token == "x0"


def test_attach():
    base = Base.single([ONE, BOT])
    t = v_corpus(2)[1]
    p = attach(base, [t, v_corpus(1)[0]], token="u")
    assert len(p.teams) == 1 + len(t.teams) + 1
    assert p.token == "u"
    with pytest.raises(ValueError):
        attach(base, [t])


def test_base_helpers():
    b = Base.single([ONE], team="P")
    assert b.sequent() == (ONE,)
    assert b.proponents() == {"P"}
    assert "dangling" in str(b)
    bs = base_corpus(ONE, 2)
    assert len(bs) == 7
    assert all(len(x.dangling) == 1 for x in bs)


def test_zero_fails():
    r = validity_check([ZERO], corpus=v_corpus(1))
    assert r.counts()[Winner.OPPONENT] >= 1
    assert not r.passed
    row = [x for x in r.rows if x[1] == "u"][0]
    assert row[2].winner is Winner.OPPONENT


def test_one_passes_and_reports():
    r = validity_check([ONE])
    assert r.passed and r.uncapped
    s = r.summary()
    assert s["checks"] == len(r.rows) and s["ProponentWins"] == s["checks"]
    assert r.render().endswith("PASS")
    assert "V=[" in r.render(verbose=True)


def test_stop_on_failure():
    r = validity_check([BOT], stop_on_failure=True)
    assert not r.complete and len(r.rows) == 1 and not r.passed


def test_arity_mismatch():
    with pytest.raises(ValueError):
        validity_check([ONE], Base.single([ONE, ONE]))


def test_naive_identity():
    r = validity_check([parse("1 -o !1")], variant=Variant.NAIVE, corpus=v_corpus(2))
    assert r.passed


def test_soundness_pipeline_shapes():
    base, decorate = soundness_pipeline(axiom_proof(ONE))
    assert list(base.position.teams) == ["u"] and len(base.dangling) == 2
    cut = compose_cuts(ONE_PROOF, 0, axiom_proof(ONE), 0)
    base, decorate = soundness_pipeline(cut)
    assert base.position.teams == {"u1": "P", "u2": "P"}
    assert len(base.position.edges) == 1 and [f for _, f in base.dangling] == [ONE]
    d = decorate(attach(base, [v_corpus(1)[0]], token="u1"))
    assert set(d.decorations) == {"u1", "u2"}
    d.validate()


def test_soundness_pipeline_rejects_unbounded():
    cut = compose_cuts(ONE_PROOF, 0, axiom_proof(ONE), 0)
    with pytest.raises(ValueError):
        soundness_pipeline(make("Bot", (BOT, ONE), [cut], principal=0))


def test_witness_small():
    w = witness_from_proof(axiom_proof(tensor(ONE, ONE)))
    r = w.check(v_corpus(2))
    assert r.passed and r.uncapped


def test_cut_compose_smallest():
    w1 = witness_from_proof(ONE_PROOF)               # |- 1
    w2 = witness_from_proof(axiom_proof(ONE))        # |- B, 1
    w = cut_compose_witness(w1, w2)
    assert w.gamma == (ONE,)
    assert len(w.base.position.teams) == 2 and len(w.base.position.edges) == 1
    assert w.teams == {"P", "P'"}
    assert w.check(v_corpus(3)).passed


def test_cut_compose_errors():
    w1 = witness_from_proof(ONE_PROOF)
    with pytest.raises(ValueError):
        cut_compose_witness(w1, w1)
    w = cut_compose_witness(w1, witness_from_proof(axiom_proof(ONE)))
    with pytest.raises(ValueError):
        cut_compose_witness(w, w1)


def test_check_caps_are_used():
    w = witness_from_proof(axiom_proof(parse("!1")))
    r = w.check(v_corpus(2), caps=Caps(expo_cap=1))
    assert r.passed and not r.uncapped
