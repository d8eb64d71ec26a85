import random

import pytest
from hypothesis import given, settings, strategies as st

from llgames.calculus import Exhausted, Proof, ResourceLimit, System, check_proof, search_cutfree
from llgames.formula import dual, parse, random_formula

from .conftest import formulas


@pytest.mark.parametrize("system", list(System))
@pytest.mark.parametrize("seq", [["1"], ["B", "1"], ["T", "0"], ["1 * 1"], ["B @ B", "1 * 1"], ["1 + 0"]])
def test_finds_easy_proofs(system, seq):
    fs = [parse(s) for s in seq]
    p = search_cutfree(system, fs)
    assert isinstance(p, Proof)
    assert list(p.conclusion) == fs
    assert check_proof(system, p, n_check=2).valid


@pytest.mark.parametrize("seq", [["0"], ["B"], ["1", "1"], ["B * B"]])
def test_refutes(seq):
    r = search_cutfree(System.LLTN, [parse(s) for s in seq])
    assert isinstance(r, Exhausted) and r.complete
    assert "complete refutation" in str(r)


def test_exponentials_make_refutations_bounded():
    # ?(B * B) needs a dereliction arity, so the refutation is only up to the cap
    r = search_cutfree(System.LLTN, [parse("?(B * B)")], depth_limit=6)
    assert isinstance(r, Exhausted) and not r.complete and r.hit_arity


def test_contraction_in_ll():
    # k copies of B * B absorb k + 1 ones, so three ones need two copies
    seq = [parse("?(B * B)"), parse("1 @ 1 @ 1")]
    q = search_cutfree(System.LL, seq, depth_limit=10)
    assert isinstance(q, Proof)
    assert check_proof(System.LL, q).contraction_count >= 1
    r = search_cutfree(System.LLTN, seq, depth_limit=10)
    assert isinstance(r, Proof)
    assert check_proof(System.LLTN, r, n_check=2).valid
    four = [parse("?(B * B)"), parse("1 @ 1 @ 1 @ 1")]
    assert isinstance(search_cutfree(System.LLTN, four, arity_cap=2), Exhausted)
    assert isinstance(search_cutfree(System.LLTN, four, arity_cap=3), Proof)


def test_budget():
    r = search_cutfree(System.LL, [parse("?(B * B) @ ?(1 + B)"), parse("!(1 * 1) * !1")], node_budget=3)
    assert isinstance(r, ResourceLimit)
    assert "budget" in str(r)


def test_atoms_flag():
    with pytest.raises(ValueError):
        search_cutfree(System.LL, [parse("X")])
    p = search_cutfree(System.LL, [parse("X^"), parse("X")], atoms=True)
    assert isinstance(p, Proof)


@settings(max_examples=25)
@given(formulas(depth=3, exponentials=False))
def test_identity_is_found(a):
    p = search_cutfree(System.LL, [dual(a), a], depth_limit=20)
    assert isinstance(p, Proof)
    assert check_proof(System.LL, p).valid


@settings(max_examples=40)
@given(st.integers(0, 10**6))
def test_found_proofs_check(seed):
    rng = random.Random(seed)
    seq = [random_formula(rng, 3, exponentials=False) for _ in range(rng.randint(1, 2))]
    r = search_cutfree(System.LLTN, seq, depth_limit=8)
    if isinstance(r, Proof):
        assert check_proof(System.LLTN, r, n_check=2).valid
        assert list(r.conclusion) == seq
    else:
        assert isinstance(r, (Exhausted, ResourceLimit))
