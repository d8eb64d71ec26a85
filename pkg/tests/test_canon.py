"""The compiled and pure-Python canonical-code kernels agree."""

import random

import pytest
from hypothesis import given, strategies as st

from llgames.game import _canon_py, canon
from llgames.game.generate import random_positions

try:
    from llgames.game import _canon
except ImportError:  # pragma: no cover
    _canon = None

needs_cython = pytest.mark.skipif(_canon is None, reason="compiled kernel not built")


def arrays(p):
    vs = list(p.teams)
    idx = {v: k for k, v in enumerate(vs)}
    vl = [canon.vlabel_id(p.teams[v]) for v in vs]
    return (len(vs), idx[p.token], -1, vl, [idx[e.src] for e in p.edges],
            [idx[e.dst] for e in p.edges], [e.label.uid for e in p.edges])


def test_backend_is_reported():
    assert canon.BACKEND in ("cython", "python")


def test_path_codes():
    table = {}
    # a 3-path rooted at an end and at the middle differ
    end = _canon_py.encode(3, 0, -1, [0, 0, 0], [0, 1], [1, 2], [5, 5], table)
    mid = _canon_py.encode(3, 1, -1, [0, 0, 0], [0, 1], [1, 2], [5, 5], table)
    assert end != mid
    # reversing one edge matters
    rev = _canon_py.encode(3, 0, -1, [0, 0, 0], [0, 2], [1, 1], [5, 5], table)
    assert rev != end


def test_skip_cuts_a_branch():
    table = {}
    whole = _canon_py.encode(3, 1, -1, [0, 0, 0], [0, 1], [1, 2], [5, 5], table)
    half = _canon_py.encode(3, 1, 2, [0, 0, 0], [0, 1], [1, 2], [5, 5], table)
    single = _canon_py.encode(2, 1, -1, [0, 0], [0], [1], [5], table)
    assert half == single != whole


@needs_cython
@given(st.integers(0, 10**6), st.booleans())
def test_backends_agree(seed, three_teams):
    teams = ("P", "O", "P'") if three_teams else ("P", "O")
    ps = list(random_positions(random.Random(seed), 6, 7, depth=3, teams=teams))
    t1, t2 = {}, {}
    codes1 = [_canon_py.encode(*arrays(p), t1) for p in ps]
    codes2 = [_canon.encode(*arrays(p), t2) for p in ps]
    # same interning order gives the same integers
    assert codes1 == codes2
    assert t1 == t2


@needs_cython
@given(st.integers(0, 10**6))
def test_tree_code_wrappers_agree(seed):
    p = next(random_positions(random.Random(seed), 1, 7, depth=3))
    vs = list(p.teams)
    t1, t2, l1, l2 = {}, {}, {}, {}
    a = _canon_py.tree_code(vs, p.teams, p.edges, p.token, None, t1, l1)
    b = _canon.tree_code(vs, p.teams, p.edges, p.token, None, t2, l2)
    assert a == b and t1 == t2 and l1 == l2
