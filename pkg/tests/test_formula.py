import pytest
from hypothesis import given

from llgames.formula import (
    BOT, ONE, TOP, ZERO, ParseError, Polarity, atom, atoms_of, dual, duplicator, is_positive,
    ofcourse, par, parse, plus, polarity, power, show, substitute, tensor, whynot, with_,
)

from .conftest import formulas


def test_units_and_duals():
    assert dual(ONE) is BOT
    assert dual(ZERO) is TOP
    assert dual(tensor(ONE, ZERO)) is par(BOT, TOP)
    assert dual(ofcourse(ONE)) is whynot(BOT)
    assert dual(plus(ONE, BOT)) is with_(BOT, ONE)


def test_hash_consing():
    assert tensor(ONE, ONE) is tensor(ONE, ONE)
    assert parse("1 * 1") is tensor(ONE, ONE)
    assert len({tensor(ONE, BOT), tensor(ONE, BOT)}) == 1


def test_polarity():
    assert polarity(ONE) is Polarity.POSITIVE
    assert polarity(ofcourse(ONE)) is Polarity.NEGATIVE
    assert is_positive(whynot(BOT))
    assert not is_positive(with_(ONE, ONE))


@pytest.mark.parametrize("text, expected", [
    ("1 * B @ 0", par(tensor(ONE, BOT), ZERO)),
    ("1 + 1 & B", plus(ONE, with_(ONE, BOT))),
    ("!?1", ofcourse(whynot(ONE))),
    ("(1 @ B)^", tensor(BOT, ONE)),
    ("1 -o B", par(BOT, BOT)),
    ("1 * 1 * 1", tensor(tensor(ONE, ONE), ONE)),
    ("⊥ ⊗ ⊤", tensor(BOT, TOP)),
])
def test_parse(text, expected):
    assert parse(text) is expected


def test_lolli_is_left_associative():
    # (1 -o B) -o 1
    assert parse("1 -o B -o 1") is par(dual(par(BOT, BOT)), ONE)


@pytest.mark.parametrize("bad", ["1 *", "(1", "1 1", "1 $ 1", ""])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse(bad)


def test_atoms():
    a = parse("X * X^")
    assert atoms_of(a) == {"X"}
    assert substitute(a, "X", ONE) is tensor(ONE, BOT)
    with pytest.raises(ParseError):
        parse("X", atoms=False)
    assert dual(atom("X")) is parse("X^")


def test_power():
    assert power(ONE, 0) is ONE
    assert power(BOT, 0, "par") is BOT
    assert power(TOP, 1) is TOP
    assert power(ONE, 3) is tensor(tensor(ONE, ONE), ONE)
    with pytest.raises(ValueError):
        power(ONE, -1)


def test_duplicator_shape():
    d = duplicator(ONE)
    assert show(d) == "!(?B @ !1 * !1)"


@given(formulas())
def test_dual_is_involutive(a):
    assert dual(dual(a)) is a


@given(formulas())
def test_dual_flips_polarity(a):
    assert is_positive(a) != is_positive(dual(a))


@given(formulas())
def test_show_parse_roundtrip(a):
    assert parse(show(a)) is a
