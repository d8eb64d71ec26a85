"""Variable-free linear logic formulas.

Formulas are hash-consed: every structurally distinct formula exists once
per process, so equality is identity and hashing is O(1).  Atoms are only
used to write down schematic examples; the game layer rejects them.

ASCII syntax (tightest binding first)::

    ^            postfix dual
    ! ?          prefix exponentials
    *            tensor
    &            with
    +            plus
    @            par
    -o           linear implication, sugar for  dual(A) @ B

Units are ``0 1 T B`` (zero, one, top, bottom).  Binary operators are left
associative.
"""

from __future__ import annotations

import enum
import random
import re
import threading

__all__ = [
    "Formula", "Polarity", "ParseError",
    "ZERO", "ONE", "TOP", "BOT",
    "tensor", "par", "plus", "with_", "ofcourse", "whynot", "atom",
    "dual", "polarity", "is_positive", "power", "duplicator", "substitute",
    "parse", "show", "atoms_of", "random_formula",
]

# op tags
Z, O1, T, B = "0", "1", "T", "B"
TENS, PAR, PLUS, WITH = "*", "@", "+", "&"
OC, WN = "!", "?"
PATOM, NATOM = "atom+", "atom-"

_DUAL_OP = {
    Z: T, T: Z, O1: B, B: O1,
    TENS: PAR, PAR: TENS, PLUS: WITH, WITH: PLUS,
    OC: WN, WN: OC, PATOM: NATOM, NATOM: PATOM,
}
_POSITIVE_OPS = frozenset({Z, O1, TENS, PLUS, WN, PATOM})
_BINARY = frozenset({TENS, PAR, PLUS, WITH})


class Polarity(enum.Enum):
    POSITIVE = "+"
    NEGATIVE = "-"


class Formula:
    """An interned formula node.  Build through the module constructors."""

    __slots__ = ("op", "args", "name", "uid", "depth", "size", "_dual")

    def __init__(self, op, args, name, uid):
        self.op = op
        self.args = args
        self.name = name
        self.uid = uid
        self.depth = 1 + max((a.depth for a in args), default=0)
        self.size = 1 + sum(a.size for a in args)
        self._dual = None

    def __hash__(self):
        return self.uid

    def __eq__(self, other):
        return self is other

    def __lt__(self, other):
        return self.uid < other.uid

    def __reduce__(self):
        return (_mk, (self.op, self.args, self.name))

    def __repr__(self):
        return f"Formula({show(self)!r})"

    def __str__(self):
        return show(self)

    @property
    def left(self) -> "Formula":
        return self.args[0]

    @property
    def right(self) -> "Formula":
        return self.args[1]

    @property
    def body(self) -> "Formula":
        return self.args[0]

    @property
    def is_atom(self) -> bool:
        return self.op in (PATOM, NATOM)


_table: dict = {}
_lock = threading.Lock()


def _mk(op, args=(), name=None) -> Formula:
    key = (op, tuple(a.uid for a in args), name)
    f = _table.get(key)
    if f is None:
        with _lock:
            f = _table.get(key)
            if f is None:
                f = Formula(op, tuple(args), name, len(_table))
                _table[key] = f
    return f


ZERO = _mk(Z)
ONE = _mk(O1)
TOP = _mk(T)
BOT = _mk(B)


def tensor(a: Formula, b: Formula) -> Formula:
    return _mk(TENS, (a, b))


def par(a: Formula, b: Formula) -> Formula:
    return _mk(PAR, (a, b))


def plus(a: Formula, b: Formula) -> Formula:
    return _mk(PLUS, (a, b))


def with_(a: Formula, b: Formula) -> Formula:
    return _mk(WITH, (a, b))


def ofcourse(a: Formula) -> Formula:
    return _mk(OC, (a,))


def whynot(a: Formula) -> Formula:
    return _mk(WN, (a,))


def atom(name: str, positive: bool = True) -> Formula:
    return _mk(PATOM if positive else NATOM, (), name)


def dual(a: Formula) -> Formula:
    """Linear negation: swap every connective with its De Morgan dual."""
    d = a._dual
    if d is None:
        d = _mk(_DUAL_OP[a.op], tuple(dual(x) for x in a.args), a.name)
        a._dual = d
        d._dual = a
    return d


def polarity(a: Formula) -> Polarity:
    return Polarity.POSITIVE if a.op in _POSITIVE_OPS else Polarity.NEGATIVE


def is_positive(a: Formula) -> bool:
    return a.op in _POSITIVE_OPS


def power(a: Formula, n: int, mode: str = "tensor") -> Formula:
    """n-fold tensor or par of ``a``, left nested; arity 1 is ``a`` itself."""
    if n < 0:
        raise ValueError("power needs n >= 0")
    if mode not in ("tensor", "par"):
        raise ValueError(f"unknown mode {mode!r}")
    if n == 0:
        return ONE if mode == "tensor" else BOT
    join = tensor if mode == "tensor" else par
    acc = a
    for _ in range(n - 1):
        acc = join(acc, a)
    return acc


def duplicator(a: Formula) -> Formula:
    """``!(!a -o !a * !a)``, stored as ``!(?dual(a) @ (!a * !a))``."""
    bang = ofcourse(a)
    return ofcourse(par(whynot(dual(a)), tensor(bang, bang)))


def substitute(a: Formula, name: str, b: Formula) -> Formula:
    """Replace the positive atom ``name`` by ``b`` and its negation by ``dual(b)``."""
    if a.op == PATOM:
        return b if a.name == name else a
    if a.op == NATOM:
        return dual(b) if a.name == name else a
    if not a.args:
        return a
    return _mk(a.op, tuple(substitute(x, name, b) for x in a.args))


def atoms_of(a: Formula) -> set:
    if a.is_atom:
        return {a.name}
    out = set()
    for x in a.args:
        out |= atoms_of(x)
    return out


# --------------------------------------------------------------------------
# printing

_LEVEL = {PAR: 30, PLUS: 40, WITH: 50, TENS: 60, OC: 80, WN: 80, NATOM: 90}
_ATOMIC = 100


def _level(a: Formula) -> int:
    return _LEVEL.get(a.op, _ATOMIC)


def show(a: Formula) -> str:
    """Print with minimal parentheses; ``parse(show(a)) is a``."""
    op = a.op
    if op == PATOM:
        return a.name
    if op == NATOM:
        return a.name + "^"
    if op in (Z, O1, T, B):
        return op
    if op in (OC, WN):
        inner = show(a.body)
        if _level(a.body) < 80:
            inner = f"({inner})"
        return op + inner
    lvl = _LEVEL[op]
    l, r = show(a.left), show(a.right)
    if _level(a.left) < lvl:
        l = f"({l})"
    if _level(a.right) <= lvl:
        r = f"({r})"
    return f"{l} {op} {r}"


# --------------------------------------------------------------------------
# parsing

class ParseError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


_ALIASES = {"⊗": "*", "⅋": "@", "⊕": "+", "⊤": "T", "⊥": "B", "⊸": "-o"}
_TOKEN = re.compile(r"(-o)|([A-Za-z_][A-Za-z0-9_']*)|(\S)")


def _tokenize(text: str):
    for k, v in _ALIASES.items():
        text = text.replace(k, v)
    out = []
    for m in _TOKEN.finditer(text):
        tok = m.group(0)
        if m.lastindex == 3 and tok not in "()*@+&!?^01":
            raise ParseError(f"unexpected character {tok!r}", m.start())
        out.append((tok, m.start()))
    out.append(("<end>", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, atoms: bool):
        self.toks = _tokenize(text)
        self.i = 0
        self.atoms = atoms

    def peek(self):
        return self.toks[self.i][0]

    def take(self, expected=None):
        tok, pos = self.toks[self.i]
        if expected is not None and tok != expected:
            raise ParseError(f"expected {expected!r}, got {tok!r}", pos)
        self.i += 1
        return tok

    def binary(self, sub, op, build):
        acc = sub()
        while self.peek() == op:
            self.take()
            acc = build(acc, sub())
        return acc

    def lolli(self):
        return self.binary(self.par, "-o", lambda a, b: par(dual(a), b))

    def par(self):
        return self.binary(self.plus, "@", par)

    def plus(self):
        return self.binary(self.with_, "+", plus)

    def with_(self):
        return self.binary(self.tensor, "&", with_)

    def tensor(self):
        return self.binary(self.prefix, "*", tensor)

    def prefix(self):
        tok = self.peek()
        if tok == "!":
            self.take()
            return ofcourse(self.prefix())
        if tok == "?":
            self.take()
            return whynot(self.prefix())
        return self.postfix()

    def postfix(self):
        a = self.primary()
        while self.peek() == "^":
            self.take()
            a = dual(a)
        return a

    def primary(self):
        tok, pos = self.toks[self.i]
        if tok == "(":
            self.take()
            a = self.lolli()
            self.take(")")
            return a
        units = {"0": ZERO, "1": ONE, "T": TOP, "B": BOT}
        if tok in units:
            self.take()
            return units[tok]
        if tok[0].isalpha() or tok[0] == "_":
            if not self.atoms:
                raise ParseError(f"atom {tok!r} not allowed here", pos)
            self.take()
            return atom(tok)
        raise ParseError(f"unexpected token {tok!r}", pos)


def parse(text: str, atoms: bool = True) -> Formula:
    p = _Parser(text, atoms)
    a = p.lolli()
    tok, pos = p.toks[p.i]
    if tok != "<end>":
        raise ParseError(f"trailing input {tok!r}", pos)
    return a


# --------------------------------------------------------------------------
# random formulas

_UNITS = (ZERO, ONE, TOP, BOT)


def random_formula(rng: random.Random, depth: int, exponentials: bool = True,
                   units=_UNITS) -> Formula:
    """Random atom-free formula of depth at most ``depth``."""
    if depth <= 1 or rng.random() < 0.25:
        return rng.choice(units)
    ops = [TENS, PAR, PLUS, WITH]
    if exponentials:
        ops += [OC, WN]
    op = rng.choice(ops)
    if op in _BINARY:
        return _mk(op, (random_formula(rng, depth - 1, exponentials, units),
                        random_formula(rng, depth - 1, exponentials, units)))
    return _mk(op, (random_formula(rng, depth - 1, exponentials, units),))
