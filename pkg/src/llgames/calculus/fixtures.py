"""Hand-built proofs of the standard example sequents."""

from __future__ import annotations

from ..formula import (
    BOT, ONE, TOP, ZERO, Formula, dual, par, plus, power, tensor, whynot, with_, ofcourse,
)
from .build import axiom_proof, weaken
from .proof import Explicit, Proof, System, make

__all__ = ["infinitary_sequent", "infinitary_proof", "cut_elim_sequent", "cut_elim_proof"]


def infinitary_sequent(x: Formula = None) -> tuple:
    """``B + (X^ @ ?X^), !X``; provable in LLTN but not in LL for X = B * B."""
    if x is None:
        x = tensor(BOT, BOT)
    xd = dual(x)
    return (plus(BOT, par(xd, whynot(xd))), ofcourse(x))


def infinitary_proof(x: Formula = None, bound: int = 8) -> Proof:
    """Cut-free LLTN proof of :func:`infinitary_sequent`, premises up to ``bound``.

    Premise n picks the left summand for n = 0 and otherwise derelicts
    ``?X^`` with arity n - 1, matching the n copies of X one against one.
    """
    f, bang = infinitary_sequent(x)
    x = bang.body
    xd = dual(x)
    prem = []
    for n in range(bound + 1):
        tn = power(x, n)
        if n == 0:
            b = make("Bot", (BOT, ONE), [make("One", (ONE,))], principal=0)
            prem.append(make("PlusL", (f, ONE), [b], principal=0))
            continue
        pn = power(xd, n - 1, "par")
        if n == 1:
            core = make("Bot", (xd, pn, tn), [axiom_proof(x)], principal=1)
        else:
            core = make("NewTens", (xd, pn, tn), [axiom_proof(power(x, n - 1)), axiom_proof(x)],
                        principal=2, split=("R", "L", None))
        d = make("Dereliction", (xd, whynot(xd), tn), [core], principal=1, n=n - 1)
        pr = make("Par", (par(xd, whynot(xd)), tn), [d], principal=0)
        prem.append(make("PlusR", (f, tn), [pr], principal=0))
    return make("Promotion", (f, bang), Explicit.of(prem), principal=1)


def _cut_elim_parts(x=None, y=None):
    if x is None:
        x = tensor(BOT, TOP)
    if y is None:
        y = par(ONE, ZERO)
    z = with_(x, y)
    return x, y, z


def cut_elim_sequent(x: Formula = None, y: Formula = None) -> tuple:
    """One-sided form of ``X & ((X & Y) @ Y) |- ?(X & Y)``."""
    x, y, z = _cut_elim_parts(x, y)
    return (dual(with_(x, par(z, y))), whynot(z))


def cut_elim_proof(x: Formula = None, y: Formula = None) -> Proof:
    """LLT proof with one contraction.

    For the default X = B * T, Y = 1 @ 0 the sequent still has a cut-free
    LLTN proof (T absorbs the leftover context); X = 1 @ 1, Y = B * B has
    none within depth 14 and arity 3.
    """
    x, y, z = _cut_elim_parts(x, y)
    f, wz = cut_elim_sequent(x, y)
    # left: X^ + ..., X, ?Z  from the axiom on X plus weakening
    left = weaken(axiom_proof(x, System.LLT), [wz], System.LLT)          # X^, X, ?Z
    left = make("PlusL", (f, x, wz), [left], principal=0)
    # right: (Z^ * Y^), Y, ?Z
    dz = make("ClassicDereliction", (dual(z), wz), [axiom_proof(z, System.LLT)], principal=1)
    t = make("NewTens", (tensor(dual(z), dual(y)), y, wz), [dz, axiom_proof(y, System.LLT)],
             principal=0, split=(None, "R", "L"))
    right = make("PlusR", (f, y, wz), [t], principal=0)
    w = make("With", (f, z, wz), [left, right], principal=1)
    d = make("ClassicDereliction", (f, wz, wz), [w], principal=1)
    return make("Contraction", (f, wz), [d], principal=1)
