"""Proof objects for LL, LLT and LLTN and the rule-by-rule checker.

A node stores its conclusion, a :class:`Rule` and its premises.  Each rule
has a fixed *shape*: the list of premise sequents determined by the
conclusion and the rule parameters.  Premises may list their formulas in any
order; the rule records, per premise, a permutation witness ``perms[k]``
with ``premise_k.conclusion[perms[k][m]] == shape_k[m]``.  Constructors fill
the witnesses in (see :func:`make`), so explicit Exchange nodes are never
needed, though Exchange is still a legal rule.

The LLTN promotion rule has one premise per natural number; its premises are
a :class:`PremiseFamily` and are matched as multisets.

Proofs are hash-consed like formulas: structurally equal proofs are the
same object, which makes memo tables keyed on proofs exact.
"""

from __future__ import annotations

import enum
import itertools
import threading
import weakref
from collections import Counter
from dataclasses import dataclass
from typing import Optional, Sequence

from ..formula import (
    ONE, Formula, dual, power, show,
    TENS, PAR, PLUS, WITH, OC, WN, PATOM, NATOM,
)

__all__ = [
    "System", "Rule", "Proof", "PremiseFamily", "Explicit", "TensorSplitSchema",
    "ProofError", "CheckReport", "make", "shapes", "promotion_shape",
    "check_proof", "stats", "is_bounded", "is_cut_free", "reorder", "size",
]


class System(str, enum.Enum):
    LL = "LL"
    LLT = "LLT"
    LLTN = "LLTN"


_COMMON = {"One", "Bot", "Top", "Par", "PlusL", "PlusR", "With", "Exchange", "Cut", "Identity"}
_CLASSIC_EXP = {"ClassicDereliction", "Weakening", "Contraction", "ClassicPromotion"}
RULES = {
    System.LL: frozenset(_COMMON | _CLASSIC_EXP | {"PlainTensor"}),
    System.LLT: frozenset(_COMMON | _CLASSIC_EXP | {"NewTens"}),
    System.LLTN: frozenset(_COMMON | {"NewTens", "Dereliction", "Promotion"}),
}
TAGS = frozenset().union(*RULES.values())

# head connective demanded of the principal formula
_HEAD = {
    "Bot": "B", "Top": "T", "Par": PAR, "PlusL": PLUS, "PlusR": PLUS, "With": WITH,
    "NewTens": TENS, "PlainTensor": TENS,
    "ClassicDereliction": WN, "Weakening": WN, "Contraction": WN, "Dereliction": WN,
    "ClassicPromotion": OC, "Promotion": OC,
}


class ProofError(ValueError):
    """Raised when a proof node cannot be built or transformed."""


@dataclass(frozen=True)
class Rule:
    tag: str
    principal: Optional[int] = None
    split: Optional[tuple] = None
    n: Optional[int] = None
    cut: Optional[Formula] = None
    perms: tuple = ()

    def key(self):
        return (self.tag, self.principal, self.split, self.n,
                None if self.cut is None else self.cut.uid, self.perms)


_uids = itertools.count()
_proofs: "weakref.WeakValueDictionary" = weakref.WeakValueDictionary()
_lock = threading.Lock()


def _intern(cls, key, build):
    obj = _proofs.get(key)
    if obj is None:
        with _lock:
            obj = _proofs.get(key)
            if obj is None:
                obj = build()
                _proofs[key] = obj
    return obj


class Proof:
    __slots__ = ("conclusion", "rule", "premises", "uid", "_stats", "__weakref__")

    def __init__(self, conclusion, rule, premises):
        self.conclusion = conclusion
        self.rule = rule
        self.premises = premises
        self.uid = next(_uids)
        self._stats = None

    @classmethod
    def _new(cls, conclusion: tuple, rule: Rule, premises) -> "Proof":
        if isinstance(premises, PremiseFamily):
            pkey = ("family", premises.uid)
        else:
            pkey = tuple(p.uid for p in premises)
        key = ("proof", tuple(f.uid for f in conclusion), rule.key(), pkey)
        return _intern(cls, key, lambda: cls(conclusion, rule, premises))

    def __hash__(self):
        return self.uid

    def __eq__(self, other):
        return self is other

    def __repr__(self):
        seq = ", ".join(show(f) for f in self.conclusion)
        return f"<Proof {self.rule.tag} |- {seq}>"

    def __reduce__(self):
        return (Proof._new, (self.conclusion, self.rule, self.premises))

    @property
    def tag(self) -> str:
        return self.rule.tag

    def premise_list(self) -> tuple:
        """Finite premises; empty for promotion families."""
        return () if isinstance(self.premises, PremiseFamily) else self.premises


class PremiseFamily:
    """Premises of an LLTN promotion, indexed by the tensor power n."""

    __slots__ = ()

    def premise(self, n: int) -> Proof:
        raise NotImplementedError

    @property
    def bound(self) -> Optional[int]:
        """Largest index available, or None for an unbounded schema."""
        return None


class Explicit(PremiseFamily):
    """Hand-given premises for n = 0..k."""

    __slots__ = ("proofs", "uid", "__weakref__")

    def __init__(self, proofs):
        self.proofs = tuple(proofs)
        self.uid = next(_uids)

    @classmethod
    def of(cls, proofs: Sequence[Proof]) -> "Explicit":
        proofs = tuple(proofs)
        if not proofs:
            raise ProofError("an explicit family needs at least the n = 0 premise")
        key = ("explicit", tuple(p.uid for p in proofs))
        return _intern(cls, key, lambda: cls(proofs))

    def __reduce__(self):
        return (Explicit.of, (self.proofs,))

    @property
    def bound(self) -> int:
        return len(self.proofs) - 1

    def premise(self, n: int) -> Proof:
        if n > self.bound:
            raise ProofError(f"explicit family only covers n <= {self.bound}")
        return self.proofs[n]


class TensorSplitSchema(PremiseFamily):
    """Premises built from proofs of ``?G, 1`` and ``?G, A``.

    The premise for n >= 2 splits the n-fold tensor with a NewTens that
    shares the whole ``?G`` context between both sides.
    """

    __slots__ = ("base1", "baseA", "context", "body", "uid", "_cache", "__weakref__")

    def __init__(self, base1, baseA, context, body):
        self.base1 = base1
        self.baseA = baseA
        self.context = context
        self.body = body
        self.uid = next(_uids)
        self._cache = {0: base1, 1: baseA}

    @classmethod
    def of(cls, base1: Proof, baseA: Proof, context: Sequence[Formula], body: Formula):
        context = tuple(context)
        for f in context:
            if f.op != WN:
                raise ProofError(f"schema context formula {show(f)} is not a ?-formula")
        if Counter(base1.conclusion) != Counter(context + (ONE,)):
            raise ProofError("base1 must prove the context with 1")
        if Counter(baseA.conclusion) != Counter(context + (body,)):
            raise ProofError("baseA must prove the context with the promoted body")
        key = ("schema", base1.uid, baseA.uid, tuple(f.uid for f in context), body.uid)
        return _intern(cls, key, lambda: cls(base1, baseA, context, body))

    def __reduce__(self):
        return (TensorSplitSchema.of, (self.base1, self.baseA, self.context, self.body))

    def premise(self, n: int) -> Proof:
        if n < 0:
            raise ProofError("negative tensor power")
        got = self._cache.get(n)
        if got is None:
            prev = self.premise(n - 1)
            k = len(self.context)
            got = make("NewTens", self.context + (power(self.body, n),),
                       [prev, self.baseA], principal=k, split=("S",) * k + (None,))
            self._cache[n] = got
        return got


# --------------------------------------------------------------------------
# rule shapes

def _in_place(C, i, repl):
    out = [(f, j) for j, f in enumerate(C) if j < i]
    out += [(r, -1) for r in repl]
    out += [(f, j) for j, f in enumerate(C) if j > i]
    return out


def _sided(C, i, split, sides, active):
    out = []
    for j, f in enumerate(C):
        if j == i:
            out.append((active, -1))
        elif split[j] in sides:
            out.append((f, j))
    return out


def shapes(rule: Rule, C: tuple) -> list:
    """Premise shapes as lists of ``(formula, origin)``.

    ``origin`` is the conclusion index a context formula comes from, or -1
    for the active formulas the rule introduces.  Promotion returns [] (see
    :func:`promotion_shape`).
    """
    tag, i = rule.tag, rule.principal
    if tag in ("One", "Top", "Identity", "Promotion"):
        return []
    if tag == "Cut":
        a = rule.cut
        left = [(f, j) for j, f in enumerate(C) if rule.split[j] == "L"] + [(a, -1)]
        right = [(f, j) for j, f in enumerate(C) if rule.split[j] == "R"] + [(dual(a), -1)]
        return [left, right]
    if tag == "Exchange":
        out = [(f, j) for j, f in enumerate(C)]
        out[i], out[i + 1] = out[i + 1], out[i]
        return [out]
    f = C[i]
    if tag in ("Bot", "Weakening"):
        return [_in_place(C, i, ())]
    if tag == "Par":
        return [_in_place(C, i, f.args)]
    if tag == "PlusL":
        return [_in_place(C, i, (f.left,))]
    if tag == "PlusR":
        return [_in_place(C, i, (f.right,))]
    if tag == "With":
        return [_in_place(C, i, (f.left,)), _in_place(C, i, (f.right,))]
    if tag in ("NewTens", "PlainTensor"):
        return [_sided(C, i, rule.split, "LS", f.left), _sided(C, i, rule.split, "RS", f.right)]
    if tag in ("ClassicDereliction", "ClassicPromotion"):
        return [_in_place(C, i, (f.body,))]
    if tag == "Contraction":
        return [_in_place(C, i, (f, f))]
    if tag == "Dereliction":
        return [_in_place(C, i, (power(f.body, rule.n, "par"),))]
    raise ProofError(f"unknown rule {tag}")


def promotion_shape(rule: Rule, C: tuple, n: int) -> list:
    return _in_place(C, rule.principal, (power(C[rule.principal].body, n),))


def _side_condition(system, rule: Rule, C: tuple, atoms: bool) -> Optional[str]:
    tag, i = rule.tag, rule.principal
    if tag not in TAGS:
        return f"unknown rule {tag}"
    if system is not None and tag not in RULES[system]:
        return f"rule {tag} is not part of {system.value}"
    if not atoms:
        for f in C:
            if _has_atom(f):
                return f"atom in {show(f)} while atoms are disabled"
    if tag == "One":
        return None if C == (ONE,) else "One must conclude exactly |- 1"
    if tag == "Identity":
        if not atoms:
            return "Identity needs atoms enabled"
        if len(C) != 2 or not C[0].is_atom or C[1] is not dual(C[0]):
            return "Identity must conclude X^, X or X, X^ for an atom X"
        return None
    if tag == "Cut":
        if rule.cut is None or rule.split is None or len(rule.split) != len(C):
            return "Cut needs a cut formula and a split of the conclusion"
        if any(s not in ("L", "R") for s in rule.split):
            return "Cut split entries must be L or R"
        return None
    if i is None or not 0 <= i < len(C):
        return "principal index out of range"
    if tag == "Exchange":
        return None if i + 1 < len(C) else "Exchange index out of range"
    want = _HEAD[tag]
    if C[i].op != want:
        return f"{tag} needs head {want} at position {i}, found {show(C[i])}"
    if tag in ("NewTens", "PlainTensor"):
        sp = rule.split
        if sp is None or len(sp) != len(C) or sp[i] is not None:
            return "tensor split must cover the conclusion with None at the principal"
        allowed = ("L", "R", "S") if tag == "NewTens" else ("L", "R")
        for j, s in enumerate(sp):
            if j == i:
                continue
            if s not in allowed:
                return f"bad split entry {s!r} for {tag}"
            if s == "S" and C[j].op != WN:
                return f"shared context formula {show(C[j])} is not a ?-formula"
    if tag == "ClassicPromotion":
        for j, f in enumerate(C):
            if j != i and f.op != WN:
                return f"promotion context formula {show(f)} is not a ?-formula"
    if tag == "Dereliction" and (rule.n is None or rule.n < 0):
        return "Dereliction needs an arity n >= 0"
    return None


def _has_atom(f: Formula) -> bool:
    if f.op in (PATOM, NATOM):
        return True
    return any(_has_atom(a) for a in f.args)


def _match(expected: Sequence[Formula], actual: Sequence[Formula]) -> Optional[tuple]:
    if len(expected) != len(actual):
        return None
    used = [False] * len(actual)
    perm = []
    for e in expected:
        for j, a in enumerate(actual):
            if not used[j] and a is e:
                used[j] = True
                perm.append(j)
                break
        else:
            return None
    return tuple(perm)


def make(tag: str, conclusion: Sequence[Formula], premises=(), *, principal=None,
         split=None, n=None, cut=None) -> Proof:
    """Build a node, computing the permutation witnesses for its premises.

    Raises :class:`ProofError` if a premise does not prove the rule's shape
    up to permutation.  System membership is not checked here.
    """
    C = tuple(conclusion)
    if split is not None:
        split = tuple(split)
    rule = Rule(tag, principal, split, n, cut)
    err = _side_condition(None, rule, C, atoms=True)
    if err:
        raise ProofError(err)
    if tag == "Promotion":
        if not isinstance(premises, PremiseFamily):
            raise ProofError("Promotion takes a PremiseFamily")
        return Proof._new(C, rule, premises)
    premises = tuple(premises)
    shp = shapes(rule, C)
    if len(shp) != len(premises):
        raise ProofError(f"{tag} takes {len(shp)} premises, got {len(premises)}")
    perms = []
    for k, (s, p) in enumerate(zip(shp, premises)):
        perm = _match([f for f, _ in s], p.conclusion)
        if perm is None:
            want = ", ".join(show(f) for f, _ in s)
            got = ", ".join(show(f) for f in p.conclusion)
            raise ProofError(f"{tag} premise {k}: expected |- {want}, got |- {got}")
        perms.append(perm)
    rule = Rule(tag, principal, split, n, cut, tuple(perms))
    return Proof._new(C, rule, premises)


def rebuild(proof: Proof, conclusion: Sequence[Formula], origin: Sequence[int], premises) -> Proof:
    """Re-make ``proof``'s root over a new conclusion.

    ``origin[p]`` names the old conclusion position that new position ``p``
    stems from; split labels follow their origin.
    """
    r = proof.rule
    principal = None
    if r.principal is not None:
        principal = origin.index(r.principal)
    split = None
    if r.split is not None:
        split = tuple(r.split[o] for o in origin)
    return make(r.tag, conclusion, premises, principal=principal, split=split, n=r.n, cut=r.cut)


def reorder(proof: Proof, conclusion: Sequence[Formula]) -> Proof:
    """The same proof with its root conclusion listed in another order."""
    conclusion = tuple(conclusion)
    if conclusion == proof.conclusion:
        return proof
    inv = _match(conclusion, proof.conclusion)
    if inv is None:
        raise ProofError("reorder target is not a permutation of the conclusion")
    return rebuild(proof, conclusion, list(inv), proof.premises)


# --------------------------------------------------------------------------
# checking

@dataclass
class CheckReport:
    valid: bool
    cut_count: int = 0
    contraction_count: int = 0
    checked_promotion_bound: int = 0
    locus: tuple = ()
    message: str = ""
    system: str = ""

    def render(self) -> str:
        lines = [
            f"system: {self.system}",
            f"valid: {'yes' if self.valid else 'no'}",
            f"cuts: {self.cut_count}",
            f"contractions: {self.contraction_count}",
            f"promotion premises checked up to n = {self.checked_promotion_bound}",
        ]
        if not self.valid:
            lines.append(f"failure at premise path {list(self.locus)}: {self.message}")
        return "\n".join(lines)


class _Invalid(Exception):
    def __init__(self, locus, message):
        super().__init__(message)
        self.locus = locus
        self.message = message


def check_proof(system: System, proof: Proof, n_check: int = 4, atoms: bool = False) -> CheckReport:
    """Validate every node of ``proof`` in ``system``.

    Promotion families are checked for n = 0..n_check only, so the verdict
    on infinitary nodes is bound-limited.
    """
    if n_check < 0:
        raise ValueError("n_check must be >= 0")
    system = System(system)
    memo: dict = {}

    def go(p: Proof, locus: tuple):
        hit = memo.get(p.uid)
        if hit is not None:
            return hit
        C = p.conclusion
        r = p.rule
        err = _side_condition(system, r, C, atoms)
        if err:
            raise _Invalid(locus, err)
        cuts = int(r.tag == "Cut")
        contr = int(r.tag == "Contraction")
        if r.tag == "Promotion":
            fam = p.premises
            if not isinstance(fam, PremiseFamily):
                raise _Invalid(locus, "Promotion without a premise family")
            if fam.bound is not None and fam.bound < n_check:
                raise _Invalid(locus, f"explicit family covers n <= {fam.bound} < {n_check}")
            for k in range(n_check + 1):
                q = fam.premise(k)
                want = Counter(f for f, _ in promotion_shape(r, C, k))
                if Counter(q.conclusion) != want:
                    raise _Invalid(locus + (k,), f"premise {k} of promotion has the wrong conclusion")
                c1, c2 = go(q, locus + (k,))
                cuts += c1
                contr += c2
        else:
            if isinstance(p.premises, PremiseFamily):
                raise _Invalid(locus, f"{r.tag} cannot take a premise family")
            shp = shapes(r, C)
            if len(shp) != len(p.premises) or len(r.perms) != len(shp):
                raise _Invalid(locus, f"{r.tag} has the wrong number of premises")
            for k, (s, q, perm) in enumerate(zip(shp, p.premises, r.perms)):
                if sorted(perm) != list(range(len(q.conclusion))) or len(perm) != len(s):
                    raise _Invalid(locus + (k,), "permutation witness is not a bijection")
                for m, (f, _) in enumerate(s):
                    if q.conclusion[perm[m]] is not f:
                        raise _Invalid(locus + (k,), f"premise {k} does not match the rule shape")
                c1, c2 = go(q, locus + (k,))
                cuts += c1
                contr += c2
        memo[p.uid] = (cuts, contr)
        return cuts, contr

    try:
        cuts, contr = go(proof, ())
    except _Invalid as e:
        return CheckReport(False, locus=e.locus, message=e.message,
                           checked_promotion_bound=n_check, system=system.value)
    return CheckReport(True, cuts, contr, n_check, system=system.value)


def stats(proof: Proof, n_check: int = 2) -> tuple:
    """(cut_count, contraction_count) over finite nodes and promotion premises up to n_check."""
    memo = {}

    def go(p):
        hit = memo.get(p.uid)
        if hit is not None:
            return hit
        cuts = int(p.rule.tag == "Cut")
        contr = int(p.rule.tag == "Contraction")
        if isinstance(p.premises, PremiseFamily):
            fam = p.premises
            top = n_check if fam.bound is None else min(n_check, fam.bound)
            subs = [fam.premise(k) for k in range(top + 1)]
        else:
            subs = p.premises
        for q in subs:
            a, b = go(q)
            cuts += a
            contr += b
        memo[p.uid] = (cuts, contr)
        return cuts, contr

    return go(proof)


def is_cut_free(proof: Proof) -> bool:
    """Cut-freeness.  A TensorSplitSchema only ever adds NewTens nodes, so
    checking its two bases covers every premise."""
    seen = set()
    stack = [proof]
    while stack:
        p = stack.pop()
        if p.uid in seen:
            continue
        seen.add(p.uid)
        if p.rule.tag == "Cut":
            return False
        fam = p.premises
        if isinstance(fam, TensorSplitSchema):
            stack += [fam.base1, fam.baseA]
        elif isinstance(fam, Explicit):
            stack += list(fam.proofs)
        else:
            stack += list(fam)
    return True


def is_bounded(proof: Proof) -> bool:
    """Cut-free, or a single cut at the root over two cut-free proofs."""
    if proof.rule.tag == "Cut":
        return all(is_cut_free(q) for q in proof.premises)
    return is_cut_free(proof)


def size(proof: Proof) -> int:
    """Number of rule nodes in the finite part (families count their explicit premises)."""
    fam = proof.premises
    if isinstance(fam, TensorSplitSchema):
        return 1 + size(fam.base1) + size(fam.baseA)
    if isinstance(fam, Explicit):
        return 1 + sum(size(q) for q in fam.proofs)
    return 1 + sum(size(q) for q in fam)
