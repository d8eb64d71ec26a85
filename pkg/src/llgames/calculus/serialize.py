"""JSON-compatible proof format.

::

    {"conclusion": ["B", "1"],
     "rule": {"tag": "Bot", "principal": 0},
     "premises": [{"conclusion": ["1"], "rule": {"tag": "One"}, "premises": []}]}

Promotion premises are ``{"explicit": [proof, ...]}`` or
``{"schema": {"base1": proof, "baseA": proof, "context": [...], "body": f}}``.
Permutation witnesses are not stored; they are recomputed on load.
"""

from __future__ import annotations

import json

from ..formula import parse, show
from .proof import Explicit, Proof, ProofError, TensorSplitSchema, make

__all__ = ["proof_to_json", "proof_from_json", "dump_proof", "load_proof"]


def proof_to_json(p: Proof) -> dict:
    r = p.rule
    rule: dict = {"tag": r.tag}
    if r.principal is not None:
        rule["principal"] = r.principal
    if r.split is not None:
        rule["split"] = list(r.split)
    if r.n is not None:
        rule["n"] = r.n
    if r.cut is not None:
        rule["cut"] = show(r.cut)
    fam = p.premises
    if isinstance(fam, TensorSplitSchema):
        prem = {"schema": {"base1": proof_to_json(fam.base1), "baseA": proof_to_json(fam.baseA),
                           "context": [show(f) for f in fam.context], "body": show(fam.body)}}
    elif isinstance(fam, Explicit):
        prem = {"explicit": [proof_to_json(q) for q in fam.proofs]}
    else:
        prem = [proof_to_json(q) for q in fam]
    return {"conclusion": [show(f) for f in p.conclusion], "rule": rule, "premises": prem}


def proof_from_json(d: dict) -> Proof:
    try:
        C = [parse(s) for s in d["conclusion"]]
        rule = d["rule"]
        tag = rule["tag"]
        prem = d.get("premises", [])
        if isinstance(prem, dict):
            if "schema" in prem:
                s = prem["schema"]
                prem = TensorSplitSchema.of(proof_from_json(s["base1"]), proof_from_json(s["baseA"]),
                                            [parse(x) for x in s["context"]], parse(s["body"]))
            else:
                prem = Explicit.of([proof_from_json(q) for q in prem["explicit"]])
        else:
            prem = [proof_from_json(q) for q in prem]
        split = rule.get("split")
        cut = rule.get("cut")
        return make(tag, C, prem, principal=rule.get("principal"),
                    split=None if split is None else tuple(split), n=rule.get("n"),
                    cut=None if cut is None else parse(cut))
    except (KeyError, TypeError) as e:
        raise ProofError(f"malformed proof document: {e}") from None


def dump_proof(p: Proof, path) -> None:
    with open(path, "w") as fh:
        json.dump(proof_to_json(p), fh, indent=1)
        fh.write("\n")


def load_proof(path) -> Proof:
    with open(path) as fh:
        return proof_from_json(json.load(fh))
