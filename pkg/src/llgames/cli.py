"""Command-line front end.

Exit status: 0 success or PASS, 1 refutation or FAIL, 2 usage error,
3 budget exhaustion.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional

from .calculus import (
    Exhausted, ProofError, ResourceLimit, System, bound_proof, check_proof, compose_cuts,
    eliminate_contractions, is_bounded, ll_to_lltn, llt_to_lltn, load_proof, proof_to_json,
    search_cutfree, size, stats,
)
from .formula import ParseError, parse, show
from .game import (
    BudgetExhausted, Caps, IllegalMove, InfinitePlay, PositionError, all_plays,
    enumerate_moves, gen_positions, load_position, to_dot,
)
from .strategy import Base, Winner, solve, v_corpus, validity_check, witness_from_proof

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


@dataclass
class Config:
    """Shared knobs; every flag of the same name maps onto a field."""

    system: str = "lltn"
    variant: str = "lltn"
    n_check: int = 4
    depth_limit: int = 12
    arity_cap: int = 2
    expo_cap: int = 2
    bound: int = 3
    seed: int = 0
    budget: int = 10**7
    exotic: bool = False

    def __post_init__(self):
        for name in ("n_check", "depth_limit", "arity_cap", "expo_cap", "bound", "seed", "budget"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")

    @property
    def caps(self) -> Caps:
        return Caps(self.expo_cap, self.budget)


class UsageError(Exception):
    pass


def parse_sequent(text: str) -> tuple:
    """Comma-separated formulas; an empty string is the empty sequent."""
    parts = [t.strip() for t in text.split(",")]
    if parts == [""]:
        return ()
    return tuple(parse(t, atoms=False) for t in parts)


def _config(args) -> Config:
    fields = Config.__dataclass_fields__
    return Config(**{k: v for k, v in vars(args).items() if k in fields and v is not None})


def _write(text: str, path: Optional[str]) -> None:
    if path and path != "-":
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump_proof(p, path) -> None:
    _write(json.dumps(proof_to_json(p), indent=1) + "\n", path)


# --------------------------------------------------------------------------
# subcommands

def cmd_check(args, cfg: Config) -> int:
    p = load_proof(args.file)
    rep = check_proof(System(cfg.system.upper()), p, cfg.n_check, atoms=args.atoms)
    print(rep.render())
    return EXIT_OK if rep.valid else EXIT_FAIL


def cmd_transform(args, cfg: Config) -> int:
    p = load_proof(args.file)
    if args.op == "eliminate-contractions":
        out, ds = eliminate_contractions(p)
        print(f"duplicators: {[show(d) for d in ds]}", file=sys.stderr)
    elif args.op == "bound":
        out = bound_proof(p)
    elif args.op == "to-lltn":
        out = ll_to_lltn(p) if cfg.system.upper() == "LL" else llt_to_lltn(p)
    else:
        if not args.other:
            raise UsageError("compose-cuts needs a second proof file")
        q = load_proof(args.other)
        out = compose_cuts(p, args.index % len(p.conclusion), q, args.index2 % len(q.conclusion))
    cuts, contractions = stats(out)
    print(f"rules: {size(out)}  cuts: {cuts}  contractions: {contractions}  "
          f"bounded: {is_bounded(out)}", file=sys.stderr)
    _dump_proof(out, args.output)
    return EXIT_OK


def cmd_search(args, cfg: Config) -> int:
    seq = parse_sequent(args.seq)
    res = search_cutfree(System(cfg.system.upper()), seq, cfg.depth_limit, cfg.arity_cap,
                         node_budget=args.node_budget)
    if isinstance(res, Exhausted):
        print(res)
        return EXIT_FAIL
    if isinstance(res, ResourceLimit):
        print(res)
        return EXIT_BUDGET
    print(f"found a cut-free proof with {size(res)} rules")
    if args.output:
        _dump_proof(res, args.output)
    return EXIT_OK


def cmd_solve(args, cfg: Config) -> int:
    p = load_position(args.file)
    v = solve(p, cfg.variant, cfg.caps, frozenset(args.team))
    print(v)
    return EXIT_OK if v.winner is Winner.PROPONENT else EXIT_FAIL


def cmd_validity(args, cfg: Config) -> int:
    corpus = v_corpus(cfg.bound)
    if args.proof:
        w = witness_from_proof(load_proof(args.proof))
        rep = w.check(corpus, cfg.caps)
    else:
        seq = parse_sequent(args.seq)
        base = None
        if args.base:
            u = load_position(args.base)
            if len(seq) != 1:
                raise UsageError("a base file takes a single-formula sequent (dangling at the token)")
            base = Base(u.with_token(None), ((u.token, seq[0]),))
        rep = validity_check(seq, base, corpus, cfg.caps, cfg.variant)
    if args.json:
        print(json.dumps(rep.summary(), indent=1))
    else:
        print(rep.render(verbose=args.verbose))
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_sn_report(args, cfg: Config) -> int:
    if args.position:
        corpus = [load_position(f) for f in args.position]
    else:
        corpus = list(gen_positions(args.vertices, seed=cfg.seed, count=args.count, depth=args.depth))
    done = over = 0
    longest = 0
    for k, p in enumerate(corpus):
        try:
            s = all_plays(p, cfg.variant, cfg.caps, cfg.exotic)
        except BudgetExhausted:
            over += 1
            print(f"{k}: budget of {cfg.budget} positions exhausted")
            continue
        except InfinitePlay as err:
            print(f"{k}: {err}")
            return EXIT_FAIL
        done += 1
        longest = max(longest, s.max_length)
        if args.verbose:
            print(f"{k}: positions {s.positions}, max play length {s.max_length}")
    print(f"positions: {len(corpus)}  terminated: {done}  budget exhausted: {over}  "
          f"longest play: {longest}")
    return EXIT_BUDGET if over else EXIT_OK


def cmd_export_dot(args, cfg: Config) -> int:
    _write(to_dot(load_position(args.file)), args.output)
    return EXIT_OK


PLAY_HELP = """commands:
  <k>        play move number k
  u          undo the last move
  d [file]   print the position as DOT (or write it to file)
  h          this help
  q          quit"""


def cmd_play(args, cfg: Config, stdin=None, out=None) -> int:
    stdin = stdin or sys.stdin
    out = out or sys.stdout
    history = [load_position(args.file)]
    while True:
        p = history[-1]
        options = enumerate_moves(p, cfg.variant, cfg.caps, cfg.exotic)
        moves = [m for m, _ in options]
        print(p, file=out)
        holder = "-" if p.token is None else f"{p.token} ({p.teams[p.token]})"
        print(f"token: {holder}", file=out)
        if not moves:
            print("no legal move", file=out)
        for k, m in enumerate(moves):
            print(f"  [{k}] {m}", file=out)
        out.write("> ")
        out.flush()
        line = stdin.readline()
        if not line:
            return EXIT_OK
        cmd = line.split()
        if not cmd:
            continue
        if cmd[0] == "q":
            return EXIT_OK
        if cmd[0] == "h":
            print(PLAY_HELP, file=out)
        elif cmd[0] == "u":
            if len(history) > 1:
                history.pop()
            else:
                print("nothing to undo", file=out)
        elif cmd[0] == "d":
            dot = to_dot(p)
            if len(cmd) > 1:
                with open(cmd[1], "w") as fh:
                    fh.write(dot)
            else:
                out.write(dot)
        elif cmd[0].isdigit() and int(cmd[0]) < len(moves):
            history.append(options[int(cmd[0])][1])
        else:
            print(f"unknown command {line.strip()!r}; type h for help", file=out)


# --------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="llgames", description="Linear logic proofs and tree games.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, system=False, variant=False, caps=False):
        if system:
            sp.add_argument("--system", choices=["ll", "llt", "lltn"], type=str.lower, help="default lltn")
        if variant:
            sp.add_argument("--variant", choices=["naive", "lltn"], type=str.lower, help="default lltn")
        if caps:
            sp.add_argument("--expo-cap", dest="expo_cap", type=int, help="largest n tried for ?-edges (2)")
            sp.add_argument("--budget", type=int, help="node budget (10^7)")

    sp = sub.add_parser("check", help="check a proof file")
    common(sp, system=True)
    sp.add_argument("file")
    sp.add_argument("--n-check", dest="n_check", type=int, help="promotion premises checked (4)")
    sp.add_argument("--atoms", action="store_true", help="allow propositional atoms")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("transform", help="proof transformations")
    common(sp, system=True)
    sp.add_argument("op", choices=["eliminate-contractions", "bound", "to-lltn", "compose-cuts"])
    sp.add_argument("file")
    sp.add_argument("other", nargs="?", help="second proof for compose-cuts")
    sp.add_argument("--index", type=int, default=-1, help="cut formula position in the first proof")
    sp.add_argument("--index2", type=int, default=0, help="cut formula position in the second proof")
    sp.add_argument("-o", "--output", help="output file (stdout by default)")
    sp.set_defaults(func=cmd_transform)

    sp = sub.add_parser("search", help="bounded cut-free proof search")
    common(sp, system=True)
    sp.add_argument("--seq", required=True, help="comma-separated formulas")
    sp.add_argument("--depth-limit", dest="depth_limit", type=int, help="non-invertible steps (12)")
    sp.add_argument("--arity-cap", dest="arity_cap", type=int, help="dereliction arity cap (2)")
    sp.add_argument("--node-budget", dest="node_budget", type=int, default=2_000_000)
    sp.add_argument("-o", "--output", help="write the proof found here")
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("solve", help="winner of a position")
    common(sp, variant=True, caps=True)
    sp.add_argument("file")
    sp.add_argument("--team", action="append", default=None,
                    help="proponent team (repeatable; default P)")
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("validity", help="validity harness against the opponent corpus")
    common(sp, variant=True, caps=True)
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--seq", help="comma-separated formulas (solved outright)")
    g.add_argument("--proof", help="bounded LLTN proof file (its strategy is checked)")
    sp.add_argument("--base", help="base position file; the formula dangles from its token")
    sp.add_argument("--bound", type=int, help="opponent tree size bound (3)")
    sp.add_argument("--json", action="store_true", help="machine-readable summary")
    sp.add_argument("-v", "--verbose", action="store_true", help="list every check")
    sp.set_defaults(func=cmd_validity)

    sp = sub.add_parser("sn-report", help="termination of all plays over a corpus")
    common(sp, variant=True, caps=True)
    sp.add_argument("--position", nargs="*", help="position files instead of a random corpus")
    sp.add_argument("--count", type=int, default=500)
    sp.add_argument("--vertices", type=int, default=6)
    sp.add_argument("--depth", type=int, default=3)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--exotic", action=argparse.BooleanOptionalAction, default=True)
    sp.add_argument("-v", "--verbose", action="store_true")
    sp.set_defaults(func=cmd_sn_report)

    sp = sub.add_parser("play", help="interactive play")
    common(sp, variant=True, caps=True)
    sp.add_argument("file")
    sp.add_argument("--exotic", action="store_true")
    sp.set_defaults(func=cmd_play)

    sp = sub.add_parser("export-dot", help="Graphviz rendering of a position")
    sp.add_argument("file")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_export_dot)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    if getattr(args, "team", "unset") is None:
        args.team = ["P"]
    try:
        cfg = _config(args)
        return args.func(args, cfg)
    except (UsageError, ParseError, ValueError, OSError, json.JSONDecodeError,
            ProofError, PositionError, IllegalMove) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExhausted as err:
        print(f"budget exhausted: {err}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
