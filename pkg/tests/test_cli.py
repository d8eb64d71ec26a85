"""Command-line front end: exit codes and outputs."""

import io
import json
import subprocess
import sys
from argparse import Namespace
from pathlib import Path

import pytest

from llgames.calculus import System, check_proof, load_proof
from llgames.cli import Config, cmd_play, main, parse_sequent
from llgames.formula import ONE, parse
from llgames.game import load_position

FIX = Path(__file__).resolve().parent.parent / "fixtures"


def run(*argv):
    return main([str(a) for a in argv])


def test_parse_sequent():
    assert parse_sequent("") == ()
    assert parse_sequent("1, B * B") == (ONE, parse("B * B"))


def test_config_rejects_negatives():
    with pytest.raises(ValueError):
        Config(expo_cap=-1)


def test_check(capsys):
    assert run("check", "--system", "llt", FIX / "dup_1.proof") == 0
    assert "valid: yes" in capsys.readouterr().out
    # dup_1 shares a ?-context through a classic promotion, not an LLTN proof
    assert run("check", "--system", "lltn", FIX / "dup_1.proof") == 1


def test_usage_errors(tmp_path, capsys):
    assert run("check") == 2
    assert run("frobnicate") == 2
    assert run("search", "--seq", "1 * (") == 2
    assert run("check", tmp_path / "missing.proof") == 2
    assert "error:" in capsys.readouterr().err
    assert run("solve", "--expo-cap", "-1", FIX / "one_edge.pos") == 2


def test_search(tmp_path, capsys):
    out = tmp_path / "p.proof"
    assert run("search", "--system", "ll", "--seq", "B, 1", "-o", out) == 0
    assert check_proof(System.LL, load_proof(out)).valid
    assert run("search", "--system", "lltn", "--seq", "B * B") == 1
    assert "complete refutation" in capsys.readouterr().out
    assert run("search", "--seq", "?(B * B) @ ?(1 + B), !(1 * 1) * !1", "--node-budget", "3") == 3


def test_solve(capsys):
    assert run("solve", FIX / "one_edge.pos") == 0
    assert "ProponentWins" in capsys.readouterr().out
    # seen from the other side, the opponent team wins
    assert run("solve", "--team", "O", FIX / "one_edge.pos") == 1


def test_transform(tmp_path):
    out = tmp_path / "b.proof"
    assert run("transform", "bound", FIX / "dup_1.proof", "-o", out) == 0
    assert check_proof(System.LLT, load_proof(out)).valid
    out2 = tmp_path / "n.proof"
    assert run("transform", "--system", "llt", "to-lltn", out, "-o", out2) == 0
    assert check_proof(System.LLTN, load_proof(out2)).valid
    out3 = tmp_path / "c.proof"
    ax = FIX / "axiom_tensor.proof"
    assert run("transform", "compose-cuts", ax, ax, "--index", "1", "--index2", "0", "-o", out3) == 0
    c = load_proof(out3)
    assert c.rule.tag == "Cut" and check_proof(System.LLTN, c).valid
    assert run("transform", "compose-cuts", ax) == 2
    assert run("transform", "eliminate-contractions", FIX / "axiom_tensor.proof", "-o", tmp_path / "e") == 0


def test_validity_json(capsys):
    assert run("validity", "--seq", "1", "--bound", "2", "--json") == 0
    s = json.loads(capsys.readouterr().out)
    assert s["passed"] and s["checks"] == s["ProponentWins"] > 0
    assert run("validity", "--seq", "0", "--bound", "2") == 1
    assert run("validity", "--proof", FIX / "axiom_tensor.proof", "--bound", "2") == 0
    assert run("validity", "--seq", "1, 1", "--base", FIX / "one_edge.pos") == 2


def test_sn_report(capsys):
    assert run("sn-report", "--count", "5", "--vertices", "3", "--budget", "20000") == 0
    assert "terminated: 5" in capsys.readouterr().out
    assert run("sn-report", "--position", FIX / "one_edge.pos", "--budget", "1") == 3


def test_export_dot(tmp_path, capsys):
    assert run("export-dot", FIX / "one_edge.pos") == 0
    assert capsys.readouterr().out.startswith("digraph")
    out = tmp_path / "x.dot"
    assert run("export-dot", FIX / "one_edge.pos", "-o", out) == 0
    assert "digraph" in out.read_text()


def test_play_session(tmp_path):
    args = Namespace(file=str(FIX / "one_edge.pos"), exotic=False)
    dot = tmp_path / "d.dot"
    script = io.StringIO(f"h\nzz\n0\nu\nu\nd {dot}\n0\n")
    out = io.StringIO()
    assert cmd_play(args, Config(), stdin=script, out=out) == 0
    text = out.getvalue()
    assert "[0] OneDelete" in text
    assert "nothing to undo" in text and "unknown command" in text
    assert "no legal move" in text
    assert dot.read_text().startswith("digraph")
    assert load_position(FIX / "one_edge.pos").token == "p"


def test_entry_point_module():
    r = subprocess.run([sys.executable, "-m", "llgames.cli", "solve", str(FIX / "one_edge.pos")],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "ProponentWins" in r.stdout
