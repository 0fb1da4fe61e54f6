import json
import subprocess
import sys
from pathlib import Path

import pytest

from intermute.cli import run

EXAMPLES = json.loads((Path(__file__).parent / "fixtures" / "cli_examples.json").read_text())


@pytest.mark.parametrize("case", EXAMPLES, ids=lambda c: " ".join(c["args"])[:60])
def test_documented_examples(case):
    code, out = run(case["args"])
    assert code == case["exit"], out
    if "stdout" in case:
        assert out == case["stdout"]


@pytest.mark.parametrize("flag,text", [
    ("-f", "p & (q | r)"),
    ("-f", "(p | q) & r | T"),
    ("-a", "ck{p,q,r,s} . (id{p & q} | id{r & s})"),
    ("-a", "(hwb- | kappa) . vs-{F}"),
])
def test_round_trip(flag, text):
    code, once = run(["parse", flag, text])
    assert code == 0
    assert run(["parse", flag, once]) == (0, once)


def test_parse_error_has_caret():
    code, out = run(["parse", "-f", "p && q"])
    assert code == 3
    assert out.splitlines()[-1].strip() == "^"


class TestJson:
    def test_eval(self):
        code, out = run(["eval", "--rel", "--json", "-a", "hc{p,q}"])
        assert code == 0
        assert json.loads(out) == {"source": 2, "target": 2, "pairs": [[0, 1], [1, 0]]}

    def test_equal(self):
        code, out = run(["equal", "--json", "-a", "hc{p,p}", "-a", "id{p & p}", "--theory", "SCk"])
        assert code == 1
        assert json.loads(out)["verdict"] == "NotEqual"

    def test_exists(self):
        code, out = run(["exists", "--json", "-x", "p & q", "-y", "p | q", "--theory", "S"])
        data = json.loads(out)
        assert code == 2 and data["exists"] is None and data["depth_cap"] == 4

    def test_legit(self):
        code, out = run(["legit", "--json", "-x", "(p&q)|(r&s)", "-y", "(p|r)&(q|s)"])
        assert code == 0 and json.loads(out)


def test_axioms_are_reproducible():
    args = ["axioms", "--theory", "SCk", "--trials", "2", "--seed", "5"]
    assert run(args) == run(args)


def test_entry_point():
    proc = subprocess.run([sys.executable, "-m", "intermute", "eval", "--mat", "-a", "ck{p,q,r,s}"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.split() == ["1000", "0010", "0100", "0001"]
    proc = subprocess.run([sys.executable, "-m", "intermute", "parse", "-f", "p q"],
                          capture_output=True, text=True)
    assert proc.returncode == 3 and "position 2" in proc.stderr
