import io
import json

import pytest

from conftest import DATA
from nfree.cli import main

P4_TEXT = "elements a b c d\norder a<c b<c b<d\n"
P5_TEXT = "elements a b c d p\norder a<c b<c b<d a<d a<p\n"


@pytest.fixture
def run(capsys, monkeypatch):
    def invoke(*argv, stdin=None):
        if stdin is not None:
            monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
        code = main(list(argv))
        out, err = capsys.readouterr()
        return code, out, err

    return invoke


@pytest.fixture
def p5_file(tmp_path):
    path = tmp_path / "p5.txt"
    path.write_text(P5_TEXT)
    return str(path)


def test_edge_set_commands(run, p5_file):
    assert run("ndiag", p5_file) == (0, "a<c\na<d\n", "")
    assert run("aset", p5_file) == (0, "b<c\nb<d\n", "")
    assert run("nddiag", p5_file) == (0, "a<c\na<d\n", "")
    assert run("witnesses", p5_file) == (0, "b a c p\nb a d p\n", "")


def test_predicates_exit_zero(run):
    assert run("nfree", stdin=P4_TEXT) == (0, "false\n", "")
    assert run("cac", stdin=P4_TEXT) == (0, "false\n", "")
    assert run("sp", stdin=P4_TEXT) == (0, "false\n", "")
    assert run("nfree", "-", stdin="elements x y\norder x<y\n") == (0, "true\n", "")


def test_close_n(run):
    code, out, _ = run("close", stdin=P4_TEXT)
    assert code == 0
    assert out == "elements a b c d _d.b.c.1\norder a<c b<d b<_d.b.c.1 _d.b.c.1<c\n"


def test_close_trace(run, p5_file):
    code, out, _ = run("close", "--method", "sequential", "--strategy", "random", "--seed", "42", "--trace", p5_file)
    lines = out.splitlines()
    assert code == 0
    assert lines[:4] == [
        "# step 1: a<c -> _d.a.c.1",
        "# step 2: a<d -> _d.a.d.1",
        "# step 3: b<d -> _d.b.d.1",
        "# step 4: b<c -> _d.b.c.1",
    ]
    _, out2, _ = run("close", "--trace", p5_file)
    assert out2.splitlines()[:2] == ["# pass 1: a<c a<d", "# pass 2: b<c b<d"]


def test_subdivide_command(run):
    code, out, _ = run("subdivide", "--edge", "b<c", stdin=P4_TEXT)
    assert code == 0 and "_d.b.c.1" in out
    code, _, err = run("subdivide", "--edge", "a<d", stdin=P4_TEXT)
    assert code == 2 and "not a covering pair" in err
    code, _, err = run("subdivide", "--edge", "a<q", stdin=P4_TEXT)
    assert code == 2


def test_structural_commands(run):
    code, out, _ = run("dual", stdin=P4_TEXT)
    assert out == "elements a b c d\norder c<a c<b d<b\n"
    code, out, _ = run("full-subdivide", stdin=P4_TEXT)
    assert out.splitlines()[0].split()[1:] == ["a", "b", "c", "d", "_d.a.c.1", "_d.b.c.1", "_d.b.d.1"]
    code, out, _ = run("dot", stdin=P4_TEXT)
    assert code == 0 and out.count("->") == 3


def test_enumerate(run):
    assert run("enumerate", "--n", "4", "--count-only") == (0, "219\n", "")
    code, out, _ = run("enumerate", "--n", "2")
    assert out.count("elements") == 3
    code, _, err = run("enumerate", "--n", "7", "--count-only")
    assert code == 2 and "long-running" in err


def test_verify(run):
    code, out, _ = run("verify", "--n", "4", "--suite", "all")
    assert code == 0 and out == "checked=219 failed=0\n"
    code, out, _ = run("verify", "--n", "3", "--suite", "minimality")
    assert out == "checked=19 failed=0\n"


def test_verify_failure_exit_code(run, monkeypatch):
    import nfree.verify as verify

    monkeypatch.setitem(verify.SUITES, "npattern", [("always_fails", lambda p: "boom")])
    code, out, _ = run("verify", "--n", "2", "--suite", "npattern")
    lines = out.splitlines()
    assert code == 3
    assert lines[-1] == "checked=3 failed=3"
    assert lines[0].startswith("FAIL npattern.always_fails: boom poset=")
    doc = json.loads(lines[0].split("poset=", 1)[1])
    assert doc["elements"] == ["v1", "v2"]


def test_input_errors(run, tmp_path):
    code, _, err = run("nfree", stdin="elements x y\norder x<y y<x\n")
    assert code == 2 and "cycle" in err
    code, _, err = run("nfree", stdin="elements x\norder x<\n")
    assert code == 2 and "line 2" in err
    code, _, err = run("nfree", str(tmp_path / "missing.txt"))
    assert code == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert run("nfree", str(bad))[0] == 2


def test_json_input(run):
    code, out, _ = run("ndiag", str(DATA / "golden" / "10_seven.json"))
    assert code == 0 and out == "r<t\ns<t\nu<v\nu<w\n"


def test_usage_error_exit_code(run):
    with pytest.raises(SystemExit) as info:
        main(["close", "--method", "bogus"])
    assert info.value.code == 2
