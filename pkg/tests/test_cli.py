import json

import pytest

from taupart.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_tau_single(capsys):
    assert run(capsys, "tau", "--n", "3", "--method", "recursion") == (0, "252\n", "")
    assert run(capsys, "tau", "--n", "1", "--method", "product")[:2] == (0, "1\n")


def test_tau_all(capsys):
    code, out, _ = run(capsys, "tau", "--n", "6", "--method", "all")
    assert code == 0
    lines = out.splitlines()
    assert lines[-1] == "agreement=true"
    assert [l.split(": ")[1] for l in lines[:-1]] == ["-6048"] * 5


def test_tau_json_uses_strings(capsys):
    code, out, _ = run(capsys, "tau", "--n", "40", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d == {"n": 40, "method": "recursion", "tau": d["tau"]}
    assert isinstance(d["tau"], str) and int(d["tau"]) != 0
    code, out, _ = run(capsys, "tau", "--n", "5", "--method", "all", "--format", "json")
    d = json.loads(out)
    assert d["agreement"] is True and set(d["values"].values()) == {"4830"}


def test_tau_usage_errors(capsys):
    assert run(capsys, "tau", "--n", "1", "--method", "bko")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["tau", "--n", "0"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["tau", "--n", "3", "--method", "nope"])
    assert exc.value.code == 2


def test_tau_disagreement_exit(capsys, monkeypatch):
    import taupart.cli as cli

    monkeypatch.setitem(cli.METHODS, "product", lambda n: 0)
    code, out, err = run(capsys, "tau", "--n", "4", "--method", "all")
    assert code == 1 and "agreement=false" in out and "disagree" in err


def test_graph_actions(capsys):
    assert run(capsys, "graph", "--partition", "3", "--action", "aut-count")[:2] == (0, "structural=3\nbrute=3\n")
    assert run(capsys, "graph", "--partition", "2,1", "--action", "symmetry")[:2] == (0, "1/2\n")
    assert run(capsys, "graph", "--partition", "2", "--action", "dot")[:2] == (0, "digraph G {\n  1 -> 2;\n  2 -> 1;\n}\n")
    code, out, _ = run(capsys, "graph", "--partition", "1,2", "--action", "json")
    assert json.loads(out) == {"n": 3, "edges": [[1, 2], [2, 1], [3, 3]]}
    code, out, _ = run(capsys, "graph", "--partition", "5,5", "--action", "aut-count", "--format", "json")
    assert json.loads(out) == {"partition": [5, 5], "structural": "50", "brute": None}


def test_graph_dot_to_file(capsys, tmp_path):
    target = tmp_path / "g.dot"
    code, out, _ = run(capsys, "graph", "--partition", "1", "--action", "dot", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text() == "digraph G {\n  1 -> 1;\n}\n"


@pytest.mark.parametrize("bad", ["", "0", "2,x", "-1"])
def test_graph_parse_failure(bad):
    with pytest.raises(SystemExit) as exc:
        main(["graph", "--partition", bad])
    assert exc.value.code == 2


def test_zlambda_and_partitions(capsys):
    assert run(capsys, "zlambda", "--partition", "2,2,1")[:2] == (0, "8\n")
    code, out, _ = run(capsys, "partitions", "--n", "4")
    assert out.splitlines() == ["4\t4", "3,1\t3", "2,2\t8", "2,1,1\t4", "1,1,1,1\t24"]
    code, out, _ = run(capsys, "partitions", "--n", "3", "--format", "json")
    d = json.loads(out)
    assert d["count"] == 3 and d["partitions"][0] == {"partition": [3], "z": "3"}


def test_solve(capsys):
    code, out, _ = run(capsys, "solve", "--n", "3", "--function", "neg24sigma")
    assert code == 0 and out.splitlines()[-1] == "agreement=true"
    assert set(l.split(": ")[1] for l in out.splitlines()[:-1]) == {"-1472"}
    assert run(capsys, "solve", "--n", "2", "--values", "5,-3", "--method", "determinant")[:2] == (0, "11\n")
    code, out, _ = run(capsys, "solve", "--n", "2", "--values", "1,0", "--format", "json")
    assert json.loads(out)["values"]["recursion"] == "1/2"
    assert run(capsys, "solve", "--n", "3", "--values", "1,2")[0] == 2
    assert run(capsys, "solve", "--n", "0", "--method", "determinant")[0] == 2
    assert run(capsys, "solve", "--n", "0", "--function", "sigma")[0] == 0


def test_series(capsys):
    code, out, _ = run(capsys, "series", "--exponent", "-1", "--degree", "5")
    assert json.loads(out) == {"truncation": 5, "coeffs": ["1", "1", "2", "3", "5", "7"]}
    code, out2, _ = run(capsys, "series", "--exponent", "24", "--degree", "10", "--route", "recursion")
    code, out3, _ = run(capsys, "series", "--exponent", "24", "--degree", "10")
    assert out2 == out3


@pytest.mark.parametrize("suite, n", [("sylvester", "20"), ("aut", "8"), ("tau", "25"), ("series", "60"), ("newton", "8")])
def test_verify_suites(capsys, suite, n):
    code, out, err = run(capsys, "verify", "--suites", suite, "--n-max", n)
    assert code == 0
    assert out == f"{suite} (n_max={n}): PASS\n"
    assert err.startswith(f"{suite}: ")


def test_verify_clamps_and_json(capsys):
    code, out, _ = run(capsys, "verify", "--suites", "newton,tau", "--n-max", "100", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["pass"] is True
    assert [(s["suite"], s["n_max"]) for s in d["suites"]] == [("newton", 14), ("tau", 40)]


def test_verify_failure_exit(capsys, monkeypatch):
    import taupart.cli as cli

    monkeypatch.setitem(cli.SUITES, "sylvester", lambda n, t: "broken on purpose")
    code, out, _ = run(capsys, "verify", "--suites", "sylvester")
    assert code == 1 and "FAIL - broken on purpose" in out


def test_verify_unknown_suite(capsys):
    assert run(capsys, "verify", "--suites", "bogus")[0] == 2


def test_output_deterministic(capsys):
    argv = ["tau", "--n", "12", "--method", "all", "--format", "json", "--threads", "3"]
    first = run(capsys, *argv)
    assert all(run(capsys, *argv) == first for _ in range(3))
    argv = ["verify", "--suites", "sylvester,aut", "--n-max", "6"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]
