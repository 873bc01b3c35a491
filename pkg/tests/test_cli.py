import json

import pytest

from drinfeld_obstruction.cli import main

U3 = "[[[1,1],[0,1]]]"
Q9 = "[[[1,1],[0,1]],[[1,[0,1]],[0,1]]]"
SL2_F4 = "[[[1,1],[0,1]],[[1,0],[1,1]],[[[0,1],0],[0,[1,1]]]]"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_h1(capsys):
    code, out = run_json(capsys, "h1", "--field", "p=3", "--gens", U3)
    assert code == 0 and out["dim_F"] == 1 and out["schema"] == 1
    assert out["input"]["gens"] == U3


@pytest.mark.parametrize("method", ["brute", "full", "resolution"])
def test_h1_methods_agree(capsys, method):
    code, out = run_json(capsys, "h1", "--field", "p=3,k=2", "--gens", Q9, "--method", method)
    assert code == 0 and out["dim_F"] == 2


def test_h1_from_file(capsys, tmp_path):
    path = tmp_path / "gens.json"
    path.write_text(U3)
    code, out = run_json(capsys, "h1", "--field", "p=3", "--gens", str(path))
    assert code == 0 and out["dim_F"] == 1


def test_classify(capsys):
    code, out = run_json(capsys, "classify", "--field", "p=2,k=2", "--gens", SL2_F4)
    assert code == 0 and out["group_order"] == 60 and out["type"] == 4


def test_classify_rejects_non_sl2(capsys):
    code, out = run_json(capsys, "classify", "--field", "p=3", "--gens", "[[[2,0],[0,1]]]")
    assert code == 2 and "error" in out


def test_newton(capsys):
    code, out = run_json(capsys, "newton", "--field", "p=3", "--phi", "t + t*T + t^2*T^2", "--a", "t", "--place", "t")
    assert code == 0
    assert out["slopes"] == [{"slope": "0", "length": 2}, {"slope": "1/6", "length": 6}]
    assert out["ramification_bound"] == 6 and out["rank"] == 2


def test_s_dim(capsys):
    decomp = '[{"label": "a", "gens": [[[1,1],[0,1]]]}]'
    code, out = run_json(capsys, "s-dim", "--field", "p=3,k=2", "--group", Q9, "--decomp", decomp)
    assert code == 0 and out["dim_F"] == 1 and out["h1_dim_F"] == 2
    assert out["per_datum"] == [{"label": "a", "ker_dim_F": 1}]


def test_s_dim_borel(capsys):
    code, out = run_json(capsys, "s-dim", "--field", "p=3", "--group", "[[[1,1],[0,1]],[[2,0],[0,1]]]", "--borel")
    assert code == 0 and out["dim_F"] == 0 and out["shortcut"] == "borel"


@pytest.mark.parametrize("argv,key,value", [
    (["report", "example51", "--q", "4"], "passed", True),
    (["report", "chain", "--q", "3"], "passed", True),
    (["report", "thm53", "--p", "3", "--k", "2"], "dim_F", 1),
])
def test_report(capsys, argv, key, value):
    code, out = run_json(capsys, *argv)
    assert code == 0 and out[key] == value


def test_verify_subset(capsys):
    code, out = run_json(capsys, "verify", "--paper", "--only", "1,5")
    assert code == 0 and out["passed"]
    assert [c["criterion"] for c in out["criteria"]] == [1, 5]


def test_output_is_byte_stable(capsys):
    argv = ["s-dim", "--field", "p=3,k=2", "--group", Q9]
    _, a = run(capsys, *argv)
    _, b = run(capsys, *argv)
    assert a == b


def test_text_format(capsys):
    code, out = run(capsys, "--format", "text", "h1", "--field", "p=3", "--gens", U3)
    assert code == 0 and "dim_F: 1" in out


@pytest.mark.parametrize("argv", [
    ["h1", "--field", "p=3", "--gens", "[[[1,1],[0,1]]"],
    ["h1", "--field", "p=6", "--gens", U3],
    ["h1", "--field", "p=5", "--gens", "[[[2,1],[0,1]],[[1,0],[1,1]]]", "--cap", "50"],
    ["h1", "--field", "p=3", "--gens", "[[[1,1,0],[0,1]]]"],
    ["newton", "--field", "p=3", "--phi", "t + T", "--a", "t", "--place", "t^2+2"],
    ["newton", "--field", "p=3", "--phi", "t +", "--a", "t"],
])
def test_input_errors_exit_2(capsys, argv):
    code, out = run_json(capsys, *argv)
    assert code == 2 and out["error"]


def test_bad_json_reports_position(capsys):
    _, out = run_json(capsys, "h1", "--field", "p=3", "--gens", "[[[1,1],\n[0,1]]")
    assert "line 2" in out["error"]


@pytest.mark.parametrize("sub", ["h1", "classify", "newton", "s-dim", "report", "verify"])
def test_help(capsys, sub):
    with pytest.raises(SystemExit) as exc:
        main([sub, "--help"])
    assert exc.value.code == 0
    assert "Output JSON" in capsys.readouterr().out
