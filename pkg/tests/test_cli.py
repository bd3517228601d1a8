"""Command-line entry points, exercised in-process through main()."""

import json
import subprocess
import sys

import pytest

from towercodes.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_field_json(capsys):
    code, out, err = run(capsys, "field", "--p", "2", "--e", "1", "--k", "4")
    assert code == 0 and err == ""
    doc = json.loads(out)
    assert doc == {
        "p": 2, "e": 1, "k": 4, "m": 4, "order": 16,
        "modulus": [1, 1, 0, 0, 1],
        "subfield_degrees": [1, 2, 4],
    }


def test_code_json_golden(capsys):
    code, out, err = run(capsys, "code", "--p", "2", "--e", "2", "--f", "2",
                         "--k", "4", "--a", "0")
    assert code == 0 and err == ""
    doc = json.loads(out)
    assert doc["params"] == {"p": 2, "e": 2, "f": 2, "k": 4, "q": 4,
                             "a": 0, "punctured": False}
    assert (doc["n"], doc["dim"], doc["dmin"]) == (51, 4, 36)
    assert doc["weights"] == [{"w": 36, "count": 204}, {"w": 48, "count": 51}]
    th = doc["theory"]
    assert th["applicable"] is True and th["match"] is True
    assert th["dmin_bound"] == 28
    assert th["griesmer_verdict"] == "almost_optimal_checked"
    assert th["ss_ok"] is False
    assert th["singleton_slack"] == 12


def test_code_punctured_json(capsys):
    code, out, _ = run(capsys, "code", "--p", "2", "--e", "2", "--f", "2",
                       "--k", "4", "--punctured")
    assert code == 0
    doc = json.loads(out)
    assert (doc["n"], doc["dim"], doc["dmin"]) == (17, 4, 12)
    assert doc["theory"]["griesmer_met"] is True
    assert doc["theory"]["griesmer_verdict"] == "optimal"
    assert doc["theory"]["dmin_bound"] == 9


def test_code_csv(capsys):
    code, out, _ = run(capsys, "code", "--p", "2", "--e", "1", "--f", "2",
                       "--k", "4", "--a", "1", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == ("p,e,f,k,a,n,dim,dmin,weights,freqs,"
                        "griesmer_met,singleton_slack,ss_ok,theory_match")
    assert lines[1] == "2,1,2,4,1,10,4,4,4|6,5|10,false,3,true,true"


def test_gauss_golden(capsys):
    code, out, _ = run(capsys, "gauss", "--p", "3", "--e", "1", "--k", "2",
                       "--j", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc == {
        "p": 3, "m": 2, "j": 2, "char_order": 4, "root_order": 12,
        "terms": [[0, -3]], "scalar": -3, "norm": 9,
    }


def test_gauss_irrational(capsys):
    code, out, _ = run(capsys, "gauss", "--p", "2", "--e", "1", "--k", "2",
                       "--j", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["scalar"] == 2 and doc["norm"] == 4


def test_verify_examples(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "examples")
    assert code == 0
    lines = out.strip().splitlines()
    assert all(line.startswith("ok  ") for line in lines[:-1])
    assert lines[-1].endswith("checks passed")


def test_search_csv(capsys):
    code, out, _ = run(capsys, "search", "--budget", "64")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("p,e,f,k,a,")
    # deterministic lexicographic parameter order
    assert lines[1].startswith("2,1,1,1,1,")
    keys = [tuple(map(int, line.split(",")[:5])) for line in lines[1:]]
    assert keys == sorted(keys)
    assert "2,1,2,4,1,10,4,4,4|6,5|10,false,3,true,true" in lines
    assert "2,1,2,4,0,5,4,2,2|4,10|5,true,0,false,true" in lines


def test_search_is_byte_stable(capsys):
    _, first, _ = run(capsys, "search", "--budget", "128")
    _, second, _ = run(capsys, "search", "--budget", "128")
    assert first == second


def test_workers_flag_is_invisible_in_output(capsys):
    _, one, _ = run(capsys, "search", "--budget", "128", "--workers", "1")
    _, four, _ = run(capsys, "search", "--budget", "128", "--workers", "4")
    assert one == four
    _, c1, _ = run(capsys, "code", "--p", "3", "--e", "1", "--f", "2",
                   "--k", "8", "--a", "1", "--workers", "1")
    _, c4, _ = run(capsys, "code", "--p", "3", "--e", "1", "--f", "2",
                   "--k", "8", "--a", "1", "--workers", "4")
    assert c1 == c4


def test_parameter_errors_exit_2(capsys):
    code, _, err = run(capsys, "code", "--p", "4", "--e", "1", "--f", "2",
                       "--k", "4")
    assert code == 2 and "p must be prime" in err
    code, _, err = run(capsys, "code", "--p", "2", "--e", "1", "--f", "2",
                       "--k", "4", "--a", "2")
    assert code == 2 and "a must be in [0, q)" in err
    code, _, err = run(capsys, "code", "--p", "2", "--e", "1", "--f", "1",
                       "--k", "3", "--a", "0")
    assert code == 2 and "k > f > 1" in err
    code, _, err = run(capsys, "code", "--p", "2", "--e", "1", "--f", "2",
                       "--k", "4", "--a", "1", "--punctured")
    assert code == 2 and "a = 0" in err


def test_missing_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "towercodes", "field",
         "--p", "3", "--e", "1", "--k", "2"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["modulus"] == [2, 1, 1]
