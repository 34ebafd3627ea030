"""Command-line surface: verbs, formats, determinism, exit codes."""

import json

import pytest

from snowleopard.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_enumerate_slp_table(capsys):
    code, out, _ = run(capsys, "enumerate", "slp", "--len", "5")
    assert code == 0
    assert out.splitlines() == [
        "1 2 3 4 5",
        "1 4 3 2 5",
        "3 4 5 2 1",
        "5 4 1 2 3",
        "5 4 3 2 1",
    ]


def test_enumerate_count_and_jsonl(capsys):
    code, out, _ = run(capsys, "enumerate", "jt", "--n", "3", "--format", "count")
    assert code == 0 and out.strip() == "4"
    code, out, _ = run(capsys, "enumerate", "neen", "--n", "2", "--format", "jsonl")
    rows = [json.loads(line) for line in out.splitlines()]
    assert rows == [
        {"kind": "neen", "n": 2, "value": "NENE"},
        {"kind": "neen", "n": 2, "value": "NNEE"},
    ]


def test_enumerate_empty_path_record(capsys):
    code, out, _ = run(capsys, "enumerate", "ud", "--n", "0")
    assert code == 0 and out.splitlines() == ["-"]


def test_enumerate_csv(capsys):
    code, out, _ = run(capsys, "enumerate", "ot", "--n", "2", "--format", "csv")
    assert out.splitlines() == ["kind,n,value", "ot,2,1 2", "ot,2,2 1"]


def test_map_examples(capsys):
    assert run(capsys, "map", "J", "NENNEE") == (0, "2 3 1\n", "")
    assert run(capsys, "map", "Kdirect", "5 7 6 8 9 4 3 1 2") == (0, "UULDLDLULD\n", "")
    assert run(capsys, "map", "reduce", "9 8 1 2 5 4 3 6 7") == (0, "5 1 3 2 4\n", "")
    assert run(capsys, "map", "H", "NNNEEENE") == (0, "3 1 2\n", "")
    assert run(capsys, "map", "F", "@") == (0, "-\n", "")
    assert run(capsys, "map", "complement", "1 4 2 3 5") == (0, "5 2 4 3 1\n", "")


def test_map_round_trip_over_enumeration(capsys):
    code, out, _ = run(capsys, "enumerate", "et", "--n", "4")
    for line in out.splitlines():
        code, path, _ = run(capsys, "map", "F", line)
        assert code == 0
        code, back, _ = run(capsys, "map", "H", path.strip())
        assert back.strip() == line


def test_map_domain_error(capsys):
    code, _, err = run(capsys, "map", "J", "NEEN")
    assert code == 2 and "error:" in err
    code, _, err = run(capsys, "map", "K", "2 1 3")
    assert code == 2


def test_check_and_decompose(capsys):
    assert run(capsys, "check", "slp", "1 4 3 2 5")[0] == 0
    code, out, _ = run(capsys, "check", "slp", "2 1 3 4 5")
    assert code == 1 and out.strip() == "false"
    code, out, _ = run(capsys, "decompose", "slp", "5 8 7 6 9 4 3 2 1")
    assert out.splitlines() == ["left: 1 2 3", "right: 3 2 1", "connector_position: 6"]
    code, out, _ = run(capsys, "decompose", "even", "6 5 3 4 2 1")
    assert out.splitlines() == [
        "odd_part: e | even_part: 5 3 4 2 1",
        "odd_part: 1 | even_part: 3 4 2 1",
        "odd_part: 1 2 4 3 5 | even_part: e",
    ]
    code, out, _ = run(capsys, "decompose", "odd", "4 6 5 7 3 1 2")
    assert out.splitlines() == ["even_part: 1 2", "odd_part: 3 1 2"]


def test_partners(capsys):
    code, out, _ = run(capsys, "partners", "2 1", "--side", "even")
    assert out.splitlines() == ["1 2 3", "2 3 1", "3 1 2", "3 2 1"]
    code, out, _ = run(capsys, "partners-layered", "--spec", "2,2", "--side", "odd")
    assert out.splitlines() == ["3 2 1"]


def test_graph_jsonl(capsys):
    code, out, _ = run(capsys, "graph", "--n", "0", "--format", "jsonl")
    rows = [json.loads(line) for line in out.splitlines()]
    assert rows == [{"kind": "entanglement-edge", "n": 0, "value": "e | 1"}]


def test_count(capsys):
    assert run(capsys, "count", "neen", "--n", "5", "--k", "0") == (0, "23\n", "")


def test_verify_pass_and_threads_determinism(capsys):
    code1, out1, _ = run(capsys, "verify", "tables", "--nmax", "5")
    assert code1 == 0
    code2, out2, _ = run(capsys, "verify", "tables", "--nmax", "5", "--threads", "2")
    assert code2 == 0
    strip = lambda s: [l for l in s.splitlines() if l.startswith(("PASS", "FAIL"))]
    assert strip(out1) == strip(out2)


def test_enumerate_determinism(capsys):
    _, out1, _ = run(capsys, "enumerate", "slp", "--len", "7")
    _, out2, _ = run(capsys, "enumerate", "slp", "--len", "7")
    assert out1 == out2


def test_aztec_verbs(capsys):
    code, out, _ = run(capsys, "aztec", "enumerate", "--order", "2", "--format", "count")
    assert code == 0 and out.strip() == "8"
    code, out, _ = run(capsys, "aztec", "asm", "--order", "1", "--index", "0")
    assert code == 0 and "--" in out
    code, out, _ = run(capsys, "aztec", "verify-canary", "--order", "3")
    assert code == 0 and out.startswith("PASS")


def test_usage_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["enumerate", "bogus", "--n", "1"])
    assert exc.value.code == 2
    code, _, err = run(capsys, "enumerate", "et")
    assert code == 2 and "requires --n" in err
