import json

from forestry.cli import main
from forestry.forests import forest_from_code, forest_from_json
from forestry.pipedreams import schubert
from forestry.polynomials import Polynomial


def run(capsys, *argv):
    # usage errors surface as SystemExit(1); either spelling exits 1 in the shell
    try:
        code = main(list(argv))
    except SystemExit as stop:
        code = stop.code
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- schubert -----------------------------------------------------------------


def test_schubert_fixture(capsys):
    code, out, _ = run(capsys, "schubert", "4132")
    assert code == 0
    assert out == "x1^3*x2 + x1^3*x3\n"


def test_schubert_identity(capsys):
    code, out, _ = run(capsys, "schubert", "1")
    assert code == 0
    assert out == "1\n"


def test_schubert_oracle(capsys):
    code, out, _ = run(capsys, "schubert", "15342", "--oracle")
    assert code == 0
    assert out.endswith("oracle: OK\n")


def test_schubert_json(capsys):
    code, out, _ = run(capsys, "schubert", "4132", "--json")
    assert code == 0
    assert json.loads(out) == [
        {"coeff": 1, "exps": [3, 1]},
        {"coeff": 1, "exps": [3, 0, 1]},
    ]


def test_schubert_json_round_trips(capsys):
    _, out, _ = run(capsys, "schubert", "41532", "--json")
    assert Polynomial.from_json_obj(json.loads(out)) == schubert((4, 1, 5, 3, 2))


def test_schubert_parse_error(capsys):
    code, out, err = run(capsys, "schubert", "41x2")
    assert code == 1
    assert out == ""
    assert "error" in err


# --- forest ---------------------------------------------------------------------


def test_forest_from_code(capsys):
    code, out, _ = run(capsys, "forest", "--code", "3,0,1,0")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "x1^3*x2 + x1^3*x3"
    assert lines[1] == "(row 1, #3) rho=1"
    assert len(lines) == 5


def test_forest_from_perm_matches_code(capsys):
    _, from_perm, _ = run(capsys, "forest", "--perm", "4132")
    _, from_code, _ = run(capsys, "forest", "--code", "3,0,1,0")
    assert from_perm == from_code


def test_forest_empty_code(capsys):
    code, out, _ = run(capsys, "forest", "--code")
    assert code == 0
    assert out.splitlines()[0] == "1"


def test_forest_requires_exactly_one_source(capsys):
    assert run(capsys, "forest")[0] == 1
    assert run(capsys, "forest", "--perm", "4132", "--code", "1")[0] == 1


def test_forest_rejects_bad_code(capsys):
    assert run(capsys, "forest", "--code", "1,x")[0] == 1
    assert run(capsys, "forest", "--code", "1,-2")[0] == 1


def test_forest_json(capsys):
    code, out, _ = run(capsys, "forest", "--code", "2,1,1,0,1,0,0,1", "--json")
    assert code == 0
    obj = json.loads(out)
    poly = obj.pop("polynomial")
    assert forest_from_json(obj) is forest_from_code((2, 1, 1, 0, 1, 0, 0, 1))
    assert sum(term["coeff"] for term in poly) == 32


# --- check ----------------------------------------------------------------------


def test_check_identity(capsys):
    code, out, _ = run(capsys, "check", "1234")
    assert code == 0
    assert out.splitlines()[0] == "forest: yes"


def test_check_single_pattern(capsys):
    code, out, _ = run(capsys, "check", "24513")
    assert code == 0
    assert (
        out.splitlines()[0]
        == "NOT forest: contains 2413 at indices (1,2,4,5); bad pair row1#1 / row2#2"
    )


def test_check_lists_every_pattern(capsys):
    code, out, _ = run(capsys, "check", "146235")
    assert code == 0
    assert out.splitlines()[0] == (
        "NOT forest: contains 2413 at indices (2,3,4,6),"
        " 14523 at indices (1,2,3,4,5); bad pair row2#1 / row3#3"
    )


def test_check_no_bad_pair_line_under_1432(capsys):
    code, out, _ = run(capsys, "check", "1432")
    assert code == 0
    assert out.splitlines()[0] == "NOT forest: contains 1432 at indices (1,2,3,4)"
    assert "bad pair" not in out


def test_check_json(capsys):
    code, out, _ = run(capsys, "check", "321465", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["pattern_forest"] is False
    assert obj["expansion_forest"] is False
    assert obj["agree"] is True
    assert obj["patterns"] == [
        {"pattern": [3, 2, 1, 5, 4], "indices": [1, 2, 3, 5, 6]}
    ]
    assert obj["bad_pair"]["parent"] == [1, 2]
    assert obj["bad_pair"]["child"] == [5, 1]


# --- pipedreams ---------------------------------------------------------------


def test_pipedreams_fixture(capsys):
    code, out, _ = run(capsys, "pipedreams", "4132")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "2 pipe dreams for 4132"
    # bottom dream (left-justified) prints first
    assert lines[2:6] == ["+++", "..", "+", "weight: x1^3*x3"]
    assert "weight: x1^3*x2" in lines


def test_pipedreams_identity(capsys):
    code, out, _ = run(capsys, "pipedreams", "1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "1 pipe dreams for 1"
    assert "(empty)" in lines


def test_pipedreams_simple_only_is_smaller(capsys):
    _, full, _ = run(capsys, "pipedreams", "1432")
    _, only, _ = run(capsys, "pipedreams", "1432", "--simple-only")
    assert full.splitlines()[0] == "5 pipe dreams for 1432"
    assert only.splitlines()[0] == "4 dreams in the simple-move closure for 1432"


def test_pipedreams_json(capsys):
    code, out, _ = run(capsys, "pipedreams", "4132", "--json")
    assert code == 0
    obj = json.loads(out)
    assert len(obj) == 2
    assert obj[0]["cells"] == [[1, 1], [1, 2], [1, 3], [3, 1]]
    assert obj[0]["weight"] == [3, 0, 1]


def test_pipedreams_deterministic(capsys):
    _, first, _ = run(capsys, "pipedreams", "41532")
    _, second, _ = run(capsys, "pipedreams", "41532")
    assert first == second


# --- verify ---------------------------------------------------------------------


def test_verify_text_report(capsys):
    code, out, err = run(capsys, "verify", "4")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "S_4: checked 24 permutations"
    assert lines[1] == "pattern-positive: 21, expansion-positive: 21"
    assert lines[2] == "disagreements: 0"
    assert lines[3] == "bad-pair cross-check: 23 permutations, 0 disagreements"
    assert lines[4].startswith("elapsed: ")
    assert "checked 24/24 permutations" in err


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "4", "--json", "--jobs", "1")
    assert code == 0
    obj = json.loads(out)
    assert obj["n"] == 4
    assert obj["total"] == 24
    assert obj["disagreements"] == []
    assert obj["badpair_disagreements"] == []


def test_verify_range_checks(capsys):
    assert run(capsys, "verify", "0")[0] == 1
    assert run(capsys, "verify", "8")[0] == 1
    assert run(capsys, "verify", "4", "--max-n", "3")[0] == 1
    assert run(capsys, "verify", "4", "--max-n", "4")[0] == 0
    assert run(capsys, "verify", "2", "--jobs", "0")[0] == 1


def test_verify_env_cap(capsys, monkeypatch):
    monkeypatch.setenv("FORESTRY_MAX_N", "3")
    assert run(capsys, "verify", "4")[0] == 1
    # an explicit flag outranks the environment
    assert run(capsys, "verify", "4", "--max-n", "4")[0] == 0
    monkeypatch.setenv("FORESTRY_MAX_N", "banana")
    assert run(capsys, "verify", "2")[0] == 1


# --- dispatch --------------------------------------------------------------------


def test_unknown_command_exits_1(capsys):
    assert run(capsys, "frobnicate")[0] == 1


def test_no_command_exits_1(capsys):
    assert run(capsys)[0] == 1
