import json

import pytest

from overfrob.cli import main

# Worked algorithm traces, reproduced row for row.

F1_FWD_TRACE = """\
step | remaining top | remaining bottom | lam1 | lam2
0 | 3,2,1 | 4~,4,3~ |  |
1 | 3,2 | 4~,4 | 1,1,1,1 |
2 | 3 | 4~ | 2,2,2,2 | 2
3 |  |  | 3,3,3,3,3 | 2
[3,3,3,3,3,2~]
"""

F2_FWD_TRACE = """\
step | top row | bottom row
0 | 5,1~ | 6,5
1 | 5,3~,1~ | 6,5,-3
2 | 5,3~,1~ | -3,5,6
3 | result [8,7~,2~] |
[8,7~,2~]
"""

F2_INV_TRACE = """\
step | even~ | even | odd~ | odd | a | top | bottom
0 | 2 | 8 | 7 |  | 1 |  |
1 | 2 | 8 |  |  | 3 | 1~ | 6
2 | 2 |  |  |  | 5 | 3~,1~ | 6,5
3 |  |  |  |  | 5 | 5,3~,1~ | 6,5,-3
4 |  |  |  |  | 5 | 5,1~ | 6,5
F2:[5,1~;6,5]
"""

JS_TRACE = """\
step | lambda | marks | sigma_bar | cl_rank
0 | [4,3,2,2] | [3,1,0] | 1 | 3
1 | [5,4,3,2~] | [1,0] | 1 | 3
2 | [6,4~,3,2~] | [0] | 1 | 3
3 | [6~,4~,3,2~] | [] | 1 | 3
[6~,4~,3,2~]
"""


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_expand_rk_trivial(capsys):
    code, out = run(capsys, "expand", "--series", "Rk", "--k", "2", "--N", "0")
    assert code == 0 and out == "q^0 : 1\n"


def test_expand_rk_row_sum(capsys):
    code, out = run(capsys, "expand", "--series", "Rk", "--k", "1", "--N", "4")
    assert code == 0
    line = [l for l in out.splitlines() if l.startswith("q^4")][0]
    total = sum(
        int(term.split("*")[0]) if "*" in term else int(term)
        for term in line.split(" : ")[1].replace("- ", "+ -").split(" + ")
    )
    assert total == 14


def test_expand_subst_roots_vanishes_off_grid(capsys):
    code, out = run(capsys, "expand", "--series", "Rk-multi", "--k", "2",
                    "--N", "6", "--subst-roots")
    assert code == 0
    # z appears only at integer powers: no fractional z-exponent survives
    assert "z^{" not in out


def test_map_traces(capsys):
    assert run(capsys, "map", "--op", "f1-fwd", "--trace",
               "F1:[3,2,1;4~,4,3~]") == (0, F1_FWD_TRACE)
    assert run(capsys, "map", "--op", "f2-fwd", "--trace",
               "F2:[5,1~;6,5]") == (0, F2_FWD_TRACE)
    assert run(capsys, "map", "--op", "f2-inv", "--trace",
               "[8,7~,2~]") == (0, F2_INV_TRACE)
    assert run(capsys, "map", "--op", "js", "--trace",
               "[4,3,2,2];[3,1,0]") == (0, JS_TRACE)


def test_map_f1_inverse_trace_reverses_forward(capsys):
    code, out = run(capsys, "map", "--op", "f1-inv", "--trace", "[3,3,3,3,3,2~]")
    assert code == 0
    rows = out.splitlines()
    assert rows[-1] == "F1:[3,2,1;4~,4,3~]"
    fwd_rows = F1_FWD_TRACE.splitlines()[1:-1]
    assert rows[1:-1] == [
        f"{i} | {r.split(' | ', 1)[1]}" for i, r in enumerate(reversed(fwd_rows))
    ]


def test_map_round_trips(capsys):
    code, out = run(capsys, "map", "--op", "f2-inv", "[8,7~,2~]")
    assert (code, out) == (0, "F2:[5,1~;6,5]\n")
    code, out = run(capsys, "map", "--op", "f2-fwd", "F2:[5,1~;6,5]")
    assert (code, out) == (0, "[8,7~,2~]\n")
    code, out = run(capsys, "map", "--op", "js-inv", "[6~,4~,3,2~]")
    assert (code, out) == (0, "[4,3,2,2];[0,1,3]\n")
    code, out = run(capsys, "map", "--op", "js2", "[4,2,0,0];[1,5]")
    assert code == 0
    code, out2 = run(capsys, "map", "--op", "js2-inv", out.strip())
    assert (code, out2) == (0, "[4,2,0,0];[1,5]\n")


def test_map_conjugations(capsys):
    rep = "B1:^[3,2,1]|[2,2,1]|[3];[4~,4,3~]|^[1,0,0]|[0]"
    code, out = run(capsys, "map", "--op", "conj", "--index", "2", rep)
    assert (code, out.strip()) == (0, "B1:^[3,2,1]|^[2,1,1]|[3];[4~,4,3~]|[1,1,0]|[0]")
    code, out = run(capsys, "map", "--op", "full-conj", rep)
    assert code == 0
    code, out = run(capsys, "map", "--op", "jigsaw", rep)
    assert code == 0 and out.startswith("F1:")


def test_enumerate(capsys):
    code, out = run(capsys, "enumerate", "--kind", "overpartition", "--n", "4")
    lines = out.splitlines()
    assert code == 0 and lines[-1] == "total: 14" and len(lines) == 15
    code, out = run(capsys, "enumerate", "--kind", "b1", "--n", "0")
    assert code == 0 and out.splitlines() == ["B1:", "total: 1"]
    code, out = run(capsys, "enumerate", "--kind", "f2", "--n", "3")
    assert code == 0 and out.splitlines()[-1] == "total: 8"


def test_verify_exit_codes_and_formats(capsys):
    code, out = run(capsys, "verify", "--suite", "dyson", "--N", "6")
    assert code == 0 and "PASS" in out
    code, out = run(capsys, "verify", "--suite", "dyson", "--N", "6",
                    "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload[0]["suite"] == "rank-series" and payload[0]["passed"]
    code, _ = run(capsys, "verify", "--suite", "nope")
    assert code == 2


def test_verify_byte_identical(capsys):
    args = ("verify", "--suite", "counting", "--k", "2", "--N", "6",
            "--format", "json")
    _, first = run(capsys, *args)
    _, second = run(capsys, *args)
    assert first == second


def test_tableau(capsys):
    code, out = run(capsys, "tableau", "[4~,4,2,1]")
    assert code == 0
    assert out == "####\n####*\n##\n#\n"
    code, out = run(capsys, "tableau", "")
    assert (code, out) == (0, "\n")
    rep = "B1:^[3,2,1]|[2,2,1]|[3];[4~,4,3~]|^[1,0,0]|[0]"
    code, out = run(capsys, "tableau", rep)
    assert code == 0
    # two hats => one `.` buffer column in each block (every row carries it)
    top, bottom = out.split("---", 1)[0], out.rsplit("-\n", 1)[1]
    assert all("." in line for line in top.splitlines() if line)
    assert all("." in line for line in bottom.splitlines() if line)


def test_parse_errors_exit_3(capsys):
    code, _ = run(capsys, "map", "--op", "f1-fwd", "F1:[1,2;0,0]")
    assert code == 3
    code, _ = run(capsys, "tableau", "not a partition")
    assert code == 3
    code, _ = run(capsys, "map", "--op", "jigsaw", "B1:[2,2];[0,0]")
    assert code == 3


def test_flag_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["expand", "--series", "bogus", "--N", "3"])
    assert exc.value.code == 2
    code, _ = run(capsys, "map", "--op", "conj",
                  "B1:[2];[1]")  # missing --index
    assert code == 2
