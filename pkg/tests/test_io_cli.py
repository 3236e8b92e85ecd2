import json
from fractions import Fraction

import pytest

from oracles import petersen
from tightkernel.catalog import TightKind
from tightkernel.cli import main
from tightkernel.decompose import decompose
from tightkernel.generators import GenSpec, gen_mixed, gen_tight_union
from tightkernel.io import ParseError, decomposition_json, format_dimacs, parse_dimacs, rational


def test_round_trip():
    for seed in range(10):
        g = gen_mixed(3, 50, seed)
        assert parse_dimacs(format_dimacs(g, ["seed 1"])) == g


def test_parse_comments_and_blank_lines():
    g = parse_dimacs("c hi\n\np edge 3 2\ne 1 2\nc mid\ne 2 3\n")
    assert g.adj == ((1,), (0, 2), (1,))


@pytest.mark.parametrize("text", [
    "e 1 2\n", "p edge 2 1\ne 1 3\n", "p edge 2 1\ne 1 1\n", "p edge 2 2\ne 1 2\n",
    "p edge x 1\n", "p col 2 0\n", "p edge 2 0\nq\n", "",
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_dimacs(text)


def test_rationals():
    assert rational(0) == "0/1" and rational(Fraction(6, 4)) == "3/2"


def test_json_sorted_and_versioned():
    rec = decomposition_json(decompose(petersen(), 3))
    assert rec["schema"] == 1 and rec["sets"]["D"] == list(range(10))


@pytest.fixture
def running(tmp_path):
    path = tmp_path / "g.col"
    assert main(["gen", "--delta", "4", "--counts", "clique=10", "--extra", "3", "--seed", "1",
                 "-o", str(path)]) == 0
    return path


def run_json(capsys, argv):
    code = main(argv)
    return code, json.loads(capsys.readouterr().out)


def test_gen_matches_library(running):
    text = running.read_text()
    assert text.startswith("c tightkernel gen delta=4 seed=1\n")
    assert parse_dimacs(text) == gen_tight_union(GenSpec(4, {TightKind.CLIQUE: 10}, extra_vertices=3, seed=1))


def test_decide_yes(running, capsys):
    code, out = run_json(capsys, ["decide", "--delta", "4", "--k", "2", "-i", str(running)])
    assert code == 0 and out["answer"] == "yes" and len(out["certificate"]) == 13
    assert out["k"] == "2/1"


def test_decide_no(running, capsys):
    code, out = run_json(capsys, ["decide", "--delta", "4", "--k", "3", "-i", str(running)])
    assert code == 1 and out["answer"] == "no" and out["certificate"] is None


def test_approx(running, capsys):
    code, out = run_json(capsys, ["approx", "--delta", "4", "-i", str(running)])
    assert code == 0 and out["k_lower"] == "3/544" and out["k_upper"] == "3/1"


def test_kernel_and_solve(running, capsys):
    code, out = run_json(capsys, ["kernel", "--delta", "4", "--k", "1", "-i", str(running)])
    assert code == 0 and out["n0"] == 3 and out["branch"] == "residual" and out["mapping"] == [40, 41, 42]
    code, out = run_json(capsys, ["solve", "--delta", "4", "-i", str(running)])
    assert code == 0 and out["alpha"] == 13 and out["excess"] == "9/4"


def test_decompose_and_verify(running, capsys):
    code, out = run_json(capsys, ["decompose", "--delta", "4", "-i", str(running)])
    assert code == 0 and out["sets"]["D"] == [40, 41, 42]
    code, out = run_json(capsys, ["verify", "--delta", "4", "--k", "1", "-i", str(running)])
    assert code == 0 and out["passed"] and out["kernel"]["passed"]


def test_invalid_instance_exit_2(tmp_path, capsys):
    path = tmp_path / "k5.col"
    edges = [(a, b) for a in range(1, 6) for b in range(a + 1, 6)]
    path.write_text(f"p edge 5 {len(edges)}\n" + "".join(f"e {a} {b}\n" for a, b in edges))
    for cmd in ("decompose", "approx", "solve", "verify"):
        code, out = run_json(capsys, [cmd, "--delta", "4", "-i", str(path)])
        assert code == 2 and out["violation"] == "clique" and out["vertices"] == [0, 1, 2, 3, 4]


def test_bad_input_exit_2(tmp_path, capsys):
    path = tmp_path / "bad.col"
    path.write_text("p edge 2 1\ne 1 9\n")
    assert main(["decompose", "--delta", "3", "-i", str(path)]) == 2
    assert main(["decompose", "--delta", "2", "-i", str(path)]) == 2
    assert main(["decide", "--delta", "3", "--k", "-1", "-i", str(path)]) == 2
    assert main(["decompose", "--delta", "3", "-i", str(tmp_path / "missing")]) == 2
    assert main(["gen", "--delta", "3", "--counts", "c8_squared=1"]) == 2


def test_exact_limit_exit_2(tmp_path, capsys):
    path = tmp_path / "g.col"
    path.write_text(format_dimacs(gen_mixed(3, 90, 4)))
    code, out = run_json(capsys, ["solve", "--delta", "3", "--exact-limit", "5", "-i", str(path)])
    assert code == 2 and out["limit"] == 5


def test_stdin_and_output_file(tmp_path, monkeypatch, capsys):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO(format_dimacs(petersen())))
    dest = tmp_path / "out.json"
    assert main(["solve", "--delta", "3", "-o", str(dest)]) == 0
    assert json.loads(dest.read_text())["alpha"] == 4
