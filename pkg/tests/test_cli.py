import json

import pytest

from lscrystal.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_explore_json_stdout(capsys):
    code, out, _ = run(capsys, "explore", "--a1", "3", "--a2", "3", "--shape", "1,-1", "--depth", "1")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["nodes"]) == 3 and doc["cartan"] == {"a1": 3, "a2": 3}


def test_explore_dot_file(tmp_path, capsys):
    out = tmp_path / "g.dot"
    code, _, _ = run(capsys, "explore", "--a1", "3", "--a2", "3", "--depth", "2", "--format", "dot",
                     "--out", str(out))
    assert code == 0 and out.read_text().startswith("digraph")


def test_explore_with_seed_and_audit(capsys):
    code, out, _ = run(capsys, "explore", "--a1", "3", "--a2", "3", "--depth", "2",
                       "--seed", "dirs=[(5,-2),(-1,2)];cuts=[0,1/2,1]", "--validate-every", "1")
    assert code == 0
    assert json.loads(out)["seed"] == "dirs=[(5,-2),(-1,2)];cuts=[0,1/2,1]"


def test_explore_rejects_invalid_seed(capsys):
    code, _, err = run(capsys, "explore", "--a1", "3", "--a2", "3", "--depth", "2",
                       "--seed", "dirs=[(5,-2),(-1,2)];cuts=[0,1/3,1]")
    assert code == 2 and "seed rejected" in err


def test_character_lines_and_plot(tmp_path, capsys):
    png = tmp_path / "w.png"
    code, out, _ = run(capsys, "character", "--a1", "1", "--a2", "1", "--shape", "1,-1", "--depth", "5",
                       "--plot", str(png))
    assert code == 0
    assert out.splitlines() == ["(-1,0):1", "(0,1):1", "(1,-1):1"]
    assert png.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_orbit_table(capsys):
    code, out, _ = run(capsys, "orbit", "--a1", "3", "--a2", "3", "--weight", "1,-1", "--max-length", "2")
    assert code == 0
    rows = dict(line.split("\t") for line in out.splitlines())
    assert rows == {"e": "(1,-1)", "r1": "(-1,2)", "r2": "(-2,1)", "r1r2": "(2,-5)", "r2r1": "(5,-2)"}


def test_verify_pass(capsys):
    code, out, _ = run(capsys, "verify", "--a1", "3", "--a2", "3", "--suite", "all", "--depth", "3",
                       "--word-bound", "3")
    assert code == 0
    assert "FAIL" not in out and out.count("PASS") >= 10


def test_verify_failure_exit_code(capsys):
    # a chain-length bound of 1 cannot certify the order's transitivity on long chains
    code, out, _ = run(capsys, "verify", "--a1", "3", "--a2", "3", "--suite", "order", "--word-bound", "4",
                       "--max-chain-length", "1")
    assert code == 1 and "FAIL" in out


@pytest.mark.parametrize("argv", [
    ["explore", "--a1", "2", "--a2", "2", "--depth", "1"],
    ["explore", "--a1", "3", "--a2", "3", "--depth", "-1"],
    ["orbit", "--a1", "3", "--a2", "3", "--weight", "oops", "--max-length", "2"],
    ["verify", "--a1", "3", "--a2", "3", "--suite", "nope"],
    ["explore", "--a1", "3"],
])
def test_bad_arguments_exit_2(argv, capsys):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 2
