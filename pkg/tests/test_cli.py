"""Command-line interface: formats, round trips and exit codes."""

import json
import re

import pytest

from singbgg.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_nonkostant_text(capsys):
    code, out, _ = run(capsys, "nonkostant", "--type", "A", "--rank", "3",
                       "--singular", "2")
    assert code == 0
    assert out == "(2)\n"


def test_nonkostant_empty(capsys):
    code, out, _ = run(capsys, "nonkostant", "--type", "A", "--rank", "2",
                       "--singular", "1")
    assert code == 0
    assert out == ""


def test_nonkostant_json_round_trip(capsys):
    code, out, _ = run(capsys, "nonkostant", "-t", "B", "-r", "3",
                       "-s", "1,2", "-f", "json")
    assert code == 0
    data = json.loads(out)
    assert data["cartan"] == "B" and data["rank"] == 3
    assert data["singular"] == [1, 2]
    bad = [r["w"] for r in data["results"] if not r["kostant"]]
    assert sorted(bad) == [[1, 2, 1], [1, 3, 2, 1]]


def test_klpoly(capsys):
    code, out, _ = run(capsys, "klpoly", "-t", "B", "-r", "3",
                       "--y", "3,2,3,2", "--w", "2,3,2,1,2,3,2")
    assert code == 0
    assert out.strip() == "1+q"


def test_klpoly_compact_words(capsys):
    code, out, _ = run(capsys, "klpoly", "-t", "B", "-r", "3",
                       "--y", "3232", "--w", "2321232", "-f", "json")
    assert code == 0
    assert json.loads(out)["coeffs"] == [1, 1]


def test_klv_and_mobius(capsys):
    code, out, _ = run(capsys, "klv", "-t", "B", "-r", "3", "-s", "2,3",
                       "--w", "3232", "--x", "13232")
    assert code == 0
    assert out.strip() == "1"
    code, out, _ = run(capsys, "mobius", "-t", "B", "-r", "3", "-s", "2,3",
                       "--w", "3232", "--x", "13232")
    assert code == 0
    assert out.strip() == "-1"


def test_kostant_and_scat(capsys):
    code, out, _ = run(capsys, "kostant", "-t", "B", "-r", "3", "-s", "2,3",
                       "--w", "3232")
    assert (code, out.strip()) == (0, "true")
    code, out, _ = run(capsys, "kostant", "-t", "A", "-r", "3", "-s", "2",
                       "--w", "2")
    assert (code, out.strip()) == (0, "false")
    code, out, _ = run(capsys, "scat", "-t", "A", "-r", "3", "-s", "2",
                       "--w", "2")
    assert (code, out.strip()) == (0, "false")


def test_blocks(capsys):
    code, out, _ = run(capsys, "blocks", "-t", "B", "-r", "3", "-s", "2,3")
    assert code == 0
    assert "|W_lambda| = 8" in out and "cosets = 6" in out


def test_complex_dot(capsys):
    code, out, _ = run(capsys, "complex", "-t", "A", "-r", "3", "-s", "2",
                       "--w", "12", "--stage", "translated", "-f", "dot")
    assert code == 0
    assert out.startswith("digraph")
    assert out.rstrip().endswith("}")
    assert out.count("dir=none") == 3
    assert out.count("peripheries=2") == 6
    assert out.count("style=bold") == 9
    assert len(re.findall(r'(?m)^  "\w+" \[', out)) == 12
    # crude grammar check: every non-brace line is a node or an edge statement
    for line in out.strip().splitlines()[1:-1]:
        assert re.match(r'^  "\w+"( -> "\w+")?( \[[^\]]*\])?;$', line), line


def test_complex_json(capsys):
    code, out, _ = run(capsys, "complex", "-t", "B", "-r", "3", "-s", "2,3",
                       "--w", "3232", "-f", "json")
    assert code == 0
    data = json.loads(out)
    assert data["kind"] == "singular"
    assert data["vertices"] == [{"word": [2, 3, 2, 3], "degree": 0},
                                {"word": [1, 2, 3, 2, 3], "degree": 1}]
    assert len(data["edges"]) == 1
    assert data["edges"][0]["kind"] == "morphism"
    assert data["edges"][0]["sign"] is None


def test_complex_signs(capsys):
    code, out, _ = run(capsys, "complex", "-t", "A", "-r", "2", "--w", "e",
                       "--stage", "regular", "--signs", "-f", "json")
    assert code == 0
    data = json.loads(out)
    assert all(e["sign"] in (1, -1) for e in data["edges"])


def test_bad_input_exit_2(capsys):
    code, _, err = run(capsys, "nonkostant", "-t", "Q", "-r", "3")
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "klpoly", "-t", "A", "-r", "3",
                       "--y", "xyz", "--w", "12")
    assert code == 2
    code, _, err = run(capsys, "nonkostant", "-t", "A", "-r", "3",
                       "-s", "9")
    assert code == 2


def test_budget_exit_3(capsys):
    code, _, err = run(capsys, "nonkostant", "-t", "E", "-r", "6")
    assert code == 3
    assert "budget" in err.lower()


def test_cache_flag(tmp_path, capsys):
    cache = tmp_path / "a3.klv"
    code, out1, _ = run(capsys, "nonkostant", "-t", "A", "-r", "3",
                        "-s", "2", "--cache", str(cache))
    assert code == 0 and cache.exists()
    import singbgg.cli as cli
    cli._TABLE_CACHE.clear()
    code, out2, _ = run(capsys, "nonkostant", "-t", "A", "-r", "3",
                        "-s", "2", "--cache", str(cache))
    assert code == 0 and out1 == out2
