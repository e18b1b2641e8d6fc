import json

from debruijn_sft.cli import main

from corpus import cyclic_windows


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_words(capsys):
    code, out, _ = run(capsys, "words", "--alphabet", "01", "--forbid", "11", "--span", "3")
    assert code == 0
    assert out.splitlines() == ["000", "001", "010", "100"]
    code, out, _ = run(capsys, "words", "--alphabet", "01", "--forbid", "11",
                       "--span", "5", "--count-only")
    assert (code, out.strip()) == (0, "11")
    code, out, _ = run(capsys, "words", "--alphabet", "01", "--span", "2", "--json")
    assert json.loads(out) == ["00", "01", "10", "11"]


def test_graph_stats_and_exports(capsys, tmp_path):
    dot = tmp_path / "g.dot"
    js = tmp_path / "g.json"
    code, out, _ = run(capsys, "graph", "--alphabet", "01", "--forbid", "11",
                       "--span", "5", "--dot", str(dot), "--json", str(js))
    assert code == 0
    assert "vertices 13" in out
    assert "arcs 18" in out
    assert "max-vertex 10101" in out
    assert dot.read_text().count("->") == 18
    data = json.loads(js.read_text())
    assert len(data["vertices"]) == 13


def test_graph_highlight_t(capsys, tmp_path):
    dot = tmp_path / "t.dot"
    code, out, _ = run(capsys, "graph", "--alphabet", "01", "--forbid", "01111",
                       "--span", "4", "--dot", str(dot), "--highlight-t")
    assert code == 0
    # One reserved arc per non-root vertex: 14 styled arcs.
    assert dot.read_text().count("style=bold") == 14


def test_seq_covers_words(capsys):
    code, out, _ = run(capsys, "seq", "--alphabet", "01", "--forbid", "11", "--span", "5")
    assert code == 0
    label = out.strip()
    assert len(label) == 18
    from debruijn_sft import Language, enumerate_words

    lang = Language.from_text("01", ("11",))
    word = lang.alphabet.word(label)
    assert cyclic_windows(word, 6) == sorted(enumerate_words(lang, 6))


def test_seq_start_flag(capsys):
    code, out, _ = run(capsys, "seq", "--alphabet", "01", "--span", "3",
                       "--start", "000", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["start"] == "000"
    assert data["eulerian"] is True
    assert data["arcCount"] == 16


def test_minimal(capsys):
    code, out, _ = run(capsys, "minimal", "--alphabet", "01", "--span", "3")
    assert code == 0
    assert out.splitlines() == ["0000100110101111", "eulerian true"]


def test_check_golden5(capsys):
    code, out, _ = run(capsys, "check", "--alphabet", "01", "--forbid", "11", "--span", "5")
    assert code == 0
    lines = out.splitlines()
    assert "vertices 13" in lines
    assert "arcs 18" in lines
    assert "minimal-eulerian false" in lines
    assert "via-tree false" in lines
    assert "via-obstructions false" in lines


def test_check_blocked_instance_prints_witnesses(capsys):
    code, out, _ = run(capsys, "check", "--alphabet", "01", "--forbid", "01111", "--span", "4")
    assert code == 0
    assert "minimal-eulerian false" in out
    assert any(line.startswith("cycle ") for line in out.splitlines())
    assert any(line.startswith("obstruction ") for line in out.splitlines())


def test_check_json_round_trip(capsys):
    code, out, _ = run(capsys, "check", "--alphabet", "01", "--forbid", "11",
                       "--span", "5", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["decision"]["answer"] is False
    assert json.loads(json.dumps(data)) == data


def test_count(capsys):
    code, out, _ = run(capsys, "count", "--alphabet", "01", "--forbid", "11", "--span", "5")
    assert (code, out.strip()) == (0, "2")
    code, out, _ = run(capsys, "count", "--alphabet", "01", "--forbid", "11",
                       "--span", "5", "--json")
    data = json.loads(out)
    assert data == {"root": "10101", "spanningTrees": "2", "eulerianCycles": "2"}


def test_oracle_certify(capsys):
    code, out, _ = run(capsys, "oracle", "--alphabet", "01", "--forbid", "11", "--span", "5")
    assert code == 0
    assert "pass true" in out
    code, out, _ = run(capsys, "oracle", "--alphabet", "01", "--forbid", "01111",
                       "--span", "4", "--max-arcs", "26", "--json")
    assert code == 0
    assert json.loads(out)["pass"] is True


def test_oracle_global(capsys):
    code, out, _ = run(capsys, "oracle", "--alphabet", "01", "--forbid", "11",
                       "--span", "2", "--global")
    assert code == 0
    assert out.splitlines() == ["start 01", "label 0001"]


def test_verify_clean(capsys):
    code, out, _ = run(capsys, "verify", "--alphabet", "01", "--forbid", "11", "--span", "5")
    assert code == 0
    assert all(line.startswith("ok ") for line in out.splitlines())


def test_domain_error_exit_1(capsys):
    code, _, err = run(capsys, "graph", "--alphabet", "01", "--forbid", "01",
                       "--forbid", "10", "--span", "2")
    assert code == 1
    assert "error" in err


def test_oracle_too_large_exit_1(capsys):
    code, _, err = run(capsys, "oracle", "--alphabet", "01", "--span", "4")
    assert code == 1
    assert "exceeds" in err


def test_usage_error_exit_2(capsys):
    code, _, err = run(capsys, "words", "--span", "3")
    assert code == 2
    assert "alphabet" in err


def test_forbid_file(capsys, tmp_path):
    spec = tmp_path / "lang.txt"
    spec.write_text("01\n11\n")
    code, out, _ = run(capsys, "words", "--forbid-file", str(spec), "--span", "3")
    assert code == 0
    assert out.splitlines() == ["000", "001", "010", "100"]
    # Extra --forbid flags merge with the file.
    code, out, _ = run(capsys, "words", "--forbid-file", str(spec), "--forbid", "000",
                       "--span", "3", "--count-only")
    assert (code, out.strip()) == (0, "3")
    # A conflicting --alphabet is a usage error.
    code, _, _ = run(capsys, "words", "--forbid-file", str(spec), "--alphabet", "012",
                     "--span", "3")
    assert code == 2
    # So is a missing file.
    code, _, err = run(capsys, "words", "--forbid-file", str(tmp_path / "nope.txt"),
                       "--span", "3")
    assert code == 2


def test_byte_identical_reruns(capsys):
    outputs = []
    for _ in range(2):
        _, out, _ = run(capsys, "check", "--alphabet", "01", "--forbid", "01111", "--span", "4")
        outputs.append(out)
    assert outputs[0] == outputs[1]
    for _ in range(2):
        _, out, _ = run(capsys, "verify", "--alphabet", "012", "--forbid", "002", "--span", "3")
        outputs.append(out)
    assert outputs[2] == outputs[3]
