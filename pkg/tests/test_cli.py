import csv
import io
import json

import pytest

from atomkit.cli import main
from atomkit.formats import to_graph6, to_json
from atomkit.generate import named


@pytest.fixture
def run(capsys):
    def _run(*argv):
        code = main(list(argv))
        out = capsys.readouterr()
        return code, out.out, out.err
    return _run


def _write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_recognize_member(run, tmp_path):
    f = _write(tmp_path, "c.g6", to_graph6(named("coC6")) + "\n")
    code, out, _ = run("recognize", "--class", "hp", f)
    assert code == 0 and json.loads(out)["member"] is True


def test_recognize_negative(run, tmp_path):
    f = _write(tmp_path, "p.g6", to_graph6(named("paraglider")) + "\n")
    code, out, _ = run("recognize", "--class", "hp", f)
    doc = json.loads(out)
    assert code == 1 and doc["certificate"]["kind"] == "paraglider"


def test_malformed_input_exit_2(run, tmp_path):
    f = _write(tmp_path, "bad.g6", "D~~~~~~~\n")
    code, _, err = run("recognize", "--class", "hp", f)
    assert code == 2 and err


def test_usage_error_exit_2(run):
    with pytest.raises(SystemExit) as exc:
        main(["solve"])
    assert exc.value.code == 2


def test_solve_mwis(run, tmp_path):
    f = _write(tmp_path, "b.json", to_json(named("bowtie")))
    code, out, _ = run("solve", "--problem", "mwis", f)
    assert code == 0 and json.loads(out)["objective"] == 2


def test_bound_exceeded_exit_3(run, tmp_path):
    f = _write(tmp_path, "c.g6", to_graph6(named("C_9")) + "\n")
    code, out, _ = run("--bounds", "fill_exact=5", "solve", "--problem", "fillin", f)
    assert code == 3 and json.loads(out)["error"] == "bound-exceeded"


def test_bounds_from_env(run, tmp_path, monkeypatch):
    monkeypatch.setenv("ATOMKIT_BOUNDS", "fill_exact=5")
    f = _write(tmp_path, "c.g6", to_graph6(named("C_9")) + "\n")
    assert run("solve", "--problem", "fillin", f)[0] == 3
    monkeypatch.setenv("ATOMKIT_BOUNDS", "nonsense=1")
    assert run("solve", "--problem", "fillin", f)[0] == 2


def test_decompose_output(run, tmp_path):
    f = _write(tmp_path, "b.g6", to_graph6(named("bowtie")) + "\n")
    code, out, _ = run("decompose", f)
    doc = json.loads(out)
    assert code == 0 and doc["separators"] == [[2]] and len(doc["atoms"]) == 2


def test_generate_roundtrip(run, tmp_path):
    out_file = tmp_path / "g.g6"
    code, out, _ = run("generate", "--family", "hp-glued", "--param", "n=12", "--seed", "4",
                       "--count", "3", "--out", str(out_file))
    assert code == 0 and json.loads(out)["count"] == 3
    lines = out_file.read_text().split()
    assert len(lines) == 3
    code2, _, _ = run("generate", "--family", "hp-glued", "--param", "n=12", "--seed", "4",
                      "--count", "3", "--out", str(tmp_path / "h.g6"))
    assert (tmp_path / "h.g6").read_text() == out_file.read_text()
    code, out, _ = run("recognize", "--class", "hp", "--jobs", "2", str(out_file))
    assert code == 0 and len(json.loads(out)["results"]) == 3


def test_verify_suites(run):
    for suite in ("oracles", "props", "structure"):
        code, out, _ = run("verify", "--suite", suite, "--count", "5", "--seed", "1")
        doc = json.loads(out)
        assert code == 0 and doc["ok"] and doc["checked"] > 0


def test_bench_csv(run, tmp_path):
    code, out, _ = run("bench", "--sizes", "8,40", "--seed", "2")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and [int(r["n"]) for r in rows][0] >= 8
    small = rows[0]
    assert small["objective"] == small["objective_bruteforce"]
    assert rows[1]["t_bruteforce"] == "skipped"


def test_bench_empty_corpus(run, tmp_path):
    f = _write(tmp_path, "empty.g6", "")
    code, out, _ = run("bench", f)
    assert code == 0 and out.strip() == "n,m,atoms,max_atom,t_decompose,t_mwis,t_bruteforce,objective,objective_bruteforce"
