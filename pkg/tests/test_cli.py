import io as stdio
import json
import subprocess
import sys
from pathlib import Path

import pytest

from bergeturan import BergeWitness, build_complete, build_turan_partite, io, turan_count, verify_witness
from bergeturan.cli import EXIT_BUDGET, EXIT_FALSE, EXIT_OK, EXIT_USAGE, run

GOLDEN = Path(__file__).parent / "golden"


def call(*argv: str) -> tuple[int, str]:
    out = stdio.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


@pytest.fixture
def files(tmp_path):
    """Input files shared by the golden cases, keyed by the names used there."""
    t13 = build_turan_partite(13, 12, 3)[0]
    k5 = build_complete(5, 3)
    paths = {
        "t3_13_12.txt": io.dumps_text(t13),
        "k5.txt": io.dumps_text(k5),
        "k5_minus.json": io.dumps_json(io.to_json(k5.without_edge((0, 1, 2)))),
        "family_sdr.json": '{"sets": [["a", "b"], ["a"], ["b", "c"]]}',
        "family_hall.json": '{"sets": [[0], [0], [1, 2]]}',
    }
    for name, text in paths.items():
        (tmp_path / name).write_text(text)
    return tmp_path


# (case name, argv, expected exit code); file arguments are resolved against the fixture
CASES = [
    ("count", ["count", "--N", "13", "--k", "12", "--r", "3"], EXIT_OK),
    ("gen_complete", ["gen", "complete", "--N", "4", "--r", "3"], EXIT_OK),
    ("gen_turan", ["gen", "turan", "--N", "6", "--k", "3"], EXIT_OK),
    ("gen_expansion", ["gen", "expansion", "--n", "3"], EXIT_OK),
    ("check_free_turan", ["check-free", "--file", "t3_13_12.txt", "--clique-n", "13"], EXIT_OK),
    ("check_free_k5", ["check-free", "--file", "k5.txt", "--clique-n", "5"], EXIT_FALSE),
    ("sdr_found", ["sdr", "--file", "family_sdr.json"], EXIT_OK),
    ("sdr_violator", ["sdr", "--file", "family_hall.json"], EXIT_FALSE),
    ("saturate", ["saturate", "--file", "k5_minus.json", "--clique-n", "5"], EXIT_OK),
    ("saturate_k5", ["saturate", "--file", "k5.txt", "--clique-n", "4"], EXIT_OK),
    ("recognize_turan", ["recognize", "--file", "t3_13_12.txt"], EXIT_OK),
    ("recognize_no", ["recognize", "--file", "k5_minus.json"], EXIT_FALSE),
    ("search", ["search", "--N", "5", "--clique-n", "5", "--samples", "1"], EXIT_OK),
    ("search_budget", ["search", "--N", "6", "--clique-n", "4", "--budget-nodes", "50"], EXIT_BUDGET),
    ("verify", ["verify", "--clique-n", "13", "--max-N", "14"], EXIT_OK),
    ("verify_lemma_link", ["verify-lemma", "--m", "5", "--shape", "link"], EXIT_OK),
]


def resolve(argv, root):
    return [str(root / a) if (root / a).exists() and a.endswith((".txt", ".json")) else a for a in argv]


@pytest.mark.parametrize("fmt", ["text", "json"])
@pytest.mark.parametrize("name,argv,code", CASES, ids=[c[0] for c in CASES])
def test_golden(files, name, argv, code, fmt):
    got_code, got = call(*resolve(argv, files), "--format", fmt)
    assert got_code == code
    suffix = "json" if fmt == "json" else "txt"
    assert got == (GOLDEN / f"{name}.{suffix}").read_text()


def text_values(name: str, text: str) -> object:
    """Parse a text-mode output back into the values its JSON twin carries."""
    lines = text.splitlines()
    if name == "count":
        return int(lines[0])
    if name.startswith("gen"):
        return io.to_json(io.loads_text(text))
    if name.startswith("check_free"):
        if lines[0] == "free":
            return {"free": True, "witness": None}
        core = [int(x) for x in lines[1].split()[1:]]
        assignment = []
        for line in lines[2:]:
            words = line.split()
            assignment.append({"pair": [int(words[1]), int(words[2])], "edge": [int(x) for x in words[4:]]})
        return {"free": False, "witness": {"core": core, "assignment": assignment}}
    if name.startswith("sdr"):
        head, *rest = lines[0].split()
        if head == "sdr":
            return {"sdr": [json.loads(x) if x.isdigit() else x for x in rest]}
        return {"violator": {"indices": [int(x) for x in rest], "union_size": int(lines[1].split()[1])}}
    if name.startswith("saturate"):
        return {
            "saturated": lines[0] == "saturated",
            "non_edges": int(lines[1].split()[1]),
            "creating": int(lines[2].split()[1]),
            "non_creating": [[int(x) for x in line.split()] for line in lines[4:]],
        }
    if name.startswith("recognize"):
        if lines[0] != "parts":
            return {"parts": None}
        return {"parts": [[int(x) for x in line.split()] for line in lines[1:]]}
    raise KeyError(name)


def json_values(name: str, text: str) -> object:
    data = json.loads(text)
    if name == "count":
        return data["count"]
    if name.startswith("saturate"):
        return data | {"creating": len(data["creating"])}
    return data


@pytest.mark.parametrize(
    "name,argv,code",
    [c for c in CASES if not c[0].startswith(("search", "verify"))],
    ids=[c[0] for c in CASES if not c[0].startswith(("search", "verify"))],
)
def test_text_and_json_agree(files, name, argv, code):
    argv = resolve(argv, files)
    _, text = call(*argv, "--format", "text")
    _, js = call(*argv, "--format", "json")
    assert text_values(name, text) == json_values(name, js)


def test_search_text_and_json_agree():
    _, text = call("search", "--N", "5", "--clique-n", "4", "--samples", "2")
    _, js = call("search", "--N", "5", "--clique-n", "4", "--samples", "2", "--format", "json")
    data = json.loads(js)
    fields = dict(line.split(" ", 1) for line in text.splitlines() if not line[0].isdigit() and " " in line)
    for key in ("max_edges", "extremal_count", "nodes"):
        assert int(fields[key]) == data[key]


def test_verify_streams_one_json_line_per_instance():
    _, out = call("verify", "--clique-n", "13", "--max-N", "15", "--format", "json")
    rows = [json.loads(line) for line in out.splitlines()]
    assert [r["N"] for r in rows[:-1]] == [13, 14, 15]
    for r in rows[:-1]:
        assert set(r) == {"n", "N", "edges", "free", "saturated", "partite"}
        assert r["edges"] == turan_count(r["N"], 12, 3) and r["free"] and r["saturated"] and r["partite"]
    assert rows[-1]["aggregate"] and rows[-1]["pass"] and rows[-1]["N"] == [13, 14, 15]


def test_verify_resume():
    _, out = call("verify", "--clique-n", "13", "--max-N", "15", "--min-N", "15", "--format", "json")
    assert [json.loads(line)["N"] for line in out.splitlines()[:-1]] == [15]


def test_gen_round_trips_to_check_free(tmp_path):
    _, text = call("gen", "turan", "--N", "14", "--n", "13", "--parts-out", str(tmp_path / "p.json"))
    (tmp_path / "t.txt").write_text(text)
    assert call("check-free", "--file", str(tmp_path / "t.txt"), "--clique-n", "13") == (EXIT_OK, "free\n")
    assert json.loads((tmp_path / "p.json").read_text())["parts"][0] == [0, 1]


def test_check_free_witness_is_real(files):
    _, out = call("check-free", "--file", str(files / "k5.txt"), "--clique-n", "5", "--format", "json")
    witness = BergeWitness.from_json(json.loads(out)["witness"])
    assert verify_witness(build_complete(5, 3), witness)


@pytest.mark.parametrize(
    "argv",
    [
        ["frobnicate"],
        ["count", "--N", "13"],
        ["count", "--N", "13", "--k", "12", "--bogus"],
        ["count", "--N", "13", "--k", "0"],
        ["gen", "turan", "--N", "5"],
        ["check-free", "--file", "/nonexistent/h.txt", "--clique-n", "3"],
        ["verify", "--clique-n", "12"],
        ["verify", "--clique-n", "13", "--max-N", "25"],
        ["verify-lemma", "--m", "4"],
        ["search", "--N", "4", "--clique-n", "5"],
        ["--format", "yaml", "count"],
    ],
)
def test_usage_errors_exit_2(argv):
    assert call(*argv)[0] == EXIT_USAGE


def test_usage_text_on_unknown_flag(capsys):
    assert run(["count", "--N", "3", "--k", "2", "--nope"]) == EXIT_USAGE
    assert "usage:" in capsys.readouterr().err


def test_malformed_file(tmp_path):
    (tmp_path / "bad.txt").write_text("4 3 2\n0 1 2\n")
    assert call("check-free", "--file", str(tmp_path / "bad.txt"), "--clique-n", "3")[0] == EXIT_USAGE


def test_time_budget(capsys):
    code, out = call("search", "--N", "6", "--clique-n", "4", "--budget-secs", "0", "--format", "json")
    assert code == EXIT_BUDGET and json.loads(out)["kind"] == "seconds"


def test_jobs_env_fallback(files, monkeypatch):
    path = str(files / "t3_13_12.txt")
    serial = call("saturate", "--file", path, "--clique-n", "13", "--format", "json")
    monkeypatch.setenv("BERGE_JOBS", "2")
    assert call("saturate", "--file", path, "--clique-n", "13", "--format", "json") == serial
    assert call("saturate", "--file", path, "--clique-n", "13", "--jobs", "1", "--format", "json") == serial


def test_bad_jobs_env(files, monkeypatch):
    monkeypatch.setenv("BERGE_JOBS", "many")
    assert call("saturate", "--file", str(files / "k5.txt"), "--clique-n", "4")[0] == EXIT_USAGE


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "bergeturan", "count", "--N", "13", "--k", "12", "--r", "3"],
        capture_output=True,
        text=True,
    )
    assert (proc.returncode, proc.stdout) == (0, "275\n")


def test_verify_lemma_text_and_json_agree():
    _, text = call("verify-lemma", "--shape", "link")
    data = json.loads(call("verify-lemma", "--shape", "link", "--format", "json")[1])
    fields = dict(line.split(" ", 1) for line in text.splitlines())
    assert fields == {k: str(v).lower() for k, v in data.items() if k != "counterexamples"}


def test_verify_text_and_json_agree():
    text = call("verify", "--max-N", "14")[1].splitlines()
    rows = [json.loads(line) for line in call("verify", "--max-N", "14", "--format", "json")[1].splitlines()]
    for line, row in zip(text, rows[:-1]):
        assert dict(w.split("=") for w in line.split()) == {k: str(v).lower() for k, v in row.items()}
    assert text[-2] == f"PASS {rows[-1]['instances']} instances"
