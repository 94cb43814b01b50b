import json
import subprocess
import sys

import pytest

from polyiamonds.cli import main
from polyiamonds.io_render import from_json, to_json
from polyiamonds.polyiamond import holes, strip
from polyiamonds.spiral import spir


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def table(text):
    lines = text.strip().splitlines()
    header = lines[0].split("\t")
    return [dict(zip(header, line.split("\t"))) for line in lines[1:]]


def test_gbound(capsys):
    code, out, _ = run(capsys, "gbound", "3")
    assert code == 0
    assert table(out) == [{"h": "3", "g_lower_bound": "19"}]


def test_pmin(capsys):
    code, out, err = run(capsys, "pmin", "10")
    rows = table(out)
    assert code == 0 and len(rows) == 10
    assert rows[5] == {"n": "6", "p_min": "6", "increment": "-1"}
    assert "true" in err


def test_bound(capsys):
    code, out, _ = run(capsys, "bound", "--tiles", "18", "--holes", "3")
    assert code == 0
    assert table(out)[0]["M"] == "7/3"
    assert table(out)[0]["feasible"] == "false"


def test_spiral_certify(capsys):
    code, out, _ = run(capsys, "spiral", "2", "--certify")
    assert code == 0
    assert table(out)[0]["passes"] == "true"


def test_spiral_outputs(capsys, tmp_path):
    f = tmp_path / "s3.json"
    code, out, _ = run(capsys, "spiral", "3", "--out", str(f))
    assert code == 0 and from_json(f.read_text()) == spir(3)
    svg = tmp_path / "s2.svg"
    run(capsys, "spiral", "2", "--out", str(svg))
    assert svg.read_text().count("<polygon") == 19
    code, out, _ = run(capsys, "spiral", "2", "--format", "text")
    assert out.count("o") == 3
    code, out, _ = run(capsys, "spiral", "2", "--format", "json", "--certify")
    doc = json.loads(out)
    assert doc["rows"][0]["passes"] is True
    assert len(doc["document"]["cells"]) == 19


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "4", "--free")
    assert code == 0
    assert table(out)[0]["free"] == "3"
    code, out, _ = run(capsys, "enumerate", "10", "--from", "8", "--holes", "--format", "json")
    rows = json.loads(out)["rows"]
    assert [r["n"] for r in rows] == [8, 9, 10]
    assert rows[1]["hole_histogram"] == [1832, 6]


def test_enumerate_jobs_independent(capsys):
    _, a, _ = run(capsys, "enumerate", "9", "--free", "--jobs", "1")
    _, b, _ = run(capsys, "enumerate", "9", "--free", "--jobs", "4")
    assert a == b


def test_search_g(capsys, tmp_path):
    f = tmp_path / "w.json"
    code, out, _ = run(capsys, "search-g", "1", "--out", str(f))
    assert code == 0
    row = table(out)[0]
    assert row["n"] == "9" and row["exact"] == "true"
    assert holes(from_json(f.read_text())).count == 1


def test_search_g_cap(capsys, tmp_path):
    code, _, err = run(capsys, "search-g", "3", "--cap", "18", "--out", str(tmp_path / "x"))
    assert code == 1 and "19" in err


def test_validate(capsys, tmp_path):
    good = tmp_path / "good.json"
    good.write_text(to_json(spir(2), name="Spir_2"))
    code, out, _ = run(capsys, "validate", str(good))
    row = table(out)[0]
    assert code == 0
    assert (row["n"], row["holes"], row["dual_tree"], row["hole_areas"]) == ("19", "3", "true", "1,1,1")
    bad = tmp_path / "bad.json"
    bad.write_text('{"cells":[[0,0],[0,2]]}')
    code, _, err = run(capsys, "validate", str(bad))
    assert code == 1 and "invalid" in err


def test_usage_errors(capsys):
    assert run(capsys, "nope")[0] == 2
    assert run(capsys)[0] == 2
    assert run(capsys, "spiral", "1")[0] == 2
    assert run(capsys, "enumerate", "20")[0] == 2
    assert run(capsys, "pmin", "0")[0] == 2
    assert run(capsys, "bound", "--tiles", "3")[0] == 2
    assert run(capsys, "--help")[0] == 0


def test_json_everywhere(capsys):
    for argv in (["pmin", "3"], ["bound", "--tiles", "5", "--holes", "0"], ["gbound", "1"],
                 ["enumerate", "3"]):
        code, out, _ = run(capsys, *argv, "--format", "json")
        assert code == 0 and json.loads(out)["rows"]


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "polyiamonds", "gbound", "9"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.splitlines()[1] == "9\t43"
