import io
import json

import pytest

from worpitzky.cli import main
from worpitzky.config import PERM_ENV_VAR
from worpitzky.graph import parse_edge_list, path_graph, star_graph, to_graph6

EDGES_PATH = "4\n1 2\n2 3\n"
G6_PATH = to_graph6(parse_edge_list(EDGES_PATH))
EDGES_PRIME = "4\n1 4\n3 4\n"


@pytest.fixture
def edgefile(tmp_path):
    def make(text):
        p = tmp_path / "g.txt"
        p.write_text(text)
        return str(p)

    return make


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_poly_f_text(capsys, edgefile):
    code, out, _ = run(capsys, "poly", "F", "--edgelist", edgefile(EDGES_PATH))
    assert code == 0 and out.strip() == "4t^3 + 2t^2"


def test_poly_w_json(capsys):
    code, out, _ = run(capsys, "poly", "W", "--graph6", G6_PATH, "--json")
    assert code == 0 and json.loads(out) == ["0", "0", "4", "16", "4"]


def test_poly_chromatic_and_y(capsys):
    code, out, _ = run(capsys, "poly", "chromatic", "--graph6", to_graph6(star_graph(3)))
    assert out.strip() == "t^4 - 3t^3 + 3t^2 - t"
    code, out, _ = run(capsys, "poly", "Y", "--graph6", to_graph6(star_graph(3)), "--json")
    assert json.loads(out) == ["0", "0", "1", "4", "1"]


def test_poly_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(EDGES_PATH))
    code, out, _ = run(capsys, "poly", "F", "--edgelist", "-")
    assert code == 0 and out.strip() == "4t^3 + 2t^2"


def test_compat_all(capsys, edgefile):
    code, out, _ = run(capsys, "compat", "all", "--edgelist", edgefile(EDGES_PATH))
    assert code == 0 and "compatible" in out
    code, out, _ = run(capsys, "compat", "all", "--edgelist", edgefile(EDGES_PRIME), "--json")
    data = json.loads(out)
    assert code == 1 and data["compatible"] is False
    assert data["methods"] == {"triples": False, "chains": False, "geometric": False}
    assert any("1 < 2 < 4" in d for d in data["details"])


@pytest.mark.parametrize("method", ["triples", "chains", "geometric"])
def test_compat_single_method(capsys, method, edgefile):
    assert run(capsys, "compat", method, "--edgelist", edgefile(EDGES_PATH))[0] == 0
    assert run(capsys, "compat", method, "--edgelist", edgefile(EDGES_PRIME))[0] == 1


def test_compat_geometric_bound(capsys):
    code, _, err = run(capsys, "compat", "geometric", "--graph6", to_graph6(path_graph(6)))
    assert code == 2 and "geometric" in err


def test_recognize(capsys):
    claw = to_graph6(star_graph(3))
    assert run(capsys, "recognize", "interval", "--graph6", claw)[0] == 0
    assert run(capsys, "recognize", "unit-interval", "--graph6", claw)[0] == 1
    assert run(capsys, "recognize", "cocomparability", "--graph6", "Dhc")[0] == 1  # C5
    code, out, _ = run(capsys, "recognize", "chordal", "--graph6", G6_PATH, "--json")
    data = json.loads(out)
    assert code == 0 and data["member"] and data["witness"].startswith("perfect elimination")
    code, out, _ = run(capsys, "recognize", "comparability", "--graph6", G6_PATH)
    assert code == 0 and "->" in out


def test_usage_errors(capsys, tmp_path):
    assert run(capsys, "poly", "W", "--graph6", "?!")[0] == 2
    assert run(capsys, "poly", "W", "--edgelist", str(tmp_path / "missing"))[0] == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("3\n1 4\n")
    assert run(capsys, "poly", "W", "--edgelist", str(bad))[0] == 2
    assert run(capsys, "verify", "--max-vertices", "7")[0] == 2
    assert run(capsys, "verify", "--geometric-max", "6")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["poly", "Z", "--graph6", G6_PATH])
    assert exc.value.code == 2


def test_perm_bound_env(capsys, monkeypatch):
    monkeypatch.setenv(PERM_ENV_VAR, "3")
    code, _, err = run(capsys, "poly", "W", "--graph6", G6_PATH)
    assert code == 2 and err.startswith("worpitzky: error")
    # chromatic does not enumerate permutations
    assert run(capsys, "poly", "chromatic", "--graph6", G6_PATH)[0] == 0


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--max-vertices", "4", "--geometric-max", "4", "--samples", "200")
    assert code == 0 and "FAILED" not in out
    assert "six-way-equivalence" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--max-vertices", "3", "--geometric-max", "3", "--samples", "50", "--json")
    data = json.loads(out)
    assert code == 0 and all(not r["failed"] for r in data)
    counts = {r["suite"]: r["checked"] for r in data}
    assert counts["graph6-roundtrip"] == 1 + 2 + 8


def test_alcoves_dump(capsys):
    code, out, _ = run(capsys, "alcoves", "3")
    data = json.loads(out)
    assert code == 0 and len(data) == 2
    assert run(capsys, "alcoves", "9")[0] == 2
