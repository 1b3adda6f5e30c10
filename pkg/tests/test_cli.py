import json

import pytest

from halohedra.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_build_halo2(tmp_path, capsys):
    code, out, _ = run(capsys, "build", "--object", "halo", "--n", "2", "--out", str(tmp_path))
    assert code == 0 and out.strip() == "5 5"
    data = json.loads((tmp_path / "halo2.poset.json").read_text())
    assert data["f_vector"] == [5, 5]


def test_build_k5_realized(tmp_path, capsys):
    code, out, _ = run(capsys, "build", "--object", "k", "--n", "5", "--realize", "--out", str(tmp_path))
    assert code == 0 and out.strip() == "14 21 9"
    header = (tmp_path / "k5.off").read_text().splitlines()
    assert header[0] == "OFF" and header[1].split()[:2] == ["14", "9"]
    assert (tmp_path / "k5.exact.json").exists()


def test_build_graph_file(tmp_path, capsys):
    g = tmp_path / "path1.json"
    g.write_text(json.dumps({"nodes": 1, "edges": []}))
    code, out, _ = run(capsys, "build", "--object", "graph-cube", "--graph", str(g), "--out", str(tmp_path))
    assert code == 0 and out.strip() == "2"


def test_build_is_byte_identical(tmp_path, capsys):
    a, b = tmp_path / "a", tmp_path / "b"
    for d in (a, b):
        run(capsys, "build", "--object", "halo", "--n", "3", "--realize", "--out", str(d))
    for name in ("halo3.poset.json", "halo3.exact.json", "halo3.off"):
        assert (a / name).read_bytes() == (b / name).read_bytes()


@pytest.mark.parametrize(
    "argv,verdict,extra",
    [
        (["0", "2", "0", "3,0"], "polytope", ("family", "Y_3")),
        (["1", "0", "1"], "not_polytope", ("reason", "PositiveGenus")),
        (["1", "0", "0"], "unstable", ("family", None)),
    ],
)
def test_classify(capsys, argv, verdict, extra):
    code, out, _ = run(capsys, "classify", *argv)
    data = json.loads(out)
    assert code == 0 and data["verdict"] == verdict and data[extra[0]] == extra[1]


@pytest.mark.parametrize("argv", [["0", "2", "0"], ["0", "1", "0", "x"], ["0", "1", "0", "1,2"]])
def test_classify_malformed(capsys, argv):
    code, _, err = run(capsys, "classify", *argv)
    assert code == 2 and "error" in err


def test_verify_catalan(capsys):
    code, out, _ = run(capsys, "verify", "catalan", "--bound", "6")
    assert code == 0 and "6/6 passed" in out and "132" in out


def test_verify_failure_exit_code(capsys, monkeypatch):
    from halohedra import cli
    from halohedra.suites import Check

    monkeypatch.setitem(cli.SUITES, "catalan", lambda bound: [Check("x", False, "boom")])
    code, _, err = run(capsys, "verify", "catalan")
    assert code == 1 and "boom" in err


def test_size_bound(tmp_path, capsys):
    code, _, err = run(capsys, "build", "--object", "k", "--n", "9", "--out", str(tmp_path))
    assert code == 2 and "bound" in err
    code, _, err = run(capsys, "build", "--object", "halo", "--n", "6", "--realize", "--max-nodes", "6",
                       "--out", str(tmp_path))
    assert code == 2


def test_missing_args(capsys):
    assert run(capsys, "build", "--object", "k")[0] == 2
    assert run(capsys, "build", "--object", "graph-assoc")[0] == 2
    assert run(capsys, "build", "--object", "graph-assoc", "--graph", "/nonexistent.json")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nosuch"])
    assert exc.value.code == 2


def test_export_stdout(capsys):
    code, out, _ = run(capsys, "export", "--object", "w", "--n", "3", "--format", "off")
    assert code == 0 and out.startswith("OFF\n6 6 6\n")
    code, out, _ = run(capsys, "export", "--object", "w", "--n", "3", "--format", "poset")
    assert json.loads(out)["f_vector"] == [6, 6]
