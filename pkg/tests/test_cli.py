import json

import pytest

from cubicalh.cli import main


@pytest.fixture(scope="module")
def corpus_dir(tmp_path_factory):
    out = tmp_path_factory.mktemp("corpus")
    assert main(["corpus", "emit-all", "--outdir", str(out), "--quiet"]) == 0
    return out


def run(args, capsys):
    code = main(args)
    report = json.loads(capsys.readouterr().out)
    return code, report


@pytest.mark.parametrize("name,kind,key,expected", [
    ("boundary-3-cube", "short", "h_short", [8, 8, 8]),
    ("segment-t2", "short", "h_short", [4, 2]),
    ("annulus-q", "general", "h_general", [6, 6]),
])
def test_hvec_examples(corpus_dir, capsys, name, kind, key, expected):
    code, report = run(["hvec", str(corpus_dir / f"{name}.json"), "--kind", kind], capsys)
    assert code == 0
    assert report["results"][key] == expected
    assert report["inputs"][0]["sha256"]


@pytest.mark.parametrize("name,kind,key,expected", [
    ("pushed-cube", "short", "local_h_short", [0, -4, -4, 0]),
    ("schlegel-2", "long", "local_h_long", [0, 4, 4, 0]),
    ("interval-simplex-3", "general", "local_h_general", [1, 1, 1]),
])
def test_localh_examples(corpus_dir, capsys, name, kind, key, expected):
    code, report = run(["localh", str(corpus_dir / f"{name}.json"), "--kind", kind], capsys)
    assert code == 0
    assert report["results"][key] == expected


def test_localh_flags(corpus_dir, capsys):
    code, report = run(["localh", str(corpus_dir / "remark-square.json"), "--both-paths", "--contributions",
                        "--predicates"], capsys)
    assert code == 0
    r = report["results"]
    assert r["paths_agree"] and r["lqg"] is False and r["qg"] is True
    assert len(r["contributions"]) > 0


def test_hvec_flags(corpus_dir, capsys):
    code, report = run(["hvec", str(corpus_dir / "square-path.json"), "--interior", "--links", "--euler"], capsys)
    assert code == 0
    r = report["results"]
    assert r["evaluation_identity"] and r["reduced_euler"] == 0
    assert len(r["links"]) == 6
    code, report = run(["hvec", str(corpus_dir / "boundary-triangle.json"), "--kind", "simplicial", "--interior"],
                       capsys)
    assert report["results"]["h_simplicial"] == [1, 1, 1]


def test_kind_mismatch_exits_2(corpus_dir, capsys):
    code, report = run(["hvec", str(corpus_dir / "annulus-q.json"), "--kind", "short"], capsys)
    assert code == 2 and report["failures"][0]["check"] == "input"
    code, _ = run(["localh", str(corpus_dir / "cube-2.json")], capsys)
    assert code == 2


def test_parse_error_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("[1, 2]")
    code, report = run(["validate", str(bad)], capsys)
    assert code == 2 and report["inputs"] == []


def test_invalid_input_refused_without_force(tmp_path, corpus_dir, capsys):
    data = json.loads((corpus_dir / "segment-t1.json").read_text())
    # the midpoint is pushed onto an end, so the restriction over that end is disconnected
    data["carrier"]["[1]"] = "0"
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(data))
    code, report = run(["localh", str(path)], capsys)
    assert code == 1 and "refused" in report["results"]
    code, report = run(["localh", str(path), "--force"], capsys)
    assert code == 1 and "local_h_short" in report["results"] and report["failures"]
    code, report = run(["validate", str(path)], capsys)
    assert code == 1 and report["results"]["valid"] is False


def test_validate_glued_squares(tmp_path, capsys):
    from cubicalh import serialize
    from cubicalh.corpus import glued_squares

    path = tmp_path / "glued.json"
    serialize.save(path, "complex", glued_squares())
    code, report = run(["validate", str(path)], capsys)
    assert code == 1 and {f["check"] for f in report["failures"]} == {"meet"}


def test_corpus_list_and_emit(tmp_path, capsys):
    code, report = run(["corpus", "list"], capsys)
    assert code == 0 and len(report["results"]["entries"]) >= 12
    code, report = run(["corpus", "emit", "pushed-cube", "--outdir", str(tmp_path)], capsys)
    assert code == 0
    assert sorted(p.name for p in tmp_path.iterdir()) == ["pushed-cube.expected.json", "pushed-cube.json"]
    code, _ = run(["corpus", "emit", "nope", "--outdir", str(tmp_path)], capsys)
    assert code == 2


def test_emitted_expected_values_match(corpus_dir, capsys):
    expected = json.loads((corpus_dir / "pushed-cube.expected.json").read_text())
    code, report = run(["localh", str(corpus_dir / "pushed-cube.json")], capsys)
    assert report["results"]["local_h_short"][:3] == expected["expected"]["local_h_short"]["coeffs"]


def test_verify_emitted_files(corpus_dir, capsys):
    files = [p for p in sorted(corpus_dir.glob("*.json")) if not p.name.endswith(".expected.json")]
    args = ["verify", "all", "--no-corpus", "--json", str(corpus_dir / "report.json")]
    for p in files:
        args += ["--file", str(p)]
    code, report = run(args, capsys)
    assert code == 0 and report["failures"] == []
    assert report["results"]["checks"] > 500


@pytest.mark.parametrize("suite", ["symmetry", "locality", "formal"])
def test_verify_corpus_suites(suite, capsys):
    code = main(["verify", suite])
    out = json.loads(capsys.readouterr().out)
    assert code == 0 and out["failures"] == [] and out["results"]["checks"] > 0


def test_reports_are_deterministic(corpus_dir, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    target = str(corpus_dir / "schlegel-3.json")
    main(["localh", target, "--contributions", "--json", str(a), "--quiet"])
    main(["localh", target, "--contributions", "--json", str(b), "--quiet"])
    assert a.read_bytes() == b.read_bytes()


def test_global_flags_before_command(tmp_path, corpus_dir, capsys):
    out = tmp_path / "r.json"
    code = main(["--quiet", "--json", str(out), "hvec", str(corpus_dir / "cube-3.json")])
    assert code == 0 and capsys.readouterr().out == ""
    assert json.loads(out.read_text())["results"]["h_short"] == [8, 0, 0, 0]
