from __future__ import annotations

import json

from stronggenus.cli import run
from stronggenus.embedding import format_embedding, parse_embedding
from stronggenus.families import cycle_graph, hex_cylinder
from stronggenus.graph import parse_graph
from stronggenus.planarity import parse_certificate, planar_embedding


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_gen_roundtrip(tmp_path, capsys):
    code, out = call(capsys, "gen", "--family", "hex", "--rings", "2", "--out", str(tmp_path))
    assert code == 0
    files = json.loads(out)["files"]
    inst = hex_cylinder(2)
    assert parse_graph(open(files["graph"]).read()) == inst.graph
    assert parse_embedding(open(files["planar"]).read()) == inst.reference_planar
    assert parse_embedding(open(files["toroidal"]).read()) == inst.reference_toroidal
    assert parse_certificate(open(files["certificate"]).read()) == inst.reference_rings


def test_fdist_and_cert(tmp_path, capsys):
    call(capsys, "gen", "--family", "hex", "--rings", "2", "--out", str(tmp_path))
    planar = str(tmp_path / "hex2_planar.emb")
    code, out = call(capsys, "fdist", planar, "1", "12", "--format", "text")
    assert code == 0 and out.strip() == "3"
    code, out = call(capsys, "prop1-cert", planar, "1", "12", "--out", str(tmp_path))
    rep = json.loads(out)
    assert rep["r"] == 2 and rep["verified"]


def test_genus_of_triangle(tmp_path, capsys):
    path = tmp_path / "c3.emb"
    path.write_text(format_embedding(planar_embedding(cycle_graph(3))))
    code, out = call(capsys, "genus", str(path))
    assert code == 0
    assert json.loads(out) == {"orientable": True, "genus": 0, "euler_characteristic": 2}
    code, out = call(capsys, "faces", str(path))
    assert json.loads(out)["count"] == 2
    code, out = call(capsys, "strong-check", str(path))
    assert json.loads(out)["strong"]
    code, out = call(capsys, "polyhedral-check", str(path))
    assert json.loads(out)["polyhedral"]


def test_sg_search(tmp_path, capsys):
    call(capsys, "gen", "--family", "k33", "--out", str(tmp_path))
    code, out = call(capsys, "sg-search", str(tmp_path / "k33.graph"), "--out", str(tmp_path), "--threads", "2")
    rep = json.loads(out)
    assert code == 0
    assert {"quantity", "value", "exhaustive", "nodes", "witness_file"} <= rep.keys()
    assert rep["value"] == 1 and rep["exhaustive"]
    assert parse_embedding(open(rep["witness_file"]).read()).graph.n == 6
    code, out = call(capsys, "min-genus", str(tmp_path / "k33.graph"), "--cap", "0")
    assert json.loads(out)["value"] == "AboveCap"


def test_bounds(capsys):
    code, out = call(capsys, "bounds", "--girth", "12", "--n", "126", "--m", "189")
    rep = json.loads(out)
    assert (rep["orientable_lb"], rep["nonorientable_lb"], rep["moore_order"]) == (17, 34, 126)


def test_verify_hex5(capsys):
    code, out = call(capsys, "verify", "--family", "hex", "--rings", "5", "--cap", "1")
    rep = json.loads(out)
    assert code == 0
    assert (rep["gamma"], rep["q"], rep["sg_lower"], rep["counterexample"]) == (1, 6, 2, True)
    assert rep["sg_lower_method"] == "search-bnb" and rep["thm1_bound"] == 2
    assert all(rep["checks"].values())


def test_verify_is_reproducible(capsys):
    reps = []
    for _ in range(2):
        _, out = call(capsys, "verify", "--rings", "3", "--cap", "1", "--seed", "5")
        rep = json.loads(out)
        rep.pop("timings")
        rep["search"].pop("elapsed", None)
        reps.append(rep)
    assert reps[0] == reps[1]


def test_verify_falls_back_to_thm1_on_timeout(capsys, monkeypatch):
    import stronggenus.cli as cli
    from stronggenus.search import SearchResult

    monkeypatch.setattr(cli, "strong_genus", lambda g, cap, **kw: SearchResult("strong_genus", None, None, 0, False, cap))
    _, out = call(capsys, "verify", "--rings", "5", "--cap", "1")
    rep = json.loads(out)
    assert rep["sg_lower_method"] == "thm1-bound" and rep["sg_lower"] == 2


def test_usage_errors(tmp_path, capsys):
    assert run(["nonsense"]) == 2
    assert run(["verify"]) == 2
    bad = tmp_path / "bad.graph"
    bad.write_text("p 2 1\ne 1 1\n")
    assert run(["sg-search", str(bad)]) == 2
    assert run(["genus", str(tmp_path / "missing.emb")]) == 2
    capsys.readouterr()


def test_verify_exit_code_when_not_certified(capsys, monkeypatch):
    import stronggenus.cli as cli
    from stronggenus.search import SearchResult

    monkeypatch.setattr(cli, "strong_genus", lambda g, cap, **kw: SearchResult("strong_genus", 1, None, 0, True, cap))
    code, _ = call(capsys, "verify", "--rings", "5", "--cap", "1")
    assert code == 1
