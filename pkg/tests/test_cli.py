import io
import json

import pytest

from relchar.cli import EXIT_FAIL, EXIT_GUARD, EXIT_INPUT, EXIT_OK, main
from relchar.corpus import builtin_corpus, corpus_entry, resolve_builtin, tagged_normals
from relchar.report import render_report
from relchar.structure.series import derived_length
from relchar.verify.outcome import Status, SuiteReport, TheoremOutcome


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_corpus_entries():
    entries = builtin_corpus()
    keys = [e.key for e in entries]
    assert len(keys) == len(set(keys))
    for must in ["trivial", "c12", "d32", "q32", "s6", "a5", "sl23", "gl23", "heis27", "berger216", "agl1_13", "s3xs3", "q8xc3", "c3wrc2"]:
        assert must in keys
    gl = corpus_entry("gl23")
    G = gl.build()
    assert G.order == 48
    tags = tagged_normals(G)
    assert len(tags) == 3 and all(1 < N.order < 48 for N in tags.values())
    assert tagged_normals(corpus_entry("trivial").build()) == {}
    B = corpus_entry("berger216").build()
    N = tagged_normals(B)["n27"]
    assert N.order == 27 and derived_length(N) == 2


def test_resolve_builtin_forms():
    assert [e.key for e in resolve_builtin("gl23")] == ["gl23"]
    (e,) = resolve_builtin("dihedral:8")
    assert e.build().order == 16
    (e,) = resolve_builtin("elementary_abelian:3,2")
    assert e.order == 9
    assert len(resolve_builtin("all")) == len(builtin_corpus())


def test_reldeg_cli_gl23():
    code, out = run("reldeg", "--builtin", "gl23", "--normal", "sl23")
    assert code == EXIT_OK
    assert out.strip() == "gl23 / sl23 (order 24): cd = {2, 3, 4}"
    code, out = run("reldeg", "--builtin", "gl23", "--normal", "sl23", "--structured")
    doc = json.loads(out)
    assert doc["normals"][0]["cd"] == [2, 3, 4]
    code, out = run("reldeg", "--builtin", "s4")
    assert code == EXIT_OK and len(out.strip().splitlines()) == 4


def test_table_and_normals_cli(tmp_path):
    code, out = run("table", "--builtin", "s3")
    assert code == EXIT_OK and "X.3" in out
    code, out = run("table", "--builtin", "q8", "--structured")
    doc = json.loads(out)
    assert len(doc["rows"]) == 5 and doc["order"] == 8
    path = tmp_path / "s3.json"
    path.write_text(json.dumps({"name": "S3", "degree": 3, "generators": [[2, 3, 1], [2, 1, 3]]}))
    code, out = run("normals", str(path))
    assert code == EXIT_OK and out.count("order") == 4


def test_file_tags(tmp_path):
    doc = {
        "degree": 3,
        "generators": [[2, 3, 1], [2, 1, 3]],
        "normal_subgroups": [{"name": "a3", "generators": [[2, 3, 1]]}, {"name": "again", "generators": ["g1*g1"]}],
    }
    path = tmp_path / "sym3.json"
    path.write_text(json.dumps(doc))
    code, out = run("reldeg", str(path), "--normal", "a3")
    assert code == EXIT_OK and out == "sym3 / a3 (order 3): cd = {2}\n"
    doc["normal_subgroups"] = [{"name": "t", "generators": [[2, 1, 3]]}]
    path.write_text(json.dumps(doc))
    assert run("normals", str(path))[0] == EXIT_INPUT


def test_verify_cli_and_exit_codes(tmp_path):
    code, out = run("verify", "--builtin", "gl23", "--theorems", "T6.1,TC")
    assert code == EXIT_OK
    assert out.splitlines()[0].split() == ["theorem", "pass", "fail", "inapplicable", "skipped"]
    code, out = run("verify", "--builtin", "gl23", "--theorems", "T6.1", "--structured", "--timing")
    doc = json.loads(out)
    assert doc["aggregate"]["pass"] == 1 and "millis" in doc["outcomes"][0]
    assert run("verify", "--builtin", "gl23", "--theorems", "Z1")[0] == EXIT_INPUT
    assert run("table", "--builtin", "nonesuch")[0] == EXIT_INPUT
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"degree": 4, "generators": [[2, 1, 3, 3]]}))
    assert run("table", str(bad))[0] == EXIT_INPUT
    assert run("table", str(tmp_path / "missing.json"))[0] == EXIT_INPUT
    assert run("table", "--builtin", "s5", "--table-guard", "50")[0] == EXIT_GUARD
    assert run("bogus")[0] == EXIT_INPUT


def test_verify_max_order_filters():
    code, out = run("verify", "--builtin", "all", "--theorems", "TB", "--max-order", "6", "--structured")
    doc = json.loads(out)
    assert {o["group"] for o in doc["outcomes"]} == {"trivial", "c2", "c3", "c4", "c5", "c6", "d4", "d6", "s3", "elab_4"}
    assert "s6" in doc["environment"]["excluded"]


def test_hunt_and_corpus_cli():
    code, out = run("corpus")
    assert code == EXIT_OK and "berger216" in out and "tags: n27" in out
    code, out = run("hunt", "--builtin", "gl23", "--structured")
    assert code == EXIT_OK
    recs = json.loads(out)["records"]
    (r,) = [r for r in recs if r["normal"]["name"] == "sl23"]
    assert (r["n"], r["dl"], r["h"]) == (3, 3, 2)


def test_render_report_examples():
    assert render_report(SuiteReport([])).splitlines() == [
        "theorem  pass  fail  inapplicable  skipped",
        "-------  ----  ----  ------------  -------",
    ]
    one = SuiteReport([TheoremOutcome("TB", "c2", {"name": "n1", "order": 2}, Status.PASS, {"n": 1})])
    lines = render_report(one).splitlines()
    assert len(lines) == 4 and lines[2].split() == ["TB", "1", "0", "0", "0"]
    doc = json.loads(render_report(one, "structured"))
    assert doc["aggregate"] == {"pass": 1, "fail": 0, "inapplicable": 0, "skipped": 0}
    with pytest.raises(ValueError):
        render_report(one, "xml")
