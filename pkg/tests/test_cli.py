import json
import subprocess
import sys

import pytest

from brokenset.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out) if out else None


def test_compute_pairs_text(capsys, fixtures_dir):
    code, out, _ = run(capsys, "compute", str(fixtures_dir / "paper_hypergraph.json"))
    assert code == 0
    assert "result: x^6 - 4x^4 + 3x^3 + x^2 - x" in out
    assert "coefficients: [0, -1, 1, 3, -4, 0, 1]" in out
    assert "terms: 10/16" in out


def test_compute_full_json(capsys):
    code, doc = run_json(capsys, "compute", "--builtin", "paper-h", "--method", "full")
    assert code == 0
    assert doc["result"] == "x^6 - 4x^4 + 3x^3 + x^2 - x"
    assert (doc["terms_evaluated"], doc["terms_total"]) == (16, 16)


def test_compute_edgeless(capsys):
    code, out, _ = run(capsys, "compute", "--builtin", "empty:3", "--method", "full")
    assert code == 0 and "result: x^3" in out and "terms: 1/1" in out


def test_compute_threads(capsys):
    code, doc = run_json(capsys, "compute", "--builtin", "cycle:6", "--threads", "3")
    assert code == 0
    # chromatic polynomial of C6: (x-1)^6 + (x-1)
    assert doc["coefficients"] == [0, -5, 15, -20, 15, -6, 1]
    _, single = run_json(capsys, "compute", "--builtin", "cycle:6", "--method", "full")
    assert single["coefficients"] == doc["coefficients"]


def test_discover(capsys):
    code, doc = run_json(capsys, "discover", "--builtin", "paper-h", "--members")
    assert code == 0
    assert [(p["B"], p["Bstar"], p["excluded"]) for p in doc["pairs"]] == [
        (["123", "345"], ["234"], 4), (["234", "126"], ["123"], 2)]
    assert doc["pairs"][1]["members"] == [["234", "126"], ["123", "234", "126"]]
    assert doc["excluded_total"] == 6


def test_discover_none(capsys):
    code, out, _ = run(capsys, "discover", "--builtin", "path:2", "-p", "independence")
    assert code == 0 and "no pairs found" in out


def test_discover_p4_domination(capsys):
    code, doc = run_json(capsys, "discover", "--builtin", "paper-p4", "-p", "domination")
    found = {(tuple(p["B"]), tuple(p["Bstar"])) for p in doc["pairs"]}
    assert {(("v1", "v3"), ("v2",)), (("v1", "v4"), ("v2",)), (("v2", "v4"), ("v3",)),
            (("v2",), ("v1",)), (("v3",), ("v4",))} <= found


def test_compare_h(capsys):
    code, doc = run_json(capsys, "compare", "--builtin", "paper-h",
                         "--order", "123,345,234,126")
    assert code == 0 and doc["agree"]
    assert [r["terms_evaluated"] for r in doc["rows"]] == [16, 12, 10]


def test_compare_p4_with_paper_pairs(capsys, fixtures_dir):
    f = str(fixtures_dir / "paper_p4.json")
    code, doc = run_json(capsys, "compare", f, "-p", "domination", "--pairs-from-file", f)
    assert code == 0
    assert [16 - r["terms_evaluated"] for r in doc["rows"]] == [0, 6, 8]


def test_compare_classic_sources(capsys):
    code, doc = run_json(capsys, "compare", "--builtin", "paper-h", "--ordered-source", "classic")
    assert code == 0
    assert [r["terms_evaluated"] for r in doc["rows"]] == [16, 16, 10]
    code, _, err = run(capsys, "compare", "--builtin", "paper-path", "-p", "independence",
                       "--ordered-source", "classic")
    assert code == 1 and "independence" in err


def test_compare_no_pairs(capsys):
    code, doc = run_json(capsys, "compare", "--builtin", "path:4")
    assert [r["terms_evaluated"] for r in doc["rows"]] == [8, 8, 8]


@pytest.mark.parametrize("argv,needle", [
    (["--builtin", "paper-h"], "verified at k=0..4"),
    (["--builtin", "path:5", "-p", "independence"], "coefficients [1, 5, 6, 1] match"),
    (["--builtin", "paper-p4", "-p", "domination"], "coefficients [0, 0, 4, 4, 1] match"),
])
def test_verify(capsys, argv, needle):
    code, out, _ = run(capsys, "verify", *argv)
    assert code == 0 and needle in out


def test_validation_failure_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"pairs": [{"B": ["123", "234"], "Bstar": ["126"]}]}))
    code, _, err = run(capsys, "compute", "--builtin", "paper-h", "--pairs-from-file", str(bad))
    assert code == 2 and "{123, 234}" in err
    code, _, _ = run(capsys, "compute", "--builtin", "paper-h", "--pairs-from-file", str(bad),
                     "--no-verify-family")
    assert code == 0


def test_parse_error_exit_1(capsys, tmp_path):
    f = tmp_path / "broken.json"
    f.write_text('{"vertices": ["a", "b"],\n "edges": [["a", "q"]]}')
    code, _, err = run(capsys, "compute", str(f))
    assert code == 1 and "edges[0]" in err
    f.write_text('{"vertices": ["a",\n')
    code, _, err = run(capsys, "compute", str(f))
    assert code == 1 and "line" in err


def test_usage_errors_exit_1(capsys):
    assert run(capsys, "compute")[0] == 1
    with pytest.raises(SystemExit) as exc:
        main(["compute", "--method", "bogus"])
    assert exc.value.code == 1
    assert run(capsys, "compute", "--builtin", "complete:8", "--max-universe", "10")[0] == 1
    assert run(capsys, "compute", "--builtin", "paper-h", "-p", "domination")[0] == 1


def test_inconsistency_exit_3(capsys, monkeypatch):
    import brokenset.cli as cli
    from brokenset.polynomial import IntPolynomial
    from brokenset.polys import ComputationResult

    real = cli.compute

    def skewed(g, kind, method, *a, **kw):
        res = real(g, kind, method, *a, **kw)
        if method == "ordered":
            return ComputationResult(res.polynomial + IntPolynomial([1]), method,
                                     res.terms_evaluated, res.terms_total, res.family_size)
        return res

    monkeypatch.setattr(cli, "compute", skewed)
    assert run(capsys, "compare", "--builtin", "paper-h")[0] == 3
    assert run(capsys, "verify", "--builtin", "paper-h")[0] == 3


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "brokenset", "compute", "--builtin",
                           "paper-h", "--json"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["terms_evaluated"] == 10
