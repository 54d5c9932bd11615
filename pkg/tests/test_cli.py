"""Command-line surface: subcommands, exit codes, JSON round-trips."""

import json

import pytest

from triplepack import jsonio
from triplepack.cli import BAD_INPUT, BUDGET, FAIL, OK, main
from triplepack.multigraph import complete
from triplepack.params import johnson_bound, packing_number_k4


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestBounds:
    def test_k4_achieved_matches_formula(self, capsys):
        code, out, _ = run(capsys, "bounds", "--k", "4", "--n", "6..12",
                           "--format", "json")
        assert code == OK
        rows = json.loads(out)["bounds"]
        assert [r["n"] for r in rows] == list(range(6, 13))
        for r in rows:
            assert r["johnson"] == johnson_bound(r["n"], 4, 3)
            assert r["achieved"] == packing_number_k4(r["n"])
            assert r["achieved"] <= r["upper"]

    def test_table_format(self, capsys):
        code, out, _ = run(capsys, "bounds", "--k", "5", "--n", "9")
        assert code == OK
        assert "r-nonzero" in out or "9" in out

    def test_out_file(self, tmp_path, capsys):
        path = tmp_path / "b.json"
        code, _, _ = run(capsys, "bounds", "--k", "4", "--n", "8",
                         "--format", "json", "--out", str(path))
        assert code == OK
        assert json.loads(path.read_text())["bounds"][0]["n"] == 8


class TestClassify:
    def test_range(self, capsys):
        code, out, _ = run(capsys, "classify", "--k", "5", "--n", "6..20")
        assert code == OK
        # one line per n > k, plus the header
        assert len(out.strip().splitlines()) == 1 + len(range(6, 21))


class TestConstructAndVerify:
    def test_certificate_round_trip(self, tmp_path, capsys):
        path = tmp_path / "cert.json"
        code, _, _ = run(capsys, "construct", "--n", "9", "--k", "5",
                         "--out", str(path))
        assert code == OK
        code, out, _ = run(capsys, "verify", str(path))
        assert code == OK and "certificate: ok" in out

    def test_tampered_certificate_fails(self, tmp_path, capsys):
        path = tmp_path / "cert.json"
        run(capsys, "construct", "--n", "9", "--k", "5", "--out", str(path))
        data = json.loads(path.read_text())
        data["xi"] += 1
        path.write_text(json.dumps(data))
        code, out, _ = run(capsys, "verify", str(path))
        assert code == FAIL and "FAILED" in out

    def test_construct_deterministic(self, tmp_path, capsys):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        run(capsys, "construct", "--n", "74", "--k", "5", "--out", str(a))
        run(capsys, "construct", "--n", "74", "--k", "5", "--out", str(b))
        assert a.read_text() == b.read_text()

    def test_construct_failure_exit(self, capsys):
        # (13, 5) is rejected by the multiplicity guard
        code, _, err = run(capsys, "construct", "--n", "13", "--k", "5")
        assert code == FAIL and "failed" in err


class TestDecompose:
    def test_found(self, tmp_path, capsys):
        path = tmp_path / "g.json"
        path.write_text(jsonio.dumps(jsonio.multigraph_to_dict(complete(7, 1))))
        code, out, _ = run(capsys, "decompose", "--input", str(path))
        assert code == OK
        tris = json.loads(out)["triangles"]
        assert len(tris) == 7 and all(len(t) == 3 for t in tris)

    def test_none_found(self, tmp_path, capsys):
        path = tmp_path / "g.json"
        path.write_text(jsonio.dumps(jsonio.multigraph_to_dict(complete(4, 1))))
        code, out, _ = run(capsys, "decompose", "--input", str(path))
        assert code == FAIL and json.loads(out)["status"] == "none-found"

    def test_budget_exit(self, tmp_path, capsys):
        path = tmp_path / "g.json"
        path.write_text(jsonio.dumps(jsonio.multigraph_to_dict(complete(13, 1))))
        code, out, _ = run(capsys, "decompose", "--input", str(path),
                           "--budget", "2")
        assert code == BUDGET and json.loads(out)["status"] == "budget-exceeded"


class TestGdd:
    def test_predicates(self, capsys):
        code, out, _ = run(capsys, "gdd", "--g", "2", "--u", "3", "--lam", "1")
        assert code == OK
        row = json.loads(out)
        assert row["simple_gdd_exists"] and row["lgdd_exists"]

    def test_ts_field_when_g_is_1(self, capsys):
        code, out, _ = run(capsys, "gdd", "--g", "1", "--u", "7", "--lam", "1")
        assert code == OK
        row = json.loads(out)
        assert row["simple_ts_exists"] and not row["lgdd_exists"]

    def test_search_witness_round_trips(self, tmp_path, capsys):
        path = tmp_path / "gdd.json"
        code, _, _ = run(capsys, "gdd", "--g", "2", "--u", "3", "--lam", "1",
                         "--search", "--out", str(path))
        assert code == OK
        data = json.loads(path.read_text())
        assert data["search"] == "found"
        wit = tmp_path / "wit.json"
        wit.write_text(json.dumps(data["witness"]))
        code, out, _ = run(capsys, "verify", str(wit))
        assert code == OK and "gdd: ok" in out

    def test_search_none_fails(self, capsys):
        # lambda above the transverse-pair capacity g(u-2)
        code, out, _ = run(capsys, "gdd", "--g", "2", "--u", "3", "--lam", "3",
                           "--search")
        assert code == FAIL and json.loads(out)["search"] == "none-found"


class TestDioph:
    def test_solution_validates(self, tmp_path, capsys):
        path = tmp_path / "d.json"
        path.write_text(json.dumps(
            {"equalities": [[4, 1], [9, 2]], "avoidances": [[5, [0, 3]]]}
        ))
        code, out, _ = run(capsys, "dioph", "--input", str(path))
        assert code == OK
        x = json.loads(out)["solution"]
        assert x % 4 == 1 and x % 9 == 2 and x % 5 not in (0, 3)


class TestBrute:
    def test_fano(self, capsys):
        code, out, _ = run(capsys, "brute", "--n", "7", "--k", "3", "--t", "2")
        assert code == OK
        data = json.loads(out)
        assert data["status"] == "optimal" and data["value"] == 7
        wit = {"n": 7, "k": 3, "t": 2, "lambda": 1, "blocks": data["blocks"]}
        assert jsonio.identify(wit) == "packing"

    def test_budget_exit(self, capsys):
        code, out, _ = run(capsys, "brute", "--n", "13", "--k", "4",
                           "--budget", "5")
        assert code == BUDGET


class TestBadInput:
    def test_unknown_flag(self, capsys):
        assert run(capsys, "bounds", "--wat", "1")[0] == BAD_INPUT

    def test_missing_file(self, capsys):
        assert run(capsys, "decompose", "--input", "/no/such.json")[0] == BAD_INPUT

    def test_malformed_json(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text("{nope")
        assert run(capsys, "decompose", "--input", str(path))[0] == BAD_INPUT

    def test_help_exits_clean(self, capsys):
        assert run(capsys, "--help")[0] == 0
