import io
import json
import subprocess
import sys

import pytest

from graphlaplace.cli import main
from graphlaplace.poly import parse_poly, poly_from_json
from graphlaplace.space import GraphVector


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


class TestPoly:
    def test_bernardi(self):
        code, out, _ = run("poly", "--kind", "bernardi", "--graph", "n=2;1>2")
        assert code == 0
        assert out.strip() == "1/2*q^2*y + 1/2*q^2*z - 1/2*q*y - 1/2*q*z + q"

    def test_potts(self):
        assert run("poly", "--kind", "potts", "--graph", "n=2;1-2")[1].strip() == "q^2 + q*v"
        assert run("poly", "--kind", "potts-sokal", "--graph", "n=2;1-2")[1].strip() == "q^2 + q*v"

    def test_chi_gt_loop(self):
        assert run("poly", "--kind", "chi-gt", "--graph", "n=1;1>1")[1].strip() == "0"

    def test_edgeless_undirected_kind(self):
        assert run("poly", "--kind", "chromatic", "--graph", "n=2;")[1].strip() == "q^2"

    def test_json(self):
        code, out, _ = run("--format", "json", "poly", "--kind", "chromatic", "--graph", "n=2;1-2")
        data = json.loads(out)
        assert data["kind"] == "chromatic" and data["graph"] == "n=2;1-2"
        assert str(poly_from_json(data["polynomial"])) == "q^2*y - q*y + q"

    def test_text_round_trip(self):
        out = run("poly", "--kind", "bernardi", "--graph", "n=3;1>2,2>3,3>1")[1]
        assert str(parse_poly(out, ("q", "y", "z"))) == out.strip()

    def test_parse_error(self):
        code, _, err = run("poly", "--kind", "bernardi", "--graph", "n=2;1>5")
        assert code == 2 and "position 4" in err

    def test_orientation_error(self):
        code, _, err = run("poly", "--kind", "potts", "--graph", "n=2;1>2")
        assert code == 2 and "undirected" in err

    def test_guard(self):
        code, _, err = run("poly", "--kind", "bernardi", "--graph", "n=9;1>2", "--max-steps", "1000")
        assert code == 3 and "refused" in err


class TestUniversal:
    def test_det(self):
        code, out, _ = run("universal", "--kind", "det", "--n", "2", "--k", "1")
        assert out.splitlines() == ["n=2;1>1: -1", "n=2;2>2: -1"]

    def test_det_laplace(self):
        out = run("universal", "--kind", "det", "--n", "2", "--k", "1", "--laplace")[1]
        assert out.splitlines() == ["n=2;1>2: 1", "n=2;2>1: 1"]

    def test_empty(self):
        assert run("universal", "--kind", "chi-gt", "--n", "1", "--k", "1")[1].strip() == "0"

    def test_truncated_laplace_unchanged(self):
        a = run("--format", "json", "universal", "--kind", "truncated-bernardi", "--n", "2", "--k", "1")[1]
        b = run("--format", "json", "universal", "--kind", "truncated-bernardi", "--n", "2", "--k", "1", "--laplace")[1]
        va, vb = GraphVector.from_json(json.loads(a)), GraphVector.from_json(json.loads(b))
        assert va == vb and len(va) == 2

    def test_minor_and_acyclic(self):
        assert run("universal", "--kind", "det-minor", "--n", "2", "--k", "1", "--I", "2")[1].strip() == "n=2;1>1: -1"
        assert run("universal", "--kind", "acyclic-sum", "--n", "2", "--k", "1", "--I", "2")[1].strip() == "n=2;1>2: 1"
        assert run("universal", "--kind", "det-minor", "--n", "2", "--k", "1")[0] == 2

    def test_potts_laplace(self):
        out = run("universal", "--kind", "potts", "--n", "2", "--k", "1", "--laplace")[1]
        assert out.strip() == "n=2;1-2: -q^2 + q*v"

    def test_json_round_trip_all_kinds(self):
        for kind in ("bernardi", "potts", "chi-geq", "det", "acyclic-sum"):
            out = run("--format", "json", "universal", "--kind", kind, "--n", "2", "--k", "2")[1]
            data = json.loads(out)
            v = GraphVector.from_json(data)
            assert json.dumps(v.to_json(), sort_keys=True) == json.dumps(
                {k: data[k] for k in ("n", "k", "oriented", "variables", "terms")}, sort_keys=True)

    def test_jobs_do_not_change_output(self):
        a = run("--jobs", "1", "universal", "--kind", "bernardi", "--n", "3", "--k", "2")[1]
        b = run("--jobs", "3", "universal", "--kind", "bernardi", "--n", "3", "--k", "2")[1]
        assert a == b


class TestVerify:
    def test_theorem1(self):
        code, out, _ = run("--format", "json", "verify", "--identity", "theorem1", "--n", "2", "--k", "2")
        assert code == 0 and json.loads(out)["status"] == "equal"

    def test_all(self):
        code, out, err = run("--format", "json", "verify", "--all", "--n-max", "2", "--k-max", "2")
        assert code == 0
        assert "(-1)^n (uniform" in err
        assert all(json.loads(line)["status"] != "differ" for line in out.splitlines())

    def test_all_deterministic_across_jobs(self):
        a = run("--jobs", "1", "--format", "json", "verify", "--all", "--n-max", "2", "--k-max", "2")[1]
        b = run("--jobs", "2", "--format", "json", "verify", "--all", "--n-max", "2", "--k-max", "2")[1]
        assert a == b

    def test_guard_refusal(self):
        code, _, err = run("verify", "--identity", "theorem1", "--n", "5", "--k", "5")
        assert code == 3 and "--max-steps" in err

    def test_wrong_sign_fails(self):
        code, _, err = run("verify", "--identity", "cor_sumall", "--n", "2", "--k", "1", "--sign", "k")
        assert code == 1 and "FAIL" in err

    def test_single_minor(self):
        code, out, _ = run("--format", "json", "verify", "--identity", "cor_mtt", "--n", "3", "--k", "2", "--I", "3")
        assert code == 0 and json.loads(out)["params"]["I"] == [3]

    def test_missing_n(self):
        assert run("verify", "--identity", "theorem1")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "graphlaplace", "poly", "--kind", "potts",
                           "--graph", "n=2;1-2,1-2"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "q*v^2 + q^2 + 2*q*v"
