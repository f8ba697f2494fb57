import csv
import io
import json
import math
import subprocess
import sys

import pytest

from frozen import FROZEN
from genjacobi.cli import UsageError, parse_grid, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


class TestGrid:
    def test_single(self):
        assert parse_grid("0.5") == [0.5]

    def test_range(self):
        assert parse_grid("0.1:0.5:0.1") == [0.1, 0.2, 0.3, 0.4, 0.5]

    def test_partial(self):
        assert parse_grid("0:1:0.3") == [0.0, 0.3, 0.6, 0.9]

    @pytest.mark.parametrize("spec", ["a:b:c", "1:0:0.1", "0:1:0", "0:1", "nan", "0:1:-1"])
    def test_bad(self, spec):
        with pytest.raises(UsageError):
            parse_grid(spec)


class TestEval:
    def test_sn(self):
        code, out, _ = call("eval", "--fn", "sn", "--p", "2", "--q", "2", "--r", "2", "--k", "0.5", "--x", "0.8")
        assert code == 0
        assert float(out) == pytest.approx(FROZEN["sn_08_05"][0], rel=1e-13)

    def test_K_zero(self):
        code, out, _ = call("eval", "--fn", "K", "--p", "2", "--q", "2", "--r", "2", "--k", "0")
        assert code == 0 and float(out) == pytest.approx(math.pi / 2, rel=1e-15)

    def test_pi(self):
        code, out, _ = call("eval", "--fn", "pi", "--p", "2", "--q", "2")
        assert float(out) == pytest.approx(math.pi, rel=1e-15)

    def test_missing_flag(self):
        code, out, err = call("eval", "--fn", "sn", "--p", "2", "--q", "2")
        assert code == 2 and out == ""
        assert err.count("\n") == 1 and "--r" in err

    def test_domain(self):
        code, _, err = call("eval", "--fn", "K", "--p", "2", "--q", "2", "--r", "2", "--k", "1.5")
        assert code == 2 and err.startswith("genjacobi: error:")

    def test_unknown_function(self):
        code, _, err = call("eval", "--fn", "tan", "--p", "2", "--q", "2")
        assert code == 2 and err.count("\n") == 1


class TestTable:
    def test_csv(self):
        code, out, _ = call("table", "--fn", "cn", "--p", "3", "--q", "2", "--r", "2", "--k", "0:0.5:0.5", "--x", "0.1:0.3:0.1")
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["fn", "p", "q", "r", "k", "x", "value"]
        assert len(rows) == 1 + 2 * 3

    def test_json(self):
        code, out, _ = call("table", "--fn", "pi", "--p", "2", "--q", "2", "--format", "json")
        doc = json.loads(out)
        assert doc["rows"][0]["value"] == pytest.approx(math.pi)


class TestVerify:
    def test_legendre_json(self):
        code, out, _ = call("verify", "--suite", "legendre", "--p", "2", "--q", "2", "--r", "2", "--k", "0.1:0.9:0.4")
        assert code == 0
        doc = json.loads(out)
        assert set(doc) == {"suite", "generated_grid", "points", "summary"}
        assert doc["summary"]["total"] == 3 and doc["summary"]["failed"] == 0
        for pt in doc["points"]:
            assert pt["rhs"] == pytest.approx(math.pi / 2, rel=1e-15)
            assert pt["pass"] is True

    def test_csv(self):
        code, out, _ = call("verify", "--suite", "recurrence", "--p", "2", "--q", "2", "--r", "2", "--k", "0.5", "--format", "csv")
        rows = list(csv.reader(io.StringIO(out)))
        assert code == 0 and rows[0][0] == "identity_id" and rows[0][10] == "pass"

    def test_failure_exit(self):
        code, out, _ = call("verify", "--suite", "legendre", "--p", "3", "--q", "2", "--r", "2", "--k", "0.5", "--tol", "1e-300")
        assert code == 1 and json.loads(out)["summary"]["failed"] > 0

    def test_partial_triple(self):
        code, _, err = call("verify", "--suite", "legendre", "--p", "3")
        assert code == 2 and err.count("\n") == 1

    def test_bad_tol(self):
        code, _, _ = call("verify", "--suite", "legendre", "--tol", "-1")
        assert code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "genjacobi", "eval", "--fn", "pi", "--p", "2", "--q", "2"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and float(proc.stdout) == pytest.approx(math.pi)
