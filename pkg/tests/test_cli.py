"""CLI contract: subcommands, exit codes, deterministic output, round-trips."""

import json
import subprocess
import sys

import pytest

from degenbell.algebra import Poly
from degenbell.cli import main
from degenbell.sequences import SeqTable
from degenbell.series import Series


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestTable:
    def test_stirling_triangle_text(self, capsys):
        code, out = run_cli(capsys, "table", "--kind", "deg-stirling2", "--n-max", "3")
        assert code == 0
        assert out.splitlines() == [
            "n=0 k=0: 1",
            "n=1 k=0: 0",
            "n=1 k=1: 1",
            "n=2 k=0: 0",
            "n=2 k=1: 1 - l",
            "n=2 k=2: 1",
            "n=3 k=0: 0",
            "n=3 k=1: 1 - 3*l + 2*l^2",
            "n=3 k=2: 3 - 3*l",
            "n=3 k=3: 1",
        ]

    def test_fubini_with_bindings(self, capsys):
        code, out = run_cli(
            capsys, "table", "--kind", "deg-fubini", "--n-max", "2",
            "--bind", "l=0", "--bind", "x=1",
        )
        assert code == 0
        assert out.splitlines() == ["n=0: 1", "n=1: 1", "n=2: 3"]

    def test_fully_deg_bell_bound(self, capsys):
        code, out = run_cli(
            capsys, "table", "--kind", "fully-deg-bell", "--n-max", "2",
            "--bind", "x=1", "--bind", "l=0",
        )
        assert code == 0
        assert out.splitlines() == ["n=0: 1", "n=1: 1", "n=2: 2"]

    def test_json_round_trips(self, capsys):
        code, out = run_cli(
            capsys, "table", "--kind", "deg-stirling2", "--n-max", "4", "--format", "json"
        )
        assert code == 0
        table = SeqTable.from_json(json.loads(out))
        assert table.to_json() == json.loads(out)

    def test_csv(self, capsys):
        code, out = run_cli(
            capsys, "table", "--kind", "deg-bell", "--n-max", "2", "--format", "csv"
        )
        assert code == 0
        assert out.splitlines()[0] == "n,value"
        assert out.splitlines()[3] == "2,x - l*x + x^2"

    def test_unknown_kind_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["table", "--kind", "nope", "--n-max", "2"])
        assert exc.value.code == 2

    def test_negative_bound_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["table", "--kind", "deg-bell", "--n-max", "-3"])
        assert exc.value.code == 2

    def test_k_max_caps_triangle(self, capsys):
        code, out = run_cli(
            capsys, "table", "--kind", "deg-stirling2", "--n-max", "3", "--k-max", "0"
        )
        assert code == 0
        assert out.splitlines() == ["n=0 k=0: 1", "n=1 k=0: 0", "n=2 k=0: 0", "n=3 k=0: 0"]

    def test_negative_k_max_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["table", "--kind", "deg-stirling2", "--n-max", "3", "--k-max", "-1"])
        assert exc.value.code == 2

    def test_bad_rational_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["table", "--kind", "deg-bell", "--n-max", "2", "--bind", "l=0.5"])
        assert exc.value.code == 2

    def test_output_file(self, capsys, tmp_path):
        path = tmp_path / "out.json"
        code, out = run_cli(
            capsys, "table", "--kind", "deg-bell", "--n-max", "2",
            "--format", "json", "--output", str(path),
        )
        assert code == 0
        assert out == ""
        assert json.loads(path.read_text())["kind"] == "deg-bell"


class TestPoly:
    def test_triangular_kind(self, capsys):
        code, out = run_cli(capsys, "poly", "--kind", "deg-stirling2", "-n", "3", "-k", "1")
        assert code == 0
        assert out == "1 - 3*l + 2*l^2\n"

    def test_missing_k_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["poly", "--kind", "deg-stirling2", "-n", "3"])
        assert exc.value.code == 2

    def test_linear_kind_json(self, capsys):
        code, out = run_cli(
            capsys, "poly", "--kind", "fully-deg-bell", "-n", "2", "--format", "json"
        )
        assert code == 0
        poly = Poly.from_json(json.loads(out))
        from degenbell.sequences import bell_fully_deg

        assert poly == bell_fully_deg(2)


class TestSeries:
    def test_deg_exp(self, capsys):
        code, out = run_cli(capsys, "series", "--gf", "deg-exp", "--order", "2")
        assert code == 0
        assert out.splitlines() == ["0: 1", "1: 1", "2: 1 - l"]

    def test_fully_deg_bell_gf(self, capsys):
        code, out = run_cli(capsys, "series", "--gf", "fully-deg-bell", "--order", "2")
        assert code == 0
        assert out.splitlines() == ["0: 1", "1: x", "2: x - l*x + x^2 - l*x^2"]

    def test_two_var_alpha_zero_is_deg_exp_y(self, capsys):
        code, out = run_cli(
            capsys, "series", "--gf", "two-var-fubini:0", "--order", "3", "--format", "json"
        )
        assert code == 0
        series = Series.from_json(json.loads(out))
        assert series == Series.deg_exp(Poly.variable(__import__("degenbell").Var.Y), 3)

    def test_json_round_trip(self, capsys):
        code, out = run_cli(
            capsys, "series", "--gf", "deg-fubini", "--order", "4", "--format", "json"
        )
        data = json.loads(out)
        assert Series.from_json(data).to_json() == data

    def test_unknown_gf_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["series", "--gf", "mystery", "--order", "2"])
        assert exc.value.code == 2


class TestVerify:
    def test_single_identity(self, capsys):
        code, out = run_cli(
            capsys, "verify", "--id", "fully-deg-bell", "--n-max", "6", "--m-max", "6"
        )
        assert code == 0
        assert "pass: 49" in out
        assert "fail: 0" in out

    def test_base_cell(self, capsys):
        code, out = run_cli(
            capsys, "verify", "--id", "fully-deg-bell-poly", "--n-max", "0", "--m-max", "0"
        )
        assert code == 0
        assert "pass: 1" in out

    def test_json_report(self, capsys):
        code, out = run_cli(
            capsys, "verify", "--id", "deg-vandermonde", "--n-max", "4", "--format", "json"
        )
        assert code == 0
        data = json.loads(out)
        assert data["identity"] == "deg-vandermonde"
        assert data["pass"] == 5
        assert data["fail"] == 0
        assert data["first_counterexample"] is None

    def test_rational_mode_with_binding(self, capsys):
        code, out = run_cli(
            capsys, "verify", "--id", "deg-fubini-spivey", "--n-max", "3", "--m-max", "3",
            "--mode", "rational", "--bind", "l=0", "--bind", "t=2",
        )
        assert code == 0

    def test_all_runs_every_identity(self, capsys):
        code, out = run_cli(
            capsys, "verify", "--all", "--n-max", "2", "--m-max", "2", "--format", "json"
        )
        assert code == 0
        data = json.loads(out)
        assert len(data) == 10
        assert {entry["identity"] for entry in data} == {
            "spivey-bell", "spivey-bell-poly", "deg-bell-spivey", "fully-deg-bell",
            "fully-deg-bell-poly", "deg-fubini-spivey", "fubini-spivey",
            "deg-vandermonde", "exp-splitting", "fubini-x-zero",
        }

    def test_failure_exits_1(self, capsys, monkeypatch):
        import degenbell.cli as cli
        from degenbell.verify import Identity, VerifyReport, Counterexample
        from degenbell.algebra import ONE, ZERO

        broken = VerifyReport(
            identity=Identity.SPIVEY_BELL,
            grid=({"n": 0, "m": 0},),
            pass_count=0,
            fail_count=1,
            first_counterexample=Counterexample({"n": 0, "m": 0}, ONE, ZERO),
        )
        monkeypatch.setattr(cli, "run_identity", lambda *a, **k: broken)
        code, out = run_cli(capsys, "verify", "--id", "spivey-bell")
        assert code == 1
        assert "first counterexample" in out

    def test_unknown_identity_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--id", "not-an-identity"])
        assert exc.value.code == 2


class TestLimit:
    @pytest.mark.parametrize(
        "kind", ["deg-stirling2", "deg-bell", "fully-deg-bell", "deg-fubini",
                 "deg-falling-factorial", "two-var-deg-fubini"]
    )
    def test_all_kinds_match(self, capsys, kind):
        code, out = run_cli(capsys, "limit", "--kind", kind, "--n-max", "8")
        assert code == 0
        assert out.strip().endswith("all rows match")

    def test_json(self, capsys):
        code, out = run_cli(
            capsys, "limit", "--kind", "deg-fubini", "--n-max", "4", "--format", "json"
        )
        assert code == 0
        data = json.loads(out)
        assert data["all_match"] is True
        assert len(data["rows"]) == 5


class TestDeterminism:
    def test_byte_identical_reruns(self, capsys):
        _, first = run_cli(capsys, "verify", "--id", "fully-deg-bell", "--n-max", "3",
                           "--m-max", "3", "--format", "json")
        _, second = run_cli(capsys, "verify", "--id", "fully-deg-bell", "--n-max", "3",
                            "--m-max", "3", "--format", "json")
        assert first == second

    def test_table_byte_identical(self, capsys):
        _, first = run_cli(capsys, "table", "--kind", "deg-stirling2", "--n-max", "5",
                           "--format", "csv")
        _, second = run_cli(capsys, "table", "--kind", "deg-stirling2", "--n-max", "5",
                            "--format", "csv")
        assert first == second

    def test_width_hint_wraps_text(self, capsys, monkeypatch):
        monkeypatch.setenv("DEGENBELL_WIDTH", "30")
        code, out = run_cli(capsys, "poly", "--kind", "deg-fubini", "-n", "6")
        assert code == 0
        assert all(len(line) <= 30 for line in out.splitlines())


class TestEntryPoint:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "degenbell.cli", "series", "--gf", "deg-exp", "--order", "1"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout == "0: 1\n1: 1\n"
