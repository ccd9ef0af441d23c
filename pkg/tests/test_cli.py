import json

import pytest

from isofam.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestEnumerate:
    def test_json_count(self, capsys):
        code, out = run(capsys, "enumerate", "--d", "2", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["count"] == 10
        assert len(data["subspaces"]) == 10

    def test_text_header(self, capsys):
        code, out = run(capsys, "enumerate", "--d", "1")
        assert code == 0
        assert out.splitlines()[0] == "family members for d=1: 3"

    def test_csv_rows(self, capsys):
        code, out = run(capsys, "enumerate", "--d", "1", "--format", "csv")
        lines = out.strip().splitlines()
        assert lines[0] == "d,dim,basis,alpha"
        assert len(lines) == 4

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "fam.json"
        code, _ = run(
            capsys, "enumerate", "--d", "0", "--format", "json", "--out", str(target)
        )
        assert code == 0
        assert json.loads(target.read_text())["count"] == 1

    def test_missing_d_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["enumerate"])
        assert exc.value.code == 2

    def test_d_above_cap_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["--d-max", "3", "enumerate", "--d", "4"])
        assert exc.value.code == 2


class TestPhi:
    def test_text_lists_union_size(self, capsys):
        code, out = run(capsys, "phi", "--d", "2")
        assert code == 0
        assert out.strip().splitlines()[-1] == "union size: 10"

    def test_json(self, capsys):
        code, out = run(capsys, "phi", "--d", "1", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert len(data["pairs"]) == 3


class TestBasis:
    def test_text_summary(self, capsys):
        code, out = run(capsys, "basis", "--d", "2")
        assert code == 0
        assert "10x10" in out
        assert "determinant" in out

    def test_csv_is_square(self, capsys):
        code, out = run(capsys, "basis", "--d", "1", "--format", "csv")
        assert code == 0
        rows = [ln for ln in out.strip().splitlines() if ln]
        assert len(rows) == 4  # header + 3 member rows


class TestKostka:
    def test_text_table(self, capsys):
        code, out = run(capsys, "kostka", "--m", "3")
        assert code == 0
        assert "2+1" in out

    def test_json_values(self, capsys):
        code, out = run(capsys, "kostka", "--m", "4", "--format", "json")
        data = json.loads(out)
        assert data["m"] == 4
        assert data["table"]["3+1"]["2+1+1"] == 2

    def test_m_required(self):
        with pytest.raises(SystemExit) as exc:
            main(["kostka"])
        assert exc.value.code == 2


class TestExceptional:
    def test_by_type(self, capsys):
        code, out = run(capsys, "exceptional", "--type", "F4")
        assert code == 0
        assert "12_1" in out
        assert "FAIL" not in out

    def test_by_size_json(self, capsys):
        code, out = run(capsys, "exceptional", "--nc", "17", "--format", "json")
        data = json.loads(out)
        assert data["n_c"] == 17
        assert all(c["passed"] for c in data["verification"])
        assert data["cross_check"]["passed"]

    def test_small_table_has_no_cross_check(self, capsys):
        code, out = run(capsys, "exceptional", "--nc", "2", "--format", "json")
        assert code == 0
        assert "cross_check" not in json.loads(out)

    def test_unknown_size_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["exceptional", "--nc", "9"])
        assert exc.value.code == 2


class TestVerify:
    def test_small_run_passes(self, capsys):
        code, out = run(capsys, "--d-max", "2", "verify")
        assert code == 0
        assert "FAIL" not in out
        assert out.strip().splitlines()[-1].endswith("(d_max=2)")

    def test_json_payload(self, capsys):
        code, out = run(capsys, "--d-max", "1", "verify", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["passed"] is True
        assert all(c["passed"] for c in data["checks"])


class TestReport:
    def test_writes_files(self, capsys, tmp_path):
        outdir = tmp_path / "report"
        code = main(["--d-max", "2", "report", "--out", str(outdir)])
        assert code == 0
        written = capsys.readouterr().out.strip().splitlines()
        assert written
        names = {p.name for p in outdir.iterdir()}
        assert any(n.endswith(".png") for n in names)
        assert any(n.endswith(".csv") for n in names)


class TestUsage:
    def test_no_command(self):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2

    def test_bad_format(self):
        with pytest.raises(SystemExit) as exc:
            main(["enumerate", "--d", "1", "--format", "xml"])
        assert exc.value.code == 2
