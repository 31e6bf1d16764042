import json

import pytest
from typer.testing import CliRunner

from hopfcyclic import __version__
from hopfcyclic.cli import app
from hopfcyclic.serializer import DATA_DIR, read_document

pytestmark = pytest.mark.integration

runner = CliRunner()


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ("HOPFCYC_DIMENSION_GUARD", "HOPFCYC_MAX_DEGREE", "HOPFCYC_ORDER_CAP", "HOPFCYC_POWER_WINDOW",
                 "HOPFCYC_OUTPUT_FORMAT", "HOPFCYC_DEBUG", "HOPFCYC_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)


def test_version():
    result = runner.invoke(app, ["version"])
    assert result.exit_code == 0
    assert __version__ in result.output


def test_fixtures_lists_builtins_and_files():
    result = runner.invoke(app, ["fixtures"])
    assert result.exit_code == 0
    assert "builtin:h4" in result.output
    assert "data:kc2" in result.output


class TestValidate:
    def test_shipped_file(self):
        result = runner.invoke(app, ["validate", "data:kc2"])
        assert result.exit_code == 0, result.output

    def test_report_file(self, tmp_path):
        report = tmp_path / "report.json"
        result = runner.invoke(app, ["validate", "builtin:kc3", "--report", str(report)])
        assert result.exit_code == 0, result.output
        data = json.loads(report.read_text())
        assert data["summary"]["failed"] == 0
        assert data["metadata"]["antipode_order"] == 2

    def test_broken_antipode_fails(self, tmp_path):
        doc = json.loads((DATA_DIR / "kc2.json").read_text())
        doc["maps"]["S"]["entries"] = [["1", "1", "1"], ["1", "g", "1"]]
        path = tmp_path / "broken.json"
        path.write_text(json.dumps(doc))
        result = runner.invoke(app, ["validate", str(path)])
        assert result.exit_code == 1
        assert "✗" in result.output

    def test_sweedler_antipode_order(self, tmp_path):
        report = tmp_path / "h4.yaml"
        result = runner.invoke(app, ["validate", "builtin:h4", "--report", str(report)])
        assert result.exit_code == 0, result.output
        assert read_document(report)["metadata"]["antipode_order"] == 4

    def test_parse_error_exits_one(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("[]")
        result = runner.invoke(app, ["validate", str(path)])
        assert result.exit_code == 1
        assert "Parse error" in result.output


class TestBuild:
    def test_build_and_check_dump(self, tmp_path):
        dump = tmp_path / "a1.json"
        result = runner.invoke(app, ["build", "builtin:kc2", "--family", "A1", "--degree", "2",
                                     "--coeff", "regular", "--dump", str(dump)])
        assert result.exit_code == 0, result.output
        assert dump.exists()
        result = runner.invoke(app, ["check", str(dump)])
        assert result.exit_code == 0, result.output

    def test_generic_comparison(self, tmp_path):
        report = tmp_path / "b5.yaml"
        result = runner.invoke(app, ["build", "builtin:kc2", "--family", "B5", "--degree", "2",
                                     "--coeff", "regular", "--generic", "--report", str(report)])
        assert result.exit_code == 0, result.output
        data = read_document(report)
        assert any(c["name"].startswith("functor tower") for c in data["checks"])

    @pytest.mark.parametrize("suffix", [".json", ".yaml"])
    def test_repeated_runs_are_byte_identical(self, tmp_path, suffix):
        dumps = [tmp_path / f"run{k}{suffix}" for k in range(2)]
        reports = [tmp_path / f"report{k}.json" for k in range(2)]
        for dump, report in zip(dumps, reports):
            result = runner.invoke(app, ["build", "builtin:h4", "--family", "B5", "--degree", "2",
                                         "--coeff", "regular", "--dump", str(dump), "--report", str(report)])
            assert result.exit_code == 0, result.output
        assert dumps[0].read_bytes() == dumps[1].read_bytes()
        first, second = (json.loads(r.read_text()) for r in reports)
        for data in (first, second):
            data["timing_seconds"] = 0
            data["metadata"].pop("dump")
        assert first == second

    def test_degree_zero_trivial(self):
        result = runner.invoke(app, ["build", "builtin:kc2", "--family", "A1", "--degree", "0"])
        assert result.exit_code == 0, result.output

    def test_coefficient_of_wrong_kind(self):
        result = runner.invoke(app, ["build", "builtin:kc2", "--family", "A3", "--coeff", "regular"])
        assert result.exit_code == 1
        assert "Kind mismatch" in result.output

    def test_unknown_family(self):
        result = runner.invoke(app, ["build", "builtin:kc2", "--family", "C9"])
        assert result.exit_code == 1
        assert "Kind mismatch" in result.output

    def test_dimension_guard(self, monkeypatch):
        monkeypatch.setenv("HOPFCYC_DIMENSION_GUARD", "10")
        result = runner.invoke(app, ["build", "builtin:kc2", "--family", "A1", "--degree", "3"])
        assert result.exit_code == 1
        assert "Dimension guard" in result.output


class TestDualize:
    def test_hat_of_dump(self, tmp_path):
        dump, dual = tmp_path / "b5.json", tmp_path / "b5_hat.json"
        result = runner.invoke(app, ["build", "builtin:kc2", "--family", "B5", "--degree", "2",
                                     "--coeff", "regular", "--dump", str(dump)])
        assert result.exit_code == 0, result.output
        result = runner.invoke(app, ["dualize", "hat", str(dump), "--dump", str(dual)])
        assert result.exit_code == 0, result.output
        assert json.loads(dual.read_text())["variance"] == "cocyclic"

    def test_hat_of_singular_dump(self, tmp_path):
        dump = tmp_path / "a1.json"
        result = runner.invoke(app, ["build", "builtin:kc2", "--family", "A1", "--degree", "1",
                                     "--coeff", "regular", "--dump", str(dump)])
        assert result.exit_code == 0, result.output
        data = json.loads(dump.read_text())
        data["cyclic"][1]["entries"] = []
        dump.write_text(json.dumps(data))
        result = runner.invoke(app, ["dualize", "hat", str(dump)])
        assert result.exit_code == 1
        assert "Singular map" in result.output

    def test_tau(self):
        result = runner.invoke(app, ["dualize", "tau", "builtin:kc2", "--coeff", "regular", "--degree", "1"])
        assert result.exit_code == 0, result.output

    def test_tau_of_cyclic_family(self, tmp_path):
        report = tmp_path / "b1.json"
        result = runner.invoke(app, ["dualize", "tau", "builtin:kc2", "--family", "B1", "--coeff", "regular",
                                     "--degree", "1", "--report", str(report)])
        assert result.exit_code == 0, result.output
        names = [c["name"] for c in json.loads(report.read_text())["checks"]]
        assert "triangle isomorphic to A5" in names

    def test_generic_comparison_of_coring_family(self, tmp_path):
        report = tmp_path / "a5.json"
        result = runner.invoke(app, ["build", "builtin:kc2", "--family", "A5", "--degree", "1",
                                     "--coeff", "regular", "--generic", "--report", str(report)])
        assert result.exit_code == 0, result.output
        checks = json.loads(report.read_text())["checks"]
        assert any(c["name"].startswith("functor tower") for c in checks)

    def test_pairing(self):
        result = runner.invoke(app, ["dualize", "pairing", "ex1", "builtin:kc2", "--coeff", "regular",
                                     "--degree", "1"])
        assert result.exit_code == 0, result.output

    def test_unknown_pairing(self):
        result = runner.invoke(app, ["dualize", "pairing", "ex0", "builtin:kc2"])
        assert result.exit_code == 1
