import json
import logging
import pytest


class TestCheck:
    def test_builtin_scenario(self, invoke):
        result = invoke("check", "example1", "--json")
        assert result.exit_code == 0
        run = json.loads(result.stdout)
        assert (run["scenario"], run["passed"], run["failed"]) == ("example1", 5, 0)
        assert "elapsed_ms" not in run["results"][0]

    def test_reruns_print_identical_json(self, invoke):
        assert invoke("check", "example_dynamic", "--json").stdout == invoke("check", "example_dynamic", "--json").stdout

    def test_timings(self, invoke):
        run = json.loads(invoke("check", "example3", "--json", "--timings").stdout)
        assert all(r["elapsed_ms"] >= 0 for r in run["results"])

    def test_table(self, invoke):
        result = invoke("check", "example_nonreducible")
        assert result.exit_code == 0
        assert "3/3 passed" in result.stdout

    def test_failing_check(self, invoke, scenario_file, letter_scenario):
        letter_scenario["checks"][0]["expect"] = False
        result = invoke("check", scenario_file(letter_scenario), "--json")
        assert result.exit_code == 1
        assert json.loads(result.stdout)["failed"] == 1

    def test_malformed_scenario(self, invoke, scenario_file):
        result = invoke("check", scenario_file("{ not json"))
        assert result.exit_code == 2
        assert "ScenarioParseError" in result.output

    def test_bad_formula(self, invoke, scenario_file, letter_scenario):
        letter_scenario["checks"][0]["formula"] = "K_b p |"
        result = invoke("check", scenario_file(letter_scenario))
        assert result.exit_code == 2
        assert "ScenarioValidationError" in result.output


class TestTranslate:
    def test_translate(self, invoke):
        result = invoke("translate", "[sp] p", "--sig", "example1")
        assert result.exit_code == 0
        assert result.stdout.strip() == "p -> p"

    def test_measures(self, invoke):
        result = invoke("translate", "[sp] [snp] p", "--sig", "example1", "--measures")
        assert result.exit_code == 0
        assert "d=2 w=3" in result.stdout

    def test_dynamic_model_action_set(self, invoke):
        result = invoke("translate", "[sp] K_a p", "--sig", "example_dynamic", "--dynamic", "Dt1")
        assert result.exit_code == 0
        assert "xi(a, sp, snp)" in result.stdout
        assert "a1p" not in result.stdout

    def test_syntax_error(self, invoke):
        result = invoke("translate", "[sp p", "--sig", "example1")
        assert result.exit_code == 2
        assert "FormulaSyntaxError" in result.output
        assert "^" in result.output

    def test_unknown_dynamic_model(self, invoke):
        result = invoke("translate", "[sp] p", "--sig", "example1", "--dynamic", "D9")
        assert result.exit_code == 2


class TestFuzz:
    def test_sound_schemas(self, invoke):
        result = invoke("fuzz", "--trials", "50", "--seed", "3")
        assert result.exit_code == 0
        assert "50 trials from seed 3" in result.stdout

    def test_control_scheme_report(self, invoke, tmp_path):
        report = tmp_path / "failures.txt"
        result = invoke("fuzz", "--trials", "500", "--schemas", "control", "--report", str(report))
        # the control scheme is not sound, so its failures do not fail the run
        assert result.exit_code == 0
        lines = report.read_text(encoding="utf-8").splitlines()
        assert lines and all(line.startswith("schema=control seed=") for line in lines)

    def test_unknown_schema(self, invoke):
        result = invoke("fuzz", "--trials", "1", "--schemas", "8")
        assert result.exit_code == 2
        assert "UnknownIdentifier" in result.output

    def test_needs_a_trial(self, invoke):
        assert invoke("fuzz", "--trials", "0").exit_code == 2


class TestBisim:
    @pytest.mark.parametrize("args, expected", [
        (("M1^A1", "(w0,a1p)", "Dt1+", "(w0,sp)"), "true"),
        (("M1^A2", "(w3,a2npnq)", "Dt1p+", "(w3,snp)"), "true"),
        (("M1^A1", "(w0,a1p)", "Dt1p+", "(w0,sp)"), "false"),
    ])
    def test_dynamic_fixtures(self, invoke, args, expected):
        result = invoke("bisim", "example_dynamic", *args)
        assert result.stdout.strip() == expected
        assert result.exit_code == (0 if expected == "true" else 1)

    def test_unknown_world(self, invoke):
        assert invoke("bisim", "example1", "M0", "w0", "M0", "w9").exit_code == 2


class TestValidate:
    def test_valid(self, invoke):
        result = invoke("validate", "example_8world", "Dt2+")
        assert result.exit_code == 0

    def test_json_report(self, invoke):
        report = json.loads(invoke("validate", "example_dynamic", "Dt1", "--json").stdout)
        assert report == {"violations": []}

    def test_not_a_dynamic_model(self, invoke):
        result = invoke("validate", "example1", "M0")
        assert result.exit_code == 2
        assert "ScenarioValidationError" in result.output


class TestDot:
    def test_stdout(self, invoke):
        result = invoke("dot", "example1", "M0")
        assert result.exit_code == 0
        assert result.stdout.startswith('graph "M0" {')

    def test_action_and_dynamic_models(self, invoke):
        assert 'shape=box' in invoke("dot", "example1", "A0").stdout
        assert 'shape=note' in invoke("dot", "example_nonreducible", "DB").stdout

    def test_updated_model_to_file(self, invoke, tmp_path):
        target = tmp_path / "product.dot"
        result = invoke("dot", "example1", "M0^A0", "-o", str(target))
        assert result.exit_code == 0
        assert '"(w0,sp)"' in target.read_text(encoding="utf-8")

    def test_unknown_model(self, invoke):
        assert invoke("dot", "example1", "M9").exit_code == 2


class TestLogLevel:
    def test_default_level(self, invoke, monkeypatch):
        monkeypatch.setattr("main.DEBUG", False)
        monkeypatch.setattr("main.LOG_LEVEL", "WARNING")
        invoke("bisim", "example1", "M0", "w0", "M0", "w0")
        assert logging.getLogger().level == logging.WARNING

    def test_verbose_flag(self, invoke, monkeypatch):
        monkeypatch.setattr("main.DEBUG", False)
        invoke("--verbose", "bisim", "example1", "M0", "w0", "M0", "w0")
        assert logging.getLogger().level == logging.DEBUG

    def test_debug_setting(self, invoke, monkeypatch):
        monkeypatch.setattr("main.DEBUG", True)
        monkeypatch.setattr("main.LOG_LEVEL", "WARNING")
        result = invoke("bisim", "example1", "M0", "w0", "M0", "w0")
        assert result.exit_code == 0
        assert logging.getLogger().level == logging.DEBUG


def test_no_arguments_prints_help(invoke):
    result = invoke()
    assert "check" in result.output
    assert "fuzz" in result.output
