import json
import pytest
from typer.testing import CliRunner

from main import app

@pytest.fixture(scope="package")
def runner():
    return CliRunner()

@pytest.fixture(scope="function")
def invoke(runner):
    def run(*args: str):
        return runner.invoke(app, list(args))
    return run

@pytest.fixture(scope="function")
def scenario_file(tmp_path):
    """
    Writes a scenario dict (or raw text) to a temporary file and returns its path as a string.
    """
    def write(content, name: str = "scenario.json") -> str:
        path = tmp_path / name
        path.write_text(content if isinstance(content, str) else json.dumps(content), encoding="utf-8")
        return str(path)
    return write

@pytest.fixture(scope="function")
def letter_scenario():
    return {
        "name": "letter",
        "agents": ["a", "b"],
        "props": ["p"],
        "actions": {"sp": "p", "snp": "!p"},
        "epistemic": {
            "M0": {"worlds": ["w0", "w1"], "val": {"p": ["w0"]}, "edges": [["a", "w0", "w1"], ["b", "w0", "w1"]]},
        },
        "action_models": {"A0": {"actions": ["sp", "snp"], "edges": [["a", "sp", "snp"]]}},
        "dynamic": {"D": {"base": "M0", "f_edges": [["a", "w0", "sp", "snp"], ["a", "w1", "sp", "snp"]]}},
        "checks": [
            {"model": "M0^A0", "formula": "K_b p | K_b !p", "expect": True},
            {"model": "D", "world": "w0", "formula": "[sp] K_a p", "expect": False},
        ],
    }
