import json

import pytest
from click.testing import CliRunner

from impbox.cli import main

EXPERT_TEXT = json.dumps(
    {
        "kind": "gen_pbox",
        "space": ["x1", "x2", "x3", "x4", "x5", "x6"],
        "F_low": ["0", "0", "0.2", "0.5", "0.5", "1"],
        "F_upp": ["0.3", "0.3", "0.7", "0.9", "0.9", "1"],
    }
)

EXPECTED_MASS_OUTPUT = """\
{
  "kind": "mass",
  "space": [
    "x1",
    "x2",
    "x3",
    "x4",
    "x5",
    "x6"
  ],
  "focal": {
    "x1,x2,x3": "1/5",
    "x3,x4,x5": "1/5",
    "x1,x2,x3,x4,x5": "1/10",
    "x6": "1/10",
    "x4,x5,x6": "1/5",
    "x3,x4,x5,x6": "1/5"
  }
}
"""


@pytest.fixture
def expert_file(tmp_path):
    path = tmp_path / "expert.json"
    path.write_text(EXPERT_TEXT)
    return str(path)


@pytest.fixture
def runner():
    return CliRunner()


def test_check_valid_document(runner, expert_file):
    result = runner.invoke(main, ["check", expert_file])
    assert result.exit_code == 0
    assert "valid: yes" in result.output
    assert "blocks: 4" in result.output


def test_check_invalid_document(runner, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"kind": "probability", "space": ["x1"], "p": ["1/2"]}')
    result = runner.invoke(main, ["check", str(path)])
    assert result.exit_code == 1


def test_convert_to_mass_golden(runner, expert_file):
    result = runner.invoke(main, ["convert", expert_file, "--to", "mass"])
    assert result.exit_code == 0
    assert result.output == EXPECTED_MASS_OUTPUT


def test_convert_matches_api(runner, expert_file):
    from impbox import docio
    from impbox.pbox import to_random_set

    doc = docio.parse(EXPERT_TEXT)
    expected = docio.serialize(docio.document_for(to_random_set(doc.obj)))
    result = runner.invoke(main, ["convert", expert_file, "--to", "mass"])
    assert result.output == expected


def test_convert_unsupported_arrow(runner, expert_file):
    result = runner.invoke(main, ["convert", expert_file, "--to", "possibility"])
    assert result.exit_code == 2
    assert "supported" in result.output


def test_convert_interval_with_sigma(runner, tmp_path):
    path = tmp_path / "iv.json"
    path.write_text(
        '{"kind": "interval", "space": ["x1", "x2"], '
        '"l": ["0.2", "0.3"], "u": ["0.7", "0.8"]}'
    )
    result = runner.invoke(
        main, ["convert", str(path), "--to", "gen_pbox", "--sigma", "x2,x1"]
    )
    assert result.exit_code == 0
    body = json.loads(result.output)
    assert body["kind"] == "gen_pbox"
    assert body["F_low"] == ["1", "3/10"]


def test_query_golden(runner, expert_file):
    result = runner.invoke(
        main, ["query", expert_file, "--event", "x3,x4,x5", "--bound", "lower"]
    )
    assert result.exit_code == 0
    assert result.output == "1/5 = 0.2\n"


def test_query_upper(runner, expert_file):
    result = runner.invoke(
        main, ["query", expert_file, "--event", "x3,x4,x5", "--bound", "upper"]
    )
    assert result.output == "9/10 = 0.9\n"


def test_verify_golden(runner, expert_file):
    result = runner.invoke(main, ["verify", expert_file])
    assert result.exit_code == 0
    assert result.output == "64/64 events agree\n"


def test_verify_interval(runner, tmp_path):
    path = tmp_path / "iv.json"
    path.write_text(
        '{"kind": "interval", "space": ["x1", "x2"], '
        '"l": ["0.2", "0.3"], "u": ["0.7", "0.8"]}'
    )
    result = runner.invoke(main, ["verify", str(path)])
    assert result.exit_code == 0
    assert result.output == "4/4 events agree\n"


def test_missing_file_is_a_validation_failure(runner, tmp_path):
    result = runner.invoke(main, ["check", str(tmp_path / "nope.json")])
    assert result.exit_code == 1
