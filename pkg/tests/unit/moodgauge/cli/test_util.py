from __future__ import annotations

import json
from textwrap import dedent

import pytest

from moodgauge.cli.util import load_raw_config_file, parse_toml
from moodgauge.errors import InvalidConfiguration


@pytest.mark.parametrize(
    "toml_text, expected",
    [
        (
            dedent(
                r"""
                [not_the_right_key]
                foo = "bar"
                """
            ),
            {},
        ),
        (
            dedent(
                r"""
                [moodgauge]
                zeta_max = 20
                """
            ),
            {"zeta_max": 20},
        ),
        (
            dedent(
                r"""
                [tool.moodgauge]
                zeta_min = 1

                [[tool.moodgauge.countries]]
                country = "ITA"
                search_file = "ITA.csv"
                """
            ),
            {
                "zeta_min": 1,
                "countries": [{"country": "ITA", "search_file": "ITA.csv"}],
            },
        ),
    ],
)
def test_parse_toml(toml_text, expected):
    assert parse_toml(toml_text) == expected


def test_parse_toml_raises_invalid_configuration_with_invalid_toml():
    invalid_toml = dedent(
        r"""
        [moodgauge]
        window_mode = iso-week  # this is not a valid TOML string
        """
    )

    with pytest.raises(InvalidConfiguration):
        parse_toml(invalid_toml)


@pytest.fixture
def raw_toml_config_file(tmp_path):
    path = tmp_path / "config.toml"
    path.write_text(
        dedent(
            r"""
            [moodgauge]
            output_dir = "out"

            [[moodgauge.countries]]
            country = "GRC"
            """
        )
    )
    return path


@pytest.fixture
def raw_json_config_file(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(
        json.dumps({"moodgauge": {"output_dir": "out", "countries": [{"country": "GRC"}]}})
    )
    return path


@pytest.fixture
def invalid_config_file(tmp_path):
    path = tmp_path / "config.txt"
    path.write_text("[moodgauge\noutput_dir: out")
    return path


@pytest.mark.parametrize("fixture_name", ["raw_toml_config_file", "raw_json_config_file"])
def test_load_raw_config_file(fixture_name: str, request: pytest.FixtureRequest):
    path = request.getfixturevalue(fixture_name)
    assert load_raw_config_file(path) == {
        "output_dir": "out",
        "countries": [{"country": "GRC"}],
    }


def test_load_raw_config_file_without_our_key(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"other": 1}))
    assert load_raw_config_file(path) == {}


def test_load_raw_config_file_raises_when_unparseable(invalid_config_file):
    with pytest.raises(InvalidConfiguration):
        load_raw_config_file(invalid_config_file)


def test_load_raw_config_file_missing(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_raw_config_file(tmp_path / "nope.toml")
