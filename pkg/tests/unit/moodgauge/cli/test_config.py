from __future__ import annotations

from pathlib import Path

import pytest
from pydantic import ValidationError

from moodgauge.cli.config import GlobalCommandLineOptions, RawConfig, RuntimeContext
from moodgauge.cli.const import DEFAULT_OUTPUT_DIR
from moodgauge.const import DEFAULT_ZETA_MAX, DEFAULT_ZETA_MIN
from moodgauge.enums import WindowMode
from moodgauge.ingestion import PanelConfig

ITA = {
    "country": "ITA",
    "search_file": "data/search/ITA.csv",
    "indexes": [{"index_id": "FTSEMIB", "price_file": "data/prices/FTSEMIB.csv"}],
}


def test_default_config():
    config = RawConfig()

    assert config.zeta_min == DEFAULT_ZETA_MIN
    assert config.zeta_max == DEFAULT_ZETA_MAX
    assert config.window_mode is WindowMode.ISO_WEEK
    assert config.output_dir == DEFAULT_OUTPUT_DIR
    assert config.threads is None


def test_panel_config_drops_run_settings():
    config = RawConfig.model_validate(
        {"countries": [ITA], "zeta_max": 10, "allow_search_gaps": True}
    )

    panel = config.panel_config()

    assert type(panel) is PanelConfig
    assert panel.countries == config.countries
    assert panel.allow_search_gaps is True


@pytest.mark.parametrize(
    "raw",
    [
        {"zeta_min": -1},
        {"zeta_max": 101},
        {"zeta_min": 30, "zeta_max": 20},
        {"window_mode": "monthly"},
        {"threads": 0},
    ],
)
def test_invalid_settings(raw: dict):
    with pytest.raises(ValidationError):
        RawConfig.model_validate(raw)


def test_window_mode_from_text():
    assert RawConfig.model_validate({"window_mode": "fixed-5"}).window_mode is (
        WindowMode.FIXED_5
    )


def test_threads_from_environment(monkeypatch: pytest.MonkeyPatch):
    monkeypatch.setenv("PANEL_THREADS", "4")
    config = RawConfig.model_validate({"threads": {"env": "PANEL_THREADS"}})
    assert config.threads == 4


def test_threads_environment_default(monkeypatch: pytest.MonkeyPatch):
    monkeypatch.delenv("PANEL_THREADS", raising=False)
    config = RawConfig.model_validate(
        {"threads": {"env": "PANEL_THREADS", "default": "2"}}
    )
    assert config.threads == 2


@pytest.mark.parametrize("value", ["0", "-3"])
def test_threads_environment_below_one_is_rejected(
    monkeypatch: pytest.MonkeyPatch, value: str
):
    monkeypatch.setenv("PANEL_THREADS", value)
    with pytest.raises(ValidationError):
        RawConfig.model_validate({"threads": {"env": "PANEL_THREADS"}})


def test_unset_threads_environment_means_no_limit(monkeypatch: pytest.MonkeyPatch):
    monkeypatch.delenv("PANEL_THREADS", raising=False)
    config = RawConfig.model_validate({"threads": {"env": "PANEL_THREADS"}})
    assert config.threads is None


def test_runtime_context(tmp_path: Path, monkeypatch: pytest.MonkeyPatch):
    monkeypatch.chdir(tmp_path)
    config_file = tmp_path / "conf" / "moodgauge.toml"
    config_file.parent.mkdir()
    (tmp_path / "conf" / "ITA.csv").write_text("date,value\n")
    raw = RawConfig.model_validate(
        {"countries": [ITA], "zeta_min": 2, "zeta_max": 8, "output_dir": "reports"}
    )

    ctx = RuntimeContext.from_raw_config(
        raw, GlobalCommandLineOptions(config_file=str(config_file))
    )

    assert ctx.config_path == config_file.resolve()
    assert ctx.zeta_bounds == (2, 8)
    assert ctx.output_dir == Path.cwd() / "reports"
    assert ctx.window_mode is WindowMode.ISO_WEEK
    assert [entry.country for entry in ctx.panel.countries] == ["ITA"]
    # inputs are found next to the configuration file
    assert ctx.file_resolver("ITA.csv") == b"date,value\n"


def test_runtime_context_keeps_absolute_output_dir(tmp_path: Path):
    raw = RawConfig(output_dir=str(tmp_path / "out"))
    ctx = RuntimeContext.from_raw_config(
        raw, GlobalCommandLineOptions(config_file=str(tmp_path / "moodgauge.toml"))
    )
    assert ctx.output_dir == tmp_path / "out"
