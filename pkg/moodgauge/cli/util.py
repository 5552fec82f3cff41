"""Utilities for command-line functionality"""

from __future__ import annotations

import json
import logging
import sys
from pathlib import Path
from typing import Any

import rich
import tomlkit
from tomlkit.exceptions import TOMLKitError

from moodgauge.errors import InvalidConfiguration

log = logging.getLogger(__name__)

CONFIG_KEY = "moodgauge"


def rprint(msg: str) -> None:
    """Rich-prints to stderr so that the CSV written to stdout stays clean"""
    rich.print(msg, file=sys.stderr)


def noop_report(msg: str) -> None:
    rprint(f"[bold cyan]:shield: moodgauge 'noop' mode is enabled! {msg}")


def _our_table(document: dict[str, Any]) -> dict[str, Any]:
    """``tool.moodgauge`` when present (pyproject.toml), else ``moodgauge``, else {}"""
    tool = document.get("tool")
    if isinstance(tool, dict) and isinstance(tool.get(CONFIG_KEY), dict):
        return tool[CONFIG_KEY]
    table = document.get(CONFIG_KEY, {})
    return table if isinstance(table, dict) else {}


def parse_toml(raw_text: str) -> dict[Any, Any]:
    """
    Parse TOML text and return the moodgauge table of it.
    Raises InvalidConfiguration if the text is not valid TOML.
    """
    try:
        document = tomlkit.loads(raw_text).unwrap()
    except TOMLKitError as exc:
        raise InvalidConfiguration(str(exc)) from exc
    return _our_table(document)


def parse_json(raw_text: str) -> dict[Any, Any]:
    try:
        document = json.loads(raw_text)
    except json.JSONDecodeError as exc:
        raise InvalidConfiguration(str(exc)) from exc
    if not isinstance(document, dict):
        log.debug("JSON configuration is not an object, ignoring it")
        return {}
    return _our_table(document)


def load_raw_config_file(config_file: Path | str) -> dict[Any, Any]:
    """
    Read ``config_file`` and return its moodgauge table as a plain dict. The text
    is tried as TOML first and then as JSON; when neither parses,
    InvalidConfiguration lists both errors. FileNotFoundError propagates.
    """
    path = Path(config_file).resolve()
    log.info("Loading configuration from %s", path)
    raw_text = path.read_text(encoding="utf-8")

    errors: list[str] = []
    for fmt, parser in (("TOML", parse_toml), ("JSON", parse_json)):
        try:
            table = parser(raw_text)
        except InvalidConfiguration as err:
            log.debug("%s is not valid %s: %s", path, fmt, err)
            errors.append(f"* {fmt}: {err}")
            continue
        if not table:
            log.debug("%s has no %r table", path, CONFIG_KEY)
        return table

    raise InvalidConfiguration(
        "\n".join(
            [f"None of the supported formats could parse {config_file}:", *errors]
        )
    )
