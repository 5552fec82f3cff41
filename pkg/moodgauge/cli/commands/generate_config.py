from __future__ import annotations

import json

import click
import tomlkit

from moodgauge.cli.config import RawConfig
from moodgauge.cli.util import CONFIG_KEY
from moodgauge.ingestion import CountrySource, IndexSource


def sample_config() -> RawConfig:
    return RawConfig(
        countries=[
            CountrySource(
                country="ITA",
                search_file="data/search/ITA.csv",
                indexes=[
                    IndexSource(index_id="FTSEMIB", price_file="data/prices/FTSEMIB.csv")
                ],
            )
        ],
    )


@click.command(
    short_help="Generate a sample moodgauge configuration",
    context_settings={
        "help_option_names": ["-h", "--help"],
    },
)
@click.option(
    "-f",
    "--format",
    "fmt",
    type=click.Choice(["toml", "json"], case_sensitive=False),
    default="toml",
    help="format for the config to be generated",
)
@click.option(
    "--pyproject",
    "is_pyproject_toml",
    is_flag=True,
    help="Add TOML configuration under 'tool.moodgauge' instead of 'moodgauge'",
)
def generate_config(fmt: str = "toml", is_pyproject_toml: bool = False) -> None:
    """
    Generate a sample configuration with every run default filled in and one
    country, to help you get started. Write it to a file and list your own
    countries and files, for example:

        moodgauge generate-config > moodgauge.toml
    """
    # enums must be dumped as their values, tomlkit cannot serialize them
    config = sample_config().model_dump(mode="json", exclude_none=True)

    config_dct = {CONFIG_KEY: config}
    if is_pyproject_toml and fmt == "toml":
        config_dct = {"tool": config_dct}

    if fmt == "toml":
        click.echo(tomlkit.dumps(config_dct))

    elif fmt == "json":
        click.echo(json.dumps(config_dct, indent=4))
