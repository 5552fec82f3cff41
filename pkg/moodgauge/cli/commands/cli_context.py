from __future__ import annotations

import logging
from pathlib import Path
from typing import TYPE_CHECKING

import click
from pydantic import ValidationError

from moodgauge.cli.config import RawConfig, RuntimeContext
from moodgauge.cli.const import EXIT_USAGE_ERROR
from moodgauge.cli.util import load_raw_config_file
from moodgauge.errors import InvalidConfiguration

if TYPE_CHECKING:
    from typing import NoReturn

    from moodgauge.cli.config import GlobalCommandLineOptions


class CliContextObj:
    """
    What every subcommand finds on ``click.Context.obj``. The configuration file
    is only read when a command asks for ``runtime_ctx``, so ``--help`` and
    ``generate-config`` work without one.
    """

    def __init__(
        self,
        ctx: click.Context,
        logger: logging.Logger,
        global_opts: GlobalCommandLineOptions,
    ) -> None:
        self.ctx = ctx
        self.logger = logger
        self.global_opts = global_opts
        self._runtime_ctx: RuntimeContext | None = None

    @property
    def runtime_ctx(self) -> RuntimeContext:
        if self._runtime_ctx is None:
            self._runtime_ctx = self._load_runtime_ctx()
        return self._runtime_ctx

    def _load_runtime_ctx(self) -> RuntimeContext:
        config_path = Path(self.global_opts.config_file)
        if not config_path.is_file():
            self._usage_error(f"Configuration file {config_path} does not exist")

        try:
            raw_config = RawConfig.model_validate(load_raw_config_file(config_path))
        except (OSError, InvalidConfiguration, ValidationError) as exc:
            self._usage_error(str(exc))

        self.logger.debug(
            "configuration lists %s countries", len(raw_config.countries)
        )
        return RuntimeContext.from_raw_config(
            raw_config, global_cli_options=self.global_opts
        )

    def _usage_error(self, message: str) -> NoReturn:
        click.echo(message, err=True)
        self.ctx.exit(EXIT_USAGE_ERROR)
