from __future__ import annotations

import logging
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional, Tuple

from pydantic import BaseModel, Field, field_validator, model_validator

# typing_extensions is for Python 3.9, 3.10 compatibility
from typing_extensions import Self

from moodgauge.cli.const import DEFAULT_CONFIG_FILE, DEFAULT_OUTPUT_DIR
from moodgauge.const import DEFAULT_ZETA_MAX, DEFAULT_ZETA_MIN, SCALE_MAX
from moodgauge.enums import WindowMode
from moodgauge.ingestion import FileResolver, PanelConfig, path_resolver

log = logging.getLogger(__name__)


class EnvConfigVar(BaseModel):
    env: str
    default: Optional[str] = None
    default_env: Optional[str] = None

    def getvalue(self) -> Optional[str]:
        return os.getenv(self.env, os.getenv(self.default_env or "", self.default))


class RawConfig(PanelConfig):
    """The full configuration file: the panel plus defaults for a run"""

    zeta_min: int = Field(DEFAULT_ZETA_MIN, ge=0, le=SCALE_MAX)
    zeta_max: int = Field(DEFAULT_ZETA_MAX, ge=0, le=SCALE_MAX)
    window_mode: WindowMode = WindowMode.ISO_WEEK
    output_dir: str = DEFAULT_OUTPUT_DIR
    threads: Optional[int] = Field(None, ge=1)

    @field_validator("threads", mode="before")
    @classmethod
    def resolve_env_vars(cls, val: Any) -> Any:
        ret_val = (
            val
            if not isinstance(val, dict)
            else (EnvConfigVar.model_validate(val).getvalue())
        )
        # an unset variable means no setting; 0 must still reach the bound check
        return None if ret_val in (None, "") else ret_val

    @model_validator(mode="after")
    def check_zeta_bounds(self) -> Self:
        if self.zeta_min > self.zeta_max:
            raise ValueError(
                f"zeta_min ({self.zeta_min}) cannot exceed zeta_max ({self.zeta_max})"
            )
        return self

    def panel_config(self) -> PanelConfig:
        return PanelConfig(
            countries=self.countries,
            date_format=self.date_format,
            allow_search_gaps=self.allow_search_gaps,
        )


@dataclass
class GlobalCommandLineOptions:
    """
    A dataclass to hold all the command line options that
    should be set in the RuntimeContext
    """

    noop: bool = False
    verbosity: int = 0
    config_file: str = DEFAULT_CONFIG_FILE


######
# RuntimeContext
######
# What commands find on `click.Context.obj`. Defaults live on `RawConfig`;
# every value here is already resolved.
@dataclass
class RuntimeContext:
    config_path: Path
    panel: PanelConfig
    file_resolver: FileResolver
    zeta_bounds: Tuple[int, int]
    window_mode: WindowMode
    output_dir: Path
    threads: Optional[int]
    global_cli_options: GlobalCommandLineOptions

    @classmethod
    def from_raw_config(
        cls,
        raw: RawConfig,
        global_cli_options: GlobalCommandLineOptions,
    ) -> RuntimeContext:
        config_path = Path(global_cli_options.config_file).resolve()
        if not raw.countries:
            log.warning("configuration %s lists no countries", config_path)

        # input files are looked up next to the configuration file
        resolver = path_resolver(str(config_path.parent))

        output_dir = Path(raw.output_dir).expanduser()
        if not output_dir.is_absolute():
            output_dir = Path.cwd() / output_dir

        return cls(
            config_path=config_path,
            panel=raw.panel_config(),
            file_resolver=resolver,
            zeta_bounds=(raw.zeta_min, raw.zeta_max),
            window_mode=raw.window_mode,
            output_dir=output_dir,
            threads=raw.threads,
            global_cli_options=global_cli_options,
        )
