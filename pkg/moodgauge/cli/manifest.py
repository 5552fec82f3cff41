from __future__ import annotations

import logging
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import TYPE_CHECKING

from moodgauge.const import SCALE_MAX
from moodgauge.helpers import sha256_digest

if TYPE_CHECKING:
    from pathlib import Path
    from typing import Mapping

    from moodgauge.enums import WindowMode

log = logging.getLogger(__name__)


@dataclass
class RunManifest:
    """
    Record of a run, written as ``key=value`` lines. It is the only output which
    carries a timestamp; every report file is listed with its sha256 digest.
    """

    config_path: Path
    output_dir: Path
    zeta_min: int
    zeta_max: int
    window_mode: WindowMode
    weeks: str = ""
    countries: tuple[str, ...] = ()
    digests: dict[str, str] = field(default_factory=dict)
    created: datetime = field(
        default_factory=lambda: datetime.now(timezone.utc).replace(microsecond=0)
    )

    def __post_init__(self) -> None:
        if not 0 <= self.zeta_min <= self.zeta_max <= SCALE_MAX:
            raise ValueError(
                f"threshold bounds [{self.zeta_min}, {self.zeta_max}] must satisfy "
                f"0 <= zeta_min <= zeta_max <= {SCALE_MAX}"
            )

    def record(self, files: Mapping[str, bytes]) -> None:
        for name, content in files.items():
            self.digests[name] = sha256_digest(content)

    def to_output_text(self) -> str:
        if not self.digests:
            raise ValueError("no emitted files were recorded in the manifest")

        outputs = {
            "config": str(self.config_path),
            "output_dir": str(self.output_dir),
            "zeta_min": str(self.zeta_min),
            "zeta_max": str(self.zeta_max),
            "window_mode": str(self.window_mode),
            "weeks": self.weeks,
            "countries": ",".join(self.countries),
            "created": self.created.isoformat(),
            **{
                f"file.{name}": f"sha256:{digest}"
                for name, digest in sorted(self.digests.items())
            },
        }
        return str.join("", [f"{key}={value!s}\n" for key, value in outputs.items()])

    def write(self, path: Path) -> None:
        log.debug("writing manifest of %s files to %s", len(self.digests), path)
        path.write_text(self.to_output_text(), encoding="utf-8")


def read_manifest(text: str) -> dict[str, str]:
    """Parse ``key=value`` lines back into a dict"""
    entries: dict[str, str] = {}
    for line in text.splitlines():
        if not line.strip():
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ValueError(f"manifest line {line!r} is not a key=value pair")
        entries[key] = value
    return entries
