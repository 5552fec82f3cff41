from __future__ import annotations

import io
import logging
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, NamedTuple

import pandas as pd

from moodgauge.const import CSV_LINE_TERMINATOR

if TYPE_CHECKING:
    from typing import Iterable, Iterator

    from moodgauge.errors import IngestionError

log = logging.getLogger(__name__)

DIAGNOSTICS_HEADER = ("country", "index_id", "error_code", "detail")


class Diagnostic(NamedTuple):
    """A (country, index) pair that could not be ingested, and why"""

    country: str
    index_id: str
    error_code: str
    detail: str

    @classmethod
    def from_error(
        cls, country: str, index_id: str, error: IngestionError
    ) -> Diagnostic:
        return cls(country, index_id, error.code, str(error))


@dataclass
class DiagnosticsReport:
    entries: list[Diagnostic] = field(default_factory=list)

    def add(self, diagnostic: Diagnostic) -> None:
        log.warning(
            "dropping %s:%s [%s] %s",
            diagnostic.country,
            diagnostic.index_id,
            diagnostic.error_code,
            diagnostic.detail,
        )
        self.entries.append(diagnostic)

    def extend(self, diagnostics: Iterable[Diagnostic]) -> None:
        for diagnostic in diagnostics:
            self.add(diagnostic)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Diagnostic]:
        return iter(self.entries)

    def __bool__(self) -> bool:
        return bool(self.entries)

    def codes(self) -> list[str]:
        return [entry.error_code for entry in self.entries]

    def to_csv_bytes(self) -> bytes:
        """RFC 4180 CSV with a header row, written even when there are no entries"""
        frame = pd.DataFrame(self.entries, columns=list(DIAGNOSTICS_HEADER))
        buffer = io.StringIO()
        frame.to_csv(buffer, index=False, lineterminator=CSV_LINE_TERMINATOR)
        return buffer.getvalue().encode("utf-8")
