from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import TYPE_CHECKING, Callable, NamedTuple

from moodgauge.enums import SeriesKind
from moodgauge.errors import CountryEmpty, IngestionError, InputReadError
from moodgauge.helpers import resolve_worker_count
from moodgauge.ingestion.alignment import align
from moodgauge.ingestion.diagnostics import Diagnostic, DiagnosticsReport
from moodgauge.ingestion.reader import parse_series
from moodgauge.model import CountryCode, CountryPanel

if TYPE_CHECKING:
    from moodgauge.ingestion.config import CountrySource, PanelConfig
    from moodgauge.model import AlignedPair, ObservationSeries

log = logging.getLogger(__name__)

FileResolver = Callable[[str], bytes]


class _CountryOutcome(NamedTuple):
    country: str
    panel: CountryPanel | None
    diagnostics: list[Diagnostic]


def _load(
    resolver: FileResolver, path: str, kind: SeriesKind, date_format: str
) -> ObservationSeries:
    try:
        content = resolver(path)
    except OSError as err:
        raise InputReadError(f"cannot read {kind} file {path!r}: {err}") from err

    try:
        return parse_series(content, kind, date_format)
    except IngestionError as err:
        raise type(err)(f"{path}: {err}") from err


def _build_country(
    source: CountrySource, config: PanelConfig, resolver: FileResolver
) -> _CountryOutcome:
    diagnostics: list[Diagnostic] = []
    try:
        search = _load(
            resolver, source.search_file, SeriesKind.SEARCH, config.date_format
        )
    except IngestionError as err:
        # every pair of the country needs the attention series
        diagnostics.extend(
            Diagnostic.from_error(source.country, index.index_id, err)
            for index in source.indexes
        )
        return _CountryOutcome(source.country, None, diagnostics)

    pairs: list[AlignedPair] = []
    for index in source.indexes:
        try:
            price = _load(
                resolver, index.price_file, SeriesKind.PRICE, config.date_format
            )
            pairs.append(
                align(
                    search,
                    price,
                    country=source.country,
                    index_id=index.index_id,
                    allow_search_gaps=config.allow_search_gaps,
                )
            )
        except IngestionError as err:
            diagnostics.append(
                Diagnostic.from_error(source.country, index.index_id, err)
            )

    panel = (
        CountryPanel(country=CountryCode(source.country), pairs=tuple(pairs))
        if pairs
        else None
    )
    if panel is not None:
        log.info(
            "%s: %s of %s indexes aligned",
            source.country,
            panel.K,
            len(source.indexes),
        )
    return _CountryOutcome(source.country, panel, diagnostics)


def build_panel(
    config: PanelConfig,
    file_resolver: FileResolver,
    *,
    diagnostics: DiagnosticsReport | None = None,
    max_workers: int | None = None,
) -> list[CountryPanel]:
    """
    Ingest every country of ``config``, one thread per country. The threads
    overlap the reads through ``file_resolver``; parsing and alignment still
    share the interpreter lock.

    Pairs which fail are recorded in ``diagnostics`` and left out. Once every
    country has been attempted, :class:`CountryEmpty` is raised if any of them
    lost all its indexes; it carries the panels which could be built. Panels are
    returned in configuration order.
    """
    report = diagnostics if diagnostics is not None else DiagnosticsReport()
    if not config.countries:
        return []

    workers = min(resolve_worker_count(max_workers), len(config.countries))
    with ThreadPoolExecutor(max_workers=workers) as executor:
        outcomes = list(
            executor.map(
                lambda source: _build_country(source, config, file_resolver),
                config.countries,
            )
        )

    panels: list[CountryPanel] = []
    empty: list[str] = []
    for outcome in outcomes:
        report.extend(outcome.diagnostics)
        if outcome.panel is None:
            empty.append(outcome.country)
        else:
            panels.append(outcome.panel)

    if empty:
        raise CountryEmpty(
            f"no index could be ingested for {', '.join(empty)}",
            countries=tuple(empty),
            panels=panels,
            diagnostics=report,
        )
    return panels


def path_resolver(base_dir: str | None = None) -> FileResolver:
    """Resolve config paths as files, relative paths against ``base_dir``"""
    base = Path(base_dir) if base_dir else Path.cwd()

    def _read(path: str) -> bytes:
        candidate = Path(path).expanduser()
        if not candidate.is_absolute():
            candidate = base / candidate
        return candidate.read_bytes()

    return _read
