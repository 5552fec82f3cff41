"""Per-country evaluation of every indicator of a panel"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import TYPE_CHECKING

from moodgauge.enums import WindowMode
from moodgauge.helpers import resolve_worker_count
from moodgauge.indicators import (
    DEFAULT_ZETA_GRID,
    pair_window_scores,
    weekly_country_scores,
    zeta_sweep,
)
from moodgauge.indicators.threshold import validate_grid

if TYPE_CHECKING:
    from fractions import Fraction
    from typing import Callable, Iterable, Sequence

    from moodgauge.indicators import MoodWindowScore, ThresholdProfile, WeekLabel
    from moodgauge.model import AlignedPair, CountryCode, CountryPanel

    WeekFilter = Callable[[WeekLabel], bool]

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class PairWeeks:
    pair: AlignedPair
    weeks: tuple[tuple[WeekLabel, Fraction], ...]


@dataclass(frozen=True)
class CountryResult:
    """Everything computed for one country; weeks outside the filter are left out"""

    panel: CountryPanel
    pair_weeks: tuple[PairWeeks, ...]
    weekly: tuple[MoodWindowScore, ...]
    profile: ThresholdProfile

    @property
    def country(self) -> CountryCode:
        return self.panel.country


def analyze_country(
    panel: CountryPanel,
    *,
    grid: Sequence[int] = DEFAULT_ZETA_GRID,
    mode: WindowMode = WindowMode.ISO_WEEK,
    week_filter: WeekFilter | None = None,
) -> CountryResult:
    keep = week_filter or (lambda _: True)
    pair_weeks = tuple(
        PairWeeks(
            pair=pair,
            weeks=tuple(
                (window.label, value)
                for window, value in pair_window_scores(pair, mode)
                if keep(window.label)
            ),
        )
        for pair in panel.pairs
    )
    weekly = tuple(
        score for score in weekly_country_scores(panel, mode) if keep(score.week)
    )
    profile = zeta_sweep(panel, grid)
    log.info(
        "%s: %s weeks, %s thresholds over %s indexes",
        panel.country,
        len(weekly),
        len(profile.zeta_grid),
        panel.K,
    )
    return CountryResult(
        panel=panel, pair_weeks=pair_weeks, weekly=weekly, profile=profile
    )


def compute_all(
    panels: Iterable[CountryPanel],
    *,
    grid: Sequence[int] = DEFAULT_ZETA_GRID,
    mode: WindowMode = WindowMode.ISO_WEEK,
    week_filter: WeekFilter | None = None,
    max_workers: int | None = None,
) -> list[CountryResult]:
    """
    Analyze every panel, in worker processes when more than one worker is
    allowed: the indicators are pure-Python exact arithmetic, so threads would
    serialize on the interpreter lock. ``week_filter`` must then be picklable,
    e.g. a bound method rather than a lambda. Results come back in the order of
    ``panels`` whatever the number of workers.
    """
    panels = list(panels)
    grid = validate_grid(grid)
    if not panels:
        return []

    analyze = partial(analyze_country, grid=grid, mode=mode, week_filter=week_filter)
    # more processes than cores only adds start-up cost
    workers = min(resolve_worker_count(max_workers), len(panels), os.cpu_count() or 1)
    if workers == 1:
        log.debug("analyzing %s countries in-process", len(panels))
        return [analyze(panel) for panel in panels]

    log.debug("analyzing %s countries with %s processes", len(panels), workers)
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(analyze, panels))
