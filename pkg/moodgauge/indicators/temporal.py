"""
Time-dependent mood measures.

For a window [t1, t2] of a pair, the mood window index compares the share of
normalized price mass falling in the window with the share of attention mass:

    A = 1/2 * sum_{s=t1..t2} (p_norm[s] / P_bar - w[s] / W) + 1/2

A value above 1/2 reads as optimism (relatively high prices, little attention),
below 1/2 as anxiety. Over the whole grid A is exactly 1/2. Windows are the
trading days of one ISO calendar week.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from datetime import date
from fractions import Fraction
from itertools import groupby
from numbers import Real
from typing import TYPE_CHECKING, NamedTuple, TypeVar

from moodgauge.const import WEEK_WINDOW_DAYS
from moodgauge.enums import WindowMode
from moodgauge.errors import (
    EmptyList,
    IndexOutOfRange,
    IndicatorRangeError,
    WindowTooLong,
    ZeroTotal,
)
from moodgauge.model import PairAggregates

if TYPE_CHECKING:
    from typing import Iterable, Sequence

    from moodgauge.model import AlignedPair, CountryPanel

log = logging.getLogger(__name__)

_V = TypeVar("_V", Fraction, float)


class WeekLabel(NamedTuple):
    """ISO-8601 (year, week) pair, rendered as ``2020-W11``"""

    year: int
    week: int

    def __str__(self) -> str:
        return f"{self.year}-W{self.week:02d}"

    @classmethod
    def from_date(cls, day: date) -> WeekLabel:
        iso = day.isocalendar()
        return cls(iso[0], iso[1])


@dataclass(frozen=True)
class Window:
    """Inclusive 1-based positions ``t1..t2`` on a pair's grid"""

    t1: int
    t2: int
    label: WeekLabel

    def __post_init__(self) -> None:
        if not 1 <= self.t1 <= self.t2:
            raise IndexOutOfRange(f"invalid window [{self.t1}, {self.t2}]")
        if self.length > WEEK_WINDOW_DAYS:
            raise WindowTooLong(
                f"window {self.label} spans {self.length} trading days, at most "
                f"{WEEK_WINDOW_DAYS} are allowed"
            )

    @property
    def length(self) -> int:
        return self.t2 - self.t1 + 1


@dataclass(frozen=True)
class MoodWindowScore:
    """Country-level mood of one week, with the per-index values it averages"""

    week: WeekLabel
    per_index: tuple[tuple[str, Fraction], ...]
    country_value: Fraction

    def __post_init__(self) -> None:
        expected = country_mood_window([value for _, value in self.per_index])
        if self.country_value != expected:
            raise IndicatorRangeError(
                f"country value {self.country_value} for {self.week} is not the mean "
                f"of its per-index values ({expected})"
            )


def mean_in_unit_interval(values: Sequence[_V], what: str = "values") -> _V:
    """Arithmetic mean of values which must all lie in [0, 1]"""
    if not values:
        raise EmptyList(f"cannot average an empty list of {what}")
    for value in values:
        if not isinstance(value, Real) or not 0 <= value <= 1:
            raise IndicatorRangeError(f"{what} must lie in [0, 1], got {value!r}")
    return sum(values) / len(values)  # type: ignore[return-value]


def pair_aggregates(pair: AlignedPair) -> PairAggregates:
    """Totals ``W = sum(w)`` and ``P_bar = sum(p_norm)`` over the whole grid"""
    total_w = sum(pair.w)
    total_p = sum(pair.p_norm)
    if total_w == 0:
        raise ZeroTotal(f"attention series of {pair.label} sums to zero")
    if total_p == 0:
        raise ZeroTotal(f"normalized prices of {pair.label} sum to zero")
    return PairAggregates(W=total_w, P_bar=total_p)


def mood_window_index(
    pair: AlignedPair, agg: PairAggregates, t1: int, t2: int
) -> Fraction:
    """
    Mood window index of ``pair`` over the inclusive 1-based window [t1, t2].

    Evaluated as the exact rational
    ``(sum_s (p[s] * W - w[s] * P_bar) + P_bar * W) / (2 * P_bar * W)``.
    """
    if not 1 <= t1 <= t2 <= pair.T:
        raise IndexOutOfRange(
            f"window [{t1}, {t2}] is outside [1, {pair.T}] for {pair.label}"
        )

    total_w, total_p = agg.W, agg.P_bar
    numerator = sum(
        pair.p_norm[s] * total_w - pair.w[s] * total_p for s in range(t1 - 1, t2)
    )
    value = Fraction(numerator + total_p * total_w, 2 * total_p * total_w)
    if not 0 <= value <= 1:
        raise IndicatorRangeError(
            f"mood window index {float(value)} of {pair.label} over [{t1}, {t2}] "
            "left [0, 1]"
        )
    return value


def country_mood_window(scores: Sequence[_V]) -> _V:
    """Average of the per-index window values of one country"""
    return mean_in_unit_interval(scores, "window scores")


def _iso_week_windows(dates: Sequence[date]) -> list[Window]:
    windows = []
    position = 1
    for label, days in groupby(dates, key=WeekLabel.from_date):
        length = len(list(days))
        if length > WEEK_WINDOW_DAYS:
            raise WindowTooLong(
                f"ISO week {label} holds {length} trading days; use the "
                f"'{WindowMode.FIXED_5}' window mode for such calendars"
            )
        windows.append(Window(t1=position, t2=position + length - 1, label=label))
        position += length
    return windows


def _fixed_windows(dates: Sequence[date]) -> list[Window]:
    windows = []
    for start in range(0, len(dates), WEEK_WINDOW_DAYS):
        end = min(start + WEEK_WINDOW_DAYS, len(dates))
        label = WeekLabel.from_date(dates[start])
        if windows and windows[-1].label == label:
            raise WindowTooLong(
                f"two {WEEK_WINDOW_DAYS}-day windows start in ISO week {label}"
            )
        windows.append(Window(t1=start + 1, t2=end, label=label))
    return windows


def weekly_windows(
    pair: AlignedPair, mode: WindowMode = WindowMode.ISO_WEEK
) -> list[Window]:
    """
    Partition 1..T into chronological windows.

    In ``iso-week`` mode each window holds the trading days of one ISO calendar
    week, so holidays shorten a window rather than shifting the next one. In
    ``fixed-5`` mode the grid is cut into runs of five trading days, each labelled
    by the ISO week of its first day.
    """
    if mode is WindowMode.FIXED_5:
        windows = _fixed_windows(pair.dates)
    else:
        windows = _iso_week_windows(pair.dates)
    if not partition_is_complete(windows, pair.T):
        raise IndexOutOfRange(
            f"{mode} windows of {pair.label} do not tile 1..{pair.T}"
        )
    return windows


def pair_window_scores(
    pair: AlignedPair, mode: WindowMode = WindowMode.ISO_WEEK
) -> list[tuple[Window, Fraction]]:
    agg = pair_aggregates(pair)
    return [
        (window, mood_window_index(pair, agg, window.t1, window.t2))
        for window in weekly_windows(pair, mode)
    ]


def weekly_country_scores(
    panel: CountryPanel, mode: WindowMode = WindowMode.ISO_WEEK
) -> list[MoodWindowScore]:
    """
    Country-level weekly moods. Each week averages the indexes which traded in
    that week; a week without trading on one exchange does not count it.
    """
    by_week: dict[WeekLabel, list[tuple[str, Fraction]]] = {}
    for pair in panel.pairs:
        for window, value in pair_window_scores(pair, mode):
            by_week.setdefault(window.label, []).append((pair.index_id, value))

    scores = [
        MoodWindowScore(
            week=week,
            per_index=tuple(per_index),
            country_value=country_mood_window([value for _, value in per_index]),
        )
        for week, per_index in sorted(by_week.items())
    ]
    log.debug("computed %s weekly scores for %s", len(scores), panel.country)
    return scores


def partition_is_complete(windows: Iterable[Window], n_days: int) -> bool:
    """True when ``windows`` tile 1..n_days in order without gaps or overlaps"""
    expected_start = 1
    for window in windows:
        if window.t1 != expected_start:
            return False
        expected_start = window.t2 + 1
    return expected_start == n_days + 1
