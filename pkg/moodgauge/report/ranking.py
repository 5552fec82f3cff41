from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, NamedTuple

from moodgauge.errors import EmptyInput, ReportError
from moodgauge.model import CountryCode
from moodgauge.report.matrix import ABSENT, Matrix

if TYPE_CHECKING:
    from fractions import Fraction
    from typing import Iterable, Mapping, Union

    from moodgauge.model import CountryCodeLike
    from moodgauge.report.matrix import Cell

    Score = Union[Fraction, float]

log = logging.getLogger(__name__)


class RankedCountry(NamedTuple):
    rank: int
    country: CountryCode
    value: Score


@dataclass(frozen=True)
class WeeklyRanking:
    """Countries of one week, most optimistic (highest weekly mood) first"""

    week: str
    entries: tuple[RankedCountry, ...]

    def __post_init__(self) -> None:
        if not self.entries:
            raise EmptyInput(f"ranking of {self.week} has no entries")
        countries = [entry.country for entry in self.entries]
        if len(set(countries)) != len(countries):
            raise ReportError(f"ranking of {self.week} lists a country twice")
        for position, entry in enumerate(self.entries, start=1):
            if entry.rank != position:
                raise ReportError(
                    f"ranking of {self.week} has rank {entry.rank} at position "
                    f"{position}"
                )
        for above, below in zip(self.entries, self.entries[1:]):
            if below.value > above.value:
                raise ReportError(
                    f"ranking of {self.week} is not in descending order at "
                    f"{above.country}, {below.country}"
                )

    @property
    def countries(self) -> tuple[CountryCode, ...]:
        return tuple(entry.country for entry in self.entries)

    def rank_of(self, country: CountryCodeLike) -> int | None:
        code = CountryCode.parse(country)
        for entry in self.entries:
            if entry.country == code:
                return entry.rank
        return None


def rank_week(scores: Mapping[CountryCodeLike, Score], week: object) -> WeeklyRanking:
    """
    Sort countries by descending value. Equal values are ordered by ascending
    country code, so the ranking never depends on input order.
    """
    if not scores:
        raise EmptyInput(f"no scores to rank for {week}")
    ordered = sorted(
        ((CountryCode.parse(country), value) for country, value in scores.items()),
        key=lambda item: (-item[1], item[0].code),
    )
    return WeeklyRanking(
        week=str(week),
        entries=tuple(
            RankedCountry(rank, country, value)
            for rank, (country, value) in enumerate(ordered, start=1)
        ),
    )


def rank_trajectories(rankings: Iterable[WeeklyRanking]) -> Matrix:
    """
    Country by week matrix of ranks; a country missing from a week's ranking has
    an absent cell there.
    """
    by_week = {ranking.week: ranking for ranking in rankings}
    countries = sorted(
        {country for ranking in by_week.values() for country in ranking.countries}
    )

    def lookup(country: object, week: object) -> Cell:
        rank = by_week[str(week)].rank_of(country)  # type: ignore[arg-type]
        return ABSENT if rank is None else rank

    return Matrix.build(countries, by_week, lookup, corner="country")
