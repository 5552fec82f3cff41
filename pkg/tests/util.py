"""Builders of random pairs and brute-force reference implementations"""

from __future__ import annotations

from datetime import date, timedelta
from decimal import Decimal
from fractions import Fraction
from typing import TYPE_CHECKING

from moodgauge.indicators import normalize_prices
from moodgauge.model import AlignedPair, CountryCode, NormalizedSeries
from moodgauge.report import Matrix

from tests.const import A_MONDAY

if TYPE_CHECKING:
    from random import Random
    from typing import Callable, Sequence

    from moodgauge.model import ObservationSeries


def weekdays(start: date, n_days: int) -> list[date]:
    """The first ``n_days`` Monday to Friday dates from ``start`` on"""
    days: list[date] = []
    day = start
    while len(days) < n_days:
        if day.weekday() < 5:
            days.append(day)
        day += timedelta(days=1)
    return days


def calendar_days(start: date, n_days: int) -> list[date]:
    return [start + timedelta(days=i) for i in range(n_days)]


def select_columns(matrix: Matrix, keep: Callable[[str], bool]) -> Matrix:
    positions = [i for i, label in enumerate(matrix.col_labels) if keep(label)]
    return Matrix(
        row_labels=matrix.row_labels,
        col_labels=tuple(matrix.col_labels[i] for i in positions),
        cells=tuple(tuple(row[i] for i in positions) for row in matrix.cells),
        corner=matrix.corner,
    )


def make_pair(
    w: Sequence[int],
    p_norm: Sequence[int],
    *,
    country: str = "TST",
    index_id: str = "IDX",
    dates: Sequence[date] | None = None,
) -> AlignedPair:
    return AlignedPair.from_values(
        country,
        index_id,
        dates if dates is not None else weekdays(A_MONDAY, len(w)),
        w,
        p_norm,
    )


def random_raw_prices(rng: Random, n_days: int) -> list[Decimal]:
    """Nonnegative decimal prices with two decimals, at least one of them positive"""
    prices = [Decimal(rng.randint(0, 10**6)) / 100 for _ in range(n_days)]
    if not any(prices):
        prices[rng.randrange(n_days)] = Decimal("0.01")
    return prices


def random_pair(
    rng: Random,
    n_days: int | None = None,
    *,
    max_days: int = 40,
    country: str = "TST",
    index_id: str = "IDX",
) -> AlignedPair:
    """A pair on consecutive weekdays with arbitrary searches and prices"""
    n_days = n_days or rng.randint(2, max_days)
    w = [rng.randint(0, 100) for _ in range(n_days)]
    w[0] = rng.randint(1, 100)
    raw = random_raw_prices(rng, n_days)
    return AlignedPair(
        country=CountryCode(country),
        index_id=index_id,
        dates=tuple(weekdays(A_MONDAY, n_days)),
        w=tuple(w),
        p_norm=normalize_prices(raw),
        raw_prices=tuple(raw),
    )


def random_swappable_pair(rng: Random, n_days: int | None = None) -> AlignedPair:
    """
    A pair whose searches and normalized prices may trade places: both start
    above zero and both reach 100
    """
    n_days = n_days or rng.randint(2, 40)

    def side() -> list[int]:
        values = [rng.randint(0, 100) for _ in range(n_days)]
        values[0] = rng.randint(1, 100)
        values[rng.randrange(n_days)] = 100
        return values

    return make_pair(side(), side())


def swap_sides(pair: AlignedPair) -> AlignedPair:
    return AlignedPair(
        country=pair.country,
        index_id=pair.index_id,
        dates=pair.dates,
        w=pair.p_norm.values,
        p_norm=NormalizedSeries.from_values(pair.w),
    )


######
# Brute-force oracles
######
def oracle_normalize(raw: Sequence[Decimal]) -> list[int]:
    """Integer-only normalization: scale every price to an integer number of units"""
    exponent = max(-value.as_tuple().exponent for value in raw)  # type: ignore[operator]
    exponent = max(exponent, 0)
    units = [int(value.scaleb(exponent)) for value in raw]
    top = max(units)
    argmax = units.index(top)
    return [100 if i == argmax else (100 * u) // top for i, u in enumerate(units)]


def oracle_mood_window(pair: AlignedPair, t1: int, t2: int) -> Fraction:
    total_w = sum(pair.w)
    total_p = sum(pair.p_norm.values)
    half = Fraction(1, 2)
    return (
        half
        * sum(
            Fraction(pair.p_norm.values[s], total_p) - Fraction(pair.w[s], total_w)
            for s in range(t1 - 1, t2)
        )
        + half
    )


def oracle_sign(before: int, after: int, zeta: float) -> int:
    if after - before > zeta:
        return 1
    if before - after > zeta:
        return -1
    return 0


def oracle_deltas(pair: AlignedPair, zeta: float) -> list[int]:
    w, p = pair.w, pair.p_norm.values
    return [
        oracle_sign(w[t - 1], w[t], zeta) - oracle_sign(p[t - 1], p[t], zeta)
        for t in range(1, pair.T)
    ]


def oracle_h(pair: AlignedPair, zeta: float) -> Fraction:
    """H from the number of steps carrying each label"""
    values = oracle_deltas(pair, zeta)
    weighted = sum(label * values.count(label) for label in (-2, -1, 1, 2))
    steps = pair.T - 1
    return Fraction(weighted + 2 * steps, 4 * steps)


def oracle_r(pair: AlignedPair, zeta: float) -> Fraction:
    values = oracle_deltas(pair, zeta)
    steps = pair.T - 1
    return Fraction(values.count(2) - values.count(-2) + steps, 2 * steps)


def oracle_grid(search: ObservationSeries, price: ObservationSeries) -> list[date]:
    """Trading days of an aligned pair, straight from the definition"""
    nonnull = [p.date for p in search if p.value > 0]
    first, last = nonnull[0], search.end
    search_by_date = {p.date: p.value for p in search}
    grid = [
        p.date
        for p in price
        if first <= p.date <= last and p.date in search_by_date
    ]
    while grid and search_by_date[grid[0]] == 0:
        grid.pop(0)
    return grid
